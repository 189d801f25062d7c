from itertools import product
from math import gcd

import pytest

from deltajac.graph import (
    DeltaGraphSpec,
    InvalidSpecError,
    build_delta_graph,
    delta_laplacian_blocks,
    is_connected,
    laplacian,
    LabeledGraph,
)
from deltajac.linalg import circulant, read_matrix

from oracles import FIXTURES, component_count


def all_specs(n_max):
    for n in range(3, n_max + 1):
        for k, l, m in product(range(1, n), repeat=3):
            yield DeltaGraphSpec(n, k, l, m)


def test_delta_3_111_counts():
    g = build_delta_graph(DeltaGraphSpec(3, 1, 1, 1))
    assert g.vertex_count == 9
    assert g.degrees == [4] * 9
    assert g.edge_count == 18


def test_double_edges_when_jump_is_half_the_cycle():
    g = build_delta_graph(DeltaGraphSpec(4, 2, 1, 1))
    assert g.degrees == [4] * 12
    for y in range(4):
        assert g.adjacency[y][(y + 2) % 4] == 2


def test_delta_6_234_connected_by_traversal():
    spec = DeltaGraphSpec(6, 2, 3, 4)
    g = build_delta_graph(spec)
    assert is_connected(spec)
    assert component_count(g.adjacency) == 1
    assert g.vertex_count == 18 and g.edge_count == 36


@pytest.mark.parametrize("n,k,l,m,expected", [
    (6, 2, 3, 4, True),
    (6, 2, 2, 4, False),
    (9, 3, 3, 3, False),
])
def test_is_connected_examples(n, k, l, m, expected):
    assert is_connected(DeltaGraphSpec(n, k, l, m)) is expected


def test_delta_9_333_has_three_components():
    g = build_delta_graph(DeltaGraphSpec(9, 3, 3, 3))
    assert component_count(g.adjacency) == 3
    assert len(g.components()) == 3


@pytest.mark.parametrize("n,k", [(2, 1), (1, 1), (5, 0), (5, 5), (4, -4)])
def test_invalid_specs_rejected(n, k):
    with pytest.raises(InvalidSpecError):
        DeltaGraphSpec(n, k, 1, 1)


def test_jumps_normalized_mod_n():
    spec = DeltaGraphSpec(5, 7, -1, 13)
    assert spec.jumps == (2, 4, 3)
    assert laplacian(build_delta_graph(spec)) == laplacian(
        build_delta_graph(DeltaGraphSpec(5, 2, 4, 3)))


def test_triangle_laplacian():
    k3 = LabeledGraph(3, ((0, 1, 1), (1, 0, 1), (1, 1, 0)))
    assert laplacian(k3) == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]


def test_laplacian_matches_fixture():
    lap = laplacian(build_delta_graph(DeltaGraphSpec(3)))
    assert lap == read_matrix(FIXTURES / "laplacian_delta_3_111.txt")
    assert all(lap[i][i] == 4 for i in range(9))
    assert all(sum(row) == 0 for row in lap)


def test_block_form_examples():
    lap = delta_laplacian_blocks(DeltaGraphSpec(3))
    assert [row[:3] for row in lap[:3]] == circulant([4, -1, -1], 3)
    lap = delta_laplacian_blocks(DeltaGraphSpec(4, 2, 1, 1))
    assert [row[:4] for row in lap[:4]] == circulant([4, 0, -2, 0], 4)


def test_block_form_equals_constructed_laplacian():
    for spec in all_specs(10):
        lap = laplacian(build_delta_graph(spec))
        assert lap == delta_laplacian_blocks(spec), spec
        assert all(sum(row) == 0 for row in lap)
        assert lap == [list(r) for r in zip(*lap)]


def test_connectivity_agrees_with_traversal():
    for spec in all_specs(10):
        comps = component_count(build_delta_graph(spec).adjacency)
        assert is_connected(spec) == (comps == 1), spec
        assert comps == gcd(gcd(spec.k, spec.l), gcd(spec.m, spec.n))


def test_degree_four_without_half_jumps():
    for spec in all_specs(7):
        g = build_delta_graph(spec)
        # double edges still count twice, so degree is always 4
        assert g.degrees == [4] * (3 * spec.n)
        assert all(g.adjacency[i][i] == 0 for i in range(g.vertex_count))
