"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 method does not
apply to the requested graph.  Data goes to stdout; timings and diagnostics
go to stderr so that repeated runs produce byte-identical stdout.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .chebyshev import cheb_pair, mu, nu
from .closed_form import (
    METHODS,
    cokernel_by_method,
    render_as_stated,
    spanning_tree_count,
    verify_spec,
)
from .graph import DeltaGraphSpec, InvalidSpecError
from .groups import AbelianGroup, group_order
from .reduction import MethodNotApplicableError, companion_cokernel, d_values

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3

CSV_FIELDS = ["n", "k", "l", "m", "method", "torsion", "free_rank", "order", "trees", "nu", "mu"]


@dataclass
class OutputRecord:
    n: int
    k: int
    l: int
    m: int
    method: str
    torsion: tuple[int, ...]
    free_rank: int
    order: int
    trees: int
    nu: int | None = None
    mu: int | None = None
    elapsed_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        d = {
            "n": self.n, "k": self.k, "l": self.l, "m": self.m,
            "method": self.method,
            "torsion": list(self.torsion),
            "free_rank": self.free_rank,
            "order": str(self.order),
            "trees": str(self.trees),
        }
        if self.nu is not None:
            d["nu"] = str(self.nu)
        if self.mu is not None:
            d["mu"] = self.mu
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        return cls(
            n=int(d["n"]), k=int(d["k"]), l=int(d["l"]), m=int(d["m"]),
            method=d["method"],
            torsion=tuple(int(x) for x in d["torsion"]),
            free_rank=int(d["free_rank"]),
            order=int(d["order"]),
            trees=int(d["trees"]),
            nu=int(d["nu"]) if d.get("nu") not in (None, "") else None,
            mu=int(d["mu"]) if d.get("mu") not in (None, "") else None,
        )

    @classmethod
    def from_json(cls, line: str) -> OutputRecord:
        return cls.from_dict(json.loads(line))

    def to_csv_row(self) -> dict:
        d = self.to_dict()
        d["torsion"] = " ".join(map(str, self.torsion))
        return {k: d.get(k, "") for k in CSV_FIELDS}

    @classmethod
    def from_csv_row(cls, row: dict) -> OutputRecord:
        row = dict(row)
        row["torsion"] = row["torsion"].split()
        return cls.from_dict(row)

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(self.torsion)


def write_csv(records, out) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.to_csv_row())


def read_csv(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_csv_row(row) for row in csv.DictReader(io.StringIO(text))]


def cmd_jacobian(spec: DeltaGraphSpec, method: str | None = None) -> OutputRecord:
    method = method or ("closed" if spec.is_torus else "theorem1")
    start = time.perf_counter()
    coker = cokernel_by_method(spec, method)
    jac = coker.torsion_subgroup()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        trees = spanning_tree_count(spec)
    elapsed = (time.perf_counter() - start) * 1000
    return OutputRecord(spec.n, spec.k, spec.l, spec.m, method, jac.torsion,
                        coker.free_rank, group_order(jac), trees, elapsed_ms=elapsed)


def sweep_records(n_from: int, n_to: int):
    for n in range(n_from, n_to + 1):
        rec = cmd_jacobian(DeltaGraphSpec(n), "closed")
        rec.nu, rec.mu = nu(n), mu(n)
        yield rec


def _verify_one(jumps_and_n):
    n, k, l, m = jumps_and_n
    return verify_spec(DeltaGraphSpec(n, k, l, m))


def verify_specs(n_max: int, jumps_max: int) -> list[tuple[int, int, int, int]]:
    specs = []
    for n in range(3, n_max + 1):
        top = max(1, min(jumps_max, n // 2))
        for k, l, m in product(range(1, top + 1), repeat=3):
            specs.append((n, k, l, m))
    return specs


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _spec_from_args(args) -> DeltaGraphSpec:
    return DeltaGraphSpec(args.n, args.k, args.l, args.m)


def run_jacobian(args) -> int:
    spec = _spec_from_args(args)
    rec = cmd_jacobian(spec, args.method)
    if args.format == "json":
        print(rec.to_json())
    elif args.format == "csv":
        write_csv([rec], sys.stdout)
    else:
        print(rec.group)
        if args.verbose and rec.method == "closed":
            print(f"as stated: {render_as_stated(spec.n)}")
            print(f"order: {rec.order}")
    _err(f"# {spec} method={rec.method} free_rank={rec.free_rank} elapsed_ms={rec.elapsed_ms:.1f}")
    return EXIT_OK


def run_trees(args) -> int:
    spec = _spec_from_args(args)
    if not spec.connected:
        _err(f"{spec} is disconnected")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        print(spanning_tree_count(spec))
    return EXIT_OK


def run_verify(args) -> int:
    if args.n_max < 3:
        _err("--n-max must be at least 3")
        return EXIT_USAGE
    if args.jumps_max < 1:
        _err("--jumps-max must be at least 1")
        return EXIT_USAGE
    start = time.perf_counter()
    specs = []
    for s in verify_specs(args.n_max, args.jumps_max):
        if DeltaGraphSpec(*s).connected:
            specs.append(s)
        else:
            _err(f"# skipping disconnected Delta({s[0]};{s[1]},{s[2]},{s[3]})")
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_verify_one, specs, chunksize=4))
    else:
        reports = [_verify_one(s) for s in specs]
    print(f"{'n':>3} {'k':>3} {'l':>3} {'m':>3}  {'methods':<26} {'status':<6} group")
    failure = None
    for r in reports:
        status = "ok" if r.ok else "FAIL"
        group = next(iter(r.groups.values())).torsion_subgroup()
        print(f"{r.n:>3} {r.k:>3} {r.l:>3} {r.m:>3}  {','.join(r.groups):<26} {status:<6} {group}")
        if failure is None and not r.ok:
            failure = r
    _err(f"# {len(reports)} specs checked in {time.perf_counter() - start:.2f}s")
    if failure is not None:
        _err(f"counterexample Delta({failure.n};{failure.k},{failure.l},{failure.m}): "
             f"{failure.first_failure()}")
        return EXIT_FAIL
    return EXIT_OK


def run_sweep(args) -> int:
    if not 3 <= args.n_from <= args.n_to:
        _err("need 3 <= N_FROM <= N_TO")
        return EXIT_USAGE
    start = time.perf_counter()
    records = sweep_records(args.n_from, args.n_to)
    if args.format == "csv":
        write_csv(records, sys.stdout)
    else:
        for rec in records:
            print(rec.to_json())
    _err(f"# sweep {args.n_from}..{args.n_to} in {time.perf_counter() - start:.2f}s")
    return EXIT_OK


def selftest_checks(n_max: int = 30):
    """Yield ``(name, passed)`` pairs for a quick internal consistency run."""
    g3 = cmd_jacobian(DeltaGraphSpec(3), "snf")
    yield "Delta(3;1,1,1) = Z6+Z6+Z18+Z18", g3.torsion == (6, 6, 18, 18) and g3.trees == 11664
    g4 = cmd_jacobian(DeltaGraphSpec(4), "snf")
    yield "Delta(4;1,1,1) = Z5+Z5+Z35+Z420", g4.torsion == (5, 5, 35, 420) and g4.trees == 367500
    ok = True
    for n in range(3, n_max + 1):
        cp = cheb_pair(n)
        ok &= cp.u == 3 * mu(n) * nu(n) ** 2
        d = d_values(n)
        ok &= d.d3 == n * cp.u // 3
    yield f"Chebyshev identities n<={n_max}", ok
    yield f"closed form = companion reduction n<={n_max}", all(
        cokernel_by_method(DeltaGraphSpec(n), "closed") == companion_cokernel(n)
        for n in range(3, n_max + 1))
    yield "four-way agreement n<=12", all(verify_spec(DeltaGraphSpec(n)).ok for n in range(3, 13))


def run_selftest(args) -> int:
    failed = 0
    for name, passed in selftest_checks():
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
        failed += not passed
    return EXIT_FAIL if failed else EXIT_OK


def _add_spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", "--n", type=int, required=True, help="cycle length (>= 3)")
    p.add_argument("-k", type=int, default=1, help="jump of layer 1")
    p.add_argument("-l", type=int, default=1, help="jump of layer 2")
    p.add_argument("-m", type=int, default=1, help="jump of layer 3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deltajac", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jacobian", help="Jacobian group of Delta(n;k,l,m)")
    _add_spec_args(p)
    p.add_argument("--method", choices=METHODS, default=None,
                   help="default: closed for (1,1,1), theorem1 otherwise")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=run_jacobian)

    p = sub.add_parser("trees", help="number of spanning trees")
    _add_spec_args(p)
    p.set_defaults(func=run_trees)

    p = sub.add_parser("verify", help="cross-check all methods over a range of graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jumps-max", type=int, default=1,
                   help="jumps range over 1..min(jumps_max, n//2); default only (1,1,1)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("sweep", help="closed-form records for Delta(n;1,1,1)")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=run_sweep)

    p = sub.add_parser("selftest", help="quick internal consistency checks")
    p.set_defaults(func=run_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidSpecError as exc:
        _err(f"invalid graph: {exc}")
        return EXIT_USAGE
    except MethodNotApplicableError as exc:
        _err(f"method not applicable: {exc}")
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
