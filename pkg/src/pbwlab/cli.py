"""Command-line front end: ``pbwlab <command> [options]``.

Reports go to stdout as JSON (schema ``pbwlab/1``) or CSV. Integers are
always written as decimal strings. Exit codes: 0 success, 1 a check failed,
2 bad arguments or a resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Sequence

from . import genocchi as gen
from . import polytopes as poly
from . import quiver as qv
from .errors import PBWLabError
from .lie_core import DominantWeight, shape_of, weyl_dim
from .tableaux import enumerate_pbw_tableaux
from .verify import Check, Limits, check, flag_point_count, run_all

SCHEMA = "pbwlab/1"

log = logging.getLogger("pbwlab")


class UsageError(Exception):
    pass


def _serialize(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _serialize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_serialize(v) for v in value]
    return value


def make_report(command: str, parameters: dict, results: dict, checks: list[Check]) -> dict:
    report = {
        "schema": SCHEMA,
        "command": command,
        "parameters": _serialize(parameters),
        "results": _serialize(results),
        "checks": [
            {"name": c.name, "status": c.status, "expected": c.expected, "actual": c.actual}
            for c in checks
        ],
    }
    if checks:
        report["status"] = "pass" if all(c.passed for c in checks) else "fail"
    return report


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for k, v in enumerate(value):
            _flatten(f"{prefix}[{k}]", v, rows)
    elif isinstance(value, list):
        rows.append((prefix, " ".join(str(v) for v in value)))
    else:
        rows.append((prefix, "" if value is None else str(value).lower() if isinstance(value, bool) else str(value)))


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "name", "value", "expected", "status"])
    writer.writerow(["meta", "schema", report["schema"], "", ""])
    writer.writerow(["meta", "command", report["command"], "", ""])
    for kind in ("parameters", "results"):
        rows: list[tuple[str, str]] = []
        _flatten("", report[kind], rows)
        for name, value in rows:
            writer.writerow([kind[:-1] if kind == "results" else "parameter", name, value, "", ""])
    for c in report["checks"]:
        writer.writerow(["check", c["name"], c["actual"], c["expected"], c["status"]])
    return buf.getvalue()


def render(report: dict, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(report)
    return json.dumps(report, indent=2) + "\n"


def parse_weight(n: int, text: str) -> DominantWeight:
    try:
        m = tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"weight must be comma-separated integers, got {text!r}") from None
    return DominantWeight(n, m)


# -- commands ------------------------------------------------------------------------


def cmd_genocchi(args) -> dict:
    n = args.n
    h = gen.genocchi_closed(n)
    results: dict[str, Any] = {"h": h}
    checks = []
    if args.q:
        fermionic = gen.genocchi_poly_fermionic(n)
        dellac = gen.genocchi_poly_dellac(n)
        results["poly_fermionic"] = list(fermionic.coeffs)
        results["poly_dellac"] = list(dellac.coeffs)
        checks.append(check("fermionic formula = Dellac length sum", dellac, fermionic))
        checks.append(check("h(q) at q=1 = h", h, dellac(1)))
    if args.verify and n >= 1:
        checks.append(check("flag collections = h", h, len(gen.admissible_flag_collections(n))))
        checks.append(check("Dellac configurations = h", h, len(gen.dellac_configs(n))))
    return make_report("genocchi", {"n": n, "q": args.q}, results, checks)


def cmd_dellac(args) -> dict:
    configs = gen.dellac_configs(args.n)
    lengths = [gen.dellac_length(d) for d in configs]
    results: dict[str, Any] = {
        "count": len(configs),
        "length_polynomial": list(gen.genocchi_poly_dellac(args.n).coeffs),
    }
    if args.list:
        results["configurations"] = [
            {"boxes": [list(b) for b in d.boxes], "length": ln} for d, ln in zip(configs, lengths)
        ]
    checks = []
    if args.verify:
        checks.append(check("count = closed formula", gen.genocchi_closed(args.n), len(configs)))
    return make_report("dellac", {"n": args.n, "list": args.list}, results, checks)


def cmd_cells(args) -> dict:
    count = len(gen.admissible_flag_collections(args.n))
    checks = []
    if args.verify:
        checks.append(check("count = closed formula", gen.genocchi_closed(args.n), count))
    return make_report("cells", {"n": args.n}, {"count": count}, checks)


def cmd_fflv(args) -> dict:
    lam = parse_weight(args.n, args.weight)
    s_count = len(poly.fflv_lattice_points(lam))
    dim = weyl_dim(lam)
    gt = poly.gt_pattern_count(lam)
    results = {"fflv_points": s_count, "weyl_dim": dim, "gt_patterns": gt}
    checks = [check("|S(lambda)| = weyl_dim = gt count", (dim, dim, dim), (s_count, dim, gt))]
    return make_report("fflv", {"n": args.n, "weight": list(lam.m)}, results, checks)


def cmd_tableaux(args) -> dict:
    lam = parse_weight(args.n, args.weight)
    count = len(enumerate_pbw_tableaux(lam))
    dim = weyl_dim(lam)
    results = {
        "shape": list(shape_of(lam).column_lengths),
        "tableaux": count,
        "weyl_dim": dim,
    }
    checks = [check("PBW tableaux = weyl_dim", dim, count)]
    return make_report("tableaux", {"n": args.n, "weight": list(lam.m)}, results, checks)


def cmd_quiver(args) -> dict:
    n = args.n
    kinds = [args.module] if args.module else ["M0", "M1", "M2"]
    e = tuple(range(1, n))
    modules = {k: qv.special_module(n, k) for k in kinds}
    results: dict[str, Any] = {
        "e": list(e),
        "euler_form_dimA_dimAstar": qv.euler_form(n, e, tuple(reversed(e))),
        "modules": {},
    }
    checks = []
    for kind, rep in modules.items():
        entry: dict[str, Any] = {
            "summands": [f"U{i},{j}" for i, j in rep.summands()],
            "dim_vector": list(rep.dim_vector),
            "rank_tuple": {f"{i},{j}": r for (i, j), r in qv.rank_tuple(rep).as_dict().items()},
        }
        if args.count_fq is not None:
            p = args.count_fq
            count = qv.count_subreps_Fq(rep, e, p)
            entry["points_Fq"] = count
            if kind == "M1":
                checks.append(check(f"#Gr_e(M1)(F_{p}) = h_{n}({p})",
                                    gen.genocchi_poly_dellac(n)(p), count))
            elif kind == "M0":
                checks.append(check(f"#Gr_e(M0)(F_{p}) = flag count", flag_point_count(n, p), count))
        results["modules"][kind] = entry
    if len(modules) > 1:
        results["degenerations"] = {
            f"{a}->{b}": qv.degenerates_to(modules[a], modules[b])
            for a in modules for b in modules if a != b
        }
    params = {"n": n, "module": args.module, "count_fq": args.count_fq}
    return make_report("quiver", params, results, checks)


def cmd_verify(args) -> dict:
    lim = Limits(args.max_n, args.max_weight)
    groups = run_all(lim)
    checks = [c for _, cs in groups for c in cs]
    summary = {
        name: {"checks": len(cs), "failed": sum(not c.passed for c in cs)} for name, cs in groups
    }
    results = {"groups": summary, "total": len(checks), "failed": sum(not c.passed for c in checks)}
    params = {"max_n": args.max_n, "max_weight": args.max_weight}
    return make_report("verify", params, results, checks)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--verify", action="store_true", help="attach cross-checks")

    parser = argparse.ArgumentParser(prog="pbwlab", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genocchi", parents=[common], help="median Genocchi numbers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", action="store_true", help="also the Poincare polynomial, two ways")
    p.set_defaults(func=cmd_genocchi)

    p = sub.add_parser("dellac", parents=[common], help="Dellac configurations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_dellac)

    p = sub.add_parser("cells", parents=[common], help="admissible flag collections")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cells)

    for name, func, text in (
        ("fflv", cmd_fflv, "FFLV lattice points vs Weyl and GT counts"),
        ("tableaux", cmd_tableaux, "PBW semistandard tableaux vs Weyl dimension"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--weight", required=True, help="m1,...,m_{n-1}")
        p.set_defaults(func=func)

    p = sub.add_parser("quiver", parents=[common], help="special modules M0, M1, M2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--module", choices=("M0", "M1", "M2"))
    p.add_argument("--count-fq", type=int, metavar="P")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-weight", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        report = args.func(args)
    except (PBWLabError, UsageError) as exc:
        print(f"pbwlab: error: {exc}", file=sys.stderr)
        return 2
    stdout.write(render(report, args.format))
    failed = [c for c in report["checks"] if c["status"] == "fail"]
    for c in failed:
        log.warning("check failed: %s (expected %s, got %s)", c["name"], c["expected"], c["actual"])
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())
