"""Command-line interface.

Exit codes: 0 ok, 1 check failed, 2 usage or runtime error.  With
--json the payload prints as canonical JSON (sorted keys, indented),
so identical invocations produce byte-identical output; the effective
configuration is echoed into every payload.
"""

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .algebra import derived_subalgebra, jacobi_defect, nilpotency_class
from .catalog import (CatalogError, from_name, lambda_a, list_entries)
from .composition import CompositionElement, format_element, multiply, \
    parse_unit
from .config import load_config, quad_settings
from .gaussians import GaussianTestFunction
from .inversion import invert_flat, invert_stepwise
from .orbits import orbit_representative
from .pfaffian import is_square_integrable, pf_at, pf_polynomial
from .stepwise import decompose, find_codim_split, verify
from . import selftest as selftest_mod


class CommandResult:
    """status: ok | check_failed | error; exit code 0 | 1 | 2."""

    __slots__ = ("status", "payload", "human_text")

    def __init__(self, status, payload, human_text):
        self.status = status
        self.payload = payload
        self.human_text = human_text

    @property
    def exit_code(self):
        return {"ok": 0, "check_failed": 1, "error": 2}[self.status]


def _canon_json(payload):
    def conv(obj):
        if isinstance(obj, dict):
            return {k: conv(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [conv(v) for v in obj]
        if isinstance(obj, Fraction):
            return str(obj)
        if isinstance(obj, (np.floating,)):
            return float(obj)
        if isinstance(obj, (np.integer,)):
            return int(obj)
        if isinstance(obj, float):
            # 17 significant digits round-trips any double exactly
            return float(format(obj, ".17g"))
        return obj
    return json.dumps(conv(payload), sort_keys=True, indent=2)


def _parse_numbers(text):
    return [Fraction(tok) for tok in text.split(",") if tok.strip()]


def _parse_points(text, dim, seed):
    if text.startswith("random:"):
        k = int(text.split(":", 1)[1])
        rng = np.random.default_rng(seed)
        return [list(rng.normal(0.0, 0.5, size=dim)) for _ in range(k)]
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        vals = [float(Fraction(tok)) for tok in chunk.split(",")]
        if len(vals) != dim:
            raise ValueError(f"point has {len(vals)} coordinates, "
                             f"algebra has dimension {dim}")
        points.append(vals)
    return points


def _parse_function(spec, dim):
    if spec is None or spec == "gaussian":
        return GaussianTestFunction.standard(dim)
    if spec.startswith("gaussian:diag:"):
        diag = [float(Fraction(t)) for t in spec.split(":", 2)[2].split(",")]
        if len(diag) != dim:
            raise ValueError(f"diagonal has {len(diag)} entries, need {dim}")
        return GaussianTestFunction(np.diag(diag), np.zeros(dim))
    raise ValueError(f"unknown function spec {spec!r}; "
                     "use gaussian or gaussian:diag:q1,...,qn")


def _cmd_catalog(args, cfg):
    tables = [args.table] if args.table else ["2.1", "2.2"]
    want = True if args.constructible else None
    rows = []
    for tid in tables:
        for entry in list_entries(tid, constructible=want):
            rows.append(entry.as_dict())
    lines = []
    for r in rows:
        mark = "+" if r["constructible"] else " "
        lines.append(f"[{mark}] table {r['table']} row {r['row']:2d}: "
                     f"K = {r['K']}, v = {r['v']}, z = {r['z']}")
    return CommandResult("ok", {"entries": rows, "config": cfg},
                         "\n".join(lines))


def _cmd_check(args, cfg):
    alg = from_name(args.algebra)
    defect = jacobi_defect(alg)
    nclass = nilpotency_class(alg)
    center_set = set(alg.center_indices)
    derived_ok = all(
        all(row[k] == 0 for k in range(alg.dim) if k not in center_set)
        for row in derived_subalgebra(alg))
    ok = defect == 0 and nclass == 2 and derived_ok
    payload = {
        "algebra": alg.name, "dim": alg.dim,
        "center_dim": len(alg.center_indices),
        "jacobi_defect": str(defect), "nilpotency_class": nclass,
        "derived_inside_center": derived_ok, "config": cfg,
    }
    text = (f"{alg.name}: dim {alg.dim}, center dim "
            f"{len(alg.center_indices)}, jacobi defect {defect}, "
            f"class {nclass}, derived inside center: "
            f"{str(derived_ok).lower()}")
    return CommandResult("ok" if ok else "check_failed", payload, text)


def _cmd_pfaffian(args, cfg):
    alg = from_name(args.algebra)
    pf = pf_polynomial(alg)
    payload = {"algebra": alg.name, "pfaffian": pf.format(),
               "degree": pf.degree(), "config": cfg}
    text = f"Pf = {pf.format()}"
    if args.at:
        coeffs = _parse_numbers(args.at)
        val = pf_at(alg, coeffs)
        payload["at"] = [str(c) for c in coeffs]
        payload["value"] = str(val)
        text += f"\nPf({args.at}) = {val}"
    return CommandResult("ok", payload, text)


def _cmd_classify(args, cfg):
    alg = from_name(args.algebra)
    sq = is_square_integrable(alg)
    payload = {"algebra": alg.name, "square_integrable": bool(sq),
               "config": cfg}
    if sq:
        text = "square integrable: true"
        payload["witness"] = [str(c) for c in sq.witness]
    else:
        dec = find_codim_split(alg)
        found = dec is not None and all(dec.verification.values())
        payload["stepwise_split_found"] = found
        if found:
            payload["l1_indices"] = list(dec.l1_indices)
            payload["l2_indices"] = list(dec.l2_indices)
            payload["verification"] = dec.verification
        text = ("square integrable: false; stepwise split found: "
                + ("yes" if found else "no"))
    return CommandResult("ok", payload, text)


def _cmd_orbit(args, cfg):
    alg = from_name(args.algebra)
    coeffs = _parse_numbers(args.coeffs)
    rep = orbit_representative(alg, coeffs)
    invariants = [list(v) if isinstance(v, tuple) else v
                  for v in rep.invariants]
    payload = {"algebra": alg.name, "case": rep.case_tag,
               "invariants": invariants, "kernel_dim": rep.kernel_dim,
               "config": cfg}
    text = (f"{rep.case_tag}: invariants {invariants}, "
            f"kernel dim {rep.kernel_dim}")
    return CommandResult("ok", payload, text)


def _cmd_decompose(args, cfg):
    dec = decompose(args.case, n=args.n)
    if args.verify:
        verify(dec)
    payload = dec.as_dict()
    payload["config"] = cfg
    flags = dec.verification
    text = (f"l1 = {list(dec.l1_indices)}\nl2 = {list(dec.l2_indices)}\n"
            + "\n".join(f"{k}: {str(v).lower()}" for k, v in flags.items()))
    status = "ok" if all(flags.values()) else "check_failed"
    return CommandResult(status, payload, text)


def _cmd_invert(args, cfg):
    target = args.target
    qs = quad_settings(cfg)
    if args.nodes:
        qs["start_nodes"] = args.nodes
    tol = args.tol
    if target.replace("_", "").lower() in ("case1", "case6", "case3"):
        dec = decompose(target)
        dim = dec.algebra.dim
        f = _parse_function(args.function, dim)
        points = _parse_points(args.points, dim, cfg["seed"])
        tol = tol if tol is not None else cfg["stepwise_rtol"]
        runner = lambda pt: invert_stepwise(dec, f, pt, quad_settings=qs)
        formula = f"stepwise:{target}"
    else:
        alg = from_name(target)
        dim = alg.dim
        f = _parse_function(args.function, dim)
        points = _parse_points(args.points, dim, cfg["seed"])
        tol = tol if tol is not None else cfg["flat_rtol"]
        runner = lambda pt: invert_flat(alg, f, pt, quad_settings=qs)
        formula = f"flat:{target}"

    entries = []
    wall = 0.0
    for pt in points:
        rep = runner(pt)
        entries.extend(rep.entries)
        wall += rep.wall_time
    worst = max(e["rel_error"] for e in entries)
    # timing is shown in the text only; the JSON payload stays
    # byte-identical across identical invocations
    payload = {"formula": formula, "entries": entries,
               "max_rel_error": worst, "tolerance": tol,
               "settings": qs, "config": cfg}
    lines = [f"{formula}: {len(entries)} point(s), max rel error "
             f"{worst:.3e} (tolerance {tol:g}), {wall:.2f}s"]
    for e in entries:
        lines.append(f"  x = {['%.4g' % v for v in e['x']]}: rel error "
                     f"{e['rel_error']:.3e}")
    status = "ok" if worst < tol else "check_failed"
    return CommandResult(status, payload, "\n".join(lines))


def _cmd_octonion(args, cfg):
    if args.operation == "mul":
        a = parse_unit(args.operands[0])
        b = parse_unit(args.operands[1])
        prod = multiply(a, b)
        text = format_element(prod)
        payload = {"product": text, "config": cfg}
        return CommandResult("ok", payload, text)
    if args.operation == "table":
        lines = []
        rows = []
        for i in range(8):
            row = []
            for j in range(8):
                p = multiply(CompositionElement.basis("O", i),
                             CompositionElement.basis("O", j))
                row.append(format_element(p))
            rows.append(row)
            lines.append(" ".join(f"{s:>4s}" for s in row))
        return CommandResult("ok", {"table": rows, "config": cfg},
                             "\n".join(lines))
    raise ValueError(f"unknown octonion operation {args.operation!r}")


def _cmd_selftest(args, cfg):
    only = set(int(t) for t in args.only.split(",")) if args.only else None
    results = selftest_mod.run_all(seed=cfg["seed"], only=only)
    all_passed = all(r["passed"] for r in results)
    lines = [f"criterion {r['criterion']}: "
             f"{'PASS' if r['passed'] else 'FAIL'}  {r['detail']}"
             for r in results]
    lines.append("selftest: " + ("all criteria passed" if all_passed
                                 else "FAILURES PRESENT"))
    payload = {"results": results, "all_passed": all_passed, "config": cfg}
    return CommandResult("ok" if all_passed else "check_failed",
                         payload, "\n".join(lines))


def build_parser():
    # SUPPRESS keeps a subparser's default from clobbering a value the
    # top-level parser already set (bpo-9351)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="key = value settings file")
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="print the canonical JSON payload")
    parser = argparse.ArgumentParser(
        prog="nilharm",
        parents=[common],
        description="Pfaffians, square integrability, and Fourier "
                    "inversion on 2-step nilpotent Lie algebras.",
        epilog="Algebra names: heisenberg:n:F (F in C,H,O), "
               "free2step:n:F (F in R,C), octdouble, abelian:n, "
               "table:2.1:row or table:2.2:row with optional k=v params.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("catalog", help="list the classified families")
    p.add_argument("--table", choices=["2.1", "2.2"])
    p.add_argument("--constructible", action="store_true",
                   help="only rows with explicit structure constants")

    p = add_parser("check", help="structural checks for one algebra")
    p.add_argument("algebra")

    p = add_parser("pfaffian", help="symbolic Pfaffian over z*")
    p.add_argument("algebra")
    p.add_argument("--at", help="comma-separated rational lambda")

    p = add_parser("classify", help="square integrability and splits")
    p.add_argument("algebra")

    p = add_parser("orbit", help="coadjoint orbit representative")
    p.add_argument("algebra")
    p.add_argument("--coeffs", required=True,
                   help="comma-separated center coefficients")

    p = add_parser("decompose", help="stepwise split for a case")
    p.add_argument("case", help="case1, case6, or case3")
    p.add_argument("--n", type=int, help="generator count for case1/case6")
    p.add_argument("--verify", action="store_true",
                   help="re-run the exact verification flags")

    p = add_parser("invert", help="run an inversion formula check")
    p.add_argument("target", help="algebra name or case tag")
    p.add_argument("--function", default="gaussian",
                   help="gaussian or gaussian:diag:q1,...,qn")
    p.add_argument("--points", default="random:3",
                   help="p1;p2;... (comma coords) or random:k")
    p.add_argument("--tol", type=float,
                   help="acceptance tolerance on relative error")
    p.add_argument("--nodes", type=int,
                   help="starting per-axis quadrature node count")

    p = add_parser("octonion", help="exact octonion arithmetic")
    p.add_argument("operation", choices=["mul", "table"])
    p.add_argument("operands", nargs="*")

    p = add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", help="comma-separated criterion numbers")

    return parser


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(getattr(args, "config", None))
    except (OSError, ValueError) as exc:
        return CommandResult("error", {"error": str(exc)},
                             f"config error: {exc}")
    handlers = {
        "catalog": _cmd_catalog, "check": _cmd_check,
        "pfaffian": _cmd_pfaffian, "classify": _cmd_classify,
        "orbit": _cmd_orbit, "decompose": _cmd_decompose,
        "invert": _cmd_invert, "octonion": _cmd_octonion,
        "selftest": _cmd_selftest,
    }
    try:
        result = handlers[args.command](args, cfg)
    except (CatalogError, ValueError, RuntimeError, IndexError) as exc:
        return CommandResult("error", {"error": str(exc)}, f"error: {exc}")
    if getattr(args, "json", False):
        result = CommandResult(result.status, result.payload,
                               _canon_json(result.payload))
    return result


def main(argv=None):
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if result.status == "error" else sys.stdout
    print(result.human_text, file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
