"""Command-line interface: ``python -m frobhom <command> ...``.

Exit codes: 0 on success, 1 when a check fails, 2 on malformed input or an
unknown command.
"""

import argparse
import json
import sys
from pathlib import Path

from . import io
from .algebras import AlgebraError, sym_pq_power, symmetric_power
from .exact.serialize import format_rational, parse_rational
from .frobenius import (ClassificationError, br_lift, char_series, classify,
                        recover_configuration)
from .suites import SUITES, Case, CheckReport, jsonable, run_suite
from .superlinalg import (IndeterminateError, power_supertraces, ber_via_hankel, berezinian_block,
                          char_function_series, hankel_recurrence_check, liouville_check,
                          ratio_formula_is_experimental, supertrace)


class UsageError(Exception):
    pass


def _load_functional(args):
    algebra = io.load_algebra(args.algebra) if args.algebra else None
    path = Path(args.functional)
    return io.load_functional(io.read_json(path), base_dir=path.parent, source=algebra)


def _report(name, data, verdict=True, witness=None, inputs=None):
    return CheckReport(name, None, [Case(name, name, inputs or {}, verdict, witness, data)])


def _element(A, text):
    try:
        coords = [parse_rational(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise io.InputError(f"--element: {exc}") from None
    if len(coords) != A.dim:
        raise io.InputError(f"--element needs {A.dim} coordinates, got {len(coords)}")
    return A.element(coords)


def cmd_classify(args):
    f = _load_functional(args)
    t = classify(f, args.max_p, args.max_q)
    data = {"type": str(t), "p": t.p, "q": t.q}
    if not t.ok and t.witness:
        data["witness"] = t.witness
    return _report("classify", data)


def cmd_char_series(args):
    f = _load_functional(args)
    if args.element is None:
        raise io.InputError("char-series needs --element")
    a = _element(f.source, args.element)
    order = max(args.order, args.max_p + args.max_q + 1)
    cf = char_series(f, a, order)
    data = {"coefficients": [io.format_value(c) for c in cf.series.coeffs[: args.order + 1]]}
    if f.is_scalar:
        rf = cf.reconstruct(args.max_p, args.max_q)
        data["rational"] = None if rf is None else str(rf)
    return _report("char-series", data)


def cmd_br_lift(args):
    f = _load_functional(args)
    S = symmetric_power(f.source, args.n)
    try:
        h = br_lift(f, args.n, S)
    except ClassificationError as exc:
        return _report("br-lift", {"error": str(exc)}, False)
    data = {"basis": [list(m) for m in S.labels],
            "values": [[format_rational(x) for x in r] for r in h.matrix]}
    return _report("br-lift", data)


def _algebra_data(sub):
    return {"dim": sub.dim, "algebra": io.dump_algebra(sub.algebra)}


def cmd_sym_power(args):
    A = io.load_algebra(args.algebra)
    S = symmetric_power(A, args.n)
    return _report("sym-power", dict(_algebra_data(S), basis=[list(m) for m in S.labels]))


def cmd_sym_pq_power(args):
    A = io.load_algebra(args.algebra)
    S = sym_pq_power(A, args.p, args.q)
    return _report("sym-pq-power", _algebra_data(S))


def cmd_recover(args):
    f = _load_functional(args)
    cfg = recover_configuration(f)
    data = {"configuration": None if cfg is None else io.dump_configuration(cfg)}
    if cfg is not None:
        data.update(p=cfg.p, q=cfg.q)
    return _report("recover", data)


def cmd_super(args):
    path = Path(args.matrix)
    M = io.load_supermatrix(io.read_json(path), base_dir=path.parent)
    what = args.what
    if what == "traces":
        data = {"supertrace": io.format_value(supertrace(M)),
                "power_supertraces": [io.format_value(t) for t in power_supertraces(M, args.order)]}
        return _report("super-traces", data)
    if what == "ber":
        data = {"ber": io.format_value(berezinian_block(M)),
                "char_series": [io.format_value(c) for c in char_function_series(M, args.order)]}
        ok = True
        try:
            ratio = io.format_value(ber_via_hankel(M))
            ok = ratio == data["ber"]
            data["ber_hankel_ratio"] = ratio
            data["ratio_experimental"] = ratio_formula_is_experimental(M)
        except IndeterminateError as exc:
            data["ber_hankel_ratio"] = f"indeterminate: {exc}"
        return _report("super-ber", data, ok)
    if what == "hankel":
        rep = hankel_recurrence_check(M, args.order)
        data = {"entries": [{"k": k, "minor": io.format_value(v), "vanishes": z}
                            for k, v, z in rep.entries],
                "sharpness": [{"k": k, "minor": io.format_value(v)} for k, v in rep.sharpness]}
        return _report("super-hankel", data, rep.ok)
    rep = liouville_check(M, args.order)
    data = {"exp_t_str": io.format_value(rep.lhs), "ber_exp_tM": io.format_value(rep.rhs)}
    return _report("super-liouville", data, rep.ok)


def cmd_suite(args):
    names = list(SUITES) if args.name == "all" else [args.name]
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(SUITES)} or all")
    return [run_suite(n, args.seed) for n in names]


def _common(parser):
    parser.add_argument("--out", help="also write newline-delimited JSON records here")
    parser.add_argument("--format", choices=("human", "records"), default="human")


def build_parser():
    parser = argparse.ArgumentParser(prog="frobhom", description=(
        "Exact checks for n-homomorphisms, p|q-homomorphisms and supermatrix "
        "characteristic functions."))
    sub = parser.add_subparsers(dest="command", required=True)

    def functional_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--functional", required=True, help="functional JSON file")
        p.add_argument("--algebra", help="source algebra JSON (when the functional omits it)")
        p.add_argument("--max-p", type=int, default=4)
        p.add_argument("--max-q", type=int, default=4)
        _common(p)
        p.set_defaults(fn=fn)
        return p

    functional_cmd("classify", cmd_classify, "minimal (p, q) type of a functional")
    p = functional_cmd("char-series", cmd_char_series, "coefficients of R(f, a, z)")
    p.add_argument("--element", help="coordinates of a, comma separated rationals")
    p.add_argument("--order", type=int, default=8)
    p = functional_cmd("br-lift", cmd_br_lift, "homomorphism S^n A -> B of an n-homomorphism")
    p.add_argument("--n", type=int, required=True)
    functional_cmd("recover", cmd_recover, "point configuration of a functional on C(X)")

    p = sub.add_parser("sym-power", help="symmetric power S^n A")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_sym_power)

    p = sub.add_parser("sym-pq-power", help="the subalgebra S^{p|q} A")
    p.add_argument("--algebra", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _common(p)
    p.set_defaults(fn=cmd_sym_pq_power)

    p = sub.add_parser("super", help="supermatrix invariants")
    p.add_argument("what", choices=("ber", "traces", "hankel", "liouville"))
    p.add_argument("--matrix", required=True)
    p.add_argument("--order", type=int, default=8)
    _common(p)
    p.set_defaults(fn=cmd_super)

    p = sub.add_parser("suite", help="seeded property suites")
    p.add_argument("name", help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(fn=cmd_suite)
    return parser


def _human(report, verbose):
    lines = []
    if report.seed is None and len(report.cases) == 1:
        case = report.cases[0]
        for k, v in (case.data or {}).items():
            lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(jsonable(v))}")
        if not case.verdict:
            lines.append("check FAILED")
        return "\n".join(lines)
    lines.append(report.summary())
    for c in report.cases if verbose else report.failures:
        lines.append(f"  {'PASS' if c.verdict else 'FAIL'} {c.id}: {c.description}"
                     + (f" {c.witness}" if c.witness else ""))
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with 2 on usage errors
    try:
        result = args.fn(args)
    except (io.InputError, UsageError, AlgebraError, ClassificationError, ValueError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    reports = result if isinstance(result, list) else [result]
    if args.format == "records":
        print("\n".join(r.records() for r in reports))
    else:
        print("\n".join(_human(r, False) for r in reports))
    if args.out:
        Path(args.out).write_text("\n".join(r.records() for r in reports) + "\n")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
