"""Command-line front end: ``diffpow <subcommand> [options] "<ideal>"``.

Exit status: 0 on success, 1 on usage or parse errors, 2 when the input is
well formed but outside the hypotheses of the requested computation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import analysis, closure, core, oracle
from .decompose import decompose
from .diffpower import diffpower, diffpower_trace
from .staircase import StaircaseRender, render_staircase
from .textio import (IdealExpression, ParseError, format_monomial, format_pure,
                     ideal_to_json, parse_ideal)

USAGE_ERROR = 1
MATH_ERROR = 2

SUBCOMMANDS = ("compute", "power", "decompose", "radical", "closure", "witness",
               "principality", "nmin", "contain", "no-uniform", "oracle", "staircase")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--vars", help="comma-separated variable names (fixes the dimension)")
    common.add_argument("--trace", action="store_true", help="show intermediate steps")

    p = _Parser(prog="diffpow", description="Differential powers of monomial ideals.")
    sub = p.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=_Parser)

    def add(name, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        return sp

    sp = add("compute", "n-th differential power")
    sp.add_argument("-n", type=_positive, required=True)
    sp.add_argument("ideal")

    sp = add("power", "n-th ordinary power")
    sp.add_argument("-n", type=_positive, required=True)
    sp.add_argument("ideal")

    for name, text in (("decompose", "irredundant pure-power decomposition"),
                       ("radical", "radical"),
                       ("closure", "differential closure")):
        add(name, text).add_argument("ideal")

    sp = add("witness", "closure certificate c = r^k for a monomial r in the radical")
    sp.add_argument("--element", required=True)
    sp.add_argument("--nmax", type=_positive, default=8)
    sp.add_argument("ideal")

    sp = add("principality", "principality index (exact for d=2, bound+search for d=3)")
    sp.add_argument("--cap", type=_positive, default=64)
    sp.add_argument("ideal")

    sp = add("nmin", "least n with a principal differential power")
    sp.add_argument("--cap", type=_positive, default=64)
    sp.add_argument("--linear", action="store_true", help="scan instead of bisecting")
    sp.add_argument("ideal")

    sp = add("contain", "containment between ordinary and differential powers")
    sp.add_argument("--dir", choices=("up", "down"), required=True,
                    help="up: I^<cn> in I^n; down: I^n in I^<n+c>")
    sp.add_argument("-n", type=_positive, required=True)
    sp.add_argument("ideal")

    sp = add("no-uniform", "counterexample to I^<p(n)> in I^n for a polynomial p")
    sp.add_argument("--poly", type=_int_list, required=True,
                    help="coefficients, lowest degree first")

    sp = add("oracle", "brute-force differential power")
    sp.add_argument("-n", type=_positive, required=True)
    sp.add_argument("--box", type=_int_list)
    sp.add_argument("--witness", metavar="MONOMIAL",
                    help="report the first operator sending this monomial outside the ideal")
    sp.add_argument("ideal")

    sp = add("staircase", "exponent-set picture (two variables)")
    sp.add_argument("--powers", type=_int_list, default=[],
                    help="differential powers to overlay, e.g. 2,3")
    sp.add_argument("--extent", type=_int_list)
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sp.add_argument("ideal")
    return p


def _hoist_globals(argv: Sequence[str]) -> list[str]:
    # allow --json/--trace/--vars before the subcommand too
    argv = list(argv)
    head, rest = [], []
    i = 0
    while i < len(argv) and argv[i] not in SUBCOMMANDS:
        if argv[i] == "--vars" and i + 1 < len(argv):
            head += argv[i:i + 2]
            i += 2
            continue
        head.append(argv[i])
        i += 1
    rest = argv[i:]
    if not rest:
        return argv
    return rest[:1] + head + rest[1:]


def _expr(args) -> IdealExpression:
    names = args.vars.split(",") if args.vars else None
    return parse_ideal(args.ideal, names)


def _monomial(text: str, expr: IdealExpression) -> core.Vector:
    parsed = parse_ideal(f"({text})", expr.names)
    if len(parsed.gens) != 1:
        raise ParseError(f"expected a single monomial, got {text!r}")
    return parsed.gens[0]


def _vec_json(v):
    return list(v) if v is not None else None


def _ideal_payload(I: core.MonomialIdeal, **extra) -> dict:
    out = ideal_to_json(I)
    out.update(extra)
    return out


def _run(args) -> tuple[str, dict]:
    """Return (text, json payload) for a parsed command line."""
    cmd = args.command
    if cmd == "no-uniform":
        res = analysis.no_uniform_polynomial_demo(args.poly)
        c = res.ideal.gens[0][0]
        text = (f"p = {args.poly}, I = (x^{c}), n = {res.n}, p(n) = {res.p_n}\n"
                f"witness x^{res.witness[0]}: in I^<{res.p_n}> = {diffpower(res.ideal, res.p_n)}, "
                f"not in I^{res.n} = {core.ordinary_power(res.ideal, res.n)}")
        return text, _ideal_payload(res.ideal, poly=list(args.poly), n=res.n, p_n=res.p_n,
                                    witness=list(res.witness),
                                    in_diffpower=res.in_diffpower,
                                    in_ordinary_power=res.in_ordinary_power)

    expr = _expr(args)
    I = expr.ideal
    fmt = expr.format

    if cmd == "compute":
        if args.trace:
            result, dec, parts = diffpower_trace(I, args.n)
            lines = [f"decomposition: {dec}"]
            lines += [f"  {q}^<{args.n}> = {fmt(p)}" for q, p in parts]
            lines.append(fmt(result))
            trace = {"components": [
                {"component": ideal_to_json(q.to_ideal()), "power": ideal_to_json(p)}
                for q, p in parts]}
            return "\n".join(lines), _ideal_payload(result, n=args.n, trace=trace)
        result = diffpower(I, args.n)
        return fmt(result), _ideal_payload(result, n=args.n)

    if cmd == "power":
        result = core.ordinary_power(I, args.n)
        return fmt(result), _ideal_payload(result, n=args.n)

    if cmd == "decompose":
        dec = decompose(I)
        text = " ∩ ".join(format_pure(q, expr.names) for q in dec.components)
        comps = [ideal_to_json(q.to_ideal()) for q in dec.components]
        return text, _ideal_payload(I, components=comps)

    if cmd == "radical":
        result = core.radical(I)
        return fmt(result), _ideal_payload(result)

    if cmd == "closure":
        result = closure.differential_closure(I)
        return fmt(result), _ideal_payload(result)

    if cmd == "witness":
        r = _monomial(args.element, expr)
        cert = closure.witness_probe(I, r, args.nmax)
        lines = [f"r = {format_monomial(r, expr.names)}, k = {cert.k}, "
                 f"c = r^{cert.k} = {format_monomial(cert.c, expr.names)}"]
        for n, fast, slow in cert.checks:
            tail = "" if slow is None else f", oracle {'ok' if slow else 'FAIL'}"
            lines.append(f"  n = {n}: c r^n in I^<n> {'ok' if fast else 'FAIL'}{tail}")
        checks = [{"n": n, "diffpower": fast, "oracle": slow} for n, fast, slow in cert.checks]
        return "\n".join(lines), _ideal_payload(I, element=list(r), k=cert.k, c=list(cert.c),
                                               n_checked=cert.n_checked, checks=checks)

    if cmd == "principality":
        rep = analysis.principality(I, args.cap)
        return _principality_text(rep, expr), _ideal_payload(
            I, method=rep.method, n_bound=rep.n_bound, n_min=rep.n_min,
            generator_at_bound=_vec_json(rep.principal_gen_at_bound),
            generator_at_n_min=_vec_json(rep.principal_gen_at_n_min),
            search_cap=rep.search_cap)

    if cmd == "nmin":
        found = analysis.nmin_search(I, args.cap, linear=args.linear)
        if found is None:
            text = f"no principal differential power for n <= {args.cap}"
            return text, _ideal_payload(I, cap=args.cap, n_min=None, generator=None)
        n, g = found
        text = f"N_min = {n}, I^<{n}> = ({format_monomial(g, expr.names)})"
        return text, _ideal_payload(I, cap=args.cap, n_min=n, generator=list(g))

    if cmd == "contain":
        return _contain(I, args, expr)

    if cmd == "oracle":
        box = tuple(args.box) if args.box else oracle.default_box(I, args.n)
        if args.witness:
            gamma = _monomial(args.witness, expr)
            w = oracle.find_witness(oracle.Polynomial.monomial(gamma), I, args.n)
            mono = format_monomial(gamma, expr.names)
            if w is None:
                text = f"{mono} is in I^<{args.n}>"
                return text, _ideal_payload(I, n=args.n, monomial=list(gamma), member=True, witness=None)
            text = (f"{mono} is not in I^<{args.n}>: d^{list(w.beta)} gives "
                    f"{w.coefficient} {format_monomial(w.exponent, expr.names)}, outside I")
            return text, _ideal_payload(I, n=args.n, monomial=list(gamma), member=False,
                                        witness={"beta": list(w.beta), "exponent": list(w.exponent),
                                                 "coefficient": w.coefficient})
        result = oracle.bruteforce_diffpower(I, args.n, box)
        return fmt(result), _ideal_payload(result, n=args.n, box=list(box))

    if cmd == "staircase":
        overlays = [(f"I^<{k}>", diffpower(I, k)) for k in args.powers]
        req = StaircaseRender(I, overlays, args.format,
                              tuple(args.extent) if args.extent else None)
        pic = render_staircase(req).rstrip("\n")
        return pic, _ideal_payload(I, format=args.format, picture=pic)

    raise UsageError(f"unknown subcommand {cmd!r}")


def _principality_text(rep: analysis.PrincipalityReport, expr: IdealExpression) -> str:
    def mono(g):
        return f"({format_monomial(g, expr.names)})"

    parts = []
    if rep.n_bound is not None:
        label = "N" if rep.method == "2d" else "N (bound)"
        parts.append(f"{label} = {rep.n_bound}, I^<{rep.n_bound}> = {mono(rep.principal_gen_at_bound)}")
    if rep.method != "2d":
        if rep.n_min is None:
            parts.append(f"no principal differential power for n <= {rep.search_cap}")
        else:
            parts.append(f"N_min = {rep.n_min}, I^<{rep.n_min}> = {mono(rep.principal_gen_at_n_min)}")
    return "\n".join(parts)


def _contain(I: core.MonomialIdeal, args, expr: IdealExpression) -> tuple[str, dict]:
    pure = None
    if all(len(core.support(g)) == 1 for g in I.gens) and not I.is_zero:
        pure = core.PurePowerIdeal.from_ideal(I)
    gen = core.is_principal(I)
    if args.dir == "up":
        if pure is not None:
            rep = analysis.upper_containment_check(pure, args.n)
        elif gen is not None:
            rep = analysis.principal_containment_check(gen, args.n)
        else:
            raise core.PreconditionError(
                "upper containment needs a pure-power or principal monomial ideal")
        text = (f"c = {rep.c_value}: I^<{rep.diff_index}> in I^{rep.ordinary_index}: "
                f"{'verified' if rep.verified else 'FAILED'}")
        if isinstance(rep.c_value, Fraction):
            text += f" (also I^<{rep.extra['sharp_index']}> in I^{args.n})"
    else:
        if pure is None:
            raise core.PreconditionError("lower containment needs a pure-power ideal")
        rep = analysis.lower_containment_c(pure, args.n)
        text = (f"c = {rep.c_value} (omega = {list(rep.witness)}): "
                f"I^{rep.ordinary_index} in I^<{rep.diff_index}>: "
                f"{'verified' if rep.verified else 'FAILED'}")
    c = rep.c_value
    c_json = c if isinstance(c, int) else {"num": c.numerator, "den": c.denominator}
    payload = _ideal_payload(I, n=args.n, direction=rep.direction.value, c=c_json,
                             diff_index=rep.diff_index, ordinary_index=rep.ordinary_index,
                             verified=rep.verified)
    if rep.witness is not None:
        payload["omega"] = list(rep.witness)
    return text, payload


def dispatch(argv: Sequence[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_globals(argv))
        if args.command is None:
            raise UsageError(parser.format_usage())
        text, payload = _run(args)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return USAGE_ERROR
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return USAGE_ERROR
    except (core.PreconditionError, core.DimensionError, core.ExponentOverflowError,
            oracle.OracleError) as exc:
        err.write(f"precondition: {exc}\n")
        return MATH_ERROR
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return dispatch(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
