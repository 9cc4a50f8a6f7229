"""Command-line front end: computations, verification suites, table emission.

Exit codes: 0 all cases pass, 1 identity failure, 2 usage error,
3 precision/convergence failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report as rep
from .characters import character_by_index, enumerate_characters
from .chi_eulerian import chi_eulerian
from .errors import QEulerError
from .eulerian import eulerian_poly
from .lfunction import l_eulerian
from .numtheory import phi
from .padic_verify import chi_monomial, monomial, truncated_integral_full, MEASURES
from .serialize import (
    parse_int_list,
    parse_q_list,
    parse_rational,
    render_complex,
    render_rational,
    render_value,
)
from .suites import SUITES, SuiteOptions, run_suite
from .tables import KINDS, TableOptions, build_table, render_table

from mpmath import mp


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--max-n", type=int, default=None)
    parser.add_argument("--modulus", type=int, default=None)
    parser.add_argument("--char", type=int, default=None)
    parser.add_argument("--q", type=str, default=None, help="comma list of rationals a/b")
    parser.add_argument("--p", type=str, default=None, help="comma list of odd primes")
    parser.add_argument("--precision", type=int, default=None, help="p-adic precision k")
    parser.add_argument("--bits", type=int, default=None)
    parser.add_argument("--levels", type=str, default=None, help="comma list of levels N")
    parser.add_argument("--variant", choices=("printed", "corrected"), default=None)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", type=str, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qeuler")
    sub = parser.add_subparsers(dest="command", required=True)

    eulerian = sub.add_parser("eulerian", help="classical and character-attached values")
    eulerian_sub = eulerian.add_subparsers(dest="subcommand", required=True)
    classical = eulerian_sub.add_parser("classical")
    _add_common(classical)
    chi = eulerian_sub.add_parser("chi")
    _add_common(chi)

    chars = sub.add_parser("chars", help="character enumeration and conductors")
    chars_sub = chars.add_subparsers(dest="subcommand", required=True)
    chars_list = chars_sub.add_parser("list")
    _add_common(chars_list)
    chars_cond = chars_sub.add_parser("conductor")
    _add_common(chars_cond)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify_sub = verify.add_subparsers(dest="subcommand", required=True)
    suite = verify_sub.add_parser("suite")
    suite.add_argument("--name", required=True, choices=sorted(SUITES))
    _add_common(suite)

    lfun = sub.add_parser("lfunction", help="numeric L-values")
    lfun_sub = lfun.add_subparsers(dest="subcommand", required=True)
    lfun_eval = lfun_sub.add_parser("eval")
    lfun_eval.add_argument("--s", type=str, required=True, help="rational s, or re,im")
    _add_common(lfun_eval)

    padic = sub.add_parser("padic", help="truncated fermionic integrals")
    padic_sub = padic.add_subparsers(dest="subcommand", required=True)
    integral = padic_sub.add_parser("integral")
    integral.add_argument("--measure", choices=MEASURES, default="-q^-1")
    _add_common(integral)

    emit = sub.add_parser("emit", help="emit value tables")
    emit_sub = emit.add_subparsers(dest="subcommand", required=True)
    table = emit_sub.add_parser("table")
    table.add_argument("--kind", required=True, choices=KINDS)
    _add_common(table)

    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _suite_options(args) -> SuiteOptions:
    opts = SuiteOptions()
    if args.max_n is not None:
        opts.max_n = args.max_n
    elif args.n is not None:
        opts.max_n = args.n
    if args.modulus is not None:
        opts.moduli = [args.modulus]
    if args.q:
        opts.q_list = parse_q_list(args.q)
    if args.p:
        opts.p_list = parse_int_list(args.p)
    if args.precision is not None:
        opts.precision = args.precision
    if args.bits is not None:
        opts.bits = args.bits
    if args.levels:
        opts.levels = parse_int_list(args.levels)
    if args.variant:
        opts.variant = args.variant
    if args.char is not None:
        opts.char_index = args.char
    return opts


def _character(parser, args, default_modulus=3):
    modulus = args.modulus if args.modulus is not None else default_modulus
    index = args.char if args.char is not None else 0
    try:
        return character_by_index(modulus, index)
    except (ValueError, QEulerError) as exc:
        parser.error(str(exc))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(parser, args)
    except QEulerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return rep.EXIT_PRECISION


def _dispatch(parser, args) -> int:
    if args.command == "eulerian" and args.subcommand == "classical":
        n = args.n if args.n is not None else (args.max_n if args.max_n is not None else 0)
        if n < 0:
            parser.error("--n must be >= 0")
        coeffs = eulerian_poly(n).poly.coeffs
        _write(",".join(str(c.numerator) for c in coeffs) + "\n", args.out)
        return rep.EXIT_OK

    if args.command == "eulerian" and args.subcommand == "chi":
        chi = _character(parser, args)
        n = args.n if args.n is not None else 0
        q = parse_q_list(args.q)[0] if args.q else Fraction(2)
        value = chi_eulerian(n, chi, q)
        _write(render_value(value) + "\n", args.out)
        return rep.EXIT_OK

    if args.command == "chars" and args.subcommand == "list":
        modulus = args.modulus if args.modulus is not None else 3
        lines = []
        for k, chi in enumerate(enumerate_characters(modulus)):
            lines.append(json.dumps({
                "name": chi.label, "modulus": modulus, "index": k,
                "exponents": list(chi.exponents), "order": chi.order,
                "value_order": chi.value_order, "conductor": chi.conductor(),
            }, sort_keys=True))
        _write("\n".join(lines) + "\n", args.out)
        return rep.EXIT_OK

    if args.command == "chars" and args.subcommand == "conductor":
        chi = _character(parser, args)
        _write(f"{chi.conductor()}\n", args.out)
        return rep.EXIT_OK

    if args.command == "verify":
        opts = _suite_options(args)
        reports = run_suite(args.name, opts)
        if args.format == "csv":
            _write(rep.dump_csv(reports), args.out)
        else:
            _write(rep.dump_json_lines(reports), args.out)
        return rep.exit_code(reports)

    if args.command == "lfunction":
        chi = _character(parser, args)
        parts = [parse_rational(p) for p in args.s.split(",")]
        s = complex(parts[0]) if len(parts) == 1 else complex(parts[0], parts[1])
        q = parse_q_list(args.q)[0] if args.q else Fraction(2)
        bits = args.bits if args.bits is not None else 128
        lv = l_eulerian(s, chi, q, bits)
        re_s, im_s = render_complex(lv.value, bits)
        with mp.workprec(64):
            tail = mp.nstr(mp.mpf(lv.tail_bound), 10)
        _write(json.dumps({
            "s": args.s, "char": chi.label, "q": render_rational(q), "bits": bits,
            "value_re": re_s, "value_im": im_s, "tail_bound": tail, "terms": lv.terms,
        }, sort_keys=True) + "\n", args.out)
        return rep.EXIT_OK

    if args.command == "padic":
        p = parse_int_list(args.p)[0] if args.p else 5
        q = parse_q_list(args.q)[0] if args.q else Fraction(1 + p)
        k = args.precision if args.precision is not None else 3
        n = args.n if args.n is not None else 0
        levels = parse_int_list(args.levels) if args.levels else [k + 3]
        if args.modulus is not None:
            f = chi_monomial(_character(parser, args), n)
        else:
            f = monomial(n)
        lines = []
        for N in levels:
            result = truncated_integral_full(f, p, q, args.measure, N, k)
            lines.append(json.dumps({
                "integrand": f.describe(), "measure": args.measure, "p": p,
                "q": render_rational(q), "k": k, "N": N,
                "residue": result.value.residue, "modulus": result.value.modulus,
            }, sort_keys=True))
        _write("\n".join(lines) + "\n", args.out)
        return rep.EXIT_OK

    if args.command == "emit":
        opts = TableOptions(kind=args.kind)
        if args.max_n is not None:
            opts.max_n = args.max_n
        elif args.n is not None:
            opts.max_n = args.n
        if args.modulus is not None:
            opts.modulus = args.modulus
        if args.char is not None:
            if not 0 <= args.char < phi(opts.modulus):
                parser.error(f"char index {args.char} out of range")
            opts.char_index = args.char
        if args.q:
            opts.q_list = parse_q_list(args.q)
        if args.bits is not None:
            opts.bits = args.bits
        header, rows = build_table(opts)
        _write(render_table(header, rows, args.format), args.out)
        return rep.EXIT_OK

    parser.error("unknown command")
    return rep.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
