"""Verification suites: named grids of identity checks emitting reports.

Suite names are stable CLI keys.  Unless the caller overrides them, grids
default to n <= 4, moduli {1, 3, 5}, q in {2, 3}, p in {3, 5}, k = 3,
bits = 128, levels 1..k+3 — sized to finish in well under a minute.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import report as rep
from .characters import enumerate_characters
from .chi_eulerian import (
    chi_eulerian_series_check,
    kernel_series_check,
    verify_distribution,
)
from .errors import QEulerError
from .eulerian import eulerian_poly, eulerian_series_coeff
from .lfunction import mellin_term_check, verify_interpolation
from .padic_verify import (
    corollary4_min_precision,
    corollary4_probe,
    monomial,
    verify_integral_equation,
    verify_witt,
    verify_witt_chi,
)
from .report import FAIL, INCONCLUSIVE, PASS, VerificationReport
from .serialize import render_rational, render_value

from mpmath import mp


@dataclass
class SuiteOptions:
    max_n: int = 4
    moduli: list[int] = field(default_factory=lambda: [1, 3, 5])
    q_list: list[Fraction] = field(default_factory=lambda: [Fraction(2), Fraction(3)])
    p_list: list[int] = field(default_factory=lambda: [3, 5])
    precision: int = 3
    bits: int = 128
    levels: list[int] | None = None
    variant: str = "corrected"
    char_index: int | None = None

    def level_list(self) -> list[int]:
        return self.levels if self.levels else list(range(1, self.precision + 4))


def _characters(opts: SuiteOptions, d: int):
    chars = enumerate_characters(d)
    if opts.char_index is not None:
        chars = [chars[opts.char_index]]
    return chars


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, int((time.perf_counter() - start) * 1000)


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _nstr(x, bits: int) -> str:
    with mp.workprec(bits):
        return mp.nstr(mp.mpc(x), 30)


def _sign_sample_points(count: int) -> list[Fraction]:
    points = [Fraction(0), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(5, 3)]
    k = 2
    while len(points) < count:
        for cand in (Fraction(k), Fraction(-k)):
            if cand not in points and cand != 1:
                points.append(cand)
        k += 1
    return points[:count]


def suite_eq19_vs_eq20(opts: SuiteOptions) -> list[VerificationReport]:
    """Sign reconciliation between the series engine and the recurrence engine."""
    reports = []
    for n in range(opts.max_n + 1):
        for x0 in _sign_sample_points(n + 1):
            def case(n=n, x0=x0):
                series = eulerian_series_coeff(n, x0)
                poly = Fraction((-1) ** n) * eulerian_poly(n).poly.evaluate(x0)
                return series, poly
            (series, poly), ms = _timed(case)
            err = abs(series - poly)
            reports.append(VerificationReport(
                identity="eq19-vs-eq20",
                params={"n": n, "x0": render_rational(x0)},
                status=_status(err == 0),
                lhs=render_rational(series),
                rhs=render_rational(poly),
                metric={"kind": "abs_error", "error": render_rational(err), "bound": "0/1"},
                elapsed_ms=ms,
            ))
    return reports


def _series_suite(opts: SuiteOptions, checker, identity: str) -> list[VerificationReport]:
    reports = []
    for d in opts.moduli:
        for chi in _characters(opts, d):
            for n in range(opts.max_n + 1):
                for q in opts.q_list:
                    result, ms = _timed(lambda n=n, chi=chi, q=q: checker(n, chi, q, opts.bits))
                    with mp.workprec(opts.bits):
                        err = mp.fabs(result.lhs - result.rhs)
                        bound = result.tail_bound + result.slack
                    reports.append(VerificationReport(
                        identity=identity,
                        params={"n": n, "modulus": d, "char": chi.label,
                                "char_exponents": list(chi.exponents),
                                "q": render_rational(q),
                                "bits": opts.bits, "terms": result.terms, "form": result.form},
                        status=_status(result.passed),
                        lhs=_nstr(result.lhs, opts.bits),
                        rhs=_nstr(result.rhs, opts.bits),
                        metric={"kind": "abs_error", "error": mp.nstr(err, 12),
                                "bound": mp.nstr(bound, 12)},
                        elapsed_ms=ms,
                    ))
    return reports


def suite_eq12_series(opts: SuiteOptions) -> list[VerificationReport]:
    """Recurrence values against the full geometric kernel expansion (m >= 0)."""
    return _series_suite(opts, kernel_series_check, "eq12-series")


def suite_eq13_series(opts: SuiteOptions) -> list[VerificationReport]:
    """Recurrence values against the m >= 1 alternating character series."""
    return _series_suite(opts, chi_eulerian_series_check, "eq13-series")


def suite_eq16_distribution(opts: SuiteOptions) -> list[VerificationReport]:
    reports = []
    for d in opts.moduli:
        for chi in _characters(opts, d):
            for n in range(opts.max_n + 1):
                result, ms = _timed(
                    lambda n=n, chi=chi: verify_distribution(n, chi, opts.q_list, opts.variant))
                per_case = max(1, len(result.samples))
                for sample in result.samples:
                    lhs = sample.lhs_corrected if opts.variant == "corrected" else sample.lhs_printed
                    ok = sample.ok and sample.genocchi_ok
                    reports.append(VerificationReport(
                        identity="eq16-distribution",
                        params={"n": n, "modulus": d, "char": chi.label,
                                "char_exponents": list(chi.exponents),
                                "q": render_rational(sample.q)},
                        status=_status(ok),
                        lhs=render_value(lhs),
                        rhs=render_value(sample.rhs_euler),
                        metric={"kind": "exact", "equal": sample.ok,
                                "genocchi_equal": sample.genocchi_ok},
                        variant=opts.variant,
                        elapsed_ms=ms // per_case,
                        extra={"ratio": render_rational(sample.ratio) if sample.ratio is not None else None},
                    ))
    return reports


def suite_witt(opts: SuiteOptions) -> list[VerificationReport]:
    reports = []
    level = max(opts.level_list())
    for p in opts.p_list:
        for q in _padic_q_list(opts, p):
            for n in range(opts.max_n + 1):
                result, ms = _timed(lambda n=n, p=p, q=q: verify_witt(n, p, q, opts.precision, level))
                reports.append(VerificationReport(
                    identity="witt",
                    params={"n": n, "p": p, "q": render_rational(q), "k": opts.precision, "N": level},
                    status=_status(result.passed),
                    lhs=str(result.integral.residue),
                    rhs=str(result.reference.residue),
                    metric={"kind": "padic_valuation",
                            "valuation": (result.integral - result.reference).valuation(),
                            "target": opts.precision},
                    elapsed_ms=ms,
                ))
    return reports


def _padic_q_list(opts: SuiteOptions, p: int) -> list[Fraction]:
    """q values congruent to 1 mod p: the caller's list filtered, else 1+p, 1+2p."""
    usable = [q for q in opts.q_list
              if (q - 1).numerator % p == 0 and (q - 1).denominator % p != 0]
    return usable if usable else [Fraction(1 + p), Fraction(1 + 2 * p)]


def _chi_padic_pairs(opts: SuiteOptions):
    for d in opts.moduli:
        for p in opts.p_list:
            if d != 1 and d % p != 0:
                continue
            yield d, p


def suite_witt_chi(opts: SuiteOptions) -> list[VerificationReport]:
    reports = []
    level = max(opts.level_list())
    for d, p in _chi_padic_pairs(opts):
        for chi in _characters(opts, d):
            for q in _padic_q_list(opts, p):
                for n in range(opts.max_n + 1):
                    params = {"n": n, "modulus": d, "char": chi.label,
                              "char_exponents": list(chi.exponents), "p": p,
                              "q": render_rational(q), "k": opts.precision, "N": level}
                    try:
                        result, ms = _timed(lambda n=n, chi=chi, p=p, q=q: verify_witt_chi(
                            n, chi, p, q, opts.precision, level, opts.variant))
                    except QEulerError as exc:
                        reports.append(VerificationReport(
                            identity="witt-chi", params=params, status=INCONCLUSIVE,
                            lhs="", rhs="", metric={"kind": "error", "error": str(exc)},
                            variant=opts.variant))
                        continue
                    reports.append(VerificationReport(
                        identity="witt-chi",
                        params=params,
                        status=_status(result.passed),
                        lhs=str(result.integral.residue),
                        rhs=str(result.reference.residue),
                        metric={"kind": "padic_valuation",
                                "valuation": (result.integral - result.reference).valuation(),
                                "target": opts.precision},
                        variant=opts.variant,
                        elapsed_ms=ms,
                        extra={"ratio_vs_printed": result.ratio},
                    ))
    return reports


def suite_integral_eq(opts: SuiteOptions) -> list[VerificationReport]:
    cases = [
        (4, monomial(1), 2),
        (5, monomial(1), 3),
        (6, monomial(1), 2),
        (7, monomial(2), 1),
        (8, monomial(2), 1),
        (7, monomial(0), 1),  # constant integrand: exact at every level
    ]
    reports = []
    levels = opts.level_list()
    for p in opts.p_list:
        for q in _padic_q_list(opts, p):
            for eq, f, n in cases:
                result, ms = _timed(lambda eq=eq, f=f, n=n, p=p, q=q: verify_integral_equation(
                    eq, f, n, p, q, opts.precision, levels))
                reports.append(VerificationReport(
                    identity="integral-eq",
                    params={"eq": eq, "f": f.describe(), "shift": n, "p": p,
                            "q": render_rational(q), "k": opts.precision,
                            "levels": list(result.levels)},
                    status=_status(result.passed),
                    lhs=str(result.lhs_last),
                    rhs=str(result.rhs),
                    metric={"kind": "padic_valuation", "valuation": list(result.valuations),
                            "target": opts.precision},
                    elapsed_ms=ms,
                ))
    return reports


def suite_corollary4(opts: SuiteOptions) -> list[VerificationReport]:
    reports = []
    levels = opts.level_list()
    for d, p in _chi_padic_pairs(opts):
        for chi in _characters(opts, d):
            for q in _padic_q_list(opts, p):
                for n in range(opts.max_n + 1):
                    if d == 1 and n == 0:
                        # the probed limit statement needs chi(0)*0^n = 0
                        continue
                    # the candidates differ by 2 S_A (q^2-1); raise k until
                    # they separate mod p^k, else the probe is vacuous
                    k = corollary4_min_precision(n, chi, p, q, floor=opts.precision)
                    params = {"n": n, "modulus": d, "char": chi.label,
                              "char_exponents": list(chi.exponents), "p": p,
                              "q": render_rational(q), "k": k if k else opts.precision,
                              "levels": levels}
                    if k is None:
                        reports.append(VerificationReport(
                            identity="corollary4-probe", params=params, status=INCONCLUSIVE,
                            lhs="", rhs="",
                            metric={"kind": "error",
                                    "error": "candidate closed forms coincide mod p^k"}))
                        continue
                    case_levels = levels if k <= opts.precision else list(range(1, k + 4))
                    params["levels"] = case_levels
                    try:
                        result, ms = _timed(lambda n=n, chi=chi, p=p, q=q, k=k: corollary4_probe(
                            n, chi, p, q, k, case_levels))
                    except QEulerError as exc:
                        reports.append(VerificationReport(
                            identity="corollary4-probe", params=params, status=INCONCLUSIVE,
                            lhs="", rhs="", metric={"kind": "error", "error": str(exc)}))
                        continue
                    status = (PASS if result.converged_to == "2*S_A"
                              else FAIL if result.converged_to == "2*q^2*S_A"
                              else INCONCLUSIVE)
                    reports.append(VerificationReport(
                        identity="corollary4-probe",
                        params=params,
                        status=status,
                        lhs=str(result.sums[-1]) if result.sums else "",
                        rhs=f"2*S_A={result.candidate_plain}; 2*q^2*S_A={result.candidate_scaled}",
                        metric={"kind": "padic_valuation",
                                "valuation_plain": list(result.val_plain),
                                "valuation_scaled": list(result.val_scaled),
                                "target": k},
                        elapsed_ms=ms,
                        extra={"converged_to": result.converged_to},
                    ))
    return reports


def suite_interpolation(opts: SuiteOptions) -> list[VerificationReport]:
    reports = []
    for d in opts.moduli:
        for chi in _characters(opts, d):
            for n in range(opts.max_n + 1):
                for q in opts.q_list:
                    result, ms = _timed(lambda n=n, chi=chi, q=q: verify_interpolation(
                        n, chi, q, opts.bits))
                    reports.append(VerificationReport(
                        identity="interpolation",
                        params={"n": n, "modulus": d, "char": chi.label,
                                "char_exponents": list(chi.exponents),
                                "q": render_rational(q), "bits": opts.bits},
                        status=_status(result.passed),
                        lhs=_nstr(result.l_value, opts.bits),
                        rhs=_nstr(result.reference, opts.bits),
                        metric={"kind": "abs_error",
                                "error": mp.nstr(mp.mpf(result.difference), 12),
                                "bound": mp.nstr(mp.mpf(result.bound), 12)},
                        elapsed_ms=ms,
                    ))
    return reports


MELLIN_CASES = ((Fraction(2), 1, Fraction(2)), (Fraction(1), 2, Fraction(1)),
                (Fraction(3, 2), 1, Fraction(2)))


def suite_mellin(opts: SuiteOptions) -> list[VerificationReport]:
    reports = []
    for s, m, q in MELLIN_CASES:
        result, ms = _timed(lambda s=s, m=m, q=q: mellin_term_check(s, m, q, opts.bits))
        reports.append(VerificationReport(
            identity="mellin-term",
            params={"s": render_rational(s), "m": m, "q": render_rational(q), "bits": opts.bits},
            status=_status(result.passed),
            lhs=_nstr(result.lhs, opts.bits),
            rhs=_nstr(result.rhs, opts.bits),
            metric={"kind": "abs_error", "error": mp.nstr(mp.mpf(result.difference), 12),
                    "bound": mp.nstr(mp.mpf(result.tolerance), 12)},
            elapsed_ms=ms,
        ))
    return reports


SUITES = {
    "eq19-vs-eq20": suite_eq19_vs_eq20,
    "eq12-series": suite_eq12_series,
    "eq13-series": suite_eq13_series,
    "eq16-distribution": suite_eq16_distribution,
    "witt": suite_witt,
    "witt-chi": suite_witt_chi,
    "integral-eq": suite_integral_eq,
    "corollary4-probe": suite_corollary4,
    "interpolation": suite_interpolation,
    "mellin-term": suite_mellin,
}


def run_suite(name: str, opts: SuiteOptions) -> list[VerificationReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return rep.sort_reports(SUITES[name](opts))
