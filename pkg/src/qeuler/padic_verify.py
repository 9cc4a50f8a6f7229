"""Truncated fermionic p-adic q-integrals and the identity checks built on them.

A truncated integral is the finite Riemann sum

    T_N(f; Q) = (1 / [p^N]_Q) sum_{eta < p^N} Q^eta f(eta)   (mod p^k),

for a weight Q in {q, -q, -q^{-1}, -q^{-d}} with q = 1 (mod p), so every
kernel power is a p-adic unit and the normalizer is invertible for the
fermionic weights.  All checks report per-level residual valuations so the
empirical convergence (valuation growing with N) is auditable, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import lcm
from typing import Sequence, Union

from .characters import DirichletCharacter
from .chi_eulerian import chi_eulerian, series_reference
from .cyclotomic import CycElem
from .errors import (
    BadCongruence,
    NonUnitNormalizer,
    ParityMismatch,
)
from .eulerian import witt_value
from .numtheory import is_prime
from .padic import PadicResidue, embed_cyclotomic

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class IntegrandSpec:
    """f(x + shift) with f a (character-weighted, offset) monomial."""

    kind: str  # "monomial" | "chi_monomial" | "shifted_monomial"
    degree: int
    character: DirichletCharacter | None = None
    offset: Fraction = Fraction(0)
    shift: int = 0

    def __post_init__(self):
        if self.kind not in ("monomial", "chi_monomial", "shifted_monomial"):
            raise ValueError(f"unknown integrand kind {self.kind!r}")
        if self.kind == "chi_monomial" and self.character is None:
            raise ValueError("chi_monomial needs a character")
        if self.degree < 0 or self.shift < 0:
            raise ValueError("degree and shift must be >= 0")

    def shifted(self, s: int) -> IntegrandSpec:
        return replace(self, shift=self.shift + s)

    def exact_value(self, x: int):
        """f(x) as an exact Fraction, or CycElem for character integrands."""
        t = x + self.shift
        base = (self.offset + t) ** self.degree
        if self.character is not None:
            return self.character(t) * base
        return Fraction(base)

    def describe(self) -> str:
        core = f"x^{self.degree}"
        if self.kind == "shifted_monomial":
            core = f"({self.offset}+x)^{self.degree}"
        if self.character is not None:
            core = f"chi[{self.character.label}](x)*{core}"
        return core if self.shift == 0 else core.replace("x", f"(x+{self.shift})")


@dataclass(frozen=True)
class TruncatedIntegral:
    prime: int
    level: int
    measure: str
    q: Fraction
    integrand: IntegrandSpec
    value: PadicResidue


def monomial(degree: int) -> IntegrandSpec:
    return IntegrandSpec("monomial", degree)


def chi_monomial(chi: DirichletCharacter, degree: int) -> IntegrandSpec:
    return IntegrandSpec("chi_monomial", degree, character=chi)


def shifted_monomial(offset: Scalar, degree: int) -> IntegrandSpec:
    return IntegrandSpec("shifted_monomial", degree, offset=Fraction(offset))


MEASURES = ("q", "-q", "-q^-1", "-q^-d")


def measure_weight(measure: str, q: Fraction, d: int = 1) -> Fraction:
    if measure == "q":
        return q
    if measure == "-q":
        return -q
    if measure == "-q^-1":
        return -1 / q
    if measure == "-q^-d":
        return -(q ** (-d))
    raise ValueError(f"unknown measure {measure!r}")


def _require_congruence(q: Fraction, p: int) -> None:
    delta = q - 1
    if delta.denominator % p == 0 or delta.numerator % p != 0:
        raise BadCongruence(f"q = {q} is not congruent to 1 mod {p}")


def _residue(fr: Fraction, p: int, k: int) -> int:
    return PadicResidue.from_rational(fr, p, k).residue


def _value_table(spec: IntegrandSpec, p: int, k: int) -> tuple[int, list[int]]:
    """Period and residue table of eta -> f(eta) mod p^k.

    (x+shift+offset)^degree mod p^k has period p^k in eta, character factors
    have period d, so the product is periodic with period lcm(p^k, d).
    """
    pk = p**k
    d = spec.character.modulus if spec.character is not None else 1
    period = lcm(pk, max(d, 1))
    offset_res = _residue(spec.offset, p, k) if spec.offset else 0
    chi_res: list[int] | None = None
    if spec.character is not None:
        chi_res = [embed_cyclotomic(spec.character(a), p, k) for a in range(max(d, 1))]
    table = []
    for x in range(period):
        t = x + spec.shift
        v = pow((offset_res + t) % pk, spec.degree, pk)
        if chi_res is not None:
            v = v * chi_res[t % d] % pk
        table.append(v)
    return period, table


def truncated_integrals(specs: Sequence[IntegrandSpec], p: int, q: Scalar, measure: str,
                        N: int, k: int, d: int | None = None) -> list[PadicResidue]:
    """Batch evaluation of several integrands under one weight loop."""
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if N < 1 or k < 1:
        raise ValueError("N and k must be >= 1")
    qf = Fraction(q)
    _require_congruence(qf, p)
    if d is None:
        mods = [s.character.modulus for s in specs if s.character is not None]
        d = mods[0] if mods else 1
    weight = measure_weight(measure, qf, d)
    pk = p**k
    w_res = _residue(weight, p, k)
    if (w_res - 1) % p == 0:
        # geometric normalizer sum_{j<p^N} Q^j = 0 mod p when Q = 1 mod p
        raise NonUnitNormalizer(f"[p^N]_Q is not a unit for measure {measure!r}")
    normalizer = (1 - pow(w_res, p**N, pk)) * pow((1 - w_res) % pk, -1, pk) % pk
    if normalizer % p == 0:
        raise NonUnitNormalizer(f"[p^N]_Q is not a unit for measure {measure!r}")
    tables = [_value_table(s, p, k) for s in specs]
    totals = [0] * len(specs)
    w = 1
    for eta in range(p**N):
        for i, (period, table) in enumerate(tables):
            v = table[eta % period]
            if v:
                totals[i] = (totals[i] + w * v) % pk
        w = w * w_res % pk
    inv_norm = pow(normalizer, -1, pk)
    return [PadicResidue(p, k, t * inv_norm % pk) for t in totals]


def truncated_integral(f: IntegrandSpec, p: int, q: Scalar, measure: str = "-q^-1",
                       N: int = 4, k: int = 1, d: int | None = None) -> PadicResidue:
    return truncated_integrals([f], p, q, measure, N, k, d)[0]


def truncated_integral_full(f: IntegrandSpec, p: int, q: Scalar, measure: str,
                            N: int, k: int, d: int | None = None) -> TruncatedIntegral:
    value = truncated_integral(f, p, q, measure, N, k, d)
    return TruncatedIntegral(p, N, measure, Fraction(q), f, value)


def _embed_exact(value, p: int, k: int) -> int:
    if isinstance(value, CycElem):
        return embed_cyclotomic(value, p, k)
    return _residue(Fraction(value), p, k)


def _valuation(r: int, p: int, k: int) -> int:
    r %= p**k
    if r == 0:
        return k
    v = 0
    while r % p == 0:
        r //= p
        v += 1
    return v


@dataclass(frozen=True)
class IntegralEquationReport:
    equation: int
    integrand: IntegrandSpec
    shift: int
    prime: int
    q: Fraction
    precision: int
    levels: tuple[int, ...]
    valuations: tuple[int, ...]
    lhs_last: int
    rhs: int
    passed: bool


def verify_integral_equation(eq: int, f: IntegrandSpec, n: int, p: int, q: Scalar, k: int,
                             N_list: Sequence[int]) -> IntegralEquationReport:
    """Check one of the five shift equations of the fermionic integral.

    eq 4: q^n T(f_n) + (-1)^{n-1} T(f) = (1+q) sum_{l<n} (-1)^{n-1-l} q^l f(l)   [-q]
    eq 5 (n odd) / eq 6 (n even): the sign-resolved forms of eq 4              [-q]
    eq 7 (n = 1): q T(f_1) + T(f) = (1+q) f(0)                                  [-q]
    eq 8 (n = 1): T(f_1) + q T(f) = (1+q) f(0)                                  [-q^-1]

    Passes when the residual valuation reaches k at the largest level and is
    non-decreasing across levels.
    """
    if eq not in (4, 5, 6, 7, 8):
        raise ValueError("equation must be one of 4..8")
    if eq == 5 and n % 2 == 0:
        raise ParityMismatch("equation 5 needs odd shift")
    if eq == 6 and n % 2 == 1:
        raise ParityMismatch("equation 6 needs even shift")
    if eq in (7, 8) and n != 1:
        raise ParityMismatch("equations 7 and 8 are the shift-1 cases")
    if n < 1:
        raise ValueError("shift must be >= 1")
    qf = Fraction(q)
    measure = "-q^-1" if eq == 8 else "-q"
    pk = p**k

    two_q = 1 + qf
    if eq in (7, 8):
        rhs_exact = two_q * f.exact_value(0)
    elif eq == 4:
        rhs_exact = sum((Fraction((-1) ** (n - 1 - l)) * qf**l * f.exact_value(l) for l in range(n)),
                        start=Fraction(0) * f.exact_value(0))
        rhs_exact = two_q * rhs_exact
    else:
        rhs_exact = sum((Fraction((-1) ** l) * qf**l * f.exact_value(l) for l in range(n)),
                        start=Fraction(0) * f.exact_value(0))
        rhs_exact = two_q * rhs_exact
    rhs = _embed_exact(rhs_exact, p, k)

    qn = _residue(qf**n, p, k)
    q1 = _residue(qf, p, k)
    levels = tuple(sorted(N_list))
    vals = []
    lhs_last = 0
    for N in levels:
        t_f, t_fn = truncated_integrals([f, f.shifted(n)], p, qf, measure, N, k)
        if eq == 4:
            lhs = (qn * t_fn.residue + (-1) ** (n - 1) * t_f.residue) % pk
        elif eq == 5:
            lhs = (qn * t_fn.residue + t_f.residue) % pk
        elif eq == 6:
            lhs = (t_f.residue - qn * t_fn.residue) % pk
        elif eq == 7:
            lhs = (q1 * t_fn.residue + t_f.residue) % pk
        else:
            lhs = (t_fn.residue + q1 * t_f.residue) % pk
        vals.append(_valuation(lhs - rhs, p, k))
        lhs_last = lhs
    monotone = all(a <= b for a, b in zip(vals, vals[1:]))
    passed = bool(vals) and vals[-1] >= k and monotone
    return IntegralEquationReport(eq, f, n, p, qf, k, levels, tuple(vals), lhs_last, rhs, passed)


@dataclass(frozen=True)
class WittReport:
    n: int
    prime: int
    q: Fraction
    precision: int
    level: int
    integral: PadicResidue
    reference: PadicResidue
    variant: str
    ratio: int | None
    passed: bool


def verify_witt(n: int, p: int, q: Scalar, k: int, N: int) -> WittReport:
    """Truncated integral of x^n under -q^{-1} against (-1)^n (1+q)^{-n} A_n(-q)."""
    qf = Fraction(q)
    integral = truncated_integral(monomial(n), p, qf, "-q^-1", N, k)
    ref_exact = Fraction((-1) ** n) / (1 + qf) ** n * witt_value(n, qf)
    reference = PadicResidue.from_rational(ref_exact, p, k)
    return WittReport(n, p, qf, k, N, integral, reference, "n/a", None,
                      integral.residue == reference.residue)


def verify_witt_chi(n: int, chi: DirichletCharacter, p: int, q: Scalar, k: int, N: int,
                    variant: str = "corrected") -> WittReport:
    """Truncated integral of chi(x) x^n under -q^{-1} against the polynomial side.

    printed:   (-1)^n (1+q)^{-n} A_n(chi,-q)
    corrected: the same times q^{-2}.

    The character's modulus must be 1 or a multiple of p; values embed when
    their order divides p-1 (orders 1 and 2 always do).
    """
    if variant not in ("printed", "corrected"):
        raise ValueError("variant must be 'printed' or 'corrected'")
    d = chi.modulus
    if d != 1 and d % p != 0:
        raise ValueError(f"modulus {d} must be 1 or a multiple of p = {p}")
    qf = Fraction(q)
    pk = p**k
    integral = truncated_integral(chi_monomial(chi, n), p, qf, "-q^-1", N, k)
    ref_elem = (Fraction((-1) ** n) / (1 + qf) ** n) * chi_eulerian(n, chi, qf)
    if variant == "corrected":
        ref_elem = ref_elem / qf**2
    reference = PadicResidue(p, k, _embed_exact(ref_elem, p, k))
    ratio = None
    if integral.is_unit():
        printed_ref = _embed_exact((Fraction((-1) ** n) / (1 + qf) ** n) * chi_eulerian(n, chi, qf), p, k)
        ratio = printed_ref * pow(integral.residue, -1, pk) % pk
    return WittReport(n, p, qf, k, N, integral, reference, variant, ratio,
                      integral.residue == reference.residue)


@dataclass(frozen=True)
class Corollary4Report:
    n: int
    character: DirichletCharacter
    prime: int
    q: Fraction
    precision: int
    levels: tuple[int, ...]
    sums: tuple[int, ...]
    candidate_plain: int      # 2 * S_A mod p^k
    candidate_scaled: int     # 2 q^2 * S_A mod p^k
    val_plain: tuple[int, ...]
    val_scaled: tuple[int, ...]
    converged_to: str | None  # "2*S_A" | "2*q^2*S_A" | None
    distinguishable: bool = True


def corollary4_min_precision(n: int, chi: DirichletCharacter, p: int, q: Scalar,
                             floor: int = 2, cap: int = 9) -> int | None:
    """Smallest k >= floor at which the two candidate closed forms differ mod p^k.

    The candidates differ by 2 S_A (q^2 - 1); since q = 1 (mod p) that gap
    carries at least one extra power of p, so a fixed k cannot distinguish
    every case.  Returns None when the gap vanishes to the cap (vacuous probe).
    """
    qf = Fraction(q)
    gap = (2 * (qf**2 - 1)) * series_reference(n, chi, qf)
    if gap.is_zero():
        return None
    for k in range(floor, cap + 1):
        if _embed_exact(gap, p, k) % p**k != 0:
            return k
    return None


def corollary4_probe(n: int, chi: DirichletCharacter, p: int, q: Scalar, k: int,
                     N_list: Sequence[int]) -> Corollary4Report:
    """Measure which closed form the unnormalized alternating sum converges to.

    U_N = sum_{x=1}^{p^N - 1} (-1)^x chi(x) x^n q^{-x}  (mod p^k), compared
    against 2*S_A and 2*q^2*S_A with S_A = (-1)^n A_n(chi,-q) / (q(1+q)^{n+1})
    exact.  The limit normalizer [p^N]_{-q^{-1}} -> 2q/(1+q) is computed from
    q^{-p^N} -> 1, never assumed equal to its finite-level value.
    """
    d = chi.modulus
    if d != 1 and d % p != 0:
        raise ValueError(f"modulus {d} must be 1 or a multiple of p = {p}")
    qf = Fraction(q)
    _require_congruence(qf, p)
    pk = p**k
    spec = chi_monomial(chi, n)
    period, table = _value_table(spec, p, k)
    w_res = _residue(-1 / qf, p, k)
    s_a = series_reference(n, chi, qf)
    cand_plain = 2 * _embed_exact(s_a, p, k) % pk
    cand_scaled = cand_plain * _residue(qf**2, p, k) % pk

    levels = tuple(sorted(N_list))
    sums = []
    val_plain = []
    val_scaled = []
    for N in levels:
        total = 0
        w = 1
        for x in range(p**N):
            if x:
                v = table[x % period]
                if v:
                    total = (total + w * v) % pk
            w = w * w_res % pk
        sums.append(total)
        val_plain.append(_valuation(total - cand_plain, p, k))
        val_scaled.append(_valuation(total - cand_scaled, p, k))
    converged: str | None = None
    distinguishable = cand_plain != cand_scaled
    if levels and distinguishable:
        hit_plain = val_plain[-1] >= k
        hit_scaled = val_scaled[-1] >= k
        if hit_plain and not hit_scaled:
            converged = "2*S_A"
        elif hit_scaled and not hit_plain:
            converged = "2*q^2*S_A"
    return Corollary4Report(n, chi, p, qf, k, levels, tuple(sums), cand_plain, cand_scaled,
                            tuple(val_plain), tuple(val_scaled), converged, distinguishable)
