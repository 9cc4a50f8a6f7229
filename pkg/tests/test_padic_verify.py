"""Truncated fermionic integrals: spot values, integral equations, Witt checks."""
from fractions import Fraction

import pytest

from qeuler.characters import enumerate_characters, principal_character
from qeuler.errors import BadCongruence, NonUnitNormalizer, ParityMismatch
from qeuler.padic import PadicResidue
from qeuler.padic_verify import (
    chi_monomial,
    corollary4_probe,
    monomial,
    shifted_monomial,
    truncated_integral,
    truncated_integrals,
    verify_integral_equation,
    verify_witt,
    verify_witt_chi,
)

QUAD3 = enumerate_characters(3)[1]
MOD1 = principal_character(1)


class TestTruncatedIntegral:
    def test_constant_integrand_telescopes(self):
        # the eta-sum of the weights is exactly the normalizer at every level
        for N in (1, 2, 3, 4):
            value = truncated_integral(monomial(0), 5, 6, "-q^-1", N, 3)
            assert value.residue == 1

    def test_linear_spot_value(self):
        # limit is -1/(1+q) = -1/7, already reached mod 125 at N = 6
        value = truncated_integral(monomial(1), 5, 6, "-q^-1", 6, 3)
        assert value.residue == 107

    def test_chi_integrand_matches_corrected_closed_form(self):
        value = truncated_integral(chi_monomial(principal_character(5), 0), 5, 6, "-q^-1", 6, 3)
        reference = verify_witt_chi(0, principal_character(5), 5, 6, 3, 6, "corrected")
        assert reference.passed
        assert value.residue == reference.reference.residue

    def test_determinism(self):
        a = truncated_integral(monomial(2), 7, 8, "-q", 4, 2)
        b = truncated_integral(monomial(2), 7, 8, "-q", 4, 2)
        assert a == b

    def test_bad_congruence(self):
        with pytest.raises(BadCongruence):
            truncated_integral(monomial(1), 5, 3, "-q^-1", 2, 2)

    def test_bosonic_normalizer_rejected(self):
        with pytest.raises(NonUnitNormalizer):
            truncated_integral(monomial(1), 5, 6, "q", 2, 2)

    def test_shifted_monomial(self):
        x0 = Fraction(2, 3)
        a, b = truncated_integrals(
            [shifted_monomial(x0, 2), shifted_monomial(x0, 2).shifted(1)], 5, 6, "-q^-1", 4, 2)
        assert isinstance(a, PadicResidue) and isinstance(b, PadicResidue)
        assert a != b


class TestIntegralEquations:
    LEVELS = [1, 2, 3, 4, 5, 6]

    def test_eq8_linear(self):
        report = verify_integral_equation(8, monomial(1), 1, 5, 6, 3, self.LEVELS)
        assert report.passed
        assert report.valuations[-1] >= 3

    def test_eq7_constant_exact_everywhere(self):
        report = verify_integral_equation(7, monomial(0), 1, 5, 6, 3, self.LEVELS)
        assert report.passed
        assert all(v == 3 for v in report.valuations)

    def test_eq4_eq6_same_even_case(self):
        r4 = verify_integral_equation(4, monomial(1), 2, 5, 6, 3, self.LEVELS)
        r6 = verify_integral_equation(6, monomial(1), 2, 5, 6, 3, self.LEVELS)
        assert r4.valuations == r6.valuations
        assert r4.passed and r6.passed

    def test_eq5_odd(self):
        report = verify_integral_equation(5, monomial(2), 3, 3, 4, 3, self.LEVELS)
        assert report.passed

    def test_chi_integrand(self):
        report = verify_integral_equation(5, chi_monomial(QUAD3, 1), 3, 3, 4, 2, [1, 2, 3, 4, 5])
        assert report.passed

    def test_parity_mismatch(self):
        with pytest.raises(ParityMismatch):
            verify_integral_equation(5, monomial(1), 2, 5, 6, 2, [3])
        with pytest.raises(ParityMismatch):
            verify_integral_equation(6, monomial(1), 3, 5, 6, 2, [3])
        with pytest.raises(ParityMismatch):
            verify_integral_equation(7, monomial(1), 2, 5, 6, 2, [3])

    @pytest.mark.parametrize("p,k", [(3, 7), (5, 6), (7, 4)])
    def test_cauchy_property(self, p, k):
        # successive truncations agree to valuation >= N - c with c <= 2; the
        # working precision k caps the measured valuation, so it is chosen
        # just above the largest bound each prime must certify
        q = 1 + p
        for n_deg in (1, 3):
            spec = monomial(n_deg)
            previous = None
            for N in range(1, 8):
                value = truncated_integral(spec, p, q, "-q^-1", N, k)
                if previous is not None:
                    assert (value - previous).valuation() >= min(N - 1 - 2, k)
                previous = value


class TestWeightZeroIntegralRepresentation:
    @pytest.mark.parametrize("p,q,x", [(5, 6, Fraction(1, 3)), (3, 4, Fraction(2, 7)),
                                       (7, 8, Fraction(0))])
    def test_euler_recurrence_matches_defining_integral(self, p, q, x):
        # the weight-zero family is the fermionic integral of (x+y)^n under
        # the -q measure, so the truncated sums must land on the recurrence
        from qeuler.chi_eulerian import weight_zero_euler, weight_zero_genocchi

        for n in range(5):
            trunc = truncated_integral(shifted_monomial(x, n), p, q, "-q", 6, 3)
            euler_ref = PadicResidue.from_rational(weight_zero_euler(n, q, x), p, 3)
            genocchi_ref = PadicResidue.from_rational(
                weight_zero_genocchi(n + 1, q, x) / (n + 1), p, 3)
            assert trunc.residue == euler_ref.residue
            assert trunc.residue == genocchi_ref.residue


class TestWitt:
    def test_n0(self):
        report = verify_witt(0, 5, 6, 3, 6)
        assert report.passed
        assert report.integral.residue == 1

    def test_n1_spot(self):
        report = verify_witt(1, 5, 6, 3, 6)
        assert report.passed
        assert report.reference.residue == 107

    def test_n3_p7(self):
        report = verify_witt(3, 7, 8, 2, 5)
        assert report.passed
        assert report.reference.residue == 30  # -33/9^3 mod 49

    @pytest.mark.parametrize("p", [3, 5, 7])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_grid(self, p, k):
        for q in (1 + p, 1 + 2 * p):
            for n in range(7):
                assert verify_witt(n, p, q, k, k + 3).passed


class TestWittChi:
    def test_modulus_one_reduces_to_witt(self):
        report = verify_witt_chi(2, MOD1, 5, 6, 3, 6, "corrected")
        plain = verify_witt(2, 5, 6, 3, 6)
        assert report.passed
        assert report.integral.residue == plain.integral.residue

    def test_quadratic_corrected_vs_printed(self):
        corrected = verify_witt_chi(0, QUAD3, 3, 4, 2, 5, "corrected")
        printed = verify_witt_chi(0, QUAD3, 3, 4, 2, 5, "printed")
        assert corrected.passed
        assert not printed.passed
        assert corrected.ratio == pow(4, 2, 9)  # off by exactly q^2

    def test_quadratic_n1(self):
        report = verify_witt_chi(1, QUAD3, 3, 4, 2, 5, "corrected")
        assert report.passed

    def test_order_four_character_at_p5(self):
        chi = enumerate_characters(5)[1]  # order 4 divides p-1
        report = verify_witt_chi(1, chi, 5, 6, 2, 5, "corrected")
        assert report.passed

    def test_modulus_must_match_prime(self):
        with pytest.raises(ValueError):
            verify_witt_chi(0, QUAD3, 5, 6, 2, 4, "corrected")

    def test_unembeddable_character_order_refused(self):
        # an order-3 character mod 9 cannot embed mod 3^k (3 does not divide p-1)
        from qeuler.errors import CharacterOrderUnsupported
        chi = next(c for c in enumerate_characters(9) if c.order == 3)
        with pytest.raises(CharacterOrderUnsupported):
            verify_witt_chi(0, chi, 3, 4, 2, 5, "corrected")

    @pytest.mark.parametrize("d,p", [(3, 3), (5, 5), (9, 3)])
    def test_grid_corrected_passes_printed_off_by_q_squared(self, d, p):
        from qeuler.chi_eulerian import chi_eulerian
        from qeuler.padic import embed_cyclotomic

        k = 2
        pk = p**k
        for chi in (c for c in enumerate_characters(d) if c.order <= 2):
            for q in (1 + p, 1 + 2 * p):
                for n in range(3):
                    corrected = verify_witt_chi(n, chi, p, q, k, k + 3, "corrected")
                    printed = verify_witt_chi(n, chi, p, q, k, k + 3, "printed")
                    assert corrected.passed
                    # q = 1 (mod p) makes q^2 = 1 (mod p), so the printed form
                    # is only distinguishable when (q^2-1)*ref is nonzero mod p^k
                    qf = Fraction(q)
                    ref = (Fraction(-1) ** n / (1 + qf) ** n / qf**2) * chi_eulerian(n, chi, qf)
                    gap = embed_cyclotomic((qf**2 - 1) * ref, p, k) % pk
                    if gap:
                        assert not printed.passed
                    if corrected.ratio is not None:
                        # measured printed-side/integral ratio is exactly q^2
                        assert corrected.ratio == pow(q, 2, pk)


class TestCorollary4Probe:
    def test_quadratic_converges_to_plain_candidate(self):
        report = corollary4_probe(0, QUAD3, 3, 4, 2, [1, 2, 3, 4, 5])
        assert report.converged_to == "2*S_A"
        assert report.val_plain[-1] >= 2
        assert report.val_scaled[-1] < 2

    def test_modulus_one_positive_degree(self):
        report = corollary4_probe(1, MOD1, 5, 6, 3, [1, 2, 3, 4, 5, 6])
        assert report.converged_to == "2*S_A"

    def test_modulus_one_degree_zero_measured_gap(self):
        # here the x = 0 term survives: the sum converges to 2*S_A - 1
        # = (q-1)/(1+q), which is 90 mod 125 at q = 6 -- neither candidate
        report = corollary4_probe(0, MOD1, 5, 6, 3, [1, 2, 3, 4, 5, 6])
        assert report.converged_to is None
        assert report.sums[-1] == 90
        gap = Fraction(5, 7)  # (q-1)/(1+q)
        assert PadicResidue.from_rational(gap, 5, 3).residue == 90

    def test_insufficient_levels_inconclusive(self):
        report = corollary4_probe(0, QUAD3, 3, 4, 1, [1])
        assert report.converged_to is None
