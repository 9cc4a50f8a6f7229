"""Numeric Eulerian L-values, interpolation at negative integers, Mellin terms."""
from fractions import Fraction

import pytest
from mpmath import mp

from qeuler.characters import enumerate_characters, principal_character
from qeuler.chi_eulerian import chi_eulerian
from qeuler.errors import ConvergenceDomain, DomainError
from qeuler.lfunction import l_eulerian, mellin_term_check, verify_interpolation

QUAD3 = enumerate_characters(3)[1]
MOD1 = principal_character(1)


def assert_close(value, expected, bits=100):
    with mp.workprec(bits + 32):
        assert mp.fabs(value - expected) < mp.mpf(2) ** (-bits)


class TestLEulerian:
    def test_spot_zero(self):
        lv = l_eulerian(0, QUAD3, 2, 128)
        assert_close(lv.value, -4)

    def test_spot_minus_one(self):
        lv = l_eulerian(-1, QUAD3, 2, 128)
        assert_close(lv.value, -12)

    def test_modulus_one_geometric(self):
        # q(1+q) * sum_{m>=1} (-1/q)^m = -q
        lv = l_eulerian(0, MOD1, 2, 128)
        assert_close(lv.value, -2)

    def test_tail_bound_is_rigorous(self):
        lv = l_eulerian(Fraction(-3), QUAD3, Fraction(7, 2), 128)
        fine = l_eulerian(Fraction(-3), QUAD3, Fraction(7, 2), 192)
        with mp.workprec(256):
            assert mp.fabs(lv.value - fine.value) <= lv.tail_bound + mp.mpf(2) ** -120

    def test_stability_under_refinement(self):
        coarse = l_eulerian(Fraction(1, 2), QUAD3, 2, 96)
        fine = l_eulerian(Fraction(1, 2), QUAD3, 2, 160)
        with mp.workprec(200):
            assert mp.fabs(coarse.value - fine.value) <= 2 * coarse.tail_bound + mp.mpf(2) ** -90

    def test_real_character_real_value(self):
        for s in (Fraction(2), Fraction(-4)):
            lv = l_eulerian(s, QUAD3, 3, 128)
            with mp.workprec(160):
                assert mp.fabs(lv.value.imag) <= lv.tail_bound + mp.mpf(2) ** -110

    def test_complex_s(self):
        lv = l_eulerian(complex(0.5, 1.0), QUAD3, 2, 96)
        assert lv.terms >= 16

    def test_convergence_domain(self):
        with pytest.raises(ConvergenceDomain):
            l_eulerian(0, QUAD3, 1, 128)


class TestInterpolation:
    @pytest.mark.parametrize("n", range(9))
    def test_quadratic_mod3(self, n):
        assert verify_interpolation(n, QUAD3, 2, 128).passed

    def test_spot_values(self):
        r0 = verify_interpolation(0, QUAD3, 2, 128)
        r1 = verify_interpolation(1, QUAD3, 2, 128)
        assert_close(r0.l_value, -4)
        assert_close(r1.l_value, -12)
        assert_close(r1.reference, -12)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_modulus_one_positive_n(self, n):
        assert verify_interpolation(n, MOD1, 2, 128).passed

    def test_modulus_one_n0_measured_offset(self):
        # the L-series starts at m = 1, so at d = 1, n = 0 it misses the
        # m = 0 term: L(0) = A_0 - q(1+q) = -q, not A_0 = q^2
        for q in (Fraction(2), Fraction(3), Fraction(7, 2)):
            report = verify_interpolation(0, MOD1, q, 128)
            assert not report.passed
            expected = chi_eulerian(0, MOD1, q).to_rational() - q * (1 + q)
            assert_close(report.l_value, expected)

    def test_complex_character(self):
        chi = enumerate_characters(5)[1]
        for n in (0, 2, 5):
            assert verify_interpolation(n, chi, Fraction(7, 2), 128).passed

    def test_order_six_character(self):
        chi = next(c for c in enumerate_characters(9) if c.order == 6)
        assert verify_interpolation(3, chi, 3, 128).passed


class TestMellinTerm:
    def test_exact_one_ninth(self):
        report = mellin_term_check(2, 1, 2, 128)
        assert report.passed
        with mp.workprec(160):
            assert mp.fabs(report.lhs - mp.mpf(1) / 9) < mp.mpf(2) ** -64

    def test_quarter(self):
        report = mellin_term_check(1, 2, 1, 128)
        assert report.passed
        with mp.workprec(160):
            assert mp.fabs(report.lhs - mp.mpf(1) / 4) < mp.mpf(2) ** -64

    def test_three_halves(self):
        report = mellin_term_check(Fraction(3, 2), 1, 2, 128)
        assert report.passed
        with mp.workprec(160):
            assert mp.fabs(report.rhs - mp.power(3, mp.mpf(-1.5))) < mp.mpf(2) ** -64

    def test_domain_error(self):
        with pytest.raises(DomainError):
            mellin_term_check(0, 1, 2, 64)
        with pytest.raises(DomainError):
            mellin_term_check(Fraction(-1), 1, 2, 64)
