"""Polynomials, truncated series, and q-integers."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qeuler.errors import QisOne, ZeroConstantTerm
from qeuler.polyq import PolyQ
from qeuler.qnumbers import q_number, q_samples
from qeuler.series import TruncSeries, series_div

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=20)
polys = st.lists(fractions, min_size=0, max_size=6).map(PolyQ)


class TestPolyQ:
    def test_canonical_form(self):
        assert PolyQ((1, 2, 0, 0)).coeffs == (1, 2)
        assert PolyQ((0,)).is_zero()
        assert PolyQ().degree == -1

    def test_divmod_roundtrip(self):
        a = PolyQ((1, 2, 3, 4))
        b = PolyQ((Fraction(1, 2), 1))
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_evaluate(self):
        p = PolyQ((1, 4, 1))
        assert p.evaluate(Fraction(-2)) == 1 - 8 + 4

    @settings(max_examples=60)
    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestTruncSeries:
    def test_div_inverse_exponential(self):
        num = TruncSeries.constant(1, 3)
        den = TruncSeries.exponential(1, 3)
        assert series_div(num, den).coeffs == (1, -1, 1, -1)

    def test_div_identity(self):
        den = TruncSeries(4, (3, 1, 4, 1, 5))
        quotient = series_div(den, den)
        assert quotient.coeffs == (1, 0, 0, 0, 0)

    def test_div_exponential_shift(self):
        quotient = series_div(TruncSeries.exponential(2, 4), TruncSeries.exponential(1, 4))
        assert quotient.coeffs == (1, 1, 1, 1, 1)

    def test_zero_constant_term(self):
        num = TruncSeries.constant(1, 2)
        den = TruncSeries(2, (0, 1, 1))
        with pytest.raises(ZeroConstantTerm):
            series_div(num, den)

    @settings(max_examples=60)
    @given(
        st.lists(fractions, min_size=4, max_size=4),
        st.lists(fractions, min_size=4, max_size=4),
    )
    def test_div_undoes_mul(self, a_coeffs, b_coeffs):
        b_coeffs[0] = b_coeffs[0] if b_coeffs[0] != 0 else Fraction(1)
        a = TruncSeries(3, a_coeffs)
        b = TruncSeries(3, b_coeffs)
        assert series_div(a * b, b) == a


class TestQNumber:
    def test_two_q(self):
        assert q_number(2, 3) == 4

    def test_fermionic_bracket(self):
        assert q_number(3, Fraction(-1, 2)) == Fraction(3, 4)

    def test_zero(self):
        assert q_number(0, Fraction(5, 7)) == 0

    def test_refuses_one(self):
        with pytest.raises(QisOne):
            q_number(4, 1)

    def test_sum_form(self):
        q = Fraction(7, 3)
        assert q_number(5, q) == sum(q**j for j in range(5))


def test_q_samples_prefix_and_distinct():
    samples = q_samples(30)
    assert samples[:6] == [Fraction(2), Fraction(3), Fraction(4), Fraction(5, 2),
                           Fraction(7, 2), Fraction(7, 3)]
    assert len(set(samples)) == 30
    assert all(s > 1 for s in samples)
