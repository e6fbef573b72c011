from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kronmot.errors import NonPolynomialError
from kronmot.exactalg import LaurentPoly, RatFunc, quantum_integer

V = LaurentPoly.monomial(1)
VINV = LaurentPoly.monomial(-1)


def poly(coeffs, min_exp=0):
    return LaurentPoly(coeffs, min_exp)


class TestLaurentPoly:
    def test_canonical_form(self):
        p = poly([0, 0, 1, 2, 0], -3)
        assert p.min_exp == -1
        assert p.coeffs == (1, 2)
        assert poly([0, 0]).is_zero()
        assert poly([]).min_exp == 0

    def test_arithmetic(self):
        assert V + VINV == quantum_integer(2)
        assert V * VINV == LaurentPoly.one()
        assert (V - V).is_zero()
        assert (V + 1) * (V - 1) == V * V - 1

    def test_power(self):
        assert (V + VINV) ** 2 == poly([1, 0, 2, 0, 1], -2)
        assert (V + 1) ** 0 == LaurentPoly.one()

    def test_big_multiplication_matches_schoolbook(self):
        # exercise the Kronecker-substitution path against direct convolution
        a = poly([((-1) ** i) * (i + 1) for i in range(40)], -7)
        b = poly([(i * i - 5) for i in range(33)], 2)
        expected = LaurentPoly.zero()
        for i, c in enumerate(a.coeffs):
            expected = expected + (b * c).v_shift(a.min_exp + i)
        assert a * b == expected

    def test_divexact(self):
        num = LaurentPoly.monomial(2) - LaurentPoly.monomial(-2)
        assert num.divexact(V - VINV) == V + VINV
        num = LaurentPoly.monomial(3) - LaurentPoly.monomial(-3)
        assert num.divexact(V - VINV) == quantum_integer(3)
        with pytest.raises(NonPolynomialError):
            (V + 1).divexact(V - 1)

    def test_eval_at_one(self):
        assert poly([1, 0, 1, 0, 1], -2).eval_at_one() == 3
        assert LaurentPoly.zero().eval_at_one() == 0
        k43 = [1, 1, 3, 5, 8, 10, 12, 10, 8, 5, 3, 1, 1]
        p = LaurentPoly([c for pair in zip(k43, [0] * 13) for c in pair][:-1], -12)
        assert p.eval_at_one() == 68

    def test_is_palindromic(self):
        assert poly([1, 0, 1, 0, 1], -2).is_palindromic()
        assert not V.is_palindromic()
        assert LaurentPoly.zero().is_palindromic()

    def test_json_round_trip(self):
        p = poly([Fraction(1, 3), 2, -5], -4)
        assert LaurentPoly.from_json(p.to_json()) == p
        assert p.to_json()["coeffs"] == ["1/3", "2", "-5"]
        assert LaurentPoly.from_json(LaurentPoly.zero().to_json()).is_zero()


class TestQuantumInteger:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (0, LaurentPoly.zero()),
            (1, LaurentPoly.one()),
            (2, V + VINV),
            (3, poly([1, 0, 1, 0, 1], -2)),
        ],
    )
    def test_small_values(self, n, expected):
        assert quantum_integer(n) == expected

    @pytest.mark.parametrize("n", range(51))
    def test_defining_identity(self, n):
        lhs = quantum_integer(n) * (V - VINV)
        assert lhs == LaurentPoly.monomial(n) - LaurentPoly.monomial(-n)
        assert quantum_integer(n).eval_at_one() == n


@st.composite
def ratfuncs(draw):
    num = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    den = draw(
        st.lists(st.integers(-4, 4), min_size=1, max_size=3).filter(any)
    )
    return RatFunc(
        LaurentPoly(num, draw(st.integers(-2, 2))),
        LaurentPoly(den, draw(st.integers(-2, 2))),
    )


class TestRatFunc:
    def test_inverse_pair(self):
        x = RatFunc(LaurentPoly.one(), V - VINV)
        assert x * (V - VINV) == RatFunc.one()

    def test_same_element_two_presentations(self):
        a = RatFunc(V * V - 1, V)
        b = RatFunc(V - VINV)
        assert a == b
        assert a / b == RatFunc.one()

    def test_den_normalization(self):
        r = RatFunc(LaurentPoly.one(), LaurentPoly([3, 0, -3], -2))
        assert r.den.coeff(0) == 1
        assert r.den.min_exp == 0

    def test_to_laurent(self):
        x = RatFunc(LaurentPoly.monomial(2) - LaurentPoly.monomial(-2), V - VINV)
        assert x.to_laurent() == V + VINV
        assert RatFunc.one().to_laurent() == LaurentPoly.one()
        with pytest.raises(NonPolynomialError):
            RatFunc(LaurentPoly.one(), V + 1).to_laurent()

    def test_round_trip_through_ratfunc(self):
        for p in [quantum_integer(5), V - VINV, LaurentPoly([2, -3, 1], -2)]:
            assert RatFunc.of(p).to_laurent() == p

    @given(ratfuncs(), ratfuncs(), ratfuncs())
    def test_field_axioms(self, x, y, z):
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x + (-x) == RatFunc.zero()
        if not x.is_zero():
            assert x / x == RatFunc.one()
            assert (y / x) * x == y

    @given(ratfuncs())
    def test_json_round_trip(self, x):
        assert RatFunc.from_json(x.to_json()) == x

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc.one() / RatFunc.zero()
        with pytest.raises(ZeroDivisionError):
            RatFunc(LaurentPoly.one(), LaurentPoly.zero())
