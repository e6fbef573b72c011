import pytest

from kronmot.central import (
    CentralSeriesPair,
    extract_G,
    framed_recursion,
    g_series,
    solve_functional_eq,
    verify_corident,
    verify_eqnew,
    verify_funceq,
    verify_main_theorem,
    verify_newduality,
    verify_vdifference,
)
from kronmot.errors import NonZeroConstantError
from kronmot.exactalg import RatFunc, quantum_integer
from kronmot.qseries import TruncSeries
from kronmot.wallcross import framed_via_quotient


def step2(p):
    return list(p.coeffs[::2])


FRAMED_M3_TABLES = [
    [1],
    [1, 1, 1],
    [1, 2, 3, 3, 3, 2, 1],
    [1, 2, 5, 8, 11, 12, 13, 12, 11, 8, 5, 2, 1],
    [1, 2, 5, 10, 18, 28, 40, 50, 58, 62, 64, 62, 58, 50, 40, 28, 18, 10, 5,
     2, 1],
]


class TestFramedRecursion:
    def test_paper_tables(self):
        F = framed_recursion(3, 4)
        for d, expected in enumerate(FRAMED_M3_TABLES):
            assert step2(F.coeffs[d].to_laurent()) == expected

    def test_coefficients_are_laurent(self):
        F = framed_recursion(4, 5)
        assert all(c.is_laurent() for c in F.coeffs)

    def test_exponent_span(self):
        # framed dimension (m-2)d^2 + d
        for m in (3, 4, 5):
            F = framed_recursion(m, 4)
            for d in range(1, 5):
                p = F.coeffs[d].to_laurent()
                dim = (m - 2) * d * d + d
                assert (p.min_exp, p.max_exp) == (-dim, dim)
                assert p.is_palindromic()

    def test_rejects_small_m(self):
        with pytest.raises(ValueError):
            framed_recursion(2, 3)


class TestFunctionalEquation:
    def test_order_zero(self):
        assert solve_functional_eq(3, 0) == TruncSeries.one(0)

    def test_order_one(self):
        F = solve_functional_eq(3, 1)
        assert F.coeffs[1] == RatFunc.of(quantum_integer(3))

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_matches_recursion(self, m):
        assert solve_functional_eq(m, 4) == framed_recursion(m, 4)


class TestExtractG:
    def test_paper_tables(self):
        G = extract_G(3, framed_recursion(3, 5))
        assert G.coeffs[1].to_laurent() == 1
        assert step2(G.coeffs[2].to_laurent()) == [1, 1, 1]
        assert step2(G.coeffs[5].to_laurent()) == [
            1, 1, 3, 5, 10, 14, 23, 30, 41, 46, 51, 46, 41, 30, 23, 14, 10,
            5, 3, 1, 1,
        ]

    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            extract_G(3, TruncSeries([2, 1], 1))

    def test_pair_relation(self):
        # m_d = [(m-1)d+1]_v * g_d
        for m in (3, 4):
            pair = CentralSeriesPair.compute(m, 4)
            for d in range(5):
                expected = pair.G.coeffs[d] * RatFunc.of(
                    quantum_integer((m - 1) * d + 1)
                )
                assert pair.F.coeffs[d] == expected


class TestThreeWayAgreement:
    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_all_methods_agree(self, m):
        a = framed_recursion(m, 4)
        b = solve_functional_eq(m, 4)
        c = framed_via_quotient(m, (1, 1), 4)
        assert a == b == c


def _all_pass(reports):
    assert reports
    for r in reports:
        assert r["status"] == "pass", r
        assert r["first_failure_degree"] is None


class TestIdentities:
    def test_main_theorem(self):
        _all_pass(verify_main_theorem(3, 4))
        _all_pass(verify_main_theorem(4, 3))
        _all_pass(verify_main_theorem(3, 0))

    def test_vdifference(self):
        _all_pass(verify_vdifference(3, 6))
        _all_pass(verify_vdifference(5, 4))
        _all_pass(verify_vdifference(4, 0))

    def test_funceq(self):
        _all_pass(verify_funceq(3, 4))
        _all_pass(verify_funceq(4, 3))

    def test_eqnew(self):
        _all_pass(verify_eqnew(3, 4))
        _all_pass(verify_eqnew(4, 3))

    def test_corident(self):
        _all_pass(verify_corident(3, 1, 4))
        _all_pass(verify_corident(3, 2, 0))
        _all_pass(verify_corident(4, 2, 3))

    def test_newduality(self):
        _all_pass(verify_newduality(3, 1, 4))
        _all_pass(verify_newduality(4, 1, 3))
        # the smallest nondegenerate case: both sides single factors
        _all_pass(verify_newduality(2, 1, 2))

    def test_k_range_checked(self):
        with pytest.raises(ValueError):
            verify_corident(3, 3, 2)
        with pytest.raises(ValueError):
            verify_newduality(3, 0, 2)


class TestGSeries:
    def test_g_minus_low_terms(self):
        g = g_series(3, 1, -1, 3)
        assert g.coeffs[0] == RatFunc.one()
        assert g.coeffs[1] == RatFunc.one()
        assert step2(g.coeffs[2].to_laurent()) == [1, 1, 1]

    def test_g_plus_matches_duality(self):
        # [K_{d,d+1}] = [K_{d+1,d}]
        gp = g_series(3, 1, 1, 3)
        gm = g_series(3, 1, -1, 4)
        assert list(gp.coeffs) == list(gm.coeffs[1:])
