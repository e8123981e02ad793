from fractions import Fraction
from math import factorial

import pytest
from hypothesis import assume, given, settings, strategies as st

import settings as sham_settings
from sham.automorphism import RawEndo
from sham.derivation import Derivation, ShamsuddinDerivation, is_singular_at
from sham.poly import BPoly, UPoly
from sham.series import (
    SolutionPair,
    TruncatedSeries,
    check_chain_rule,
    eval_hom,
    fixed_solution_check,
    solve_through,
    vanishes_along,
)
from sham.utils import DomainError
from tests.strategies import bpolys, derivations, points, rationals

x, y = BPoly.x(), BPoly.y()
EXP_FIELD = ShamsuddinDerivation(UPoly.one(), UPoly.zero())        # ∂x + y∂y
CUBIC = ShamsuddinDerivation(UPoly((0, 2)), UPoly((0, 0, 0, 1)))     # ∂x + (2xy + x^3)∂y


def rho_t(t):
    t = Fraction(t)
    return RawEndo(x, ((t - 1) / 2) * (x ** 2 + 1) + t * y)


def series(n):
    return st.lists(rationals(), min_size=n, max_size=n).map(TruncatedSeries)


class TestTruncatedSeries:
    def test_order_must_be_positive(self):
        with pytest.raises(DomainError):
            TruncatedSeries([])

    def test_product_truncates(self):
        t = TruncatedSeries.variable(3)
        assert t * t == TruncatedSeries([0, 0, 1])
        assert t * t * t == TruncatedSeries.zero(3)

    def test_mixed_orders_truncate_to_shorter(self):
        s = TruncatedSeries([1, 1, 1, 1]) + TruncatedSeries([1, 1])
        assert s.order == 2

    def test_derivative_keeps_order(self):
        d = TruncatedSeries([5, 1, 1, 1]).derivative()
        assert d == TruncatedSeries([1, 2, 3, 0])

    def test_compose(self):
        # (1 + s)∘(2t) = 1 + 2t
        outer = TruncatedSeries([1, 1, 0])
        assert outer.compose(TruncatedSeries([0, 2, 0])) == TruncatedSeries([1, 2, 0])

    def test_compose_needs_zero_constant(self):
        with pytest.raises(DomainError):
            TruncatedSeries([1, 1]).compose(TruncatedSeries([1, 1]))

    def test_truncate_cannot_extend(self):
        with pytest.raises(DomainError):
            TruncatedSeries([1, 2]).truncate(3)

    def test_str(self):
        assert str(TruncatedSeries([1, 0, Fraction(1, 2)])) == "1/2*t^2 + 1 + O(t^3)"

    @given(series(5), series(5), series(5))
    def test_ring_axioms(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a - a == TruncatedSeries.zero(5)


class TestSolveThrough:
    def test_exponential(self):
        s = solve_through(EXP_FIELD, (0, 1), 12)
        assert s.phi == TruncatedSeries([0, 1], 12)
        assert list(s.psi.coeffs) == [Fraction(1, factorial(k)) for k in range(12)]

    def test_default_order(self):
        assert solve_through(EXP_FIELD, (0, 1)).order == sham_settings.SERIES_ORDER

    def test_stable_curve_is_in_kernel(self):
        s = solve_through(CUBIC, (1, -1), 12)
        assert eval_hom(s, 2 * y + x ** 2 + 1) == TruncatedSeries.zero(12)
        assert vanishes_along(s, 2 * y + x ** 2 + 1)
        assert not vanishes_along(s, y)

    def test_singular_point_rejected(self):
        with pytest.raises(DomainError, match="singular"):
            solve_through(Derivation(x, y), (0, 0), 6)

    def test_order_must_be_positive(self):
        with pytest.raises(DomainError):
            solve_through(EXP_FIELD, (0, 1), 0)

    def test_eval_hom_generators_and_constants(self):
        s = solve_through(CUBIC, (1, -1), 6)
        assert eval_hom(s, x) == s.phi
        assert eval_hom(s, y) == s.psi
        assert eval_hom(s, BPoly.const(Fraction(7, 3))) == TruncatedSeries.const(Fraction(7, 3), 6)

    def test_deterministic(self):
        assert solve_through(CUBIC, (1, -1), 8) == solve_through(CUBIC, (1, -1), 8)

    @settings(max_examples=30)
    @given(derivations(), points(), st.integers(min_value=2, max_value=7))
    def test_truncation_coherence(self, D, p, m):
        assume(not is_singular_at(D, p))
        full = solve_through(D, p, 8)
        short = solve_through(D, p, m)
        assert full.phi.truncate(m) == short.phi
        assert full.psi.truncate(m) == short.psi


class TestChainRule:
    def test_product_along_exponential(self):
        s = solve_through(EXP_FIELD, (0, 1), 8)
        assert check_chain_rule(s, EXP_FIELD, x * y)
        assert check_chain_rule(s, EXP_FIELD, x)

    @settings(max_examples=50)
    @given(derivations(), points(), bpolys(2, 2))
    def test_randomized(self, D, p, f):
        assume(not is_singular_at(D, p))
        s = solve_through(D, p, 8)
        assert check_chain_rule(s, D, f)

    @pytest.mark.parametrize("k", [1, 3, 6])
    def test_perturbed_step_breaks_chain_rule(self, k):
        s = solve_through(CUBIC, (1, -1), 8)
        coeffs = list(s.phi.coeffs)
        coeffs[k] += 1
        broken = SolutionPair(s.point, TruncatedSeries(coeffs), s.psi)
        assert not check_chain_rule(broken, CUBIC, x)

    @settings(max_examples=30)
    @given(derivations(), points(), bpolys(1, 2), bpolys(1, 2))
    def test_eval_hom_is_ring_homomorphism(self, D, p, f, g):
        assume(not is_singular_at(D, p))
        s = solve_through(D, p, 6)
        assert eval_hom(s, f * g) == eval_hom(s, f) * eval_hom(s, g)
        assert eval_hom(s, f + g) == eval_hom(s, f) + eval_hom(s, g)


class TestFixedSolution:
    @pytest.mark.parametrize("t", [2, 3])
    def test_fixed_curve(self, t):
        assert fixed_solution_check(CUBIC, rho_t(t), (1, -1), 8)

    def test_identity(self):
        assert fixed_solution_check(CUBIC, RawEndo.identity(), (0, 0), 6)

    def test_not_fixed(self):
        with pytest.raises(DomainError, match="does not fix"):
            fixed_solution_check(Derivation.partial_x(), RawEndo(x + 1, y), (0, 0), 6)

    def test_not_commuting(self):
        with pytest.raises(DomainError, match="does not commute"):
            fixed_solution_check(CUBIC, RawEndo(x, 2 * y), (0, 0), 6)

    def test_singular_base_point(self):
        euler = Derivation(x, y)
        with pytest.raises(DomainError, match="singular"):
            fixed_solution_check(euler, RawEndo(2 * x, 2 * y), (0, 0), 6)
