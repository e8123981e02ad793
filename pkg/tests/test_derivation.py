from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from sham.derivation import (
    CertificateKind,
    Derivation,
    OdeKind,
    ShamsuddinDerivation,
    apply,
    certify_no_singular_points,
    is_simple_shamsuddin,
    is_singular_at,
    probe_polynomials,
    probe_stable_ideals,
    solve_sham_ode,
    stable_quotient,
    stable_witness,
    stabilizes_ideal,
)
from sham.poly import BPoly, UPoly
from sham.utils import DomainError
from tests.strategies import bpolys, derivations, nonzero_upolys, upolys

x, y = BPoly.x(), BPoly.y()

QUINTIC_A = UPoly((0, 0, 1))
EX4_B = UPoly((-1, -2, 1, 1, 1, 1))          # x^5 + x^4 + x^3 + x^2 - 2x - 1
EX4_B_SIMPLE = UPoly((0, -2, 1, 1, 1, 1))    # 同上，常数项为 0
CUBIC_A = UPoly((0, 2))
CUBIC_B = UPoly((0, 0, 0, 1))
INTRO = Derivation(1 + x * y + x ** 3, x + x ** 2 * y)


class TestApply:
    def test_stable_curve_of_flow(self):
        D = ShamsuddinDerivation(CUBIC_A, CUBIC_B)
        assert apply(D, 2 * y + x ** 2 + 1) == 4 * x * y + 2 * x ** 3 + 2 * x

    def test_constants_are_killed(self):
        assert apply(INTRO, BPoly.const(7)) == BPoly.zero()

    def test_x_goes_to_one(self):
        assert apply(ShamsuddinDerivation(QUINTIC_A, EX4_B), x) == BPoly.one()

    def test_str(self):
        assert str(Derivation(x, y)) == "(x)*dx + (y)*dy"

    @given(derivations(), bpolys(), bpolys())
    def test_leibniz(self, D, f, g):
        assert apply(D, f * g) == g * apply(D, f) + f * apply(D, g)


class TestSolveShamOde:
    def test_example_with_cubic_solution(self):
        sol = solve_sham_ode(QUINTIC_A, EX4_B)
        assert sol.kind == OdeKind.UNIQUE
        assert sol.h == UPoly((-4, -1, -1, -1))

    def test_example_with_quadratic_solution(self):
        sol = solve_sham_ode(CUBIC_A, CUBIC_B)
        assert sol.h == UPoly((Fraction(-1, 2), 0, Fraction(-1, 2)))

    def test_constant_coefficients(self):
        assert solve_sham_ode(UPoly.one(), UPoly.one()).h == UPoly.const(-1)

    def test_no_solution(self):
        sol = solve_sham_ode(QUINTIC_A, EX4_B_SIMPLE)
        assert sol.kind == OdeKind.NONE
        assert not sol.exists

    def test_deg_b_below_deg_a(self):
        assert solve_sham_ode(QUINTIC_A, UPoly.x()).kind == OdeKind.NONE

    def test_zero_a_gives_family(self):
        sol = solve_sham_ode(UPoly.zero(), UPoly((1, 2)))
        assert sol.kind == OdeKind.FAMILY
        assert sol.h == UPoly((0, 1, 1))

    def test_degree_cap(self):
        with pytest.raises(DomainError):
            solve_sham_ode(UPoly.one(), UPoly.monomial(10), max_degree=5)

    @given(nonzero_upolys(3), upolys(3))
    def test_solution_is_sound(self, a, b):
        sol = solve_sham_ode(a, b)
        if sol.exists:
            assert sol.h.derivative() == a * sol.h + b

    @given(nonzero_upolys(3), upolys(3))
    def test_planted_solution_is_recovered(self, a, h):
        b = h.derivative() - a * h
        sol = solve_sham_ode(a, b)
        assert sol.kind == OdeKind.UNIQUE
        assert sol.h == h


class TestSimplicity:
    def test_examples(self):
        assert is_simple_shamsuddin(QUINTIC_A, EX4_B_SIMPLE)
        assert not is_simple_shamsuddin(QUINTIC_A, EX4_B)
        assert not is_simple_shamsuddin(UPoly.zero(), UPoly((3, 1)))
        assert not is_simple_shamsuddin(UPoly.one(), UPoly.zero())

    def test_stable_witness(self):
        f, cofactor = stable_witness(QUINTIC_A, EX4_B)
        assert f == y - BPoly.from_upoly(UPoly((-4, -1, -1, -1)))
        D = ShamsuddinDerivation(QUINTIC_A, EX4_B)
        assert apply(D, f) == cofactor * f

    def test_no_witness_when_simple(self):
        assert stable_witness(QUINTIC_A, EX4_B_SIMPLE) is None


class TestStableIdeals:
    def test_examples(self):
        D = ShamsuddinDerivation(CUBIC_A, CUBIC_B)
        assert stabilizes_ideal(D, 2 * y + x ** 2 + 1)
        assert stable_quotient(D, 2 * y + x ** 2 + 1) == 2 * x
        assert not stabilizes_ideal(INTRO, y)
        assert not stabilizes_ideal(Derivation.partial_x(), x)

    def test_zero_generator_raises(self):
        with pytest.raises(DomainError):
            stable_quotient(INTRO, BPoly.zero())

    def test_candidate_set(self):
        candidates = probe_polynomials(2)
        assert x * y + 1 in candidates
        assert x - y in candidates
        assert all(not p.is_constant for p in candidates)

    def test_candidates_find_invariant_line(self):
        D = ShamsuddinDerivation(UPoly.one(), UPoly.zero())
        assert (y, BPoly.one()) in probe_stable_ideals(D, 2)

    def test_candidate_set_at_degree_three(self):
        candidates = probe_polynomials(3)
        # 9 个单项式，各带 ±1，再加 36 对的和与差
        assert len(candidates) == 9 * 3 + 36 * 2
        assert x ** 3 + y in candidates
        assert x * y ** 2 - 1 in candidates

    @settings(max_examples=15)
    @given(nonzero_upolys(3), upolys(3))
    def test_simple_derivations_have_no_stable_candidates(self, a, b):
        assume(is_simple_shamsuddin(a, b))
        assert probe_stable_ideals(ShamsuddinDerivation(a, b), 3) == []


class TestSingularPoints:
    def test_is_singular_at(self):
        euler = Derivation(x, y)
        assert is_singular_at(euler, (0, 0))
        assert not is_singular_at(INTRO, (0, 0))
        assert not is_singular_at(ShamsuddinDerivation(QUINTIC_A, EX4_B), (3, -2))

    def test_intro_example_has_no_singular_points(self):
        cert = certify_no_singular_points(INTRO)
        assert cert.kind == CertificateKind.NO_SINGULAR_POINTS
        assert cert.witness()["resultant"] == "-x^5"

    def test_euler_field(self):
        cert = certify_no_singular_points(Derivation(x, y))
        assert cert.kind == CertificateKind.SINGULAR_POINT_FOUND
        assert cert.point == (0, 0)

    def test_common_factor(self):
        cert = certify_no_singular_points(Derivation(x * y, x * (y + 1)))
        assert cert.kind == CertificateKind.COMMON_FACTOR
        assert cert.factor == x

    def test_algebraic_singular_point(self):
        cert = certify_no_singular_points(Derivation(x ** 2 - 2, y))
        assert cert.kind == CertificateKind.SINGULAR_POINT_FOUND
        assert cert.point is None
        witness = cert.witness()
        assert witness["x_minimal_polynomial"] == "x^2 - 2"
        assert witness["fiber_gcd"] == "y"

    def test_irrational_fiber_over_rational_x(self):
        cert = certify_no_singular_points(Derivation(x, y ** 2 - 2))
        assert cert.kind == CertificateKind.SINGULAR_POINT_FOUND
        assert cert.x_polynomial == UPoly.x()
        assert cert.y_polynomial == "y^2 - 2"

    def test_univariate_coefficients_are_swapped(self):
        cert = certify_no_singular_points(Derivation(x, x - 1))
        assert cert.kind == CertificateKind.NO_SINGULAR_POINTS
        assert cert.swapped

    def test_constant_coefficient(self):
        cert = certify_no_singular_points(Derivation(BPoly.zero(), BPoly.one()))
        assert not cert.has_singular_points

    def test_zero_derivation_raises(self):
        with pytest.raises(DomainError):
            certify_no_singular_points(Derivation(BPoly.zero(), BPoly.zero()))

    @given(derivations(), st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), max_size=5))
    def test_certificate_agrees_with_grid(self, D, grid):
        assume(not D.is_zero)
        cert = certify_no_singular_points(D)
        if cert.point is not None:
            assert is_singular_at(D, cert.point)
        if any(is_singular_at(D, p) for p in grid):
            assert cert.has_singular_points

    @given(derivations(), st.integers(-3, 3), st.integers(-3, 3))
    def test_planted_singular_point_is_found(self, D, x0, y0):
        # 把 (x0, y0) 变成公共零点
        planted = Derivation(D.a - D.a.evaluate(x0, y0), D.b - D.b.evaluate(x0, y0))
        assume(not planted.is_zero)
        assert certify_no_singular_points(planted).has_singular_points
