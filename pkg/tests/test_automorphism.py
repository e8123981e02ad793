from fractions import Fraction

import pytest
from hypothesis import given, settings

from sham.automorphism import (
    Affine,
    Automorphism,
    ElemX,
    ElemY,
    RawEndo,
    apply,
    commutation_residuals,
    commutes,
    compose,
    compose_plane,
    compose_raw,
    conjugate,
    expand,
    fixes_point,
    invert,
    jacobian_det,
)
from sham.derivation import Derivation, ShamsuddinDerivation, apply as apply_derivation
from sham.poly import BPoly, UPoly
from sham.utils import DomainError
from tests.strategies import bpolys, derivations, points, words

x, y = BPoly.x(), BPoly.y()
SWAP = Affine.swap()


def rho_t(t):
    """x -> x，y -> ((t - 1)/2)(x^2 + 1) + t*y。"""
    t = Fraction(t)
    return RawEndo(x, ((t - 1) / 2) * (x ** 2 + 1) + t * y)


class TestLetters:
    def test_singular_affine_raises(self):
        with pytest.raises(DomainError):
            Affine(1, 2, 2, 4)

    def test_zero_scale_raises(self):
        with pytest.raises(DomainError):
            ElemY(UPoly.x(), 0)
        with pytest.raises(DomainError):
            ElemX(UPoly.x(), 0)

    def test_elem_y_inverse(self):
        letter = ElemY(UPoly((1, 0, 3)), 2)
        assert letter.inverse() == ElemY(UPoly((Fraction(-1, 2), 0, Fraction(-3, 2))), Fraction(1, 2))

    def test_str(self):
        assert str(ElemY(UPoly((0, 0, 1)))) == "elemY(x^2; 1)"
        assert str(ElemX(UPoly((0, 1)), 3)) == "elemX(y; 3)"
        assert str(SWAP) == "affine(0, 1, 1, 0; 0, 0)"
        assert str(Automorphism.identity()) == "identity"


class TestExpand:
    def test_empty_word(self):
        assert expand(Automorphism.identity()) == RawEndo.identity()

    def test_single_letter(self):
        assert expand(Automorphism.of(ElemY(UPoly((0, 0, 1))))) == RawEndo(x, y + x ** 2)

    def test_two_letters(self):
        # 字 L1 * L2 表示代数复合 L1∘L2
        rho = Automorphism.of(ElemY(UPoly((0, 0, 1))), SWAP)
        assert expand(rho) == RawEndo(y + x ** 2, x)

    def test_apply(self):
        assert apply(Automorphism.identity(), x ** 2 * y) == x ** 2 * y
        assert apply(rho_t(5), x) == x
        assert apply(RawEndo(x + 1, 2 * y), x * y) == 2 * (x + 1) * y

    def test_compose_is_concatenation(self):
        r1 = Automorphism.of(ElemY(UPoly((0, 1))))
        r2 = Automorphism.of(SWAP, ElemX(UPoly((0, 0, 1)), 2))
        assert expand(compose(r1, r2)) == compose_raw(r1, r2)
        assert compose_plane(r1, r2) == compose_raw(r2, r1)

    def test_invert_identity(self):
        assert invert(Automorphism.identity()) == Automorphism.identity()

    @settings(max_examples=30)
    @given(words())
    def test_inverse_expands_to_identity(self, rho):
        assert compose_raw(rho, invert(rho)).is_identity
        assert compose_raw(invert(rho), rho).is_identity

    @settings(max_examples=30)
    @given(words(), bpolys(1, 2), bpolys(1, 2))
    def test_apply_is_ring_homomorphism(self, rho, f, g):
        assert apply(rho, f * g) == apply(rho, f) * apply(rho, g)
        assert apply(rho, f + g) == apply(rho, f) + apply(rho, g)


class TestJacobian:
    def test_examples(self):
        g0 = BPoly.from_upoly(UPoly((1, 2, 3)))
        assert jacobian_det(RawEndo(x, g0 + 5 * y)) == BPoly.const(5)
        assert jacobian_det(RawEndo(x + y ** 3, 2 + Fraction(1, 2) * y)) == BPoly.const(Fraction(1, 2))
        assert jacobian_det(RawEndo(x ** 2, y)) == 2 * x

    @settings(max_examples=30)
    @given(words())
    def test_automorphisms_have_constant_jacobian(self, rho):
        j = jacobian_det(rho)
        assert j.is_constant and not j.is_zero


class TestCommutes:
    def test_examples(self):
        D5 = ShamsuddinDerivation(UPoly((0, 2)), UPoly((0, 0, 0, 1)))
        assert commutes(rho_t(3), D5)
        assert commutes(Automorphism.identity(), D5)
        D = ShamsuddinDerivation(UPoly.one(), UPoly.zero())
        assert not commutes(RawEndo(x, x + y), D)

    def test_residuals(self):
        D = ShamsuddinDerivation(UPoly.one(), UPoly.zero())
        rx, ry = commutation_residuals(RawEndo(x, x + y), D)
        assert rx == BPoly.zero()
        assert ry == 1 - x

    @settings(max_examples=25)
    @given(words(max_size=4, max_nonlinear=1), derivations())
    def test_commutes_iff_conjugate_is_fixed(self, rho, D):
        assert commutes(rho, D) == (conjugate(rho, D) == D)


class TestConjugate:
    def test_identity(self):
        D = Derivation(x * y, x + 1)
        assert conjugate(Automorphism.identity(), D) == D

    def test_elementary_letter_on_partial_x(self):
        B = UPoly((1, 0, 0, 2))
        C = conjugate(Automorphism.of(ElemY(B, 1)), Derivation.partial_x())
        assert C == Derivation(BPoly.one(), -BPoly.from_upoly(B.derivative()))

    @settings(max_examples=20)
    @given(words(max_size=3, max_nonlinear=1), words(max_size=3, max_nonlinear=1), derivations())
    def test_action_axiom(self, r1, r2, D):
        assert conjugate(compose(r1, r2), D) == conjugate(r1, conjugate(r2, D))

    @settings(max_examples=25)
    @given(words(max_size=4, max_nonlinear=1), derivations(), bpolys(1, 1))
    def test_conjugate_formula(self, rho, D, f):
        # (ρDρ⁻¹)(f) = ρ(D(ρ⁻¹(f)))
        lhs = apply_derivation(conjugate(rho, D), f)
        rhs = apply(rho, apply_derivation(D, apply(invert(rho), f)))
        assert lhs == rhs


class TestFixesPoint:
    def test_examples(self):
        assert fixes_point(RawEndo.identity(), (5, Fraction(-1, 3)))
        assert fixes_point(rho_t(2), (1, -1))
        assert not fixes_point(RawEndo(x + 1, y), (0, 0))

    @given(points())
    def test_identity_fixes_everything(self, p):
        assert fixes_point(Automorphism.identity(), p)
