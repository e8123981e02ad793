"""K[x,y] 的多项式自同构：仿射与初等生成元组成的字，及其作用、复合、求逆与共轭。

约定：字 [L1, ..., Lk] 表示代数映射 L1∘...∘Lk，即 (ρ1ρ2)(y) = ρ1(ρ2(y))；
compose 是字的拼接，compose_raw 同样按这个顺序。
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Tuple, Union

from logger import group_logger
from .derivation import AnyDerivation, Derivation, apply as apply_derivation, as_derivation
from .poly import BPoly, UPoly
from .utils import DomainError, as_point, as_rational, nonzero


@dataclass(frozen=True)
class Affine:
    """x ↦ m11·x + m12·y + v1，y ↦ m21·x + m22·y + v2，det M ≠ 0。"""

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction
    v1: Fraction = Fraction(0)
    v2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "v1", "v2"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.det == 0:
            raise DomainError(f"affine letter with singular matrix: {self}")

    @classmethod
    def translation(cls, v1: Any, v2: Any) -> Affine:
        return cls(1, 0, 0, 1, v1, v2)

    @classmethod
    def swap(cls) -> Affine:
        return cls(0, 1, 1, 0)

    @property
    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def images(self) -> Tuple[BPoly, BPoly]:
        x, y = BPoly.x(), BPoly.y()
        return (x.scale(self.m11) + y.scale(self.m12) + self.v1,
                x.scale(self.m21) + y.scale(self.m22) + self.v2)

    def inverse(self) -> Affine:
        det = self.det
        n11, n12 = self.m22 / det, -self.m12 / det
        n21, n22 = -self.m21 / det, self.m11 / det
        return Affine(n11, n12, n21, n22,
                      -(n11 * self.v1 + n12 * self.v2),
                      -(n21 * self.v1 + n22 * self.v2))

    def __str__(self) -> str:
        return (f"affine({self.m11}, {self.m12}, {self.m21}, {self.m22}; "
                f"{self.v1}, {self.v2})")


@dataclass(frozen=True)
class ElemY:
    """y ↦ β·y + p(x)，x 不变。"""

    p: UPoly
    beta: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.p, UPoly):
            object.__setattr__(self, "p", UPoly.const(self.p))
        object.__setattr__(self, "beta", nonzero("beta", self.beta))

    def images(self) -> Tuple[BPoly, BPoly]:
        return BPoly.x(), BPoly.y().scale(self.beta) + self.p

    def inverse(self) -> ElemY:
        return ElemY(self.p.scale(-1 / self.beta), 1 / self.beta)

    def __str__(self) -> str:
        return f"elemY({self.p.to_str('x')}; {self.beta})"


@dataclass(frozen=True)
class ElemX:
    """x ↦ α·x + q(y)，y 不变；q 是 y 的多项式。"""

    q: UPoly
    alpha: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.q, UPoly):
            object.__setattr__(self, "q", UPoly.const(self.q))
        object.__setattr__(self, "alpha", nonzero("alpha", self.alpha))

    def images(self) -> Tuple[BPoly, BPoly]:
        return BPoly.x().scale(self.alpha) + BPoly.from_y(self.q), BPoly.y()

    def inverse(self) -> ElemX:
        return ElemX(self.q.scale(-1 / self.alpha), 1 / self.alpha)

    def __str__(self) -> str:
        return f"elemX({self.q.to_str('y')}; {self.alpha})"


Letter = Union[Affine, ElemY, ElemX]


@dataclass(frozen=True)
class RawEndo:
    """候选自同态：ρ(x) = f，ρ(y) = g。"""

    f: BPoly
    g: BPoly

    def __post_init__(self):
        object.__setattr__(self, "f", BPoly.lift(self.f))
        object.__setattr__(self, "g", BPoly.lift(self.g))

    @classmethod
    def identity(cls) -> RawEndo:
        return cls(BPoly.x(), BPoly.y())

    @property
    def is_identity(self) -> bool:
        return self.f == BPoly.x() and self.g == BPoly.y()

    def __call__(self, h: Any) -> BPoly:
        return apply(self, h)

    def __str__(self) -> str:
        return f"({self.f}, {self.g})"


@dataclass(frozen=True)
class Automorphism:
    word: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @classmethod
    def identity(cls) -> Automorphism:
        return cls(())

    @classmethod
    def of(cls, *letters: Letter) -> Automorphism:
        return cls(letters)

    @cached_property
    def raw(self) -> RawEndo:
        return expand(self)

    def __call__(self, h: Any) -> BPoly:
        return apply(self, h)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "identity"
        return " * ".join(str(letter) for letter in self.word)


AnyEndo = Union[Automorphism, RawEndo]


def as_raw(e: AnyEndo) -> RawEndo:
    if isinstance(e, Automorphism):
        return e.raw
    if isinstance(e, RawEndo):
        return e
    if isinstance(e, (Affine, ElemY, ElemX)):
        return RawEndo(*e.images())
    raise TypeError(f"not an endomorphism: {e!r}")


def expand(rho: Automorphism) -> RawEndo:
    f, g = BPoly.x(), BPoly.y()
    for letter in rho.word:
        lf, lg = letter.images()
        f, g = lf.substitute(f, g), lg.substitute(f, g)
    return RawEndo(f, g)


def apply(e: AnyEndo, h: Any) -> BPoly:
    """ρ(h) = h(ρ(x), ρ(y))。"""
    raw = as_raw(e)
    return BPoly.lift(h).substitute(raw.f, raw.g)


def compose(rho1: Automorphism, rho2: Automorphism) -> Automorphism:
    return Automorphism(rho1.word + rho2.word)


def invert(rho: Automorphism) -> Automorphism:
    return Automorphism(tuple(letter.inverse() for letter in reversed(rho.word)))


def compose_raw(e1: AnyEndo, e2: AnyEndo) -> RawEndo:
    """代数复合 ρ1∘ρ2：x ↦ ρ1(ρ2(x))，y ↦ ρ1(ρ2(y))。"""
    r1, r2 = as_raw(e1), as_raw(e2)
    return RawEndo(r2.f.substitute(r1.f, r1.g), r2.g.substitute(r1.f, r1.g))


def compose_plane(e1: AnyEndo, e2: AnyEndo) -> RawEndo:
    """平面映射的复合 R1∘R2，对应代数映射 ρ2∘ρ1。"""
    return compose_raw(e2, e1)


def jacobian_det(e: AnyEndo) -> BPoly:
    raw = as_raw(e)
    return raw.f.partial_x() * raw.g.partial_y() - raw.f.partial_y() * raw.g.partial_x()


def commutation_residuals(e: AnyEndo, D: AnyDerivation) -> Tuple[BPoly, BPoly]:
    """(D(ρ(x)) − ρ(D(x)), D(ρ(y)) − ρ(D(y)))。"""
    raw = as_raw(e)
    D = as_derivation(D)
    return (apply_derivation(D, raw.f) - apply(raw, D.a),
            apply_derivation(D, raw.g) - apply(raw, D.b))


def commutes(e: AnyEndo, D: AnyDerivation) -> bool:
    # 导子与同态都由 x、y 的像决定，只需比较两个生成元
    rx, ry = commutation_residuals(e, D)
    ok = rx.is_zero and ry.is_zero
    if not ok:
        group_logger.debug(f"commutes: residuals ({rx}, {ry}) for {as_raw(e)}")
    return ok


def conjugate(rho: Automorphism, D: AnyDerivation) -> Derivation:
    """ρDρ⁻¹，在生成元上计算。"""
    inv = as_raw(invert(rho))
    return Derivation(apply(rho, apply_derivation(D, inv.f)),
                      apply(rho, apply_derivation(D, inv.g)))


def fixes_point(e: AnyEndo, p: Any) -> bool:
    raw = as_raw(e)
    x0, y0 = as_point(p)
    return raw.f.evaluate(x0, y0) == x0 and raw.g.evaluate(x0, y0) == y0
