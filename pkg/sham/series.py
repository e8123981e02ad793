"""截断形式幂级数，以及导子过一点的形式解 (φ, ψ)：∂tφ = a(φ, ψ)，∂tψ = b(φ, ψ)。"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Tuple

from typing_extensions import Self

import settings
from logger import algebra_logger
from .automorphism import AnyEndo, apply as apply_endo, commutes, fixes_point
from .derivation import AnyDerivation, apply as apply_derivation, as_derivation, is_singular_at
from .poly import BPoly, format_terms
from .utils import DomainError, as_point, as_rational, is_scalar


class TruncatedSeries:
    """K[[t]] / (t^N) 中的元素，系数个数恰为 N。"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any], order: Optional[int] = None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * order)[:order]
        if not cs:
            raise DomainError("a truncated series needs order >= 1")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def const(cls, c: Any, order: int) -> Self:
        return cls([c], order)

    @classmethod
    def zero(cls, order: int) -> Self:
        return cls([], order)

    @classmethod
    def variable(cls, order: int) -> Self:
        """级数 t。"""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> Optional[Tuple[TruncatedSeries, TruncatedSeries]]:
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return self.truncate(n), other.truncate(n)
        if is_scalar(other):
            return self, TruncatedSeries.const(other, self.order)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        return TruncatedSeries(x + y for x, y in zip(s.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        return TruncatedSeries(x - y for x, y in zip(s.coeffs, o.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        s, o = pair
        n = s.order
        out = [Fraction(0)] * n
        for i, a in enumerate(s.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                out[i + j] += a * o.coeffs[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"power with negative or non-integer exponent {k!r}")
        result = TruncatedSeries.const(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> TruncatedSeries:
        """逐项求导；最后一个系数未知，补 0，阶数不变。"""
        return TruncatedSeries([(k + 1) * self[k + 1] for k in range(self.order - 1)], self.order)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order])

    def compose(self, other: TruncatedSeries) -> TruncatedSeries:
        """self(other(t))，要求 other(0) = 0。"""
        if other[0] != 0:
            raise DomainError("composition needs an inner series vanishing at 0")
        n = min(self.order, other.order)
        inner = other.truncate(n)
        acc = TruncatedSeries.zero(n)
        for c in reversed(self.coeffs[:n]):
            acc = acc * inner + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("TruncatedSeries", self.coeffs))

    def __str__(self) -> str:
        body = format_terms((((k, 0), c) for k, c in enumerate(self.coeffs) if c != 0), ("t", "_"))
        return f"{body} + O(t^{self.order})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self})"


@dataclass(frozen=True)
class SolutionPair:
    point: Tuple[Fraction, Fraction]
    phi: TruncatedSeries
    psi: TruncatedSeries

    @property
    def order(self) -> int:
        return self.phi.order


def _lift(value: Any, order: int) -> TruncatedSeries:
    if isinstance(value, TruncatedSeries):
        return value
    return TruncatedSeries.const(value, order)


def solve_through(D: AnyDerivation, p: Any, order: Optional[int] = None) -> SolutionPair:
    """过点 p 的唯一形式解，系数按 (k+1)·φ_{k+1} = [t^k] a(φ, ψ) 递推。"""
    D = as_derivation(D)
    n = settings.SERIES_ORDER if order is None else order
    if n < 1:
        raise DomainError(f"truncation order must be >= 1, got {n}")
    x0, y0 = as_point(p)
    if is_singular_at(D, (x0, y0)):
        raise DomainError(f"base point ({x0}, {y0}) is singular: a(p) = 0 and b(p) = 0")
    phi: List[Fraction] = [x0]
    psi: List[Fraction] = [y0]
    for k in range(n - 1):
        # [t^k] 只依赖下标 ≤ k 的系数，截断到 k+1 阶求值是精确的
        s_phi, s_psi = TruncatedSeries(phi), TruncatedSeries(psi)
        da = _lift(D.a(s_phi, s_psi), k + 1)
        db = _lift(D.b(s_phi, s_psi), k + 1)
        phi.append(da[k] / (k + 1))
        psi.append(db[k] / (k + 1))
    algebra_logger.debug(f"solve_through: order {n} at ({x0}, {y0})")
    return SolutionPair((x0, y0), TruncatedSeries(phi), TruncatedSeries(psi))


def eval_hom(s: SolutionPair, f: Any) -> TruncatedSeries:
    """x ↦ φ，y ↦ ψ 诱导的同态 K[x,y] → K[[t]]/(t^N)。"""
    return _lift(BPoly.lift(f)(s.phi, s.psi), s.order)


def check_chain_rule(s: SolutionPair, D: AnyDerivation, f: Any) -> bool:
    """∂t(f(φ, ψ)) ≡ (Df)(φ, ψ) mod t^(N−1)。"""
    m = s.order - 1
    if m == 0:
        return True
    lhs = eval_hom(s, f).derivative().truncate(m)
    rhs = eval_hom(s, apply_derivation(D, f)).truncate(m)
    return lhs == rhs


def vanishes_along(s: SolutionPair, f: Any) -> bool:
    """f 在解同态的核里（截断意义下）的见证。"""
    return eval_hom(s, f).is_zero


def fixed_solution_check(D: AnyDerivation, rho: AnyEndo, p: Any, order: Optional[int] = None) -> bool:
    """ρ 与 D 交换且固定非奇异点 p 时，过 p 的解满足 φ∘ρ = φ。"""
    x0, y0 = as_point(p)
    if not commutes(rho, D):
        raise DomainError("precondition failed: the endomorphism does not commute with D")
    if not fixes_point(rho, (x0, y0)):
        raise DomainError(f"precondition failed: the endomorphism does not fix the point ({x0}, {y0})")
    if is_singular_at(D, (x0, y0)):
        raise DomainError(f"precondition failed: base point ({x0}, {y0}) is singular: a(p) = 0 and b(p) = 0")
    s = solve_through(D, (x0, y0), order)
    for f in (BPoly.x(), BPoly.y()):
        if eval_hom(s, apply_endo(rho, f)) != eval_hom(s, f):
            return False
    return True
