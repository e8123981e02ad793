"""单扩张数域 Q[x]/(q) 及其上的一元多项式 gcd，只给奇点证书用。"""
from __future__ import annotations

from typing import Any, List, Sequence

from .poly import BPoly, UPoly, irreducible_factorization, xgcd
from .utils import DomainError, is_scalar


class NumberField:
    """Q[x]/(q)，q 首一且在 Q 上不可约（构造时检查）。"""

    def __init__(self, modulus: UPoly):
        if modulus.degree < 1:
            raise DomainError(f"modulus {modulus} must have positive degree")
        q = modulus.monic()
        _, factors = irreducible_factorization(q)
        if len(factors) != 1 or factors[0][1] != 1:
            raise DomainError(f"modulus {q} is reducible over the rationals")
        self.modulus = q

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def __call__(self, value: Any) -> NumberFieldElem:
        if isinstance(value, NumberFieldElem):
            if value.field != self:
                raise DomainError("elements of different number fields")
            return value
        if is_scalar(value):
            return NumberFieldElem(self, UPoly.const(value))
        if isinstance(value, UPoly):
            return NumberFieldElem(self, value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self) -> NumberFieldElem:
        return self(0)

    @property
    def one(self) -> NumberFieldElem:
        return self(1)

    @property
    def generator(self) -> NumberFieldElem:
        return self(UPoly.x())

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("NumberField", self.modulus))

    def __str__(self) -> str:
        return f"Q[x]/({self.modulus})"


class NumberFieldElem:
    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: UPoly):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rep", rep % field.modulus)

    def __setattr__(self, name, value):
        raise AttributeError("NumberFieldElem is immutable")

    def _coerce(self, other) -> NumberFieldElem | None:
        if isinstance(other, NumberFieldElem) or is_scalar(other) or isinstance(other, UPoly):
            return self.field(other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.rep.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(self.field, self.rep + o.rep)

    __radd__ = __add__

    def __neg__(self) -> NumberFieldElem:
        return NumberFieldElem(self.field, -self.rep)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(self.field, self.rep - o.rep)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NumberFieldElem(self.field, self.rep * o.rep)

    __rmul__ = __mul__

    def inverse(self) -> NumberFieldElem:
        if self.is_zero:
            raise DomainError("zero has no inverse")
        d, s, _ = xgcd(self.rep, self.field.modulus)
        # q 不可约，非零元素与 q 互素
        assert d == UPoly.one()
        return NumberFieldElem(self.field, s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field == o.field and self.rep == o.rep

    def __hash__(self) -> int:
        return hash((self.field, self.rep))

    def __str__(self) -> str:
        return self.rep.to_str("t")

    def __repr__(self) -> str:
        return f"NumberFieldElem({self}, mod {self.field.modulus.to_str('t')})"


def _trim(f: Sequence[NumberFieldElem]) -> List[NumberFieldElem]:
    out = list(f)
    while out and out[-1].is_zero:
        out.pop()
    return out


def _rem(f: List[NumberFieldElem], g: List[NumberFieldElem]) -> List[NumberFieldElem]:
    rem = list(f)
    inv = g[-1].inverse()
    dg = len(g) - 1
    while len(rem) - 1 >= dg and rem:
        t = rem[-1] * inv
        shift = len(rem) - 1 - dg
        for j, c in enumerate(g):
            rem[shift + j] = rem[shift + j] - t * c
        rem = _trim(rem)
    return rem


def poly_gcd(f: Sequence[NumberFieldElem], g: Sequence[NumberFieldElem]) -> List[NumberFieldElem]:
    """系数在数域里的一元多项式（低次在前）的首一 gcd；gcd(0, 0) 为空表。"""
    a, b = _trim(f), _trim(g)
    while b:
        a, b = b, _rem(a, b)
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def specialize(f: BPoly, field: NumberField) -> List[NumberFieldElem]:
    """x 取 field 的生成元 θ，得到 y 的多项式 f(θ, y)。"""
    return _trim(field(c) for c in f.coeffs)
