"""精确有理系数多项式：K[x] 稠密表示，K[x,y] 按 y 的幂递归存放 K[x] 系数。

重算法（结果式、二元 gcd、不可约分解）交给 sympy，环运算自己做以保证规范形式。
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import sympy as sp

from logger import algebra_logger
from .utils import DomainError, as_rational, is_scalar

Rational = Fraction
ZERO_DEGREE = -1

X, Y = sp.symbols("x y")


def _strip(coeffs: Iterable[Any]) -> tuple:
    cs = [as_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _to_fraction(value: Any) -> Fraction:
    r = sp.Rational(value)
    return Fraction(int(r.p), int(r.q))


def _sym(c: Fraction) -> sp.Rational:
    return sp.Rational(c.numerator, c.denominator)


def _monomial_text(powers: Sequence[Tuple[str, int]]) -> str:
    parts = []
    for var, k in powers:
        if k == 1:
            parts.append(var)
        elif k > 1:
            parts.append(f"{var}^{k}")
    return "*".join(parts)


def format_terms(terms: Iterable[Tuple[Tuple[int, int], Fraction]], names: Tuple[str, str] = ("x", "y")) -> str:
    """按总次数降序、同次按 x 次数降序输出 ASCII 文本，可被 expr.parse_poly 读回。"""
    ordered = sorted(terms, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))
    chunks: List[str] = []
    for (i, j), c in ordered:
        mono = _monomial_text([(names[0], i), (names[1], j)])
        if not mono:
            text = str(c)
        elif c == 1:
            text = mono
        elif c == -1:
            text = "-" + mono
        else:
            text = f"{c}*{mono}"
        if not chunks:
            chunks.append(text)
        elif text.startswith("-"):
            chunks.append(" - " + text[1:])
        else:
            chunks.append(" + " + text)
    return "".join(chunks) if chunks else "0"


class UPoly:
    """K[x] 中的多项式，系数低次在前；零多项式次数为 ZERO_DEGREE。"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def zero(cls) -> UPoly:
        return cls(())

    @classmethod
    def one(cls) -> UPoly:
        return cls((1,))

    @classmethod
    def const(cls, c: Any) -> UPoly:
        return cls((c,))

    @classmethod
    def x(cls) -> UPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> UPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if is_scalar(other):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UPoly", self.coeffs))

    @staticmethod
    def _coerce(other) -> Optional[UPoly]:
        if isinstance(other, UPoly):
            return other
        if is_scalar(other):
            return UPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UPoly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> UPoly:
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return UPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UPoly:
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"power with negative or non-integer exponent {k!r}")
        result, base = UPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value: Any) -> Any:
        """Horner 求值；value 可以是有理数、BPoly、数域元素或截断级数。"""
        acc: Any = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def scale(self, c: Any) -> UPoly:
        c = as_rational(c)
        return UPoly(c * a for a in self.coeffs)

    def derivative(self) -> UPoly:
        return UPoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def antiderivative(self) -> UPoly:
        """常数项取 0 的原函数。"""
        return UPoly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def compose(self, inner: UPoly) -> UPoly:
        out = self(inner)
        return out if isinstance(out, UPoly) else UPoly.const(out)

    def shift(self, c: Any) -> UPoly:
        """p(x) -> p(x + c)。"""
        return self.compose(UPoly((c, 1)))

    def monic(self) -> UPoly:
        if self.is_zero:
            return self
        return self.scale(1 / self.lc)

    def divmod(self, other: UPoly) -> Tuple[UPoly, UPoly]:
        if other.is_zero:
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            t = rem[k] * inv
            if t == 0:
                continue
            quot[k - dq] = t
            for j, c in enumerate(other.coeffs):
                rem[k - dq + j] -= t * c
        return UPoly(quot), UPoly(rem)

    def __floordiv__(self, other: UPoly) -> UPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return self.divmod(other)[1]

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                yield k, c

    def to_sympy(self, var: sp.Symbol = X) -> sp.Poly:
        if self.is_zero:
            return sp.Poly(0, var, domain=sp.QQ)
        return sp.Poly([_sym(c) for c in reversed(self.coeffs)], var, domain=sp.QQ)

    @classmethod
    def from_sympy(cls, p: Any, var: sp.Symbol = X) -> UPoly:
        poly = p if isinstance(p, sp.Poly) else sp.Poly(p, var, domain=sp.QQ)
        if poly.is_zero:
            return cls.zero()
        return cls(_to_fraction(c) for c in reversed(poly.all_coeffs()))

    def to_str(self, var: str = "x") -> str:
        return format_terms((((k, 0), c) for k, c in self.terms()), (var, "_"))

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"UPoly({self.to_str()})"


def gcd(f: UPoly, g: UPoly) -> UPoly:
    """首一最大公因式；gcd(0, 0) = 0。"""
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def xgcd(f: UPoly, g: UPoly) -> Tuple[UPoly, UPoly, UPoly]:
    """返回 (d, s, t)，d 首一且 s*f + t*g = d。"""
    r0, r1 = f, g
    s0, s1 = UPoly.one(), UPoly.zero()
    t0, t1 = UPoly.zero(), UPoly.one()
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv = 1 / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def squarefree_part(u: UPoly) -> UPoly:
    if u.is_zero:
        return u
    return (u // gcd(u, u.derivative())).monic()


def irreducible_factorization(u: UPoly) -> Tuple[Fraction, List[Tuple[UPoly, int]]]:
    """Q 上的不可约分解：(常数, [(首一不可约因子, 重数)])。"""
    if u.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    content, factors = u.to_sympy().factor_list()
    out: List[Tuple[UPoly, int]] = []
    lead = _to_fraction(content)
    for p, mult in factors:
        q = UPoly.from_sympy(p)
        lead *= q.lc ** mult
        out.append((q.monic(), int(mult)))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return lead, out


def rational_roots(u: UPoly) -> List[Fraction]:
    """有理根（不计重数）；即一次不可约因子的根。"""
    if u.is_zero:
        raise DomainError("the zero polynomial has every number as a root")
    if u.is_constant:
        return []
    _, factors = irreducible_factorization(u)
    return sorted(-q[0] for q, _ in factors if q.degree == 1)


class BPoly:
    """K[x,y] 中的多项式 f = sum f_i(x) y^i，coeffs[i] = f_i。"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = [c if isinstance(c, UPoly) else UPoly.const(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("BPoly is immutable")

    @classmethod
    def zero(cls) -> BPoly:
        return cls(())

    @classmethod
    def one(cls) -> BPoly:
        return cls((UPoly.one(),))

    @classmethod
    def const(cls, c: Any) -> BPoly:
        return cls((UPoly.const(c),))

    @classmethod
    def x(cls) -> BPoly:
        return cls((UPoly.x(),))

    @classmethod
    def y(cls) -> BPoly:
        return cls((UPoly.zero(), UPoly.one()))

    @classmethod
    def monomial(cls, i: int, j: int, c: Any = 1) -> BPoly:
        return cls([UPoly.zero()] * j + [UPoly.monomial(i, c)])

    @classmethod
    def from_upoly(cls, u: UPoly) -> BPoly:
        return cls((u,))

    @classmethod
    def from_y(cls, u: UPoly) -> BPoly:
        """把 u 读作 y 的多项式。"""
        return cls(UPoly.const(c) for c in u.coeffs)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int], Any]) -> BPoly:
        rows: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), c in terms.items():
            rows.setdefault(j, {})
            rows[j][i] = rows[j].get(i, Fraction(0)) + as_rational(c)
        if not rows:
            return cls.zero()
        out = []
        for j in range(max(rows) + 1):
            row = rows.get(j, {})
            out.append(UPoly([row.get(i, 0) for i in range(max(row, default=-1) + 1)]))
        return cls(out)

    @classmethod
    def lift(cls, value: Any) -> BPoly:
        if isinstance(value, BPoly):
            return value
        if isinstance(value, UPoly):
            return cls.from_upoly(value)
        return cls.const(value)

    @property
    def deg_y(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg_x(self) -> int:
        return max((c.degree for c in self.coeffs), default=ZERO_DEGREE)

    @property
    def total_degree(self) -> int:
        return max((i + j for (i, j), _ in self.terms()), default=ZERO_DEGREE)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return self.deg_y <= 0 and self.deg_x <= 0

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise DomainError(f"{self} is not a constant")
        return self.coeffs[0][0] if self.coeffs else Fraction(0)

    @property
    def lc_y(self) -> UPoly:
        return self.coeffs[-1] if self.coeffs else UPoly.zero()

    @property
    def lc(self) -> Fraction:
        return self.lc_y.lc

    def coeff_y(self, j: int) -> UPoly:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else UPoly.zero()

    def terms(self) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
        for j, u in enumerate(self.coeffs):
            for i, c in u.terms():
                yield (i, j), c

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, BPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, UPoly) or is_scalar(other):
            return self == BPoly.lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BPoly", self.coeffs))

    @staticmethod
    def _coerce(other) -> Optional[BPoly]:
        if isinstance(other, BPoly):
            return other
        if isinstance(other, UPoly) or is_scalar(other):
            return BPoly.lift(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return BPoly(self.coeff_y(j) + o.coeff_y(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> BPoly:
        return BPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return BPoly.zero()
        out = [UPoly.zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return BPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BPoly:
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"power with negative or non-integer exponent {k!r}")
        result, base = BPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Any) -> BPoly:
        return BPoly(u.scale(c) for u in self.coeffs)

    def monic(self) -> BPoly:
        return self if self.is_zero else self.scale(1 / self.lc)

    def __call__(self, u: Any, v: Any) -> Any:
        """x -> u, y -> v 的 Horner 求值，u、v 可为任意支持环运算的对象。"""
        acc: Any = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c(u)
        return acc

    def evaluate(self, x0: Any, y0: Any) -> Fraction:
        return as_rational(self(as_rational(x0), as_rational(y0)))

    def substitute(self, p: Any, q: Any) -> BPoly:
        return BPoly.lift(self(BPoly.lift(p), BPoly.lift(q)))

    def eval_x(self, x0: Any) -> UPoly:
        """固定 x = x0，得到 y 的一元多项式。"""
        return UPoly(c(as_rational(x0)) for c in self.coeffs)

    def eval_y(self, y0: Any) -> UPoly:
        y0 = as_rational(y0)
        acc = UPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc.scale(y0) + c
        return acc

    def partial_x(self) -> BPoly:
        return BPoly(c.derivative() for c in self.coeffs)

    def partial_y(self) -> BPoly:
        return BPoly(c.scale(j) for j, c in enumerate(self.coeffs) if j > 0)

    def swap(self) -> BPoly:
        return BPoly.from_terms({(j, i): c for (i, j), c in self.terms()})

    def as_upoly(self) -> UPoly:
        if self.deg_y > 0:
            raise DomainError(f"{self} depends on y")
        return self.coeff_y(0)

    def as_upoly_in_y(self) -> UPoly:
        if self.deg_x > 0:
            raise DomainError(f"{self} depends on x")
        return UPoly(c[0] for c in self.coeffs)

    def to_sympy(self) -> sp.Poly:
        terms = {k: _sym(c) for k, c in self.terms()}
        if not terms:
            return sp.Poly(0, X, Y, domain=sp.QQ)
        return sp.Poly.from_dict(terms, X, Y, domain=sp.QQ)

    @classmethod
    def from_sympy(cls, p: Any) -> BPoly:
        poly = sp.Poly(p.as_expr() if isinstance(p, sp.Poly) else p, X, Y, domain=sp.QQ)
        return cls.from_terms({k: _to_fraction(c) for k, c in poly.as_dict().items()})

    def __str__(self) -> str:
        return format_terms(self.terms())

    def __repr__(self) -> str:
        return f"BPoly({self})"


def divides(f: BPoly, g: BPoly) -> Tuple[bool, Optional[BPoly]]:
    """在 Q[x][y] 中做带余除法；整除时返回商。"""
    if f.is_zero:
        raise DomainError("divisibility by the zero polynomial is undefined")
    rem = g
    quot: Dict[int, UPoly] = {}
    lead = f.lc_y
    while not rem.is_zero and rem.deg_y >= f.deg_y:
        k = rem.deg_y - f.deg_y
        t, r = rem.lc_y.divmod(lead)
        if not r.is_zero:
            return False, None
        quot[k] = t
        step = BPoly([UPoly.zero()] * k + [t])
        rem = rem - step * f
    if not rem.is_zero:
        return False, None
    if not quot:
        return True, BPoly.zero()
    return True, BPoly(quot.get(j, UPoly.zero()) for j in range(max(quot) + 1))


def resultant_y(f: BPoly, g: BPoly) -> UPoly:
    """关于 y 的结果式（Sylvester 行列式约定）。"""
    if f.is_zero or g.is_zero:
        raise DomainError("resultant of a zero polynomial")
    if f.deg_y == 0 and g.deg_y == 0:
        return UPoly.one()
    if f.deg_y == 0:
        return f.coeff_y(0) ** g.deg_y
    if g.deg_y == 0:
        return g.coeff_y(0) ** f.deg_y
    res = sp.resultant(f.to_sympy().as_expr(), g.to_sympy().as_expr(), Y)
    out = UPoly.from_sympy(sp.Poly(res, X, domain=sp.QQ))
    algebra_logger.debug(f"resultant_y({f}, {g}) = {out}")
    return out


def bivariate_gcd(f: BPoly, g: BPoly) -> BPoly:
    """K[x,y] 中的 gcd，按首项系数归一。"""
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    return BPoly.from_sympy(sp.gcd(f.to_sympy(), g.to_sympy())).monic()


def monomials(max_degree: int) -> List[BPoly]:
    """总次数 1..max_degree 的全部首一单项式。"""
    out = []
    for total in range(1, max_degree + 1):
        for i in range(total, -1, -1):
            out.append(BPoly.monomial(i, total - i))
    return out


def monomial_pairs(max_degree: int) -> Iterator[Tuple[BPoly, BPoly]]:
    monos = monomials(max_degree)
    yield from combinations(monos, 2)
