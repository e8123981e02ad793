"""K[x,y] 上的导子、Shamsuddin 单纯性判定、稳定理想与奇点证书。"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import settings
from logger import algebra_logger
from .numfield import NumberField, poly_gcd, specialize
from .poly import (
    BPoly,
    UPoly,
    bivariate_gcd,
    divides,
    gcd,
    irreducible_factorization,
    monomial_pairs,
    monomials,
    resultant_y,
    squarefree_part,
)
from .utils import DomainError, as_point


@dataclass(frozen=True)
class Derivation:
    """D = a∂x + b∂y，由 D(x) = a、D(y) = b 决定。"""

    a: BPoly
    b: BPoly

    def __post_init__(self):
        object.__setattr__(self, "a", BPoly.lift(self.a))
        object.__setattr__(self, "b", BPoly.lift(self.b))

    @classmethod
    def partial_x(cls) -> Derivation:
        return cls(BPoly.one(), BPoly.zero())

    @property
    def is_zero(self) -> bool:
        return self.a.is_zero and self.b.is_zero

    def __call__(self, f: Any) -> BPoly:
        return apply(self, f)

    def __str__(self) -> str:
        return f"({self.a})*dx + ({self.b})*dy"


@dataclass(frozen=True)
class ShamsuddinDerivation:
    """D = ∂x + (a(x)·y + b(x))∂y。"""

    a: UPoly
    b: UPoly

    def __post_init__(self):
        for name in ("a", "b"):
            value = getattr(self, name)
            if isinstance(value, BPoly):
                value = value.as_upoly()
            elif not isinstance(value, UPoly):
                value = UPoly.const(value)
            object.__setattr__(self, name, value)

    def as_derivation(self) -> Derivation:
        return Derivation(BPoly.one(), BPoly.y() * self.a + self.b)

    def __call__(self, f: Any) -> BPoly:
        return apply(self, f)

    def __str__(self) -> str:
        return str(self.as_derivation())


AnyDerivation = Union[Derivation, ShamsuddinDerivation]


def as_derivation(D: AnyDerivation) -> Derivation:
    if isinstance(D, ShamsuddinDerivation):
        return D.as_derivation()
    if isinstance(D, Derivation):
        return D
    raise TypeError(f"not a derivation: {D!r}")


def apply(D: AnyDerivation, f: Any) -> BPoly:
    D = as_derivation(D)
    f = BPoly.lift(f)
    return D.a * f.partial_x() + D.b * f.partial_y()


# ---------------------------------------------------------------------------
# h' = a·h + b
# ---------------------------------------------------------------------------

class OdeKind(str, Enum):
    UNIQUE = "Unique"
    FAMILY = "Family"
    NONE = "None"


@dataclass(frozen=True)
class OdeSolution:
    kind: OdeKind
    h: Optional[UPoly] = None
    note: str = ""

    @property
    def exists(self) -> bool:
        return self.kind != OdeKind.NONE

    @classmethod
    def unique(cls, h: UPoly) -> OdeSolution:
        return cls(OdeKind.UNIQUE, h)

    @classmethod
    def family(cls, base: UPoly) -> OdeSolution:
        return cls(OdeKind.FAMILY, base, "constant of integration free")

    @classmethod
    def none(cls) -> OdeSolution:
        return cls(OdeKind.NONE)


def solve_sham_ode(a: UPoly, b: UPoly, max_degree: Optional[int] = None) -> OdeSolution:
    """求 h ∈ K[x] 使 h' = a·h + b。

    a ≠ 0 时次数被首项比较确定（deg h = deg b − deg a），自顶向下逐个解出系数，
    最后整体验算残差；a = 0 时返回常数项为 0 的原函数族。
    """
    limit = settings.MAX_DEGREE if max_degree is None else max_degree
    if a.is_zero:
        return OdeSolution.family(b.antiderivative())
    if b.is_zero:
        return OdeSolution.unique(UPoly.zero())
    n = b.degree - a.degree
    if n < 0:
        algebra_logger.debug(f"solve_sham_ode: deg b < deg a for a={a}, b={b}")
        return OdeSolution.none()
    if n > limit:
        raise DomainError(f"forced degree {n} of h exceeds the degree cap {limit}")
    big_a = a.degree
    lead = a.lc
    h = [Fraction(0)] * (n + 2)
    for k in range(n, -1, -1):
        acc = (k + big_a + 1) * h[k + big_a + 1] if k + big_a + 1 <= n else Fraction(0)
        for j in range(k + 1, min(k + big_a, n) + 1):
            acc -= a[k + big_a - j] * h[j]
        acc -= b[k + big_a]
        h[k] = acc / lead
    sol = UPoly(h)
    residual = sol.derivative() - a * sol - b
    algebra_logger.debug(f"solve_sham_ode: forced degree {n}, candidate h={sol}, residual={residual}")
    if not residual.is_zero:
        return OdeSolution.none()
    return OdeSolution.unique(sol)


def is_simple_shamsuddin(a: UPoly, b: UPoly, max_degree: Optional[int] = None) -> bool:
    if a.is_zero:
        return False
    return not solve_sham_ode(a, b, max_degree).exists


def stable_witness(a: UPoly, b: UPoly, max_degree: Optional[int] = None) -> Optional[Tuple[BPoly, BPoly]]:
    """非单纯时返回 (y − h, 余因子)，满足 D(y − h) = 余因子·(y − h)。"""
    sol = solve_sham_ode(a, b, max_degree)
    if not sol.exists:
        return None
    return BPoly.y() - sol.h, BPoly.from_upoly(a)


# ---------------------------------------------------------------------------
# 稳定理想
# ---------------------------------------------------------------------------

def stable_quotient(D: AnyDerivation, f: Any) -> Optional[BPoly]:
    f = BPoly.lift(f)
    if f.is_zero:
        raise DomainError("the zero polynomial does not generate a proper principal ideal to test")
    ok, q = divides(f, apply(D, f))
    return q if ok else None


def stabilizes_ideal(D: AnyDerivation, f: Any) -> bool:
    return stable_quotient(D, f) is not None


def probe_polynomials(max_degree: Optional[int] = None) -> List[BPoly]:
    """固定探针集：单项式、单项式 ± 1、两个单项式的和与差，总次数不超过 max_degree。"""
    bound = settings.PROBE_DEGREE if max_degree is None else max_degree
    monos = monomials(bound)
    probes: List[BPoly] = []
    for m in monos:
        probes.extend((m, m + 1, m - 1))
    for m1, m2 in monomial_pairs(bound):
        probes.extend((m1 + m2, m1 - m2))
    return probes


def probe_stable_ideals(D: AnyDerivation, max_degree: Optional[int] = None) -> List[Tuple[BPoly, BPoly]]:
    found = []
    for f in probe_polynomials(max_degree):
        q = stable_quotient(D, f)
        if q is not None:
            found.append((f, q))
    algebra_logger.debug(f"probe_stable_ideals: {len(found)} stable probes for {D}")
    return found


# ---------------------------------------------------------------------------
# 奇点
# ---------------------------------------------------------------------------

def is_singular_at(D: AnyDerivation, p: Any) -> bool:
    D = as_derivation(D)
    x0, y0 = as_point(p)
    return D.a.evaluate(x0, y0) == 0 and D.b.evaluate(x0, y0) == 0


class CertificateKind(str, Enum):
    NO_SINGULAR_POINTS = "NoSingularPoints"
    SINGULAR_POINT_FOUND = "SingularPointFound"
    COMMON_FACTOR = "CommonFactor"


@dataclass(frozen=True)
class SingularCertificate:
    kind: CertificateKind
    factor: Optional[BPoly] = None
    # 有理奇点；代数奇点时为 None，由下面两个字段描述
    point: Optional[Tuple[Fraction, Fraction]] = None
    x_polynomial: Optional[UPoly] = None
    y_polynomial: Optional[str] = None
    swapped: bool = False
    details: Dict[str, str] = field(default_factory=dict)

    @property
    def has_singular_points(self) -> bool:
        return self.kind != CertificateKind.NO_SINGULAR_POINTS

    def witness(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind.value}
        if self.factor is not None:
            out["factor"] = str(self.factor)
        if self.point is not None:
            out["point"] = [str(self.point[0]), str(self.point[1])]
        if self.x_polynomial is not None:
            var = "y" if self.swapped else "x"
            out[f"{var}_minimal_polynomial"] = self.x_polynomial.to_str(var)
        if self.y_polynomial is not None:
            out["fiber_gcd"] = self.y_polynomial
        out.update(self.details)
        return out


def _fiber_text(coeffs, var: str) -> str:
    chunks = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c.rep == UPoly.one():
            chunks.append(mono)
        elif mono:
            chunks.append(f"({c})*{mono}")
        else:
            chunks.append(f"({c})")
    return " + ".join(chunks) if chunks else "0"


def _swap_point(p: Tuple[Fraction, Fraction], swapped: bool) -> Tuple[Fraction, Fraction]:
    return (p[1], p[0]) if swapped else p


def certify_no_singular_points(D: AnyDerivation) -> SingularCertificate:
    """在代数闭包上判定 a、b 是否有公共零点。

    先剥离公因子；互素后用关于 y 的结果式给出 x 坐标候选，
    有理候选在纤维上做 gcd，高次不可约候选在 Q[x]/(q) 上做 gcd。
    """
    D = as_derivation(D)
    a, b = D.a, D.b
    if D.is_zero:
        raise DomainError("the zero derivation is singular everywhere")

    common = bivariate_gcd(a, b)
    if not common.is_constant:
        algebra_logger.debug(f"certify: common factor {common}")
        return SingularCertificate(CertificateKind.COMMON_FACTOR, factor=common)

    if a.is_zero or b.is_zero:
        # 另一个系数是非零常数
        return SingularCertificate(CertificateKind.NO_SINGULAR_POINTS)

    swapped = False
    if a.deg_y <= 0 and b.deg_y <= 0:
        a, b, swapped = a.swap(), b.swap(), True
    var_x, var_y = ("y", "x") if swapped else ("x", "y")

    r = resultant_y(a, b)
    if r.is_constant:
        return SingularCertificate(CertificateKind.NO_SINGULAR_POINTS, swapped=swapped,
                                   details={"resultant": r.to_str(var_x)})

    _, factors = irreducible_factorization(squarefree_part(r))
    for q, _ in factors:
        if q.degree == 1:
            x0 = -q[0]
            g = gcd(a.eval_x(x0), b.eval_x(x0))
            if g.is_constant:
                continue
            algebra_logger.debug(f"certify: fiber {var_x} = {x0} has common factor {g.to_str(var_y)}")
            if g.degree == 1:
                y0 = -g[0]
                return SingularCertificate(CertificateKind.SINGULAR_POINT_FOUND,
                                           point=_swap_point((x0, y0), swapped), swapped=swapped)
            return SingularCertificate(CertificateKind.SINGULAR_POINT_FOUND, x_polynomial=q,
                                       y_polynomial=g.to_str(var_y), swapped=swapped)
        field_q = NumberField(q)
        g = poly_gcd(specialize(a, field_q), specialize(b, field_q))
        if len(g) >= 2:
            algebra_logger.debug(f"certify: algebraic fiber over root of {q.to_str(var_x)}")
            return SingularCertificate(CertificateKind.SINGULAR_POINT_FOUND, x_polynomial=q,
                                       y_polynomial=_fiber_text(g, var_y), swapped=swapped)

    return SingularCertificate(CertificateKind.NO_SINGULAR_POINTS, swapped=swapped,
                               details={"resultant": r.to_str(var_x)})
