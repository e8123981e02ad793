from fractions import Fraction

from hypothesis import strategies as st

from sham.automorphism import Affine, Automorphism, ElemX, ElemY
from sham.derivation import Derivation, ShamsuddinDerivation
from sham.poly import BPoly, UPoly


def rationals():
    return st.fractions(min_value=-9, max_value=9, max_denominator=9)


def nonzero_rationals():
    return rationals().filter(lambda q: q != 0)


def upolys(max_degree=4):
    return st.lists(rationals(), max_size=max_degree + 1).map(UPoly)


def nonzero_upolys(max_degree=4):
    return upolys(max_degree).filter(lambda u: not u.is_zero)


def bpolys(max_deg_y=2, max_deg_x=3):
    return st.lists(upolys(max_deg_x), max_size=max_deg_y + 1).map(BPoly)


def nonzero_bpolys(max_deg_y=2, max_deg_x=3):
    return bpolys(max_deg_y, max_deg_x).filter(lambda f: not f.is_zero)


def points(bound=3):
    coord = st.integers(min_value=-bound, max_value=bound).map(Fraction)
    return st.tuples(coord, coord)


def derivations(max_deg_y=1, max_deg_x=2):
    return st.builds(Derivation, bpolys(max_deg_y, max_deg_x), bpolys(max_deg_y, max_deg_x))


def sham_derivations(max_degree=3):
    return st.builds(ShamsuddinDerivation, upolys(max_degree), upolys(max_degree))


def affine_letters():
    entries = st.tuples(*[rationals()] * 6)
    return entries.filter(lambda t: t[0] * t[3] - t[1] * t[2] != 0).map(lambda t: Affine(*t))


def elementary_letters(max_degree=2):
    return st.one_of(
        st.builds(ElemY, upolys(max_degree), nonzero_rationals()),
        st.builds(ElemX, upolys(max_degree), nonzero_rationals()),
    )


def letters(max_degree=2):
    return st.one_of(affine_letters(), elementary_letters(max_degree))


def words(max_size=5, max_nonlinear=2):
    """长度不超过 max_size 的字；非线性字母至多 max_nonlinear 个，控制展开后的次数。"""
    linear = st.lists(st.one_of(affine_letters(), elementary_letters(1)), max_size=max_size - max_nonlinear)
    nonlinear = st.lists(elementary_letters(2), max_size=max_nonlinear)
    return (st.tuples(linear, nonlinear)
            .map(lambda t: t[0] + t[1])
            .flatmap(st.permutations)
            .map(lambda ls: Automorphism(tuple(ls))))
