from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Tuple


class ShamError(Exception):
    """本包所有异常的基类。"""


class DomainError(ShamError, ValueError):
    """数学前提不满足（奇异基点、零除数、零导子、参数为零等）。"""


class UsageError(ShamError, ValueError):
    """命令输入不完整或形状不对。"""


class ParseError(ShamError, ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1, expected: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(f"line {line}, column {column}: {message}")


def as_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def as_point(p: Any) -> Tuple[Fraction, Fraction]:
    try:
        p1, p2 = p
    except (TypeError, ValueError):
        raise DomainError(f"a point needs exactly two coordinates, got {p!r}")
    return as_rational(p1), as_rational(p2)


def nonzero(name: str, value: Any) -> Fraction:
    v = as_rational(value)
    if v == 0:
        raise DomainError(f"parameter {name} must be nonzero")
    return v
