"""多项式表达式、生成元字与点的 pyparsing 文法。

表达式只有有理字面量、x、y、+ - * ^ 与括号；乘号必须显式写出。
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from pyparsing import (
    Forward,
    Keyword,
    Optional,
    ParseBaseException,
    ParseFatalException,
    Regex,
    Suppress,
    Word,
    ZeroOrMore,
    nums,
    one_of,
)

from logger import cli_logger
from .automorphism import Affine, Automorphism, ElemX, ElemY, RawEndo
from .poly import BPoly
from .utils import ParseError, UsageError


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


Expr = Union[Num, Var, Neg, BinOp, Pow]


def _number(s, loc, toks):
    text = toks[0]
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseFatalException(s, loc, "zero denominator in rational literal")
    return Num(Fraction(int(num), int(den) if den else 1))


def _power(toks):
    if len(toks) == 1:
        return toks[0]
    return Pow(toks[0], int(toks[1]))


def _unary(toks):
    *signs, operand = toks
    # 前导 + 号直接丢掉，只保留 - 号
    for sign in reversed(signs):
        if sign == "-":
            operand = Neg(operand)
    return operand


def _chain(toks):
    """左结合折叠：a op b op c -> ((a op b) op c)。"""
    acc = toks[0]
    rest = list(toks[1:])
    for i in range(0, len(rest), 2):
        acc = BinOp(rest[i], acc, rest[i + 1])
    return acc


@lru_cache(maxsize=None)
def make_grammar():
    number = Regex(r"\d+(?:/\d+)?").set_name("number").set_parse_action(_number)
    variable = one_of("x y").set_name("variable").set_parse_action(lambda toks: Var(toks[0]))
    lparen, rparen = Suppress("("), Suppress(")")

    expr = Forward().set_name("expression")
    primary = number | variable | (lparen + expr + rparen)
    power = (primary + Optional(Suppress("^") - Word(nums).set_name("exponent"))).set_parse_action(_power)
    unary = (ZeroOrMore(one_of("+ -")) + power).set_name("operand").set_parse_action(_unary)
    term = (unary + ZeroOrMore(one_of("*") - unary)).set_name("term").set_parse_action(_chain)
    expr <<= (term + ZeroOrMore(one_of("+ -") - term)).set_parse_action(_chain)

    comma, semi = Suppress(","), Suppress(";")
    affine = (Keyword("affine") + lparen + expr + comma + expr + comma + expr + comma + expr
              + semi + expr + comma + expr + rparen)
    elem_y = Keyword("elemY") + lparen + expr + Optional(semi + expr) + rparen
    elem_x = Keyword("elemX") + lparen + expr + Optional(semi + expr) + rparen
    letter = (affine | elem_y | elem_x).set_parse_action(lambda toks: [tuple(toks)])
    identity = (Keyword("identity") | Keyword("id")).set_parse_action(lambda toks: [("identity",)])
    word = identity | (letter + ZeroOrMore(Suppress("*") + letter))

    pair = expr + comma + expr
    return {"expr": expr, "word": word, "pair": pair}


def _parse(rule: str, text: str):
    grammar = make_grammar()[rule]
    try:
        return list(grammar.parse_string(text, parse_all=True))
    except ParseBaseException as e:
        cli_logger.debug(f"parse error in {rule!r}: {e}")
        element = getattr(e, "parser_element", None)
        expected = element.name if element is not None else ""
        raise ParseError(e.msg, e.lineno, e.col, expected=expected) from None


def parse_expr(text: str) -> Expr:
    return _parse("expr", text)[0]


def to_poly(e: Expr) -> BPoly:
    if isinstance(e, Num):
        return BPoly.const(e.value)
    if isinstance(e, Var):
        return BPoly.x() if e.name == "x" else BPoly.y()
    if isinstance(e, Neg):
        return -to_poly(e.operand)
    if isinstance(e, Pow):
        return to_poly(e.base) ** e.exp
    left, right = to_poly(e.left), to_poly(e.right)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    return left * right


def parse_poly(text: str) -> BPoly:
    return to_poly(parse_expr(text))


def print_poly(f: BPoly) -> str:
    return str(f)


def print_expr(e: Expr) -> str:
    if isinstance(e, Num):
        return str(e.value) if e.value.denominator == 1 else f"({e.value})"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return "-" + print_expr(e.operand)
    if isinstance(e, Pow):
        base = print_expr(e.base)
        if not isinstance(e.base, (Num, Var)):
            base = f"({base})"
        return f"{base}^{e.exp}"
    return f"({print_expr(e.left)} {e.op} {print_expr(e.right)})"


def _constant(e: Expr, what: str) -> Fraction:
    f = to_poly(e)
    if not f.is_constant:
        raise UsageError(f"{what} must be a constant, got {f}")
    return f.constant_value


def _letter(toks: tuple):
    name, *args = toks
    if name == "affine":
        return Affine(*(_constant(a, "affine entry") for a in args))
    scale = _constant(args[1], "scale") if len(args) > 1 else Fraction(1)
    body = to_poly(args[0])
    if name == "elemY":
        if body.deg_y > 0:
            raise UsageError(f"elemY takes a polynomial in x, got {body}")
        return ElemY(body.as_upoly(), scale)
    if body.deg_x > 0:
        raise UsageError(f"elemX takes a polynomial in y, got {body}")
    return ElemX(body.as_upoly_in_y(), scale)


def parse_word(text: str) -> Automorphism:
    """例如 "elemY(x^2; 1) * affine(0, 1, 1, 0; 0, 0)"；"identity" 为空字。"""
    letters = _parse("word", text)
    if letters == [("identity",)]:
        return Automorphism.identity()
    return Automorphism(tuple(_letter(t) for t in letters))


def parse_pair(text: str) -> Tuple[BPoly, BPoly]:
    left, right = _parse("pair", text)
    return to_poly(left), to_poly(right)


def parse_raw(text: str) -> RawEndo:
    return RawEndo(*parse_pair(text))


def parse_point(text: str) -> Tuple[Fraction, Fraction]:
    left, right = _parse("pair", text)
    return _constant(left, "point coordinate"), _constant(right, "point coordinate")
