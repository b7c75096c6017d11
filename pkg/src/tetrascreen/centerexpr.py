"""Center-function expression language.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' exponent)?
    atom   := INTEGER | 'a' | 'b' | 'c' | 'K' | 'r' | '(' expr ')'
    exponent := ['-'] INTEGER | 'r' | '(' ['-'] INTEGER ')'

Rational literals are written as quotients (``3/4``).  ``a, b, c`` are the
triangle sides, ``K`` its area, ``r`` a rational parameter.  Exponents are
integers, except that the parameter ``r`` itself may appear as an exponent
(and may be given a non-integer rational value at evaluation time).

A valid center function must be homogeneous (with K counted as degree 2)
and symmetric in b and c; both are checked by exact evaluation at random
rational points.

Evaluation happens in the ring Q(a,b,c)[K] / (K^2 = k2): values are pairs
u + v*K, so quotients with K in the denominator are cleared via
x/(y+z*K) = x*(y-z*K)/(y^2 - z^2*K^2) and a K-free expression never leaves
exact arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from . import scalar as S
from ._backend import Q, is_rational
from .errors import (
    CenterExprError,
    DivisionByZero,
    EvaluationSingular,
    ExprSyntaxError,
    IrrationalInExactMode,
    NegativeRadicand,
    NotHomogeneous,
    NotSymmetric,
)


# --- AST ---------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str  # 'a' | 'b' | 'c' | 'K' | 'r'


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Div:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class PowR:
    """base ** r where r is the evaluation-time parameter."""

    base: "Node"


@dataclass(frozen=True)
class Neg:
    operand: "Node"


Node = Union[Num, Sym, Add, Sub, Mul, Div, Pow, PowR, Neg]


def uses_symbol(node: Node, name: str) -> bool:
    if isinstance(node, Sym):
        return node.name == name
    if isinstance(node, Num):
        return False
    if isinstance(node, (Add, Sub, Mul, Div)):
        return uses_symbol(node.left, name) or uses_symbol(node.right, name)
    if isinstance(node, Pow):
        return uses_symbol(node.base, name)
    if isinstance(node, PowR):
        return name == "r" or uses_symbol(node.base, name)
    if isinstance(node, Neg):
        return uses_symbol(node.operand, name)
    raise TypeError(node)


def to_text(node: Node) -> str:
    """Render a tree back to grammar-conforming text."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Add):
        return f"({to_text(node.left)}+{to_text(node.right)})"
    if isinstance(node, Sub):
        return f"({to_text(node.left)}-{to_text(node.right)})"
    if isinstance(node, Mul):
        return f"({to_text(node.left)}*{to_text(node.right)})"
    if isinstance(node, Div):
        return f"({to_text(node.left)}/{to_text(node.right)})"
    if isinstance(node, Pow):
        e = node.exponent
        return f"{to_text(node.base)}^({e})" if e < 0 else f"{to_text(node.base)}^{e}"
    if isinstance(node, PowR):
        return f"{to_text(node.base)}^r"
    if isinstance(node, Neg):
        return f"(-{to_text(node.operand)})"
    raise TypeError(node)


# --- parser ------------------------------------------------------------

_SYMBOLS = frozenset("abcKr")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> Node:
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.take()
                node = Add(node, self.term())
            elif ch == "-":
                self.take()
                node = Sub(node, self.term())
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.take()
                node = Mul(node, self.factor())
            elif ch == "/":
                self.take()
                node = Div(node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        if self.peek() == "-":
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.peek() == "^":
            self.take()
            return self.exponent(node)
        return node

    def exponent(self, base: Node) -> Node:
        ch = self.peek()
        if ch == "r":
            self.take()
            return PowR(base)
        if ch == "(":
            self.take()
            inner = self.signed_int_or_r(base)
            if self.peek() != ")":
                raise self.error("expected ')' after exponent")
            self.take()
            return inner
        return self.signed_int_or_r(base)

    def signed_int_or_r(self, base: Node) -> Node:
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        ch = self.peek()
        if ch == "r":
            if neg:
                raise self.error("exponent -r is not supported")
            self.take()
            return PowR(base)
        if not ch.isdigit():
            raise self.error("exponent must be an integer or r")
        n = self.integer()
        return Pow(base, -n if neg else n)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected integer")
        return int(self.text[start:self.pos])

    def atom(self) -> Node:
        ch = self.peek()
        if ch == "(":
            self.take()
            node = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.take()
            return node
        if ch.isdigit():
            return Num(self.integer())
        if ch in _SYMBOLS:
            self.take()
            return Sym(ch)
        raise self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")


def parse_text(text: str) -> Node:
    return _Parser(text).parse()


# --- evaluation --------------------------------------------------------

class KValue:
    """Element u + v*K of the quadratic ring with K^2 = k2 (a rational)."""

    __slots__ = ("u", "v", "k2")

    def __init__(self, u, v, k2):
        self.u = u
        self.v = v
        self.k2 = k2

    def _coerce(self, other):
        if isinstance(other, KValue):
            if other.k2 != self.k2:
                raise ValueError("mixing K-rings with different K^2")
            return other
        if is_rational(other) or isinstance(other, S.Interval):
            return KValue(other, Q(0), self.k2)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KValue(self.u + o.u, self.v + o.v, self.k2)

    __radd__ = __add__

    def __neg__(self):
        return KValue(-self.u, -self.v, self.k2)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KValue(self.u - o.u, self.v - o.v, self.k2)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.__sub__(self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return KValue(
            self.u * o.u + self.v * o.v * self.k2,
            self.u * o.v + self.v * o.u,
            self.k2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # multiply by the conjugate: 1/(s + t*K) = (s - t*K)/(s^2 - t^2*k2)
        d = o.u * o.u - o.v * o.v * self.k2
        if S.sign(d) == 0:
            raise EvaluationSingular("denominator norm s^2 - t^2*K^2 vanishes")
        num = self * KValue(o.u, -o.v, self.k2)
        return KValue(S.div(num.u, d), S.div(num.v, d), self.k2)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o.__truediv__(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (Q(1) / self) ** (-n)
        result = KValue(Q(1), Q(0), self.k2)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def is_pure_rational_part(self) -> bool:
        return S.is_exact(self.v) and self.v == 0

    def is_pure_k_part(self) -> bool:
        return S.is_exact(self.u) and self.u == 0

    def __repr__(self):
        return f"KValue({self.u!r} + {self.v!r}*K)"


def _pow_param(base, r, exact: bool, bits: int):
    """base ** r for a rational parameter r; scalar base only."""
    if isinstance(base, KValue):
        if base.is_pure_rational_part():
            base = base.u
        else:
            raise IrrationalInExactMode(
                "parameter exponent applied to a value containing K"
            )
    rn, rd = int(r.numerator), int(r.denominator)
    if rd == 1:
        if rn >= 0:
            return base ** rn
        if S.sign(base) == 0:
            raise EvaluationSingular("negative power of zero")
        return S.div(Q(1), base ** (-rn))
    if S.sign(base) < 0:
        raise NegativeRadicand("fractional power of a negative value")
    powered = base ** abs(rn)
    result = S.root(powered, rd, bits)
    if rn < 0:
        if S.sign(result) == 0:
            raise EvaluationSingular("negative fractional power of zero")
        result = S.div(Q(1), result)
    if exact and not S.is_exact(result):
        raise IrrationalInExactMode(f"{r} power is irrational here")
    return result


def eval_tree(node: Node, env: dict, exact: bool = True, bits: int = S.DEFAULT_BITS):
    """Evaluate a tree over an environment mapping symbols to values.

    env['K'] may be a KValue (the symbolic ring element), a rational, or an
    interval; env['r'] is a rational or absent.
    """
    if isinstance(node, Num):
        return Q(node.value)
    if isinstance(node, Sym):
        try:
            return env[node.name]
        except KeyError:
            raise CenterExprError(f"symbol {node.name} has no value") from None
    if isinstance(node, Add):
        return eval_tree(node.left, env, exact, bits) + eval_tree(node.right, env, exact, bits)
    if isinstance(node, Sub):
        return eval_tree(node.left, env, exact, bits) - eval_tree(node.right, env, exact, bits)
    if isinstance(node, Mul):
        return eval_tree(node.left, env, exact, bits) * eval_tree(node.right, env, exact, bits)
    if isinstance(node, Div):
        num = eval_tree(node.left, env, exact, bits)
        den = eval_tree(node.right, env, exact, bits)
        if isinstance(num, KValue) or isinstance(den, KValue):
            return num / den
        return S.div(num, den)
    if isinstance(node, Pow):
        base = eval_tree(node.base, env, exact, bits)
        n = node.exponent
        if n >= 0:
            return base ** n
        if isinstance(base, KValue):
            return base ** n  # KValue.__pow__ handles the reciprocal
        if S.sign(base) == 0:
            raise EvaluationSingular("negative power of zero")
        return S.div(Q(1), base ** (-n))
    if isinstance(node, PowR):
        base = eval_tree(node.base, env, exact, bits)
        r = env.get("r")
        if r is None:
            raise CenterExprError("expression uses parameter r but no value was given")
        return _pow_param(base, Q(r), exact, bits)
    if isinstance(node, Neg):
        return -eval_tree(node.operand, env, exact, bits)
    raise TypeError(node)


# --- validation --------------------------------------------------------

def _eval_rational_point(node: Node, a, b, c, k, r):
    env = {"a": a, "b": b, "c": c, "K": k}
    if r is not None:
        env["r"] = r
    return eval_tree(node, env, exact=True)


_VALIDATION_SAMPLES = 5
_VALIDATION_RETRIES = 40


def validate_center_function(node: Node, seed: int = 20200806) -> None:
    """Check the two center-function conditions by exact evaluation.

    Symmetry: swapping b and c (K is symmetric) must not change the value.
    Homogeneity: f(t*a, t*b, t*c, t^2*K) must scale by a factor depending
    only on t, checked division-free as f(tA)*f(B) == f(A)*f(tB) on pairs
    of random rational points.  With the parameter r the checks run at a
    few integer values of r.
    """
    rng = random.Random(seed)
    takes_r = uses_symbol(node, "r")
    r_values = (Q(2), Q(3)) if takes_r else (None,)

    def sample():
        return tuple(Q(rng.randint(1, 60), rng.randint(1, 60)) for _ in range(4))

    for r in r_values:
        done_sym = done_hom = 0
        attempts = 0
        while (done_sym < _VALIDATION_SAMPLES or done_hom < _VALIDATION_SAMPLES):
            attempts += 1
            if attempts > _VALIDATION_RETRIES:
                raise CenterExprError(
                    "could not validate: evaluation is singular at nearly all sample points"
                )
            a, b, c, k = sample()
            t = Q(rng.randint(2, 9), rng.randint(1, 5))
            a2, b2, c2, k2 = sample()
            try:
                if done_sym < _VALIDATION_SAMPLES:
                    v1 = _eval_rational_point(node, a, b, c, k, r)
                    v2 = _eval_rational_point(node, a, c, b, k, r)
                    if v1 != v2:
                        raise NotSymmetric(
                            f"not symmetric in b, c: f{(a, b, c)} = {v1} but f{(a, c, b)} = {v2}"
                        )
                    done_sym += 1
                if done_hom < _VALIDATION_SAMPLES:
                    fa = _eval_rational_point(node, a, b, c, k, r)
                    fb = _eval_rational_point(node, a2, b2, c2, k2, r)
                    fta = _eval_rational_point(node, t * a, t * b, t * c, t * t * k, r)
                    ftb = _eval_rational_point(node, t * a2, t * b2, t * c2, t * t * k2, r)
                    if fa == 0 and fb == 0:
                        continue
                    if fta * fb != fa * ftb:
                        raise NotHomogeneous(
                            "not homogeneous (with K of degree 2): scaling by "
                            f"{t} is inconsistent between sample points"
                        )
                    done_hom += 1
            except (DivisionByZero, EvaluationSingular, ZeroDivisionError):
                continue

    # a center function must not vanish identically
    rng2 = random.Random(seed + 1)
    for _ in range(_VALIDATION_RETRIES):
        a, b, c, k = (Q(rng2.randint(1, 60), rng2.randint(1, 60)) for _ in range(4))
        try:
            if _eval_rational_point(node, a, b, c, k, r_values[0]) != 0:
                return
        except (DivisionByZero, EvaluationSingular, ZeroDivisionError):
            continue
    raise CenterExprError("expression vanishes at all sample points; not a center function")


def parse_center_expr(text: str, validate: bool = True) -> Node:
    """Parse and (by default) validate a center-function expression."""
    node = parse_text(text)
    if validate:
        validate_center_function(node)
    return node
