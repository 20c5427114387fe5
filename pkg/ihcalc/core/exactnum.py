"""
Exact integer and rational arithmetic.

Integers are Python ``int`` (arbitrary precision, sign-magnitude) and rationals
are ``fractions.Fraction``, which keeps every value normalized: positive
denominator, coprime numerator and denominator, and zero as 0/1.
"""
import math
import operator
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from ..utils.exceptions import DivisionByZeroError

Int = int
Rat = Fraction

_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RAT_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


def gcd(a: Int, b: Int) -> Int:
    """Nonnegative greatest common divisor; gcd(0, 0) = 0."""
    return math.gcd(a, b)


def lcm(a: Int, b: Int) -> Int:
    """Nonnegative least common multiple; lcm(0, x) = 0."""
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // math.gcd(a, b)


def xgcd(a: Int, b: Int) -> tuple[Int, Int, Int]:
    """
    Extended Euclid.

    Returns (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def rat_arith(a: Rat, b: Rat, op: str) -> Rat:
    """
    Exact field arithmetic on two rationals.

    Args:
        a: left operand
        b: right operand
        op: one of ``add``, ``sub``, ``mul``, ``div``

    Raises:
        DivisionByZeroError: for ``div`` with b = 0
    """
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation: {op}") from None
    if op == "div" and b == 0:
        raise DivisionByZeroError(f"cannot divide {format_rat(Fraction(a))} by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def content(values: Iterable[Int]) -> Int:
    """gcd of all values (0 for an empty or all-zero list)."""
    return reduce(math.gcd, values, 0)


def clear_denominators(v: Sequence[Rat]) -> tuple[list[Int], Rat]:
    """
    Scale a rational vector to a primitive integer vector.

    Returns (w, d) with d > 0 and w = d * v exactly. d starts as the lcm of
    the denominators and is divided by the content of the scaled vector, so
    for a nonzero v the entries of w are jointly coprime (and d may then be
    fractional). The zero vector gives (0..., 1).
    """
    v = [Fraction(x) for x in v]
    d = reduce(lcm, (x.denominator for x in v), 1)
    w = [int(x * d) for x in v]
    g = content(w)
    if g > 1:
        return [x // g for x in w], Fraction(d, g)
    return w, Fraction(d)


def parse_rat(text: str) -> Rat:
    """
    Parse ``p`` or ``p/q``.

    Raises:
        ValueError: on malformed text
        DivisionByZeroError: when q = 0
    """
    m = _RAT_PATTERN.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZeroError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rat(q: Rat) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
