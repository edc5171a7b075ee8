"""Exact rational scalars, vectors and matrices.

Scalars are `fractions.Fraction` (always lowest terms, positive denominator).
Vectors are tuples of Fractions, matrices are tuples of row vectors.  All
operations here are total and exact; nothing in this module ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rat = Fraction
RVec = tuple[Fraction, ...]
RMat = tuple[RVec, ...]

RatLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


_RAT_RE = None


def rat(x: RatLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact rational.

    String literals are restricted to integers and fractions; decimal or
    exponent notation is rejected so no float ever sneaks in.
    """
    global _RAT_RE
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        if _RAT_RE is None:
            import re

            _RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
        s = x.strip()
        if not _RAT_RE.match(s):
            raise ValueError(f"not a rational literal: {x!r}")
        return Fraction(s)
    raise TypeError(f"not a rational literal: {x!r}")


def fmt(q: Fraction) -> str:
    """Serialize a rational as a decimal-free "p/q" (or "p") string."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(xs: Iterable[RatLike]) -> RVec:
    return tuple(rat(x) for x in xs)


def mat(rows: Iterable[Iterable[RatLike]]) -> RMat:
    return tuple(vec(r) for r in rows)


def zero_vec(n: int) -> RVec:
    return (ZERO,) * n


def unit_vec(n: int, j: int) -> RVec:
    return tuple(ONE if i == j else ZERO for i in range(n))


def vadd(a: RVec, b: RVec) -> RVec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: RVec, b: RVec) -> RVec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: RVec) -> RVec:
    return tuple(-x for x in a)


def vscale(c: RatLike, a: RVec) -> RVec:
    c = rat(c)
    return tuple(c * x for x in a)


def vabs(a: RVec) -> RVec:
    return tuple(abs(x) for x in a)


def vmax(a: RVec, b: RVec) -> RVec:
    return tuple(x if x >= y else y for x, y in zip(a, b, strict=True))


def dot(a: RVec, b: RVec) -> Fraction:
    s = ZERO
    for x, y in zip(a, b, strict=True):
        if x and y:
            s += x * y
    return s


def mat_vec(m: RMat, v: RVec) -> RVec:
    return tuple(dot(row, v) for row in m)


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def first_nonzero(a: Sequence[Fraction]) -> int:
    """Index of the first nonzero entry, or -1 for the zero vector."""
    for i, x in enumerate(a):
        if x != 0:
            return i
    return -1


def canonical_ray(a: RVec) -> RVec:
    """Positive scaling so the first nonzero coordinate is +-1.

    Only positive scalings preserve a ray's direction, so the first nonzero
    coordinate keeps its sign; equality of generator lists stays
    deterministic.
    """
    i = first_nonzero(a)
    if i < 0:
        return a
    return vscale(1 / abs(a[i]), a)


def primitive_int_vec(a: RVec) -> tuple[int, ...]:
    """Positive multiple of `a` with coprime integer entries.

    Used for fast integer dot products on hot paths; the scaling is a
    positive rational, so signs and zero patterns are preserved.
    """
    if is_zero_vec(a):
        return (0,) * len(a)
    denom_lcm = 1
    for x in a:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)
