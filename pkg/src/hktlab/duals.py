"""Forward-mode dual numbers, nested for higher derivatives.

A Dual carries (val, dot, level) where val and dot may hold ordinary
numbers or Duals from an enclosing differentiation level.  Every seeding
takes a fresh level from a global counter, and arithmetic treats a Dual
of lower level as a constant of the higher one; without the tag, an
inner and an outer seed would alias into the same infinitesimal and
first-derivative values would contaminate second derivatives whenever a
point-dependent coefficient sits between the two levels.

Derivatives are taken along real coordinate directions only, so conj and
re/im act slotwise and remain valid operations.
"""

from __future__ import annotations

import cmath
import itertools
import math

_levels = itertools.count(1)


def fresh_level() -> int:
    """A level id no live Dual carries yet; one per seeding."""
    return next(_levels)


class Dual:
    __slots__ = ("val", "dot", "level")

    def __init__(self, val, dot=0.0, level=0):
        self.val = val
        self.dot = dot
        self.level = level

    def __repr__(self):
        return f"Dual({self.val!r}, {self.dot!r}, level={self.level})"

    def __add__(self, other):
        if isinstance(other, Dual):
            if other.level > self.level:
                return Dual(self + other.val, other.dot, other.level)
            if other.level == self.level:
                return Dual(self.val + other.val, self.dot + other.dot,
                            self.level)
        return Dual(self.val + other, self.dot, self.level)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.val, -self.dot, self.level)

    def __sub__(self, other):
        if isinstance(other, Dual):
            if other.level > self.level:
                return Dual(self - other.val, -other.dot, other.level)
            if other.level == self.level:
                return Dual(self.val - other.val, self.dot - other.dot,
                            self.level)
        return Dual(self.val - other, self.dot, self.level)

    def __rsub__(self, other):
        return Dual(other - self.val, -self.dot, self.level)

    def __mul__(self, other):
        if isinstance(other, Dual):
            if other.level > self.level:
                return Dual(self * other.val, self * other.dot, other.level)
            if other.level == self.level:
                return Dual(self.val * other.val,
                            self.val * other.dot + self.dot * other.val,
                            self.level)
        return Dual(self.val * other, self.dot * other, self.level)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            if other.level > self.level:
                v = other.val
                return Dual(self / v, -self * other.dot / (v * v),
                            other.level)
            if other.level == self.level:
                v = other.val
                return Dual(self.val / v,
                            (self.dot * v - self.val * other.dot) / (v * v),
                            self.level)
        return Dual(self.val / other, self.dot / other, self.level)

    def __rtruediv__(self, other):
        v = self.val
        return Dual(other / v, -other * self.dot / (v * v), self.level)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        if n < 0:
            return (1.0 / self) ** (-n)
        out = 1.0
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out if isinstance(out, Dual) else Dual(out, 0.0, self.level)


def numeric(x):
    """Strip every dual layer, returning the underlying number."""
    while isinstance(x, Dual):
        x = x.val
    return x


def dot_part(x, level):
    """Derivative of x along the seed with the given level, else 0."""
    if isinstance(x, Dual) and x.level == level:
        return x.dot
    return 0.0


def val_part(x, level):
    if isinstance(x, Dual) and x.level == level:
        return x.val
    return x


def dconj(x):
    if isinstance(x, Dual):
        return Dual(dconj(x.val), dconj(x.dot), x.level)
    return x.conjugate()


def dre(x):
    if isinstance(x, Dual):
        return Dual(dre(x.val), dre(x.dot), x.level)
    return x.real


def dimag(x):
    if isinstance(x, Dual):
        return Dual(dimag(x.val), dimag(x.dot), x.level)
    return x.imag


def dabs2(x):
    """|x|^2 as a real-valued quantity, dual-aware."""
    return dre(x * dconj(x))


def dlog(x):
    if isinstance(x, Dual):
        return Dual(dlog(x.val), x.dot / x.val, x.level)
    if isinstance(x, complex):
        return cmath.log(x)
    return math.log(x)


def dexp(x):
    if isinstance(x, Dual):
        e = dexp(x.val)
        return Dual(e, e * x.dot, x.level)
    if isinstance(x, complex):
        return cmath.exp(x)
    return math.exp(x)


def seed_unit(coords, i, level):
    """Copy of coords with slot i seeded for d/dx_i at the given level."""
    out = list(coords)
    out[i] = Dual(out[i], 1.0, level)
    return out
