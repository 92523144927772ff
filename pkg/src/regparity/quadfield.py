"""Arithmetic in the imaginary quadratic orders Z[i] and Z[sqrt(-3)].

QuadInt holds x + y*sqrt(-d) for d in {1, 3} with exact integer
components.  Besides the ring operations this module provides:

  represent(n, d)        -- every integer solution of x^2 + d*y^2 = n
  normalize_gaussian(a)  -- the associate of a Gaussian integer of odd
                            norm congruent to 1 mod 2Z[i], canonical sign
  normalize_sqrt3(a)     -- for norm coprime to 6, the unique associate
                            x + y*sqrt(-3) with x, y integers, x+y odd
                            and x = 1 mod 3

For d = 3 the unit group of the maximal order has six elements, four of
which have half-integer coordinates; associates are enumerated in doubled
coordinates and only integral results are eligible, so no half-integer
value ever escapes this module.
"""

from dataclasses import dataclass
from math import isqrt

__all__ = ["QuadInt", "represent", "normalize_gaussian", "normalize_sqrt3"]


@dataclass(frozen=True)
class QuadInt:
    """x + y*sqrt(-d) with integer x, y and d in {1, 3}."""

    x: int
    y: int
    d: int

    def __post_init__(self):
        if self.d not in (1, 3):
            raise ValueError("d must be 1 or 3")

    def _check(self, other):
        if self.d != other.d:
            raise ValueError("mixed discriminants")

    def __add__(self, other):
        if isinstance(other, int):
            other = QuadInt(other, 0, self.d)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        return QuadInt(self.x + other.x, self.y + other.y, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.x, -self.y, self.d)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QuadInt(other, 0, self.d)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        return QuadInt(self.x - other.x, self.y - other.y, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.x * other, self.y * other, self.d)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        return QuadInt(
            self.x * other.x - self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = QuadInt(1, 0, self.d)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conj(self):
        return QuadInt(self.x, -self.y, self.d)

    def norm(self):
        return self.x * self.x + self.d * self.y * self.y

    def __repr__(self):
        return f"QuadInt({self.x}, {self.y}, d={self.d})"


def represent(n, d):
    """All (x, y) in Z^2 with x^2 + d*y^2 = n, n >= 1.

    Signs (and, for d = 1, coordinate swaps) are included; the list is
    sorted for reproducible output and empty when no representation
    exists.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if d not in (1, 3):
        raise ValueError("d must be 1 or 3")
    found = set()
    for y in range(isqrt(n // d) + 1):
        x2 = n - d * y * y
        x = isqrt(x2)
        if x * x == x2:
            found.update({(x, y), (x, -y), (-x, y), (-x, -y)})
    return sorted(found)


def normalize_gaussian(a):
    """Associate of a (d = 1, odd norm) with x odd, y even, and x > 0.

    Exactly two of the four unit multiples {a, ia, -a, -ia} satisfy the
    parity condition and they differ by sign, so their common square is
    independent of the choice; x > 0 picks a canonical one.
    """
    if a.d != 1:
        raise ValueError("normalize_gaussian needs d = 1")
    if a.norm() % 2 == 0:
        raise ValueError("no odd associate: norm is even")
    candidates = [a, QuadInt(-a.y, a.x, 1), -a, QuadInt(a.y, -a.x, 1)]
    for c in candidates:
        if c.x % 2 != 0 and c.y % 2 == 0 and c.x > 0:
            return c
    raise AssertionError("unreachable: odd norm always has such an associate")


# The six units of the maximal order containing Z[sqrt(-3)], written as
# (u1 + u2*sqrt(-3)) / 2.
_UNITS_HALVED = ((2, 0), (-2, 0), (1, 1), (-1, -1), (-1, 1), (1, -1))


def normalize_sqrt3(a):
    """The unique associate x + y*sqrt(-3), x, y in Z, with x + y odd and
    x = 1 (mod 3).  Requires norm(a) coprime to 6."""
    if a.d != 3:
        raise ValueError("normalize_sqrt3 needs d = 3")
    if a.norm() % 2 == 0 or a.norm() % 3 == 0:
        raise ValueError("norm must be coprime to 6")
    hits = []
    for u1, u2 in _UNITS_HALVED:
        px = u1 * a.x - 3 * u2 * a.y
        py = u1 * a.y + u2 * a.x
        if px % 2 == 0 and py % 2 == 0:
            x, y = px // 2, py // 2
            if (x + y) % 2 == 1 and x % 3 == 1:
                hits.append(QuadInt(x, y, 3))
    if len(hits) != 1:
        raise AssertionError(f"normal form not unique for {a}: {hits}")
    return hits[0]
