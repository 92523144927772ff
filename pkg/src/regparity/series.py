"""Truncated formal power series over Z, Z/p, and GF(2).

Series are plain q-expansions with integer exponents: an offset (the
exponent of the first stored coefficient), a dense coefficient block, and
a truncation order.  Coefficients beyond the order are unspecified and
asking for one raises TruncationError rather than returning garbage.

Three representations:

  IntSeries  -- arbitrary-precision integer coefficients.
  ModSeries  -- coefficients reduced into [0, p); multiplication packs
                both operands into single big integers (Kronecker
                substitution) so the convolution runs in C.
  BitSeries  -- GF(2) coefficients bit-packed into one Python int.
                Multiplication is shift-XOR over the sparser operand;
                squaring spreads bits (q^k -> q^2k in characteristic 2),
                which makes Newton inversion of the Euler product cheap
                even at order 10^6.

The generating-function constructors (pentagonal_series, eta_power_coeffs,
regular_partition_series and the bit-packed parity variants) all build on
the sparse pentagonal-number support of prod(1-q^m).
"""

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "TruncationError",
    "IntSeries",
    "ModSeries",
    "BitSeries",
    "pentagonal_numbers",
    "pentagonal_series",
    "eta_power_coeffs",
    "regular_partition_series",
    "rescale",
    "series_pow_mod_p",
    "brute_force_b_ell",
    "brute_force_b_ell_table",
    "partition_parity_bits",
    "regular_partition_parity_series",
    "eta_power_parity",
]


class TruncationError(Exception):
    """A coefficient beyond the valid truncation order was requested."""


def _nonzero_count(coeffs):
    return sum(1 for c in coeffs if c)


@dataclass(frozen=True)
class IntSeries:
    """q-expansion with exact integer coefficients.

    coeffs[i] is the coefficient of q^(offset+i); coefficients of q^m for
    m > order are unspecified.
    """

    offset: int
    coeffs: tuple
    order: int

    def __post_init__(self):
        expected = self.order - self.offset + 1
        if len(self.coeffs) != max(expected, 0):
            raise ValueError("coefficient block does not match offset/order")

    def coeff(self, m):
        """Coefficient of q^m.  Exponents below the offset are zero;
        exponents beyond the order raise TruncationError."""
        if m > self.order:
            raise TruncationError(f"q^{m} beyond valid order {self.order}")
        if m < self.offset:
            return 0
        return self.coeffs[m - self.offset]

    def coeff_list(self, up_to=None):
        """Coefficients of q^0 .. q^up_to as a list (default: full order)."""
        n = self.order if up_to is None else up_to
        return [self.coeff(m) for m in range(n + 1)]

    def __add__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        off = min(self.offset, other.offset)
        order = min(self.order, other.order)
        if order < off:
            return IntSeries(off, (), off - 1)
        out = [0] * (order - off + 1)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                m = s.offset + i
                if m > order:
                    break
                out[m - off] += c
        return IntSeries(off, tuple(out), order)

    def __neg__(self):
        return IntSeries(self.offset, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        off = self.offset + other.offset
        # unknown tail of one factor first pollutes exponents above
        # (its order) + (other factor's offset)
        order = min(self.order + other.offset, other.order + self.offset)
        n_out = order - off + 1
        if n_out <= 0:
            return IntSeries(off, (), off - 1)
        a, b = self.coeffs, other.coeffs
        if _nonzero_count(a) > _nonzero_count(b):
            a, b = b, a
        out = [0] * n_out
        for i, ai in enumerate(a):
            if ai and i < n_out:
                hi = min(len(b), n_out - i)
                for j in range(hi):
                    out[i + j] += ai * b[j]
        return IntSeries(off, tuple(out), order)

    def power(self, e):
        """e-th power (e >= 0), truncated like repeated multiplication."""
        if e < 0:
            raise ValueError("negative power")
        result = IntSeries(0, (1,) + (0,) * (self.order - self.offset), self.order - self.offset)
        for _ in range(e):
            result = result * self
        return result

    def rescale(self, k):
        """Substitute q -> q^k (k >= 1)."""
        if k < 1:
            raise ValueError("rescale factor must be >= 1")
        if k == 1:
            return self
        out = [0] * (k * (self.order - self.offset) + 1) if self.coeffs else ()
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntSeries(k * self.offset, tuple(out), k * self.order)

    def shift(self, k):
        """Multiply by q^k (integer k, offset bookkeeping only)."""
        return IntSeries(self.offset + k, self.coeffs, self.order + k)

    def reduce_mod(self, p):
        """Reduce coefficients into [0, p)."""
        if p < 2:
            raise ValueError("modulus must be >= 2")
        return ModSeries(p, self.offset, tuple(c % p for c in self.coeffs), self.order)

    def parity_bits(self):
        """Reduce mod 2 into a BitSeries."""
        bits = 0
        for i, c in enumerate(self.coeffs):
            if c & 1:
                bits |= 1 << i
        return BitSeries(self.offset, bits, self.order)


@dataclass(frozen=True)
class ModSeries:
    """q-expansion with coefficients reduced modulo a small prime p."""

    p: int
    offset: int
    coeffs: tuple
    order: int

    def coeff(self, m):
        if m > self.order:
            raise TruncationError(f"q^{m} beyond valid order {self.order}")
        if m < self.offset:
            return 0
        return self.coeffs[m - self.offset]

    def __mul__(self, other):
        if not isinstance(other, ModSeries):
            return NotImplemented
        if self.p != other.p:
            raise ValueError("mixed moduli")
        off = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        n_out = order - off + 1
        if n_out <= 0:
            return ModSeries(self.p, off, (), off - 1)
        out = _kronecker_mul(self.coeffs, other.coeffs, self.p, n_out)
        return ModSeries(self.p, off, tuple(out), order)

    def power(self, e):
        """e-th power by binary exponentiation (e >= 1)."""
        if e < 1:
            raise ValueError("power must be >= 1")
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def to_bits(self):
        if self.p != 2:
            raise ValueError("only p = 2 converts to BitSeries")
        bits = 0
        for i, c in enumerate(self.coeffs):
            if c:
                bits |= 1 << i
        return BitSeries(self.offset, bits, self.order)


def _kronecker_mul(a, b, p, n_out):
    """Convolution of residue vectors via one big-int multiply."""
    if not a or not b:
        return [0] * n_out
    carry_bound = (p - 1) * (p - 1) * min(len(a), len(b))
    limb_bytes = (carry_bound.bit_length() + 8) // 8
    abuf = b"".join(c.to_bytes(limb_bytes, "little") for c in a)
    bbuf = b"".join(c.to_bytes(limb_bytes, "little") for c in b)
    prod = int.from_bytes(abuf, "little") * int.from_bytes(bbuf, "little")
    pbuf = prod.to_bytes(limb_bytes * (len(a) + len(b)), "little")
    out = []
    for k in range(n_out):
        limb = int.from_bytes(pbuf[k * limb_bytes : (k + 1) * limb_bytes], "little")
        out.append(limb % p)
    return out


# ----------------------------------------------------------------------
# GF(2) series, bit-packed into a single int
# ----------------------------------------------------------------------


def _clmul(a, b):
    """Carryless product of bit-packed polynomials over GF(2)."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


@lru_cache(maxsize=None)
def _spread_masks(width):
    """Masks for interleaving zeros into a width-bit int (width = 2^k)."""
    masks = []
    total = 2 * width
    ones = (1 << total) - 1
    s = width >> 1
    while s:
        rep = ones // ((1 << (2 * s)) - 1)
        masks.append((s, rep * ((1 << s) - 1)))
        s >>= 1
    return masks

def _spread(x):
    """Send bit i of x to bit 2i (GF(2) squaring)."""
    if x == 0:
        return 0
    n = x.bit_length()
    width = 1 << max((n - 1).bit_length(), 0)
    for s, mask in _spread_masks(width):
        x = (x | (x << s)) & mask
    return x


def _bit_inverse(f, nbits):
    """Inverse of f in GF(2)[[q]] to nbits coefficients (f(0) = 1).

    Newton step in characteristic 2: g <- f * g^2, doubling precision.
    """
    if not f & 1:
        raise ValueError("constant term must be 1")
    g, prec = 1, 1
    while prec < nbits:
        prec = min(2 * prec, nbits)
        mask = (1 << prec) - 1
        g = _clmul(f & mask, _spread(g) & mask) & mask
    return g


@dataclass(frozen=True)
class BitSeries:
    """q-expansion over GF(2); bit i of bits = coefficient of q^(offset+i)."""

    offset: int
    bits: int
    order: int

    def coeff(self, m):
        if m > self.order:
            raise TruncationError(f"q^{m} beyond valid order {self.order}")
        if m < self.offset:
            return 0
        return (self.bits >> (m - self.offset)) & 1

    def __add__(self, other):
        if not isinstance(other, BitSeries):
            return NotImplemented
        off = min(self.offset, other.offset)
        order = min(self.order, other.order)
        bits = (self.bits << (self.offset - off)) ^ (other.bits << (other.offset - off))
        bits &= (1 << (order - off + 1)) - 1
        return BitSeries(off, bits, order)

    def __mul__(self, other):
        if not isinstance(other, BitSeries):
            return NotImplemented
        off = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        if order < off:
            return BitSeries(off, 0, order)
        bits = _clmul(self.bits, other.bits) & ((1 << (order - off + 1)) - 1)
        return BitSeries(off, bits, order)

    def square(self):
        """Square in GF(2): coefficients move from q^k to q^2k."""
        return BitSeries(2 * self.offset, _spread(self.bits), 2 * self.order + 1)


# ----------------------------------------------------------------------
# Generating functions
# ----------------------------------------------------------------------


def pentagonal_numbers(limit):
    """(generalized pentagonal number g, parity sign) for 0 < g <= limit.

    g = k(3k-1)/2 over k = 1, -1, 2, -2, ...; the attached sign is (-1)^k.
    """
    out = []
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        sign = -1 if k & 1 else 1
        if g1 > limit:
            break
        out.append((g1, sign))
        if g2 <= limit:
            out.append((g2, sign))
        k += 1
    return out


def pentagonal_series(order):
    """prod_{m>=1} (1 - q^m) truncated at q^order.

    Nonzero coefficients sit exactly at the generalized pentagonal numbers
    k(3k-1)/2 with value (-1)^k.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for g, sign in pentagonal_numbers(order):
        coeffs[g] = sign
    return IntSeries(0, tuple(coeffs), order)


def eta_power_coeffs(r, order):
    """prod_{m>=1} (1 - q^m)^r truncated at q^order, exact integers.

    Built by repeated multiplication against the sparse pentagonal base;
    callers track the formal q^(r/24) prefactor themselves.
    """
    if r < 1:
        raise ValueError("exponent must be >= 1")
    base = pentagonal_series(order)
    result = base
    for _ in range(r - 1):
        result = result * base
    return result


def regular_partition_series(ell, order):
    """Counts of ell-regular partitions: sum_n b_ell(n) q^n to q^order.

    Computed as prod (1 - q^(ell*m)) / prod (1 - q^m), dividing through
    the sparse pentagonal support.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if order < 0:
        raise ValueError("order must be >= 0")
    numer = [0] * (order + 1)
    numer[0] = 1
    for g, sign in pentagonal_numbers(order // ell):
        numer[ell * g] = sign
    shifts = pentagonal_numbers(order)
    out = [0] * (order + 1)
    for n in range(order + 1):
        acc = numer[n]
        for g, sign in shifts:
            if g > n:
                break
            acc -= sign * out[n - g]
        out[n] = acc
    return IntSeries(0, tuple(out), order)


def rescale(s, k):
    """Substitute q -> q^k in an IntSeries."""
    return s.rescale(k)


def series_pow_mod_p(s, exponent, p, order):
    """(s mod p)^exponent truncated at q^order, coefficients in [0, p)."""
    if p < 2:
        raise ValueError("modulus must be >= 2")
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    reduced = s.reduce_mod(p)
    powered = reduced.power(exponent)
    if powered.order < order:
        raise TruncationError(
            f"input order supports q^{powered.order}, need q^{order}"
        )
    hi = order - powered.offset + 1
    return ModSeries(p, powered.offset, powered.coeffs[:max(hi, 0)], order)


def brute_force_b_ell_table(ell, n):
    """b_ell(0..n) by dynamic programming over parts not divisible by ell."""
    if ell < 2:
        raise ValueError("ell must be >= 2")
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1):
        if part % ell == 0:
            continue
        for v in range(part, n + 1):
            ways[v] += ways[v - part]
    return ways


def brute_force_b_ell(ell, n):
    """Number of partitions of n with no part divisible by ell."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return brute_force_b_ell_table(ell, n)[n]


# ----------------------------------------------------------------------
# Bit-packed parity routes
# ----------------------------------------------------------------------


def _pentagonal_bits(order, scale=1):
    """Bit-packed prod (1 - q^(scale*m)) mod 2 to q^order."""
    bits = 1
    for g, _ in pentagonal_numbers(order // scale):
        bits |= 1 << (scale * g)
    return bits


def partition_parity_bits(order):
    """Parities of the unrestricted partition numbers p(0..order)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return BitSeries(0, _bit_inverse(_pentagonal_bits(order), order + 1), order)


def regular_partition_parity_series(ell, order):
    """sum b_ell(n) q^n mod 2, bit-packed.

    Same Euler quotient as regular_partition_series, but the division is a
    Newton inversion on GF(2) bits, so order ~10^5 costs milliseconds.
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if order < 0:
        raise ValueError("order must be >= 0")
    mask = (1 << (order + 1)) - 1
    inv = _bit_inverse(_pentagonal_bits(order), order + 1)
    bits = _clmul(_pentagonal_bits(order, scale=ell), inv) & mask
    return BitSeries(0, bits, order)


def eta_power_parity(r, order):
    """prod (1 - q^m)^r mod 2, bit-packed.

    Uses Frobenius: P^(2^t)(q) = P(q^(2^t)) in characteristic 2, so P^r is
    a short product of sparse rescaled pentagonal series.
    """
    if r < 1:
        raise ValueError("exponent must be >= 1")
    mask = (1 << (order + 1)) - 1
    acc = 1
    t = 0
    rr = r
    while rr:
        if rr & 1:
            acc = _clmul(acc, _pentagonal_bits(order, scale=1 << t)) & mask
        rr >>= 1
        t += 1
    return BitSeries(0, acc, order)
