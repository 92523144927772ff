"""Integer factorization, deterministic primality, and square detection.

Everything here works on plain Python integers.  Factorization is a
three-stage pipeline: trial division by primes below 1000, then a
deterministic Miller-Rabin test, then Pollard rho with Brent cycle
detection and a deterministic restart schedule, so identical inputs
always factor identically.
"""

from dataclasses import dataclass
from math import gcd, isqrt, prod
import random

__all__ = [
    "Factorization",
    "FactorWidthError",
    "factor",
    "is_prime",
    "integer_sqrt",
    "primes_below",
]

# Inputs to factor() must fit an unsigned 64-bit word.  is_prime and
# integer_sqrt accept anything.
FACTOR_WIDTH_BITS = 64

# Deterministic Miller-Rabin witnesses; this set is known to be correct
# for all n < 3_317_044_064_679_887_385_961_981 (> 2**64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981


class FactorWidthError(ValueError):
    """Input too wide for the factorization pipeline."""


def _small_prime_sieve(limit):
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [p for p in range(limit) if sieve[p]]


_TRIAL_PRIMES = _small_prime_sieve(1000)


def primes_below(limit):
    """All primes < limit, ascending."""
    if limit <= 2:
        return []
    return _small_prime_sieve(limit)


def is_prime(n):
    """Deterministic primality test.

    Correct for every n below ~3.3e24 (covers 64-bit); beyond that the
    same witness set is used and is not known to fail, but callers that
    need certainty there should stay inside the supported width.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def integer_sqrt(n):
    """Return (floor(sqrt(n)), n is a perfect square)."""
    if n < 0:
        raise ValueError("negative input")
    r = isqrt(n)
    return r, r * r == n


def _brent_rho(n, attempt):
    """One Pollard-rho round (Brent variant); returns a nontrivial factor
    or None.  The RNG is seeded from (n, attempt) so runs are reproducible.
    """
    if n % 2 == 0:
        return 2
    rng = random.Random(n * 0x9E3779B97F4A7C15 + attempt)
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
    if g == n:
        # backtrack one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    return g if g != n else None


def _factor_core(n, out):
    """Append the prime factors of n (with multiplicity) to out."""
    if n == 1:
        return
    if is_prime(n):
        out.append(n)
        return
    r, exact = integer_sqrt(n)
    if exact:
        _factor_core(r, out)
        _factor_core(r, out)
        return
    d = None
    attempt = 0
    while d is None:
        d = _brent_rho(n, attempt)
        attempt += 1
    _factor_core(d, out)
    _factor_core(n // d, out)


@dataclass(frozen=True)
class Factorization:
    """Sorted prime factorization: pairs of (prime, exponent), p strictly
    increasing, every exponent >= 1."""

    pairs: tuple

    def value(self):
        """Reconstruct the factored integer."""
        return prod(p**e for p, e in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def factor(n):
    """Complete prime factorization of n >= 1.

    factor(1) is the empty factorization.  Rejects n = 0 and inputs wider
    than FACTOR_WIDTH_BITS.
    """
    if n < 1:
        raise ValueError("factor() requires n >= 1")
    if n.bit_length() > FACTOR_WIDTH_BITS:
        raise FactorWidthError(
            f"{n} exceeds the supported {FACTOR_WIDTH_BITS}-bit width"
        )
    pairs = []
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            pairs.append((p, e))
    if n > 1:
        rest = []
        _factor_core(n, rest)
        rest.sort()
        i = 0
        while i < len(rest):
            j = i
            while j < len(rest) and rest[j] == rest[i]:
                j += 1
            pairs.append((rest[i], j - i))
            i = j
    pairs.sort()
    return Factorization(tuple(pairs))
