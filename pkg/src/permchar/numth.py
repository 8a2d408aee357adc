"""Small exact number-theory helpers used across the package.

Everything here is deterministic and integer-exact; no floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2^64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Prime factorization as {p: multiplicity}; factorint(1) == {}."""
    return dict(_factorint_cached(n))


@lru_cache(maxsize=None)
def _factorint_cached(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return tuple(out.items())


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n)))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, a in factorint(n).items():
        ds = [d * p**i for d in ds for i in range(a + 1)]
    return sorted(ds)


def euler_phi(n: int) -> int:
    out = 1
    for p, a in factorint(n).items():
        out *= (p - 1) * p ** (a - 1)
    return out


def pi_part(n: int, pi: frozenset[int]) -> int:
    """Largest divisor of n whose prime factors all lie in pi."""
    out = 1
    for p, a in factorint(n).items():
        if p in pi:
            out *= p**a
    return out


def pi_prime_part(n: int, pi: frozenset[int]) -> int:
    return n // pi_part(n, pi)


def is_pi_number(n: int, pi: frozenset[int]) -> bool:
    return pi_part(n, pi) == n


def parse_pi(text: str) -> frozenset[int]:
    """Parse a comma-separated prime list like '2,3'; rejects non-primes."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty prime set")
    primes = set()
    for part in parts:
        value = int(part)
        if not is_prime(value):
            raise ValueError(f"{value} is not prime")
        primes.add(value)
    return frozenset(primes)


def crt(residues: dict[int, int]) -> int:
    """Combine residues {modulus: value} with pairwise-coprime moduli."""
    n = math.prod(residues) if residues else 1
    x = 0
    for m, r in residues.items():
        q = n // m
        x += r * q * pow(q, -1, m)
    return x % n


def smallest_primitive_root(p: int) -> int:
    """Smallest primitive root mod an odd prime p."""
    order_factors = prime_divisors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in order_factors):
            return g
    raise ValueError(f"no primitive root found mod {p}")


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo an odd prime p (Tonelli-Shanks).

    Raises ValueError when a is a non-residue.
    """
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected exact rational, got {type(x).__name__}")
