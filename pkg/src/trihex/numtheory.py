"""Exact integer factorization, divisors, and roots of x^2 + x + 1 modulo n.

Everything here is exact integer arithmetic.  The only nontrivial fact used
is that the number of roots of x^2 + x + 1 (mod n) is multiplicative in n
and fully determined by the prime factorization: 0 as soon as a prime
congruent to 2 (mod 3) divides n or 9 divides n, otherwise 2^r where r is
the number of distinct prime factors other than 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InternalInconsistencyError

# Largest modulus for which x*x + x + 1 with x < n fits in int64; above it
# the vectorized scans fall back to exact Python integers.
_NP_SCAN_LIMIT = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        product = 1
        previous = 0
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError(f"primes must be strictly increasing: {self.factors}")
            if exponent < 1:
                raise ValueError(f"exponents must be >= 1: {self.factors}")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            previous = prime
            product *= prime**exponent
        if product != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")

    def exponent(self, prime: int) -> int:
        """Exponent of `prime` in n (0 if it does not divide n)."""
        for p, k in self.factors:
            if p == prime:
                return k
        return 0


@dataclass(frozen=True)
class CongruenceSolutions:
    """All residues x in [0, n) with x^2 + x + 1 divisible by n."""

    modulus: int
    roots: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        previous = -1
        for x in self.roots:
            if not 0 <= x < self.modulus:
                raise ValueError(f"root {x} out of range [0, {self.modulus})")
            if x <= previous:
                raise ValueError(f"roots must be strictly increasing: {self.roots}")
            if (x * x + x + 1) % self.modulus != 0:
                raise ValueError(f"{x} does not solve the congruence mod {self.modulus}")
            previous = x


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    remaining = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            k = 0
            while remaining % p == 0:
                remaining //= p
                k += 1
            factors.append((p, k))
        p += 1 if p == 2 else 2
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(n, tuple(factors))


def divisors(f: Factorization) -> list[int]:
    """All divisors of f.n, ascending."""
    result = [1]
    for prime, exponent in f.factors:
        powers = [prime**i for i in range(exponent + 1)]
        result = [d * q for d in result for q in powers]
    return sorted(result)


def omega_count(f: Factorization) -> int:
    """Number of roots of x^2 + x + 1 (mod f.n), from the factorization alone."""
    r = 0
    for prime, exponent in f.factors:
        if prime % 3 == 2:
            return 0
        if prime == 3:
            if exponent > 1:
                return 0
        else:
            r += 1
    return 2**r


def solve_naive(n: int) -> CongruenceSolutions:
    """Roots of x^2 + x + 1 (mod n) by scanning every residue class."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n <= _NP_SCAN_LIMIT:
        x = np.arange(n, dtype=np.int64)
        values = x * x
        values += x
        values += 1
        values %= n
        roots = tuple(int(r) for r in np.flatnonzero(values == 0))
    else:
        roots = tuple(x for x in range(n) if (x * x + x + 1) % n == 0)
    return CongruenceSolutions(n, roots)


def lift_prime_power(p: int, root: int, ell: int) -> int:
    """Lift a root of x^2 + x + 1 mod p to the unique root mod p^ell above it.

    At each step x is adjusted by m * p^k where m cancels the current defect:
    with x^2 + x + 1 = j * p^k, choose m so that m * (2x + 1) + j is divisible
    by p.  2x + 1 is invertible mod p because p != 3.
    """
    if p == 3:
        raise ValueError("lifting is not defined for p = 3")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    root %= p
    if (root * root + root + 1) % p != 0:
        raise ValueError(f"{root} does not solve the congruence mod {p}")
    x = root
    pk = p
    for _ in range(ell - 1):
        j = (x * x + x + 1) // pk
        m = (-j * pow(2 * x + 1, -1, p)) % p
        x += m * pk
        pk *= p
    return x


def _first_root_mod_prime(p: int) -> int:
    """Smallest root of x^2 + x + 1 mod a prime p with p % 3 == 1."""
    if p <= _NP_SCAN_LIMIT:
        x = np.arange(p, dtype=np.int64)
        values = x * x
        values += x
        values += 1
        values %= p
        hits = np.flatnonzero(values == 0)
        if hits.size:
            return int(hits[0])
    else:
        for x in range(p):
            if (x * x + x + 1) % p == 0:
                return x
    raise InternalInconsistencyError(f"no root mod prime {p} = 1 (mod 3)")


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2."""
    m = m1 * m2
    x = (r1 * m2 * pow(m2, -1, m1) + r2 * m1 * pow(m1, -1, m2)) % m
    return x, m


def solve_fast(f: Factorization) -> CongruenceSolutions:
    """Roots of x^2 + x + 1 (mod f.n) assembled prime power by prime power.

    Per prime power: no roots when p = 2 (mod 3) or when p = 3 with exponent
    above 1; the single root 1 when the factor is exactly 3; otherwise the
    pair {x, p^ell - x - 1} obtained by lifting a root mod p.  The pieces are
    combined by the Chinese remainder theorem.
    """
    parts: list[tuple[list[int], int]] = []
    for prime, exponent in f.factors:
        modulus = prime**exponent
        if prime % 3 == 2:
            return CongruenceSolutions(f.n, ())
        if prime == 3:
            if exponent > 1:
                return CongruenceSolutions(f.n, ())
            parts.append(([1], 3))
        else:
            x = lift_prime_power(prime, _first_root_mod_prime(prime), exponent)
            parts.append(([x, modulus - x - 1], modulus))

    combined: list[tuple[int, int]] = [(0, 1)]
    for roots_part, modulus in parts:
        combined = [
            _crt_pair(r, m, rp, modulus) for r, m in combined for rp in roots_part
        ]
    return CongruenceSolutions(f.n, tuple(sorted(x for x, _ in combined)))
