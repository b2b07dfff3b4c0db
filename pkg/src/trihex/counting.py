"""Closed-form counting functions of the vertex count V.

All counts are driven by the prime factorization of V/4:

  sigma  - signatures (the divisor sum of V/4)
  delta  - trihexes with 3-fold rotational symmetry
  mu     - trihexes with mirror symmetry
  nu     - trihexes with both symmetries (always 0 or 1)
  trihexes = (sigma + 2*delta) / 3
  gamma  - graph isomorphism classes = (sigma + 2*delta + 3*mu) / 6
  rot_classes - graph classes with 3-fold symmetry = (delta + nu) / 2

gamma and rot_classes are each computed along two independent routes (the
combination above and direct case formulas) and the routes are required to
agree.  Everything is exact integer arithmetic; the rational coefficients
become checked divisions.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import InternalInconsistencyError
from .numtheory import Factorization, factorize


def quarter(v: int) -> int:
    """Validate V (>= 4 and divisible by 4) and return V/4."""
    if v < 4 or v % 4:
        raise ValueError(f"vertex count must be a multiple of 4 and >= 4, got {v}")
    return v // 4


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    if numerator % denominator:
        raise InternalInconsistencyError(f"{what}: {numerator} not divisible by {denominator}")
    return numerator // denominator


def sigma(v: int) -> int:
    """Number of signatures with vertex count v (divisor sum of v/4)."""
    f = factorize(quarter(v))
    return math.prod((p ** (k + 1) - 1) // (p - 1) for p, k in f.factors)


def delta(v: int) -> int:
    """Number of trihexes with v vertices and 3-fold rotational symmetry."""
    f = factorize(quarter(v))
    result = 1
    for p, k in f.factors:
        if p % 3 == 2 and k % 2:
            return 0
        if p % 3 == 1:
            result *= k + 1
    return result


def trihex_count(v: int) -> int:
    """Total number of trihexes with v vertices."""
    return _exact_div(sigma(v) + 2 * delta(v), 3, f"trihex count for V={v}")


def mu(v: int) -> int:
    """Number of trihexes with v vertices and mirror symmetry."""
    f = factorize(quarter(v))
    w = f.exponent(2)
    odd_part = math.prod(k + 1 for p, k in f.factors if p != 2)
    return odd_part if w == 0 else (2 * w - 1) * odd_part


def nu(v: int) -> int:
    """1 when some trihex with v vertices has both symmetries, else 0."""
    f = factorize(quarter(v))
    return 1 if all(k % 2 == 0 for p, k in f.factors if p != 3) else 0


def _gamma_cases(f: Factorization) -> int:
    """Graph-class count via the direct case formulas on the factorization.

    Split v/4 = 2^a * 3^b * (primes = 1 mod 3) * (odd primes = 2 mod 3) and
    combine the three symmetry contributions over the common denominator 12.
    """
    a = f.exponent(2)
    b = f.exponent(3)
    ones = [(p, k) for p, k in f.factors if p % 3 == 1]
    twos = [(p, k) for p, k in f.factors if p % 3 == 2 and p != 2]

    sig_rest = math.prod((p ** (k + 1) - 1) // (p - 1) for p, k in ones + twos)
    prod_ones = math.prod(k + 1 for _, k in ones)
    prod_twos = math.prod(k + 1 for _, k in twos)

    pow2 = 2 ** (a + 1) - 1 if a > 0 else 1
    sigma_term = pow2 * (3 ** (b + 1) - 1) * sig_rest
    mirror_coeff = (2 * a - 1) if a > 0 else 1
    mirror_term = 6 * mirror_coeff * (b + 1) * prod_ones * prod_twos
    rotation_possible = a % 2 == 0 and all(k % 2 == 0 for _, k in twos)
    rotation_term = 4 * prod_ones if rotation_possible else 0

    return _exact_div(sigma_term + rotation_term + mirror_term, 12, f"gamma for n={f.n}")


def gamma(v: int) -> int:
    """Number of graph isomorphism classes of trihexes with v vertices.

    Computed both as (sigma + 2*delta + 3*mu)/6 and by the direct case
    formulas; the two routes must agree.
    """
    combined = _exact_div(sigma(v) + 2 * delta(v) + 3 * mu(v), 6, f"gamma for V={v}")
    cases = _gamma_cases(factorize(quarter(v)))
    if combined != cases:
        raise InternalInconsistencyError(
            f"gamma routes disagree for V={v}: combined={combined}, cases={cases}"
        )
    return combined


def rot_classes(v: int) -> int:
    """Graph isomorphism classes of trihexes with 3-fold rotational symmetry."""
    combined = _exact_div(delta(v) + nu(v), 2, f"rot_classes for V={v}")

    f = factorize(quarter(v))
    ones = [k for p, k in f.factors if p % 3 == 1]
    twos = [k for p, k in f.factors if p % 3 == 2]
    if any(k % 2 for k in twos):
        direct = 0
    elif any(k % 2 for k in ones):
        direct = _exact_div(math.prod(k + 1 for k in ones), 2, f"rot_classes for V={v}")
    else:
        direct = _exact_div(math.prod(k + 1 for k in ones) + 1, 2, f"rot_classes for V={v}")
    if combined != direct:
        raise InternalInconsistencyError(
            f"rot_classes routes disagree for V={v}: combined={combined}, direct={direct}"
        )
    return combined


CSV_COLUMNS = ("V", "sigma", "delta", "mu", "nu", "trihexes", "gamma", "rot_classes")


@dataclass(frozen=True)
class CountReport:
    """All counting-function values for one vertex count."""

    V: int
    sigma: int
    delta: int
    mu: int
    nu: int
    trihexes: int
    gamma: int
    rot_classes: int

    def __post_init__(self):
        quarter(self.V)
        if self.nu not in (0, 1):
            raise InternalInconsistencyError(f"nu must be 0 or 1: {self}")
        if self.delta < self.nu or self.mu < self.nu:
            raise InternalInconsistencyError(f"symmetry counts out of order: {self}")
        if 3 * self.trihexes != self.sigma + 2 * self.delta:
            raise InternalInconsistencyError(f"trihex identity fails: {self}")
        if 6 * self.gamma != self.sigma + 2 * self.delta + 3 * self.mu:
            raise InternalInconsistencyError(f"gamma identity fails: {self}")
        if 2 * self.rot_classes != self.delta + self.nu:
            raise InternalInconsistencyError(f"rot_classes identity fails: {self}")

    def csv_row(self) -> str:
        return ",".join(str(getattr(self, c)) for c in CSV_COLUMNS)

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def report(v: int) -> CountReport:
    """Compute every counting function for v and bundle the results."""
    return CountReport(
        V=v,
        sigma=sigma(v),
        delta=delta(v),
        mu=mu(v),
        nu=nu(v),
        trihexes=trihex_count(v),
        gamma=gamma(v),
        rot_classes=rot_classes(v),
    )
