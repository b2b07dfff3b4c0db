"""Constructive enumeration of signatures and trihex representatives.

These routines build the objects that the closed-form counts in `counting`
merely count, so each stream's size certifies one formula.  Enumeration
order is deterministic (divisors ascending, offsets ascending) so output is
reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import counting
from .errors import VerificationFailureError
from .numtheory import divisors, factorize, solve_fast
from .signature import Signature, canonical_rep, mirror


def all_signatures(v: int) -> list[Signature]:
    """Every signature (s, b, f) with 4(s+1)(b+1) = v, lexicographically sorted."""
    n = counting.quarter(v)
    result = []
    for d in divisors(factorize(n)):
        s, b = d - 1, n // d - 1
        result.extend(Signature(s, b, f) for f in range(s + 1))
    return result


def trihex_reps(v: int) -> list[Signature]:
    """One canonical signature per trihex with v vertices, sorted."""
    return sorted({canonical_rep(sig) for sig in all_signatures(v)})


def coinciding_signatures(v: int) -> list[Signature]:
    """Signatures equal to both their equivalents: (tm-1, m-1, gm) over v/4 = t*m^2."""
    n = counting.quarter(v)
    result = []
    for m in divisors(factorize(n)):
        if n % (m * m):
            continue
        t = n // (m * m)
        result.extend(
            Signature(t * m - 1, m - 1, g * m) for g in solve_fast(factorize(t)).roots
        )
    return sorted(result)


def self_mirror_signatures(v: int) -> list[Signature]:
    """Signatures fixed by mirroring: solutions of 2f = -(b+1) (mod s+1) per divisor pair."""
    n = counting.quarter(v)
    result = []
    for d in divisors(factorize(n)):
        s, b = d - 1, n // d - 1
        modulus = s + 1
        target = (-(b + 1)) % modulus
        g = math.gcd(2, modulus)
        if target % g:
            continue
        step = modulus // g
        f0 = (target // g) * pow(2 // g, -1, step) % step
        result.extend(Signature(s, b, f) for f in range(f0, modulus, step))
    return sorted(result)


def graph_class_reps(v: int) -> list[Signature]:
    """One representative per graph isomorphism class: mirror pairs collapsed."""
    return sorted(
        rep for rep in trihex_reps(v) if rep <= canonical_rep(mirror(rep))
    )


@dataclass(frozen=True)
class EnumerationResult:
    """All enumeration streams for one vertex count."""

    V: int
    all_signatures: tuple[Signature, ...]
    trihex_reps: tuple[Signature, ...]
    coinciding: tuple[Signature, ...]
    self_mirror: tuple[Signature, ...]
    graph_class_reps: tuple[Signature, ...]


def verify(v: int) -> EnumerationResult:
    """Enumerate every stream for v and check each size against its formula.

    Raises VerificationFailureError naming the first count that disagrees.
    """
    result = EnumerationResult(
        V=v,
        all_signatures=tuple(all_signatures(v)),
        trihex_reps=tuple(trihex_reps(v)),
        coinciding=tuple(coinciding_signatures(v)),
        self_mirror=tuple(self_mirror_signatures(v)),
        graph_class_reps=tuple(graph_class_reps(v)),
    )

    checks = (
        ("sigma", counting.sigma(v), len(result.all_signatures)),
        ("trihexes", counting.trihex_count(v), len(result.trihex_reps)),
        ("delta", counting.delta(v), len(result.coinciding)),
        ("mu", counting.mu(v), len(result.self_mirror)),
        ("gamma", counting.gamma(v), len(result.graph_class_reps)),
        (
            "nu",
            counting.nu(v),
            len(set(result.coinciding) & set(result.self_mirror)),
        ),
    )
    for field, expected, actual in checks:
        if expected != actual:
            raise VerificationFailureError(v, field, expected, actual)

    reps = set(result.trihex_reps)
    if not set(result.coinciding) <= reps:
        raise VerificationFailureError(v, "coinciding not canonical", "subset", "not subset")
    for sig in result.all_signatures:
        if 4 * (sig.s + 1) * (sig.b + 1) != v:
            raise VerificationFailureError(v, "vertex count", v, sig)
    if {canonical_rep(mirror(r)) for r in reps} != reps:
        raise VerificationFailureError(v, "mirror closure", "closed", "not closed")
    return result
