"""The signature calculus for trihexes.

A trihex is identified by a triple (s, b, f): spine length, belt count, and
offset, with the offset stored canonically in [0, s] (it is a residue class
mod s+1).  Each trihex is described by three such triples, one per spine
direction; `orbit` computes the other two from any one of them.  The mirror
image of a trihex swaps the offset f for (s - b - f) mod (s+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InternalInconsistencyError, NoSolutionError


@dataclass(frozen=True, order=True)
class Signature:
    """Triple (s, b, f) with 0 <= f <= s; ordering is lexicographic."""

    s: int
    b: int
    f: int

    def __post_init__(self):
        if self.s < 0 or self.b < 0:
            raise ValueError(f"spine and belt counts must be nonnegative: {self}")
        if not 0 <= self.f <= self.s:
            raise ValueError(f"offset must satisfy 0 <= f <= s: {self}")

    def __str__(self) -> str:
        return f"({self.s},{self.b},{self.f})"

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.s, self.b, self.f)


def vertex_count(sig: Signature) -> int:
    """Number of vertices of the trihex: 4(s+1)(b+1)."""
    return 4 * (sig.s + 1) * (sig.b + 1)


def hexagon_count(sig: Signature) -> int:
    """Number of hexagonal faces: 2sb + 2s + 2b (always V/2 - 2)."""
    h = 2 * sig.s * sig.b + 2 * sig.s + 2 * sig.b
    if h != vertex_count(sig) // 2 - 2:
        raise InternalInconsistencyError(f"hexagon count mismatch for {sig}")
    return h


def ord_mod(a: int, n: int) -> int:
    """Additive order of a in Z_n: smallest j >= 1 with j*a = 0 (mod n)."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return n // math.gcd(a % n, n)


def min_multiplier(a: int, target: int, n: int) -> int:
    """Smallest p >= 1 with p*a = target (mod n); 1 when n = 1."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if n == 1:
        return 1
    a %= n
    target %= n
    g = math.gcd(a, n)
    if target % g:
        raise NoSolutionError(f"{a}*p = {target} (mod {n}) has no solution")
    step = n // g
    if step == 1:
        return 1
    p = (target // g) * pow(a // g, -1, step) % step
    return p if p else step


@dataclass(frozen=True)
class SignatureOrbit:
    """The three equivalent signatures of one trihex."""

    first: Signature
    second: Signature
    third: Signature

    def __post_init__(self):
        members = self.members()
        if len({vertex_count(m) for m in members}) != 1:
            raise InternalInconsistencyError(f"orbit members disagree on V: {members}")
        if len({hexagon_count(m) for m in members}) != 1:
            raise InternalInconsistencyError(f"orbit members disagree on h: {members}")
        # coinciding orbits are fully coinciding: two equal members force three
        if len(set(members)) == 2:
            raise InternalInconsistencyError(f"orbit with exactly two distinct members: {members}")

    def members(self) -> tuple[Signature, Signature, Signature]:
        return (self.first, self.second, self.third)

    def __contains__(self, sig: Signature) -> bool:
        return sig in self.members()


def _companion(sig: Signature, generator: int, offset_extra: int) -> Signature:
    """Signature read along the spine direction selected by `generator`.

    The two companion directions use generator = f and generator = f + b + 1
    in Z_{s+1}; their offset formulas differ by one extra belt term, passed
    in as `offset_extra`.  The new belt count comes from an exact division;
    a remainder can only mean a bug.
    """
    n = sig.s + 1
    h = hexagon_count(sig)
    j = ord_mod(generator, n)
    s_new = j * (sig.b + 1) - 1
    numerator = h - 2 * s_new
    denominator = 2 * s_new + 2
    if numerator % denominator:
        raise InternalInconsistencyError(f"inexact belt division for {sig}")
    b_new = numerator // denominator
    try:
        p = min_multiplier(generator, b_new + 1, n)
    except NoSolutionError as exc:
        raise InternalInconsistencyError(f"no multiplier for {sig}: {exc}") from exc
    f_new = (-p * (sig.b + 1) - offset_extra * (b_new + 1)) % (s_new + 1)
    return Signature(s_new, b_new, f_new)


def orbit(sig: Signature) -> SignatureOrbit:
    """All three equivalent signatures, computed from `sig` alone."""
    return SignatureOrbit(
        first=sig,
        second=_companion(sig, sig.f, offset_extra=1),
        third=_companion(sig, sig.f + sig.b + 1, offset_extra=0),
    )


def mirror(sig: Signature) -> Signature:
    """Signature of the mirror-image trihex."""
    return Signature(sig.s, sig.b, (sig.s - sig.b - sig.f) % (sig.s + 1))


def is_coinciding(sig: Signature) -> bool:
    """True when all three equivalent signatures are the same triple.

    Checked two ways: by computing the orbit, and by the arithmetic test
    that (s, b, f) = (tm-1, m-1, gm) with m = b+1 and g^2 + g + 1 = 0
    (mod t).  The two must agree.
    """
    m = sig.b + 1
    if (sig.s + 1) % m or sig.f % m:
        arithmetic = False
    else:
        t = (sig.s + 1) // m
        g = sig.f // m
        arithmetic = (g * g + g + 1) % t == 0
    via_orbit = len(set(orbit(sig).members())) == 1
    if arithmetic != via_orbit:
        raise InternalInconsistencyError(
            f"coinciding tests disagree for {sig}: arithmetic={arithmetic}, orbit={via_orbit}"
        )
    return via_orbit


def is_self_mirror(sig: Signature) -> bool:
    """True when sig equals its own mirror signature."""
    direct = mirror(sig) == sig
    congruence = (2 * sig.f + sig.b + 1) % (sig.s + 1) == 0
    if direct != congruence:
        raise InternalInconsistencyError(f"self-mirror tests disagree for {sig}")
    return direct


def has_mirror_symmetry(sig: Signature) -> bool:
    """True when the mirror signature is equivalent to sig."""
    return mirror(sig) in orbit(sig)


def canonical_rep(sig: Signature) -> Signature:
    """Lexicographically smallest member of the orbit; constant on orbits."""
    return min(orbit(sig).members())


def parse_signature(text: str) -> Signature:
    """Parse 's,b,f' (or '(s,b,f)') into a Signature."""
    parts = text.strip().strip("()").split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated integers, got {text!r}")
    s, b, f = (int(p) for p in parts)
    return Signature(s, b, f)
