"""Zelevinsky segment combinatorics.

A segment ``Segment(label, length, tau)`` is [rho nu^u, ..., rho nu^(u+l-1)]
with tau = q^u; ``tau`` may carry torsion, which is how unramified twists
coming from duality data are represented.  A :class:`Representation` is the
ordered list of segments of Ind(D_1 x ... x D_t).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NoDualData, OutOfRange
from .registry import Registry, self_twists
from .scalar import ONE, Scalar

__all__ = [
    "Segment",
    "Representation",
    "Constituent",
    "Deriv",
    "VANISHED",
    "TRIVIAL",
    "seg_dim",
    "rep_dim",
    "center",
    "twist",
    "derivative_segment",
    "dual_segment",
    "dual_representation",
    "linked",
    "line_offset",
    "central_char",
    "langlands_sort",
    "is_generic",
    "derivative_constituents",
    "constituent_central_char",
]


@dataclass(frozen=True)
class Segment:
    label: str
    length: int
    tau: Scalar = ONE

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 1:
            raise ValueError(f"segment length must be a positive integer, got {self.length!r}")

    @property
    def center(self) -> Fraction:
        """Real part of the central exponent: u + (l - 1)/2."""
        return self.tau.qexp + Fraction(self.length - 1, 2)

    def center_scalar(self) -> Scalar:
        """tau * q^((l-1)/2), the full (complex) center twist."""
        return self.tau * Scalar.q(Fraction(self.length - 1, 2))


@dataclass(frozen=True)
class Representation:
    segments: tuple

    def __init__(self, segments: Sequence[Segment]):
        segs = tuple(segments)
        if not segs:
            raise ValueError("a representation needs at least one segment")
        object.__setattr__(self, "segments", segs)

    def __iter__(self):
        return iter(self.segments)

    def __len__(self):
        return len(self.segments)

    def __getitem__(self, i):
        return self.segments[i]


@dataclass(frozen=True)
class Constituent:
    parts: tuple
    source: tuple


class Deriv(enum.Enum):
    VANISHED = "vanished"
    TRIVIAL = "trivial"


VANISHED = Deriv.VANISHED
TRIVIAL = Deriv.TRIVIAL


def seg_dim(reg: Registry, d: Segment) -> int:
    return d.length * reg[d.label].r


def rep_dim(reg: Registry, p) -> int:
    return sum(seg_dim(reg, d) for d in p)


def center(d: Segment) -> Fraction:
    return d.center


def twist(d: Segment, c: Scalar) -> Segment:
    """D nu^{s0} for c = q^{s0}."""
    return Segment(d.label, d.length, d.tau * c)


def derivative_segment(reg: Registry, d: Segment, k: int):
    """The k-th derivative: D, VANISHED, TRIVIAL or the truncated segment."""
    r = reg[d.label].r
    n = d.length * r
    if not 0 <= k <= n:
        raise OutOfRange(f"derivative order {k} outside [0, {n}]")
    if k == 0:
        return d
    if k % r:
        return VANISHED
    if k == n:
        return TRIVIAL
    j = k // r
    return Segment(d.label, d.length - j, d.tau * Scalar.q(j))


def dual_segment(reg: Registry, d: Segment) -> Segment:
    c = reg[d.label]
    if c.dual is None:
        raise NoDualData(d.label)
    tau = c.dual.alpha0 * d.tau.inv() * Scalar.q(1 - d.length)
    return Segment(c.dual.label, d.length, tau)


def dual_representation(reg: Registry, p: Representation) -> Representation:
    """Ind(D_t~ x ... x D_1~)."""
    return Representation([dual_segment(reg, d) for d in reversed(p.segments)])


def line_offset(a: Segment, b: Segment, reg: Optional[Registry] = None) -> Optional[int]:
    """The integer m with tau_b = tau_a q^m (times a self-twist), else None.

    Without a registry the torsion parts must agree exactly; with one, they
    may differ by an element of mu_f, since rho chi = rho for those chi.
    """
    if a.label != b.label:
        return None
    ratio = b.tau / a.tau
    if ratio.qexp.denominator != 1:
        return None
    if ratio.zeta != 0:
        if reg is None:
            return None
        if Scalar(ratio.zeta) not in self_twists(reg[a.label].f):
            return None
    return int(ratio.qexp)


def linked(a: Segment, b: Segment, reg: Optional[Registry] = None) -> bool:
    m = line_offset(a, b, reg)
    if m is None:
        return False
    lo_a, hi_a = 0, a.length - 1
    lo_b, hi_b = m, m + b.length - 1
    if lo_a <= lo_b and hi_b <= hi_a:
        return False
    if lo_b <= lo_a and hi_a <= hi_b:
        return False
    # union is an interval iff the two integer ranges overlap or touch
    return lo_b <= hi_a + 1 and lo_a <= hi_b + 1


def central_char(reg: Registry, d: Segment) -> Scalar:
    """omega_D(varpi) = omega^l tau^(-r l) q^(-r l (l-1)/2)."""
    c = reg[d.label]
    l, r = d.length, c.r
    return (c.omega ** l) * (d.tau ** (-r * l)) * Scalar.q(Fraction(-r * l * (l - 1), 2))


def langlands_sort(p: Representation) -> Representation:
    return Representation(sorted(p.segments, key=lambda d: -d.center))


def is_generic(p: Representation, reg: Optional[Registry] = None) -> bool:
    segs = p.segments
    return not any(linked(a, b, reg) for a, b in itertools.combinations(segs, 2))


def derivative_constituents(reg: Registry, p: Representation, k: int) -> list[Constituent]:
    """Ind(D_1^(k_1) x ... x D_t^(k_t)) over all non-vanishing tuples with sum k."""
    m = rep_dim(reg, p)
    if not 0 <= k <= m:
        raise OutOfRange(f"derivative order {k} outside [0, {m}]")
    choices = []
    for d in p:
        r = reg[d.label].r
        choices.append(range(0, d.length * r + 1, r))
    out = []
    for tup in itertools.product(*choices):
        if sum(tup) != k:
            continue
        parts = []
        for d, ki in zip(p, tup):
            res = derivative_segment(reg, d, ki)
            if res is TRIVIAL:
                continue
            parts.append(res)
        out.append(Constituent(tuple(parts), tuple(tup)))
    return out


def constituent_central_char(reg: Registry, c: Constituent) -> Scalar:
    out = ONE
    for d in c.parts:
        out = out * central_char(reg, d)
    return out
