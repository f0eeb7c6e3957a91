"""Seeded random inputs for the self-test and the property suites."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .lfun import check_general_position
from .registry import CuspidalDatum, Dual, Registry, self_twists, validate
from .scalar import Scalar
from .segments import Representation, Segment, is_generic, rep_dim, seg_dim

__all__ = [
    "random_twist",
    "random_segment",
    "random_representation",
    "random_generic_gp",
    "random_satake",
    "unramified_representation",
    "random_registry",
]


def random_twist(rng: random.Random, denominators=(1, 2, 3, 6), span: int = 3, torsion: float = 0.3) -> Scalar:
    den = rng.choice(denominators)
    e = Fraction(rng.randint(-span * den, span * den), den)
    z = Fraction(rng.randrange(12), 12) if rng.random() < torsion else Fraction(0)
    return Scalar(z, e)


def random_segment(rng: random.Random, reg: Registry, max_dim: int = 10, max_len: int = 5, **kw) -> Segment:
    labels = [c.label for c in reg if c.r <= max_dim]
    label = rng.choice(labels)
    r = reg[label].r
    length = rng.randint(1, max(1, min(max_len, max_dim // r)))
    return Segment(label, length, random_twist(rng, **kw))


def random_representation(
    rng: random.Random, reg: Registry, t_max: int = 4, dim_max: int = 10, labels=None, **kw
) -> Representation:
    if labels is not None:
        reg = Registry([reg[l] for l in labels])
    t = rng.randint(1, t_max)
    segs = []
    room = dim_max
    for _ in range(t):
        if room < min(c.r for c in reg):
            break
        d = random_segment(rng, reg, max_dim=room, **kw)
        segs.append(d)
        room -= seg_dim(reg, d)
    return Representation(segs)


def random_generic_gp(rng: random.Random, reg: Registry, t_max: int = 3, dim_max: int = 8, tries: int = 10000) -> Representation:
    """A generic representation in general position (conditions 1-5).

    Segments are drawn from one or two cuspidal lines so that the
    Rankin-Selberg cross terms are often nontrivial.
    """
    labels = reg.labels()
    for _ in range(tries):
        pool = rng.sample(labels, min(len(labels), rng.randint(1, 2)))
        p = random_representation(
            rng, reg, t_max=t_max, dim_max=dim_max, labels=pool, denominators=(1, 2, 4), torsion=0.2
        )
        if not is_generic(p, reg):
            continue
        if check_general_position(reg, p).ok:
            return p
    raise RuntimeError("no representation in general position found")


def random_satake(rng: random.Random, m: int, span: int = 2) -> list[Scalar]:
    """m values in mu_12 * q^Z."""
    return [Scalar(Fraction(rng.randrange(12), 12), rng.randint(-span, span)) for _ in range(m)]


def unramified_representation(satake, label: str = "one") -> Representation:
    """Ind(mu_1 x ... x mu_m) with mu_i(varpi) = a_i, i.e. tau_i = a_i^-1."""
    return Representation([Segment(label, 1, a.inv()) for a in satake])


def _root(rng, orders=(1, 2, 3, 4, 6)) -> Scalar:
    n = rng.choice(orders)
    return Scalar.root(rng.randrange(n), n)


def _sqrt(rng, x: Scalar) -> Scalar:
    """One of the two square roots of a root of unity."""
    half = Scalar(x.zeta / 2)
    return half if rng.random() < 0.5 else half * Scalar.root(1, 2)


def random_registry(rng: random.Random, size: Optional[int] = None) -> Registry:
    """A registry satisfying every invariant checked by ``validate``."""
    size = size or rng.randint(1, 6)
    data: list[CuspidalDatum] = []
    i = 0
    while len(data) < size:
        r = rng.randint(1, 4)
        f = rng.choice([d for d in range(1, r + 1) if r % d == 0])
        kind = rng.random()
        if kind < 0.55:
            lab = f"c{i}"
            alpha0 = _root(rng)
            omega = _sqrt(rng, alpha0 ** r)
            shalika = frozenset()
            if r % 2 == 0:
                coset = [alpha0 * z for z in self_twists(f)]
                cands = [a for a in coset if a ** (r // 2) == omega]
                # stable under the squares of self-twists
                orbits = []
                for a in cands:
                    orb = frozenset(a * z ** 2 for z in self_twists(f))
                    if orb not in orbits:
                        orbits.append(orb)
                for orb in orbits:
                    if rng.random() < 0.5:
                        shalika |= orb
            data.append(CuspidalDatum(lab, r, f, omega, Dual(lab, alpha0), shalika))
        elif kind < 0.85 and len(data) + 2 <= size + 1:
            a, b = f"c{i}", f"c{i}d"
            alpha0 = _root(rng)
            omega = _root(rng)
            omega_b = (alpha0 ** r) / omega
            alpha0_b = alpha0 * rng.choice(self_twists(f))
            data.append(CuspidalDatum(a, r, f, omega, Dual(b, alpha0)))
            data.append(CuspidalDatum(b, r, f, omega_b, Dual(a, alpha0_b)))
        else:
            data.append(CuspidalDatum(f"c{i}", r, f, _root(rng)))
        i += 1
    reg = Registry(data)
    validate(reg)
    return reg
