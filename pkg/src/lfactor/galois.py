"""Formal Weil-Deligne parameters and the exterior square on the arithmetic side.

A summand phi_i is recorded by the segment it corresponds to; under the
correspondence [rho, ..., rho nu^(l-1)] <-> rho^ |.|^w (x) Sp(l).  The
discrete-series factors L(s, wedge^2 phi_i) are taken equal to the analytic
ones.  Independently of that, :func:`wd_exterior` and :func:`wd_tensor`
decompose wedge^2 and tensor products of Sp(l) by Clebsch-Gordan, which gives
a second route to the same factors for cross-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .registry import Registry
from .scalar import EulerFactor, Scalar, ef_product, ef_shift
from .segments import Representation, Segment
from .lfun import l_cusp_ext, l_cusp_rs, l_cusp_sym, l_rep_ext, l_seg_ext, l_seg_rs, l_seg_sym

__all__ = [
    "FormalParam",
    "galois_ext",
    "galois_sym",
    "langlands_agree",
    "wd_tensor",
    "wd_exterior",
    "wd_symmetric",
    "galois_ext_wd",
]


@dataclass(frozen=True)
class FormalParam:
    summands: tuple

    def __init__(self, summands: Sequence[Segment]):
        s = tuple(summands)
        if not s:
            raise ValueError("a parameter needs at least one summand")
        object.__setattr__(self, "summands", s)

    def representation(self) -> Representation:
        return Representation(self.summands)


def galois_ext(reg: Registry, phi: FormalParam) -> EulerFactor:
    """L(s, wedge^2 phi) = prod L(s, wedge^2 phi_k) prod_{i<j} L(s, phi_i (x) phi_j)."""
    s = phi.summands
    parts = [l_seg_ext(reg, d) for d in s]
    parts += [l_seg_rs(reg, a, b) for a, b in itertools.combinations(s, 2)]
    return ef_product(parts)


def galois_sym(reg: Registry, phi: FormalParam) -> EulerFactor:
    s = phi.summands
    parts = [l_seg_sym(reg, d) for d in s]
    parts += [l_seg_rs(reg, a, b) for a, b in itertools.combinations(s, 2)]
    return ef_product(parts)


def langlands_agree(reg: Registry, phi: FormalParam) -> bool:
    return galois_ext(reg, phi) == l_rep_ext(reg, phi.representation())


# --- Clebsch-Gordan route -------------------------------------------------


def _sp_shift(n: int) -> Scalar:
    # L(s, sigma (x) Sp(n)) = L(s + (n-1)/2, sigma)
    return Scalar.q(Fraction(n - 1, 2))


def wd_tensor(reg: Registry, a: Segment, b: Segment) -> EulerFactor:
    """L(s, phi_a (x) phi_b) with Sp(m) (x) Sp(n) = sum_k Sp(m + n - 1 - 2k)."""
    base = l_cusp_rs(reg, a.label, a.center_scalar(), b.label, b.center_scalar())
    m, n = a.length, b.length
    return ef_product([ef_shift(base, _sp_shift(m + n - 1 - 2 * k)) for k in range(min(m, n))])


def _wd_square(reg: Registry, d: Segment, kind: str) -> EulerFactor:
    # wedge^2(s (x) Sp(l)) = wedge^2 s (x) Sym^2 Sp(l) + Sym^2 s (x) wedge^2 Sp(l)
    # Sym^2(s (x) Sp(l))   = Sym^2 s (x) Sym^2 Sp(l) + wedge^2 s (x) wedge^2 Sp(l)
    # Sym^2 Sp(l) = Sp(2l-1) + Sp(2l-5) + ...,  wedge^2 Sp(l) = Sp(2l-3) + Sp(2l-7) + ...
    c = d.center_scalar()
    ext = l_cusp_ext(reg, d.label, c)
    sym = l_cusp_sym(reg, d.label, c)
    l = d.length
    sym_sp = range(2 * l - 1, 0, -4)
    alt_sp = range(2 * l - 3, 0, -4)
    first, second = (ext, sym) if kind == "ext" else (sym, ext)
    parts = [ef_shift(first, _sp_shift(n)) for n in sym_sp]
    parts += [ef_shift(second, _sp_shift(n)) for n in alt_sp]
    return ef_product(parts)


def wd_exterior(reg: Registry, d: Segment) -> EulerFactor:
    return _wd_square(reg, d, "ext")


def wd_symmetric(reg: Registry, d: Segment) -> EulerFactor:
    return _wd_square(reg, d, "sym")


def galois_ext_wd(reg: Registry, phi: FormalParam) -> EulerFactor:
    """galois_ext with every factor recomputed through Clebsch-Gordan."""
    s = phi.summands
    parts = [wd_exterior(reg, d) for d in s]
    parts += [wd_tensor(reg, a, b) for a, b in itertools.combinations(s, 2)]
    return ef_product(parts)
