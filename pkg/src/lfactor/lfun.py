"""Exterior square, symmetric square and Rankin-Selberg factors.

Two independent routes to L(s, pi, wedge^2) live here:

* the closed form (:func:`l_rep_ext`): product of per-segment factors and
  pairwise Rankin-Selberg factors, with the per-segment factor written in
  terms of the wedge^2 / Sym^2 factors of the underlying cuspidal;
* the derivative route (:func:`l_ext_via_derivatives`): lcm of exceptional
  factors of the constituents of the even co-dimension (or odd, for odd
  rank) derivatives, each computed from the Shalika pairing criterion.

For generic representations in general position the two must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import LinkedParts, NotGeneralPosition, NotGeneric, OddDimension
from .registry import Registry, rs_pair_roots
from .scalar import (
    EulerFactor,
    GammaClass,
    Scalar,
    ef_divide,
    ef_lcm,
    ef_product,
    ef_shift,
    gamma_mul,
    gamma_normalize,
)
from .segments import (
    Constituent,
    Representation,
    Segment,
    central_char,
    constituent_central_char,
    derivative_constituents,
    derivative_segment,
    dual_representation,
    dual_segment,
    is_generic,
    langlands_sort,
    linked,
    rep_dim,
    seg_dim,
)

__all__ = [
    "GeneralPositionReport",
    "l_cusp_rs",
    "l_cusp_ext",
    "l_cusp_sym",
    "l_seg_rs",
    "l_seg_ext",
    "l_seg_sym",
    "l_rep_ext",
    "l_rep_sym",
    "l_rep_rs",
    "l_rep_rs_pair",
    "l_ex_segment",
    "l_seg_ext_via_derivatives",
    "l_ex_rs_pair",
    "l_ex_constituent",
    "l_ext_via_derivatives",
    "derivative_orders",
    "gamma_ext",
    "gamma_ext_parts",
    "check_general_position",
    "involutions",
]


def _q(e) -> Scalar:
    return Scalar.q(e)


# --- cuspidal level -------------------------------------------------------


def l_cusp_rs(reg: Registry, a: str, ta: Scalar, b: str, tb: Scalar) -> EulerFactor:
    """L(s, rho_a nu^u x rho_b nu^u') with ta = q^u, tb = q^u'."""
    shift = ta.inv() * tb.inv()
    return EulerFactor(x * shift for x in rs_pair_roots(reg, a, b))


def l_cusp_ext(reg: Registry, a: str, ta: Scalar) -> EulerFactor:
    c = reg[a]
    if c.r % 2:
        return EulerFactor()
    shift = ta.inv() ** 2
    return EulerFactor(x * shift for x in c.shalika)


def l_cusp_sym(reg: Registry, a: str, ta: Scalar) -> EulerFactor:
    return ef_divide(l_cusp_rs(reg, a, ta, a, ta), l_cusp_ext(reg, a, ta))


# --- segment level --------------------------------------------------------


def l_seg_rs(reg: Registry, a: Segment, b: Segment) -> EulerFactor:
    """prod_{j < l'} L(s + l - 1 + j, rho x rho') for l >= l', twists included."""
    if a.length < b.length:
        a, b = b, a
    parts = []
    for j in range(b.length):
        parts.append(l_cusp_rs(reg, a.label, a.tau * _q(a.length - 1 + j), b.label, b.tau))
    return ef_product(parts)


def _centered_factor(reg: Registry, label: str, length: int, which: str) -> EulerFactor:
    """wedge^2 or Sym^2 factor of the square-integrable segment of given
    length centred at 0, as a product of shifted cuspidal factors."""
    ext = l_cusp_ext(reg, label, Scalar())
    sym = l_cusp_sym(reg, label, Scalar())
    # offsets where the cuspidal wedge^2 resp. Sym^2 factor enters
    if (length % 2 == 0) == (which == "ext"):
        ext_shifts = range(1, length, 2)
        sym_shifts = range(0, length, 2)
    else:
        ext_shifts = range(0, length, 2)
        sym_shifts = range(1, length, 2)
    parts = [ef_shift(ext, _q(k)) for k in ext_shifts]
    parts += [ef_shift(sym, _q(k)) for k in sym_shifts]
    return ef_product(parts)


def _recenter(f: EulerFactor, d: Segment) -> EulerFactor:
    # L(s, D0 nu^w, .) = L(s + 2w, D0, .)
    return ef_shift(f, d.center_scalar() ** 2)


def l_seg_ext(reg: Registry, d: Segment) -> EulerFactor:
    return _recenter(_centered_factor(reg, d.label, d.length, "ext"), d)


def l_seg_sym(reg: Registry, d: Segment) -> EulerFactor:
    return _recenter(_centered_factor(reg, d.label, d.length, "sym"), d)


# --- representation level -------------------------------------------------


def l_rep_ext(reg: Registry, p: Representation) -> EulerFactor:
    segs = langlands_sort(p).segments
    parts = [l_seg_ext(reg, d) for d in segs]
    parts += [l_seg_rs(reg, a, b) for a, b in itertools.combinations(segs, 2)]
    return ef_product(parts)


def l_rep_sym(reg: Registry, p: Representation) -> EulerFactor:
    segs = langlands_sort(p).segments
    parts = [l_seg_sym(reg, d) for d in segs]
    parts += [l_seg_rs(reg, a, b) for a, b in itertools.combinations(segs, 2)]
    return ef_product(parts)


def l_rep_rs(reg: Registry, p: Representation) -> EulerFactor:
    """L(s, pi x pi) over all ordered pairs (i, j)."""
    return l_rep_rs_pair(reg, p, p)


def l_rep_rs_pair(reg: Registry, p: Representation, p2: Representation) -> EulerFactor:
    return ef_product([l_seg_rs(reg, a, b) for a in p for b in p2])


# --- exceptional factors --------------------------------------------------


def l_ex_segment(reg: Registry, d: Segment) -> EulerFactor:
    if seg_dim(reg, d) % 2:
        raise OddDimension(f"segment of dimension {seg_dim(reg, d)}")
    r = reg[d.label].r
    base = Scalar()
    if r % 2 == 0 and d.length % 2 == 1:
        f = l_cusp_ext(reg, d.label, base)
    else:
        f = l_cusp_sym(reg, d.label, base)
    return _recenter(f, d)


def l_ex_rs_pair(reg: Registry, a: Segment, b: Segment) -> frozenset:
    """The alpha = q^s0 with a~ = b nu^s0: exceptional poles of L(s, a x b)."""
    if a.length != b.length:
        return frozenset()
    shift = a.tau.inv() * b.tau.inv() * _q(1 - a.length)
    return frozenset(x * shift for x in rs_pair_roots(reg, a.label, b.label))


def l_seg_ext_via_derivatives(reg: Registry, d: Segment) -> EulerFactor:
    """prod of L_ex over the proper derivatives of D of even dimension."""
    r = reg[d.label].r
    parts = []
    for j in range(d.length):
        if ((d.length - j) * r) % 2 == 0:
            parts.append(l_ex_segment(reg, derivative_segment(reg, d, j * r)))
    return ef_product(parts)


def involutions(n: int) -> Iterator[tuple]:
    """All involutions of range(n), each as a tuple of orbits (1- or 2-tuples)."""

    def rec(rest):
        if not rest:
            yield ()
            return
        i, tail = rest[0], rest[1:]
        for sub in rec(tail):
            yield ((i,),) + sub
        for k, j in enumerate(tail):
            for sub in rec(tail[:k] + tail[k + 1 :]):
                yield ((i, j),) + sub

    yield from rec(tuple(range(n)))


def l_ex_constituent(reg: Registry, c) -> EulerFactor:
    """Exceptional wedge^2 factor of an irreducible generic Ind(parts).

    A pole at q^s0 occurs exactly when the parts can be matched as pairs
    (D, D~ nu^-s0) with the unmatched ones even-dimensional and carrying a
    Shalika pole at s0.
    """
    parts = tuple(c.parts if isinstance(c, Constituent) else c)
    if sum(seg_dim(reg, d) for d in parts) % 2:
        raise OddDimension("constituent of odd dimension")
    for a, b in itertools.combinations(parts, 2):
        if linked(a, b, reg):
            raise LinkedParts(f"{a} and {b} are linked")
    if not parts:
        return EulerFactor()

    fixed_cache: dict = {}
    pair_cache: dict = {}

    def fixed(i):
        if i not in fixed_cache:
            d = parts[i]
            fixed_cache[i] = frozenset(l_ex_segment(reg, d).roots) if seg_dim(reg, d) % 2 == 0 else frozenset()
        return fixed_cache[i]

    def paired(i, j):
        if (i, j) not in pair_cache:
            pair_cache[(i, j)] = l_ex_rs_pair(reg, parts[i], parts[j])
        return pair_cache[(i, j)]

    poles: set = set()
    for sigma in involutions(len(parts)):
        acc = None
        for orbit in sigma:
            s = fixed(orbit[0]) if len(orbit) == 1 else paired(*orbit)
            acc = s if acc is None else acc & s
            if not acc:
                break
        if acc:
            poles |= acc
    return EulerFactor(poles)


def derivative_orders(m: int) -> range:
    """Derivative orders whose constituents have even positive dimension."""
    return range(m % 2, m - 1, 2)


def l_ext_via_derivatives(reg: Registry, p: Representation) -> EulerFactor:
    if not is_generic(p, reg):
        raise NotGeneric("two segments are linked")
    report = check_general_position(reg, p)
    if not report.ok:
        cond, desc = report.violations[0]
        raise NotGeneralPosition(f"condition ({cond}): {desc}")
    m = rep_dim(reg, p)
    factors = []
    for k in derivative_orders(m):
        for c in derivative_constituents(reg, p, k):
            factors.append(l_ex_constituent(reg, c))
    return ef_lcm(factors)


# --- gamma ----------------------------------------------------------------


def gamma_ext(reg: Registry, p: Representation) -> GammaClass:
    dual = dual_representation(reg, p)
    return gamma_normalize(l_rep_ext(reg, dual), l_rep_ext(reg, p))


def gamma_ext_parts(reg: Registry, p: Representation) -> GammaClass:
    """Product of the wedge^2 gamma classes of the segments and the
    Rankin-Selberg gamma classes of the segment pairs."""
    segs = p.segments
    duals = [dual_segment(reg, d) for d in segs]
    classes = [gamma_normalize(l_seg_ext(reg, dd), l_seg_ext(reg, d)) for d, dd in zip(segs, duals)]
    for i, j in itertools.combinations(range(len(segs)), 2):
        classes.append(
            gamma_normalize(l_seg_rs(reg, duals[i], duals[j]), l_seg_rs(reg, segs[i], segs[j]))
        )
    return gamma_mul(classes)


# --- general position -----------------------------------------------------


@dataclass
class GeneralPositionReport:
    ok: bool = True
    violations: list = field(default_factory=list)

    def add(self, cond: int, desc: str) -> None:
        self.violations.append((cond, desc))
        self.ok = False

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [{"condition": c, "description": d} for c, d in self.violations]}


def _fmt_tuple(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def check_general_position(reg: Registry, p: Representation) -> GeneralPositionReport:
    report = GeneralPositionReport()
    segs = p.segments
    t = len(segs)
    m = rep_dim(reg, p)

    for k in range(m + 1):
        cons = derivative_constituents(reg, p, k)
        for c in cons:
            if any(linked(a, b, reg) for a, b in itertools.combinations(c.parts, 2)):
                report.add(1, f"constituent {_fmt_tuple(c.source)} of derivative {k} is reducible")
        seen: dict = {}
        for c in cons:
            w = constituent_central_char(reg, c)
            if w in seen:
                report.add(
                    2,
                    f"constituents {_fmt_tuple(seen[w].source)} and {_fmt_tuple(c.source)} "
                    f"of derivative {k} share central character {w}",
                )
            else:
                seen[w] = c

    ext = [l_seg_ext(reg, d).support() for d in segs]
    pairs = list(itertools.combinations(range(t), 2))
    rs = {ij: l_seg_rs(reg, segs[ij[0]], segs[ij[1]]).support() for ij in pairs}

    for i, j in pairs:
        if ext[i] & ext[j]:
            report.add(3, f"wedge^2 factors of segments {i + 1} and {j + 1} share a pole")
    for a, b in itertools.combinations(pairs, 2):
        if rs[a] & rs[b]:
            report.add(4, f"RS factors of pairs {_fmt_tuple(x + 1 for x in a)} and {_fmt_tuple(x + 1 for x in b)} share a pole")
    for ij in pairs:
        for k in range(t):
            if rs[ij] & ext[k]:
                report.add(
                    5,
                    f"RS factor of pair {_fmt_tuple(x + 1 for x in ij)} and wedge^2 factor of segment {k + 1} share a pole",
                )
    return report
