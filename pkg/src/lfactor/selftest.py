"""Invariant checks over generated inputs, run by ``lfactor selftest``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import generate as gen
from .dsl import parse_repr, render_repr
from .galois import FormalParam, galois_ext_wd, langlands_agree
from .lfun import (
    gamma_ext,
    gamma_ext_parts,
    l_ext_via_derivatives,
    l_rep_ext,
    l_rep_rs,
    l_rep_sym,
    l_seg_ext,
    l_seg_ext_via_derivatives,
    l_seg_rs,
)
from .registry import Registry
from .scalar import EulerFactor, ef_divide, ef_shift, gamma_mul, gamma_reflect
from .segments import dual_representation, twist


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def _run(name, cases, fn):
    failures = []
    for case in cases:
        try:
            if not fn(case):
                failures.append(case)
        except Exception as exc:  # a raised error is a failed identity here
            failures.append((case, exc))
    return CheckResult(name, len(cases), failures)


def run_selftest(reg: Registry, seed: int = 0, scale: int = 1) -> list[CheckResult]:
    rng = random.Random(seed)
    n = 25 * scale
    reps = [gen.random_representation(rng, reg) for _ in range(n)]
    segs = [gen.random_segment(rng, reg) for _ in range(n)]
    gp = [gen.random_generic_gp(rng, reg) for _ in range(max(5, n // 2))]
    unram = [gen.random_satake(rng, rng.randint(1, 6)) for _ in range(n)]
    results = []

    results.append(_run("rs = ext * sym", reps, lambda p: l_rep_rs(reg, p) == l_rep_ext(reg, p) * l_rep_sym(reg, p)))
    results.append(
        _run("segment derivative factorization", segs, lambda d: l_seg_ext_via_derivatives(reg, d) == l_seg_ext(reg, d))
    )
    results.append(
        _run("wedge^2 divides rs", segs, lambda d: ef_divide(l_seg_rs(reg, d, d), l_seg_ext(reg, d)) is not None)
    )

    def shifted(d):
        c = gen.random_twist(rng, denominators=(2,), torsion=0.0)
        return l_seg_ext(reg, twist(d, c)) == ef_shift(l_seg_ext(reg, d), c ** 2)

    results.append(_run("shift identity", segs, shifted))
    results.append(_run("derivative oracle", gp, lambda p: l_ext_via_derivatives(reg, p) == l_rep_ext(reg, p)))

    def unramified(a):
        expected = EulerFactor(x * y for x, y in itertools.combinations(a, 2))
        return l_rep_ext(reg, gen.unramified_representation(a)) == expected

    results.append(_run("unramified product", unram, unramified))
    results.append(_run("gamma multiplicativity", reps, lambda p: gamma_ext(reg, p) == gamma_ext_parts(reg, p)))

    def functional(p):
        g, gd = gamma_ext(reg, p), gamma_ext(reg, dual_representation(reg, p))
        return gamma_mul([g, gamma_reflect(gd)]).is_trivial

    results.append(_run("gamma functional equation", reps, functional))

    def agree(p):
        target = l_rep_ext(reg, p)
        for perm in itertools.permutations(p.segments):
            phi = FormalParam(perm)
            if not langlands_agree(reg, phi) or galois_ext_wd(reg, phi) != target:
                return False
        return True

    results.append(_run("langlands agreement", reps, agree))
    results.append(_run("parse/render round trip", reps, lambda p: parse_repr(render_repr(p)) == p))
    return results
