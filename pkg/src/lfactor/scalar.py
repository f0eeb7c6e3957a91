"""Exact scalars zeta * q^e and the Euler factors built from them.

A :class:`Scalar` is an element of the group (roots of unity) x q^Q.  An
:class:`EulerFactor` is a finite multiset of such scalars read as inverse
roots: the multiset {a_1, ..., a_n} stands for prod_i (1 - a_i X)^-1 with
X = q^-s.  Everything here is immutable and hashable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotDivisible

__all__ = [
    "Scalar",
    "EulerFactor",
    "GammaClass",
    "ONE",
    "scalar_mul",
    "ef_product",
    "ef_shift",
    "ef_lcm",
    "ef_divide",
    "gamma_normalize",
    "gamma_mul",
    "gamma_reflect",
    "roots_of_unity",
    "parse_fraction",
    "format_fraction",
]


def parse_fraction(text) -> Fraction:
    """Accept ints, Fractions and strings like ``"-1/2"`` or ``"3"``."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, str):
        s = text.strip()
        if not s:
            raise ValueError("empty fraction")
        return Fraction(s)
    raise TypeError(f"cannot read a fraction from {text!r}")


def format_fraction(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=True)
class Scalar:
    """zeta * q^qexp, with ``zeta`` the angle k/N of e^{2 pi i k/N} in [0, 1)."""

    zeta: Fraction = Fraction(0)
    qexp: Fraction = Fraction(0)

    def __post_init__(self):
        z = parse_fraction(self.zeta)
        object.__setattr__(self, "zeta", z - (z.numerator // z.denominator))
        object.__setattr__(self, "qexp", parse_fraction(self.qexp))

    @classmethod
    def q(cls, e) -> "Scalar":
        return cls(Fraction(0), parse_fraction(e))

    @classmethod
    def root(cls, k: int, n: int) -> "Scalar":
        return cls(Fraction(k, n), Fraction(0))

    @property
    def order(self) -> int:
        """N, the order of the torsion part."""
        return self.zeta.denominator

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.zeta + other.zeta, self.qexp + other.qexp)

    def inv(self) -> "Scalar":
        return Scalar(-self.zeta, -self.qexp)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.zeta - other.zeta, self.qexp - other.qexp)

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            return NotImplemented
        return Scalar(self.zeta * n, self.qexp * n)

    @property
    def is_one(self) -> bool:
        return self.zeta == 0 and self.qexp == 0

    @property
    def is_unitary(self) -> bool:
        return self.qexp == 0

    def sort_key(self):
        return (self.zeta.denominator, self.zeta.numerator, self.qexp)

    def __lt__(self, other: "Scalar") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        bits = []
        if self.zeta != 0:
            bits.append(f"z({self.zeta.numerator}/{self.zeta.denominator})")
        if self.qexp != 0:
            bits.append(f"q^({format_fraction(self.qexp)})")
        return "*".join(bits) if bits else "1"

    def __repr__(self) -> str:
        return f"Scalar({format_fraction(self.zeta)!r}, {format_fraction(self.qexp)!r})"

    def to_json(self) -> dict:
        return {
            "zeta": f"{self.zeta.numerator}/{self.zeta.denominator}",
            "qexp": f"{self.qexp.numerator}/{self.qexp.denominator}",
        }

    @classmethod
    def from_json(cls, obj) -> "Scalar":
        return cls(parse_fraction(obj["zeta"]), parse_fraction(obj["qexp"]))


ONE = Scalar()


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def roots_of_unity(n: int) -> list[Scalar]:
    """All n-th roots of unity, qexp 0."""
    return [Scalar.root(k, n) for k in range(n)]


class EulerFactor:
    """prod (1 - alpha X)^-1 over a multiset of inverse roots alpha."""

    __slots__ = ("roots", "_hash")

    def __init__(self, roots: Iterable[Scalar] = ()):
        rs = tuple(sorted(roots, key=Scalar.sort_key))
        for r in rs:
            if not isinstance(r, Scalar):
                raise TypeError(f"inverse roots must be Scalars, got {r!r}")
        self.roots = rs
        self._hash = hash(rs)

    @classmethod
    def from_counts(cls, counts: Counter) -> "EulerFactor":
        return cls(counts.elements())

    def counts(self) -> Counter:
        return Counter(self.roots)

    def support(self) -> frozenset:
        return frozenset(self.roots)

    def degree(self) -> int:
        return len(self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __bool__(self):
        return bool(self.roots)

    def __eq__(self, other):
        if not isinstance(other, EulerFactor):
            return NotImplemented
        return self.roots == other.roots

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "EulerFactor") -> "EulerFactor":
        return ef_product([self, other])

    def divides(self, other: "EulerFactor") -> bool:
        """True when this factor's roots sit inside ``other``'s, with multiplicity."""
        mine, theirs = self.counts(), other.counts()
        return all(theirs[r] >= n for r, n in mine.items())

    def __repr__(self):
        return f"EulerFactor([{', '.join(map(repr, self.roots))}])"

    def __str__(self):
        if not self.roots:
            return "1"
        out = []
        for r in self.roots:
            coeff = "" if r.is_one else f"{r} "
            out.append(f"(1 - {coeff}X)^-1")
        return " ".join(out)

    def to_json(self) -> dict:
        return {"roots": [r.to_json() for r in self.roots]}

    @classmethod
    def from_json(cls, obj) -> "EulerFactor":
        return cls(Scalar.from_json(r) for r in obj["roots"])


def ef_product(fs: Sequence[EulerFactor]) -> EulerFactor:
    roots = []
    for f in fs:
        roots.extend(f.roots)
    return EulerFactor(roots)


def ef_shift(f: EulerFactor, c: Scalar) -> EulerFactor:
    """L(s) -> L(s + s0) where c = q^s0: every root is divided by c."""
    ci = c.inv()
    return EulerFactor(r * ci for r in f.roots)


def ef_lcm(fs: Sequence[EulerFactor]) -> EulerFactor:
    best: Counter = Counter()
    for f in fs:
        for r, n in f.counts().items():
            if n > best[r]:
                best[r] = n
    return EulerFactor.from_counts(best)


def ef_divide(num: EulerFactor, den: EulerFactor) -> EulerFactor:
    have = num.counts()
    for r, n in den.counts().items():
        if have[r] < n:
            raise NotDivisible(f"{den} does not divide {num}: root {r} short by {n - have[r]}")
        have[r] -= n
    return EulerFactor.from_counts(+have)


@dataclass(frozen=True)
class GammaClass:
    """A ratio prod_den (1 - a X) / prod_num (1 - b X), up to units of C[X, 1/X].

    ``num`` holds the inverse roots of the factor at 1 - s (after conversion
    to X), ``den`` those of the factor at s, so the class is L(1-s)/L(s).
    """

    num: EulerFactor
    den: EulerFactor

    @classmethod
    def reduced(cls, num: Iterable[Scalar], den: Iterable[Scalar]) -> "GammaClass":
        n, d = Counter(num), Counter(den)
        common = n & d
        return cls(EulerFactor.from_counts(n - common), EulerFactor.from_counts(d - common))

    @property
    def is_trivial(self) -> bool:
        return not self.num and not self.den

    def __mul__(self, other: "GammaClass") -> "GammaClass":
        return gamma_mul([self, other])

    def __str__(self):
        return f"L(1-s) roots: {self.num}; L(s) roots: {self.den}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


_Q = Scalar.q(1)


def _reflect_root(beta: Scalar) -> Scalar:
    # (1 - beta q^{s-1}) = (-beta q^{s-1}) (1 - beta^{-1} q q^{-s})
    return beta.inv() * _Q


def gamma_normalize(at_one_minus_s: EulerFactor, at_s: EulerFactor) -> GammaClass:
    """The class of L(1-s)/L(s), given the inverse roots of both factors.

    ``at_one_minus_s`` lists the roots of the factor as a function of its own
    variable; they are moved over to X = q^-s by discarding a unit.
    """
    num = [_reflect_root(b) for b in at_one_minus_s.roots]
    return GammaClass.reduced(num, at_s.roots)


def gamma_mul(gs: Sequence[GammaClass]) -> GammaClass:
    num, den = [], []
    for g in gs:
        num.extend(g.num.roots)
        den.extend(g.den.roots)
    return GammaClass.reduced(num, den)


def gamma_reflect(g: GammaClass) -> GammaClass:
    """The class of s -> 1 - s applied to ``g``."""
    return GammaClass.reduced(
        [_reflect_root(b) for b in g.num.roots],
        [_reflect_root(a) for a in g.den.roots],
    )
