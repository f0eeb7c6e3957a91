import cmath
from fractions import Fraction

import pytest

from lfactor import CuspidalDatum, Dual, Registry, Scalar, Segment, std_registry, validate

Q = 5.0

_ACCEPTANCE_LINES = []


def record(line: str) -> None:
    print(line)
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def to_complex(a: Scalar, q: float = Q) -> complex:
    return cmath.exp(2j * cmath.pi * float(a.zeta)) * q ** float(a.qexp)


def evaluate(f, s: complex, q: float = Q) -> complex:
    """prod (1 - a q^-s)^-1 at a complex point."""
    x = q ** (-s)
    out = 1 + 0j
    for a in f.roots:
        out /= 1 - to_complex(a, q) * x
    return out


def q(e) -> Scalar:
    return Scalar.q(Fraction(e))


def seg(label, length, e=0, z=0) -> Segment:
    return Segment(label, length, Scalar(Fraction(z), Fraction(e)))


@pytest.fixture(scope="session")
def std():
    return std_registry()


@pytest.fixture(scope="session")
def pair_reg():
    """Two GL_1 characters dual to each other but not self-dual, plus a
    GL_2 cuspidal pair with a nontrivial self-twist group."""
    z = Scalar.root
    reg = Registry(
        [
            CuspidalDatum("a", 1, 1, z(1, 4), Dual("b", z(0, 1))),
            CuspidalDatum("b", 1, 1, z(3, 4), Dual("a", z(0, 1))),
            CuspidalDatum("c", 2, 2, z(1, 6), Dual("d", z(1, 2))),
            CuspidalDatum("d", 2, 2, z(5, 6), Dual("c", z(0, 1))),
            CuspidalDatum("one", 1, 1, z(0, 1), Dual("one", z(0, 1))),
        ]
    )
    validate(reg)
    return reg
