import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lfactor import ParseError, Representation, Scalar, Segment
from lfactor.dsl import parse_repr, parse_segment, render_repr, render_segment
from lfactor.generate import random_representation

from conftest import q, seg


def test_examples():
    assert parse_repr("[one:2@-1/2]") == Representation([Segment("one", 2, q("-1/2"))])
    p = parse_repr("[one:2@-1/2] * [rho2:1]")
    assert p.segments == (seg("one", 2, "-1/2"), seg("rho2", 1))
    with pytest.raises(ParseError):
        parse_repr("[one:0]")


def test_torsion_and_whitespace():
    p = parse_repr("  [ chi : 1 @ +3 ~ z 2/3 ]*[one:1@4/2]  ")
    assert p.segments == (seg("chi", 1, 3, "2/3"), seg("one", 1, 2))


def test_rendering():
    assert render_segment(seg("one", 2)) == "[one:2]"
    assert render_segment(seg("one", 2, "-1/2")) == "[one:2@-1/2]"
    assert render_segment(seg("chi", 1, 0, "2/3")) == "[chi:1@0~z2/3]"
    assert render_repr(parse_repr("[one:1]*[one:2]")) == "[one:1] * [one:2]"


@pytest.mark.parametrize(
    "src,offset,expected",
    [
        ("[one:2@-1/2", 11, "']'"),
        ("", 0, "'['"),
        ("[1:2]", 1, "label"),
        ("[one:]", 5, "length"),
        ("[one:0]", 5, "length >= 1"),
        ("[one:2@]", 7, "rational"),
        ("[one:2@1/0]", 9, "nonzero denominator"),
        ("[one:2@1~x1/2]", 9, "'z'"),
        ("[one:2] [one:1]", 8, "'*'"),
        ("[é:1]", 1, "label"),
        ("[one:1@1~z1/2] x", 15, "end of input"),
    ],
)
def test_errors_report_offset_and_expected(src, offset, expected):
    with pytest.raises(ParseError) as info:
        parse_repr(src)
    assert info.value.offset == offset
    assert expected in info.value.expected


def test_offset_counts_bytes():
    with pytest.raises(ParseError) as info:
        parse_repr("[a:1]*é")
    assert info.value.offset == 6
    with pytest.raises(ParseError) as info:
        parse_repr("[a:1 é")
    assert info.value.offset == 5


def test_parse_segment():
    assert parse_segment("[rho3:2@1]") == seg("rho3", 2, 1)
    with pytest.raises(ParseError):
        parse_segment("[rho3:2]*[one:1]")


segments = st.builds(
    lambda lab, l, n, d, k, N: Segment(lab, l, Scalar(Fraction(k, N), Fraction(n, d))),
    st.sampled_from(["one", "chi", "rho2", "x_1", "A9"]),
    st.integers(1, 9),
    st.integers(-20, 20),
    st.integers(1, 6),
    st.integers(0, 11),
    st.integers(1, 12),
)


@given(st.lists(segments, min_size=1, max_size=5))
def test_round_trip_property(segs):
    p = Representation(segs)
    assert parse_repr(render_repr(p)) == p


def test_round_trip_generated(std):
    rng = random.Random(1)
    for _ in range(100):
        p = random_representation(rng, std)
        assert parse_repr(render_repr(p)) == p
