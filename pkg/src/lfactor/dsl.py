"""Text form of representations.

    Repr := Seg ( "*" Seg )*
    Seg  := "[" label ":" len ( "@" rat ( "~" "z" frac )? )? "]"
    rat  := ["+"|"-"] int ( "/" int )?
    frac := int "/" int

``[one:2@-1/2]`` is the Steinberg representation of GL_2; ``@`` gives the
q-exponent of the twist tau and ``~z k/N`` its root-of-unity part.
Whitespace between tokens is ignored.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .scalar import Scalar, format_fraction
from .segments import Representation, Segment

__all__ = ["parse_repr", "parse_segment", "render_repr", "render_segment"]

_LABEL_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_LABEL_REST = _LABEL_START | set("0123456789")
_DIGITS = set("0123456789")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def offset(self, pos=None) -> int:
        return len(self.src[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, expected, pos=None):
        p = self.pos if pos is None else pos
        found = self.src[p] if p < len(self.src) else ""
        raise ParseError(self.offset(p), expected, found)

    def ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            self.fail({repr(ch)})

    def label(self) -> str:
        if self.peek() not in _LABEL_START:
            self.fail({"label"})
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] in _LABEL_REST:
            self.pos += 1
        return self.src[start : self.pos]

    def integer(self, what="integer") -> int:
        if self.peek() not in _DIGITS:
            self.fail({what})
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos] in _DIGITS:
            self.pos += 1
        return int(self.src[start : self.pos])

    def rational(self) -> Fraction:
        sign = 1
        if self.eat("-"):
            sign = -1
        else:
            self.eat("+")
        num = self.integer("rational")
        den = 1
        if self.eat("/"):
            at = self.pos
            den = self.integer("denominator")
            if den == 0:
                self.fail({"nonzero denominator"}, at)
        return sign * Fraction(num, den)

    def frac(self) -> Fraction:
        k = self.integer("k/N")
        self.expect("/")
        at = self.pos
        n = self.integer("denominator")
        if n == 0:
            self.fail({"nonzero denominator"}, at)
        return Fraction(k, n)

    def segment(self) -> Segment:
        self.expect("[")
        label = self.label()
        self.expect(":")
        self.ws()
        at = self.pos
        length = self.integer("length")
        if length < 1:
            self.fail({"length >= 1"}, at)
        tau = Scalar()
        if self.eat("@"):
            e = self.rational()
            z = Fraction(0)
            if self.eat("~"):
                self.expect("z")
                z = self.frac()
            tau = Scalar(z, e)
        if not self.eat("]"):
            self.fail({"']'", "'@'"} if tau.is_one else {"']'"})
        return Segment(label, length, tau)

    def representation(self) -> Representation:
        segs = [self.segment()]
        while self.eat("*"):
            segs.append(self.segment())
        if self.peek():
            self.fail({"'*'", "end of input"})
        return Representation(segs)


def parse_repr(src: str) -> Representation:
    return _Parser(src).representation()


def parse_segment(src: str) -> Segment:
    p = _Parser(src)
    d = p.segment()
    if p.peek():
        p.fail({"end of input"})
    return d


def render_segment(d: Segment) -> str:
    body = f"{d.label}:{d.length}"
    if not d.tau.is_one:
        body += f"@{format_fraction(d.tau.qexp)}"
        if d.tau.zeta != 0:
            body += f"~z{d.tau.zeta.numerator}/{d.tau.zeta.denominator}"
    return f"[{body}]"


def render_repr(p) -> str:
    return " * ".join(render_segment(d) for d in p)
