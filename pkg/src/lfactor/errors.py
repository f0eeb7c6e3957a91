"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`LFactorError`
so that the command line can map it to exit status 1 in one place.
"""


class LFactorError(Exception):
    """Base class for all domain errors."""


class NotDivisible(LFactorError):
    """Multiset division whose denominator is not contained in the numerator."""


class ValidationError(LFactorError):
    def __init__(self, label, invariant, detail=""):
        self.label = label
        self.invariant = invariant
        msg = f"{label}: {invariant}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class RegistryFormatError(LFactorError):
    """Malformed registry document; message carries line or field path."""


class UnknownLabel(LFactorError):
    pass


class OutOfRange(LFactorError):
    pass


class NoDualData(LFactorError):
    pass


class OddDimension(LFactorError):
    pass


class LinkedParts(LFactorError):
    pass


class NotGeneric(LFactorError):
    pass


class NotGeneralPosition(LFactorError):
    pass


class ParseError(LFactorError):
    def __init__(self, offset, expected, found=""):
        self.offset = offset
        self.expected = frozenset(expected)
        self.found = found
        exp = ", ".join(sorted(self.expected))
        what = repr(found) if found else "end of input"
        super().__init__(f"at offset {offset}: expected one of {{{exp}}}, found {what}")
