"""Exception hierarchy shared by every module of the package."""


class SymWedgeError(ValueError):
    """Base class for all domain errors raised by this package."""


class ParseError(SymWedgeError):
    """Polynomial text does not conform to the grammar.

    ``offset`` is the byte offset in the input where parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.reason = message


class UnknownVariable(ParseError):
    pass


class ExponentOverflow(SymWedgeError):
    pass


class NotDivisible(SymWedgeError):
    pass


class NotSymmetric(SymWedgeError):
    pass


class NotAntisymmetric(SymWedgeError):
    pass


class DegreeExceeded(SymWedgeError):
    pass


class ArityError(SymWedgeError):
    """Arity is out of range (r < 1) or inputs have mismatched lengths."""


class NonSquare(SymWedgeError):
    pass


class NotMonic(SymWedgeError):
    pass
