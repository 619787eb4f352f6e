"""Exception hierarchy shared by every quadbif module."""


class QuadBifError(Exception):
    """Base class for all errors raised by quadbif."""


class DomainError(QuadBifError, ValueError):
    """Input outside the mathematical domain of an operation."""


class NoRealFixedPoint(DomainError):
    """The discriminant 4a + 1 is negative, so the fixed points are complex."""


class NoRealPreimage(DomainError):
    """``a - target`` is negative, so the target has no real preimage."""


class Escaped(QuadBifError, ArithmeticError):
    """A value left the representable (or bounded) range."""


class PrecisionMismatch(QuadBifError, TypeError):
    """Binary operation between HPFloat values of different widths."""


class DivisionByZero(QuadBifError, ZeroDivisionError):
    pass


class ParseError(QuadBifError, ValueError):
    pass


class ConfigError(QuadBifError, ValueError):
    """Invalid bifurcation diagram configuration."""


class EmptyDiagramColumn(QuadBifError, ValueError):
    pass
