"""Exception types raised across the package."""


class CullenError(ValueError):
    """Base class for all domain errors raised by ``cullen``."""


class NearZero(CullenError):
    """A quaternion that must be inverted is (numerically) zero."""


class OnRealAxis(CullenError):
    """The imaginary direction of a real quaternion is undefined."""


class PolarSingularity(CullenError):
    """The polar angle is too close to 0 or pi for the frame to be invertible."""


class OutOfDomain(CullenError):
    """A point lies outside the domain where derivatives can be taken."""


class NotReal(CullenError):
    """A series expected to have real coefficients carries imaginary parts."""


class NotUnit(CullenError):
    """A series whose constant term vanishes has no reciprocal."""


class SymmetrizationZero(CullenError):
    """The symmetrized function vanishes at the evaluation point."""


class ParseError(CullenError):
    """A series or config document could not be parsed."""


class UnknownSuite(CullenError):
    """A requested verification suite is not registered."""


class InvalidConfig(CullenError):
    """A verification config is malformed."""
