"""Exception types shared across the package."""


class HochError(Exception):
    """Base class for every error raised by hochdim."""


class AlgebraFormatError(HochError):
    """Malformed algebra description (syntax, dangling names, bad relation)."""


class InfiniteDimensionalError(HochError):
    """The presented monomial algebra is not finite-dimensional."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeCapError(HochError):
    """A complex would exceed the configured basis-size cap."""


class ComplexError(HochError):
    """A boundary sequence fails d∘d = 0 or has mismatched shapes."""


class StructureError(HochError):
    """A multiplication table is not associative or not unital."""


class CrossCheckError(HochError):
    """Two independent routes produced different numbers."""

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right
