"""Exceptions raised by tkkbench."""


class TkkError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(TkkError, ValueError):
    pass


class NotNilpotent(TkkError, ValueError):
    pass


class NonDominantWeight(TkkError, ValueError):
    pass


class InvalidType(TkkError, ValueError):
    """Unknown (family, rank) combination."""


class NotExtraspecial(TkkError, ValueError):
    pass


class DegenerateForm(TkkError, ValueError):
    pass


class SplitCartanFailure(TkkError):
    """No split Cartan subalgebra was found within the search budget."""


class IdentificationFailure(TkkError):
    pass


class UnknownClaim(TkkError, KeyError):
    pass


class ExchangeFormatError(TkkError, ValueError):
    pass


class GradingError(TkkError, ValueError):
    """ad(h) is not diagonalizable with integer eigenvalues."""
