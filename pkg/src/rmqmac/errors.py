"""Exception hierarchy shared by all modules."""


class QmacError(Exception):
    """Base class for domain errors raised by this package."""


class DimensionMismatchError(QmacError, ValueError):
    pass


class ParameterRangeError(QmacError, ValueError):
    pass


class DegenerateDualError(QmacError, ValueError):
    """The dual of RM(m, m) is the zero code, which is not representable."""


class InvalidDistributionError(QmacError, ValueError):
    pass


class DomainError(QmacError, ValueError):
    pass


class EnumerationLimitError(QmacError):
    pass


class NoFeasiblePairError(QmacError):
    """Every candidate codeword pair has zero likelihood for the received word."""


class InvalidOrderError(QmacError, ValueError):
    pass
