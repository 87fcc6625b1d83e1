"""Exception hierarchy.

Usage errors (bad specs, shapes, contexts) derive from ValueError;
arithmetic impossibilities derive from ArithmeticError.
"""


class HadringError(Exception):
    """Base class for all library errors."""


class RingSpecError(HadringError, ValueError):
    """Malformed or unsupported ring specification."""


class ContextMismatchError(HadringError, ValueError):
    """Operands belong to different ring contexts."""


class NotInvertibleError(HadringError, ArithmeticError):
    """Element has no multiplicative inverse (zero or zero divisor)."""


class ShapeError(HadringError, ValueError):
    """Matrix or sequence dimensions are incompatible."""


class NotAFieldError(HadringError, ValueError):
    """Operation needs a field but the context is not one."""


class OracleLimitError(HadringError, ValueError):
    """Input exceeds the size limit of a brute-force oracle."""


class NotHadamardError(HadringError, ValueError):
    """A matrix violates H[i][j] == H[0][i ^ j].

    ``position`` is the first offending (row, col).
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NotBlockHadamardError(NotHadamardError):
    """Some block of a partitioned matrix is not Hadamard.

    ``block`` is the (block_row, block_col) of the first bad block and
    ``position`` the offending entry in global coordinates.
    """

    def __init__(self, message, block=None, position=None):
        super().__init__(message, position)
        self.block = block


class NotInIdealError(HadringError, ValueError):
    """Group-algebra element is outside the augmentation ideal."""


class NotInKernelError(HadringError, ValueError):
    """Block matrix has a block with nonzero eigenvalue."""


class CauchyError(HadringError, ValueError):
    """Cauchy construction parameters violate distinctness/nonzero rules."""
