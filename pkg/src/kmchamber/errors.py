"""Exception hierarchy.

Every error carries ``exit_code`` so the CLI can map failures without a
lookup table: 2 for bad input, 3 for exhausted budgets, 1 for failed
verification or certified exclusion.
"""


class KMError(Exception):
    exit_code = 1


class InputError(KMError):
    exit_code = 2


class LoopError(InputError):
    pass


class DisconnectedError(InputError):
    pass


class DecomposableError(InputError):
    pass


class ZeroVectorError(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotClosed(InputError):
    pass


class BudgetExceeded(KMError):
    exit_code = 3


class CapExceeded(BudgetExceeded):
    pass


class PrecisionExhausted(BudgetExceeded):
    pass


class NotASector(KMError):
    pass


class NotFiniteType(KMError):
    pass


class NotRegular(KMError):
    pass


class InvariantViolation(KMError):
    pass


class MultipleWalls(KMError):
    pass


class PathTooDegenerate(KMError):
    pass


class PreconditionFailed(KMError):
    pass
