"""Exception hierarchy shared by every turanlab module."""


class TuranLabError(Exception):
    pass


class CapacityError(TuranLabError, ValueError):
    """Raised when a graph would exceed the 64-vertex word capacity."""


class InvalidEdgeError(TuranLabError, ValueError):
    pass


class InvalidParameterError(TuranLabError, ValueError):
    pass


class BudgetError(TuranLabError):
    """An exact search was asked to run beyond its supported size."""


class Graph6ParseError(TuranLabError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
