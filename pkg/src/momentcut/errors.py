"""Exception types shared across the package."""


class MomentCutError(Exception):
    """Base class for all errors raised by momentcut."""


class ZeroVector(MomentCutError, ValueError):
    pass


class RankMismatch(MomentCutError, ValueError):
    pass


class NotIndependent(MomentCutError, ValueError):
    pass


class DimensionMismatch(MomentCutError, ValueError):
    pass


class Unbounded(MomentCutError, ValueError):
    pass


class Empty(MomentCutError, ValueError):
    pass


class NotContained(MomentCutError, ValueError):
    pass


class NotVertex(MomentCutError, ValueError):
    pass


class NotDelzant(MomentCutError, ValueError):
    pass


class NotDim2(MomentCutError, ValueError):
    pass


class NotACocycle(MomentCutError, ValueError):
    def __init__(self, triple, message=None):
        self.triple = triple
        super().__init__(message or f"cocycle identity fails for (i, j, k) = {triple}")


class RankPreconditionFailed(MomentCutError, ValueError):
    pass


class BoundViolated(MomentCutError, ValueError):
    def __init__(self, a, bound):
        self.a = a
        self.bound = bound
        super().__init__(f"a = {a} does not exceed the bound {bound}")


class FigureUnsupported(MomentCutError, ValueError):
    pass


class RankLimitExceeded(MomentCutError, ValueError):
    pass
