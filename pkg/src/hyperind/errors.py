"""Exception hierarchy. Every error raised on bad input derives from HyperindError."""


class HyperindError(ValueError):
    pass


class EdgeArity(HyperindError):
    pass


class VertexOutOfRange(HyperindError):
    pass


class DuplicateEdge(HyperindError):
    pass


class HGRSyntaxError(HyperindError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnsupportedOrder(HyperindError):
    pass


class DegenerateDegree(HyperindError):
    pass


class DimensionMismatch(HyperindError):
    pass


class NotIndependent(HyperindError):
    pass


class DegreeMismatch(HyperindError):
    pass


class CapExceeded(HyperindError):
    pass


class NotLocallySparse(HyperindError):
    pass


class NotLinear(HyperindError):
    pass


class UnrealizableConditional(HyperindError):
    pass


class EmptyConditional(HyperindError):
    pass


class InfeasibleDegrees(HyperindError):
    pass


class InfeasibleOrder(HyperindError):
    pass


class RetryBudgetExceeded(HyperindError):
    pass
