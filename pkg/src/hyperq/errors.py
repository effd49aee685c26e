"""Exception types shared across the package."""


class HypergraphError(Exception):
    """Base class for all hyperq errors."""


class ValidationError(HypergraphError):
    """Input fails a structural invariant."""


class OutOfRangeVertex(ValidationError):
    pass


class EdgeTooSmall(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class SubsetEdge(ValidationError):
    pass


class NotUniform(ValidationError):
    pass


class UnknownEdge(ValidationError):
    pass


class InfeasibleParameters(ValidationError):
    pass


class ParseError(HypergraphError):
    """Malformed .hg or JSON input."""


class NonConvergence(HypergraphError):
    """Jacobi sweeps exhausted without reaching the off-diagonal target."""


class TooLarge(HypergraphError):
    """Exhaustive search refused beyond its size cap."""


class NotEquitable(HypergraphError):
    pass


class ContextMismatch(HypergraphError):
    """Evaluation context was built from a different hypergraph."""
