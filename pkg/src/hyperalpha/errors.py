"""Exception hierarchy.

Two branches matter for the CLI exit-code contract: ValidationError maps to
exit 2 (bad input), GuardError maps to exit 3 (instance exceeds a size guard).
Anything else is an internal error (exit 1).
"""


class HyperalphaError(Exception):
    """Base class for all package errors."""


class ValidationError(HyperalphaError, ValueError):
    """Invalid input data or parameters."""


class GuardError(HyperalphaError):
    """Instance exceeds a documented size guard."""


# hypergraph construction / parsing

class EdgeOutOfRange(ValidationError):
    """Edge references a vertex outside [1, n]."""


class DuplicateEdge(ValidationError):
    """Two edges are equal as vertex sets."""


class EdgeTooSmall(ValidationError):
    """Edge has fewer than 2 vertices (and singletons are not allowed)."""


class DuplicateVertexInEdge(ValidationError):
    """A vertex appears more than once within a single edge."""


class HgrSyntaxError(ValidationError):
    """Malformed hypergraph text; carries the 1-based line number."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InfeasibleModel(ValidationError):
    """Generator parameters admit no valid instance."""


# tensor forms

class InvalidOrder(ValidationError):
    """Surjection count requires 1 <= s <= m."""


class EdgeLargerThanOrder(ValidationError):
    """Edge size exceeds the tensor order m."""


class DimensionMismatch(ValidationError):
    """Vector length does not match the vertex count."""


class NegativeEntry(ValidationError):
    """Evaluation points must be nonnegative."""


# solver / combinatorics

class NoEdges(ValidationError):
    """Operation requires at least one edge."""


class TooFewEdges(ValidationError):
    """Degree upper bound requires more than one edge."""


class NotUniform(ValidationError):
    """Operation requires all edges to have the same size."""


class Disconnected(ValidationError):
    """Operation requires a connected instance."""


class ConstantVector(ValidationError):
    """Quotient undefined for constant vectors."""


class NonPositiveEntry(ValidationError):
    """Mean-gap inputs must be strictly positive."""


class InstanceTooLarge(GuardError):
    """Instance exceeds the exhaustive/dense guard for this operation."""


# alias used by the eigensolver guard
TooLarge = InstanceTooLarge
