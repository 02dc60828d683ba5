"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RigidityError(Exception):
    """Base class for all errors raised by dlrigid."""


class GraphError(RigidityError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateTypedEdge(GraphError):
    pass


class DanglingEndpoint(GraphError):
    pass


class DuplicateLabel(GraphError):
    pass


class PreconditionViolated(RigidityError):
    pass


class NotANode(PreconditionViolated):
    pass


class KindMismatchForPureNode(PreconditionViolated):
    pass


class EdgeAlreadyPresent(PreconditionViolated):
    pass


class NotASeparation(PreconditionViolated):
    pass


class SideNotPure(PreconditionViolated):
    pass


class EdgeOfSameTypePresent(PreconditionViolated):
    pass


class CoincidentEndpoints(PreconditionViolated):
    pass


class DomainMismatch(PreconditionViolated):
    pass


class TooLargeForExhaustiveOracle(PreconditionViolated):
    pass


class SubsetTooSmall(PreconditionViolated):
    pass


class InputIndependent(PreconditionViolated):
    pass


class NotDependentAfterAdding(PreconditionViolated):
    pass


class NotMixed(PreconditionViolated):
    pass


class NotMConnected(PreconditionViolated):
    pass


class NotTwoConnected(PreconditionViolated):
    pass


class TooManyComponents(PreconditionViolated):
    pass


class NotDirectionBalanced(PreconditionViolated):
    pass


class TooFewVertices(PreconditionViolated):
    pass


class OutOfTheoremScope(PreconditionViolated):
    pass


class NotSingleLengthEdge(PreconditionViolated):
    pass


class NoUnbalancedSeparation(PreconditionViolated):
    pass


class DegenerateCutLine(PreconditionViolated):
    pass


class ReplayPreconditionFailure(RigidityError):
    """A certificate move could not be applied during replay."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"move {index}: {reason}")
        self.index = index
        self.reason = reason


class TheoremViolation(RigidityError):
    """No reduction step applied although the construction theorems guarantee one.

    Never expected in practice; indicates a bug or an oracle failure.
    """


class FormatError(RigidityError, ValueError):
    """Malformed graph, realisation or certificate input."""
