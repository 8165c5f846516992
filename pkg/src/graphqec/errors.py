"""Exception types shared across the package.

Every error the library raises deliberately derives from GraphQecError so the
CLI can map error families to stable exit codes.
"""

from __future__ import annotations


class GraphQecError(Exception):
    """Base class for all library errors."""


class ParseError(GraphQecError):
    """Malformed input file or word grammar."""


class MixedLength(GraphQecError):
    """Bit-vectors of different lengths were combined."""


class AmbientMismatch(GraphQecError):
    """Subspaces of different ambient dimensions were combined."""


class NotFourValent(GraphQecError):
    """A vertex does not carry exactly the four slots 0..3."""


class NotConnected(GraphQecError):
    """The graph is not connected."""


class SlotReused(GraphQecError):
    """A (vertex, slot) half-edge appears in more than one edge."""


class NotACycle(GraphQecError):
    """An edge vector is outside the cycle space."""


class NotEven(GraphQecError):
    """An edge vector has odd weight, so it is not a charge set."""


class NotARelator(GraphQecError):
    """A word does not evaluate to the group identity."""


class NotGenerating(GraphQecError):
    """The two marked generators do not generate the group."""


class IdentityGenerator(GraphQecError):
    """The identity element was marked as a generator."""


class BudgetExceeded(GraphQecError):
    """A bounded search ran out of budget before resolving.

    Carries ``bound``: the search proved the answer exceeds this value.
    """

    def __init__(self, message: str, bound: int | None = None, partial=None):
        super().__init__(message)
        self.bound = bound
        self.partial = partial


class TooLarge(GraphQecError):
    """Instance is beyond the exact-enumeration scale."""


class NonCommuting(GraphQecError):
    """Cycle operators failed to commute; graph or convention is broken."""


class MinusIdentity(GraphQecError):
    """The generated Pauli group contains -I."""


class KernelViolation(GraphQecError):
    """The cycle-to-Pauli map has a kernel other than {0, full edge set}."""


class NoConventionFound(GraphQecError):
    """No slot-pairing convention reproduces the target group."""


class BoundViolated(GraphQecError):
    """A structural sparsity bound failed; indicates an implementation bug."""
