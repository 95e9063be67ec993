# models/errors.py
"""
Exception hierarchy shared by every package.
CLI exit codes are derived from these classes (BudgetExhausted -> 3, everything else -> 2).
"""

from typing import Optional


class RamseyForgeError(Exception):
    """Root of all library errors."""


class GraphError(RamseyForgeError, ValueError):
    """Invalid graph input: out-of-range vertex, self-loop, bad role."""


class GraphCodecError(GraphError):
    """Malformed graph6 / JSON input. `offset` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ColoringError(RamseyForgeError, ValueError):
    """Coloring does not match its host, or a requested edge is missing."""


class PreconditionError(RamseyForgeError, ValueError):
    """An operation was called outside its documented preconditions."""


class NotDisjointError(PreconditionError):
    """Distinguished edges share a vertex."""


class GraphArrowsHError(PreconditionError):
    """The gadget graph is itself Ramsey for H, so it constrains nothing."""


class NotArrowingError(PreconditionError):
    """The input graph does not arrow H."""


class NoCandidateArrowsError(PreconditionError):
    """No candidate graph in a search universe arrows H."""


class HypothesisError(PreconditionError):
    """A named structural hypothesis on H does not hold."""

    def __init__(self, hypothesis: str, detail: str = ""):
        message = f"hypothesis violated: {hypothesis}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.hypothesis = hypothesis


class ConstructionError(RamseyForgeError, ValueError):
    """A construction's output contract would be violated."""


class UsageError(RamseyForgeError, ValueError):
    """Invalid command configuration."""


class BudgetExhausted(RamseyForgeError, RuntimeError):
    """Search stopped on its node or wall-clock limit before reaching a verdict."""

    def __init__(self, message: str, stats: Optional[object] = None):
        super().__init__(message)
        self.stats = stats
