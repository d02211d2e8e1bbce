"""Exception types shared across the package."""


class MixedSepError(Exception):
    """Base class for all errors raised by this package."""


class NodeNotFound(MixedSepError):
    """A referenced node is not part of the graph or ground set."""


class MalformedWalk(MixedSepError):
    """A walk's edge sequence does not match its node sequence."""


class InvalidQuery(MixedSepError):
    """Query sets overlap, coincide, or are otherwise ill-formed."""


class ClassViolation(MixedSepError):
    """The graph is outside the class required by the operation."""


class SizeLimit(MixedSepError):
    """The input exceeds the configured exact-computation bound."""


class NotAChainGraph(MixedSepError):
    """Raised by chain-component extraction on non-chain graphs.

    ``reason`` is one of ``"mixed-component"`` (a component after arrow
    removal carries more than one edge kind) or ``"quotient-cycle"`` (the
    component quotient is not acyclic).
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"not a chain graph ({reason})" + (f": {detail}" if detail else ""))


class ParseError(MixedSepError):
    """Bad input text; carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class UnsatisfiableSpec(MixedSepError):
    """A random-graph request that no graph can satisfy."""
