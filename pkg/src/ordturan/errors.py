"""Shared exception types.

Plain ``ValueError`` is used for bad parameters throughout the package;
the classes here exist where callers need to distinguish failure modes
(file diagnostics, resource caps, broken internal invariants).
"""


class InputFormatError(ValueError):
    """Malformed text input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SplitError(ValueError):
    """A vertex split cannot produce a bipartite matrix; names the edge."""

    def __init__(self, edge: tuple[int, int], split: int):
        self.edge = edge
        self.split = split
        super().__init__(
            f"edge {edge} lies inside one side of the split at {split}"
        )


class ResourceLimitError(RuntimeError):
    """The request exceeds a configured enumeration or memory budget."""


class InternalInvariantError(RuntimeError):
    """A structural invariant failed; signals a bug, not bad input."""
