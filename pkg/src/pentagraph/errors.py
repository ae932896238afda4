"""Exception types shared across the library."""

from __future__ import annotations


class PentagraphError(Exception):
    """Base class for all library errors."""


class GraphConstructionError(PentagraphError):
    """Invalid vertex count, out-of-range endpoint, or self loop."""


class ContractViolation(PentagraphError):
    """A documented precondition was not met by the caller."""


class InvariantViolation(PentagraphError):
    """An internal guarantee failed; carries a witness when one exists.

    Raising this signals that the input lies outside the class the
    algorithm is proven on (e.g. a graph with a short cycle fed to a
    routine that assumes girth at least five), never a silent wrong
    answer.
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class SearchBudgetExceeded(PentagraphError):
    """An exact search ran out of extension steps.

    Callers treat this as "indeterminate": the search neither found a
    witness nor proved absence.
    """


class ParseError(PentagraphError):
    """Malformed input text; ``offset`` points at the offending byte."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NoDecompositionFound(PentagraphError):
    """decompose() produced none_found, so recursive coloring cannot proceed."""
