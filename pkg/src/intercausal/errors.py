"""Semantic exceptions raised across the package.

Every error that callers are expected to catch derives from
:class:`IntercausalError`, so ``except IntercausalError`` separates domain
failures from programming mistakes.  The CLI maps these onto exit codes.
"""

from __future__ import annotations

__all__ = [
    "IntercausalError",
    "DomainError",
    "OutOfRangeError",
    "NotCICIError",
    "DegenerateEntriesError",
    "OutOfNoisyOrRangeError",
    "NonPositiveWeightError",
    "ZeroPreposteriorError",
    "ImpossibleEvidenceError",
    "InfeasibleError",
    "ParseError",
]


class IntercausalError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(IntercausalError):
    """An argument lies outside the mathematical domain of an operation."""


class OutOfRangeError(DomainError):
    """A probability or model parameter violates its required range."""


class NotCICIError(IntercausalError):
    """The likelihood table is not rank one, so no factorization exists."""


class DegenerateEntriesError(IntercausalError):
    """A zero entry makes the requested factorization non-identifiable."""


class OutOfNoisyOrRangeError(IntercausalError):
    """A rank-one table is not expressible as a noisy-or complement.

    The conversion only exists when both likelihood-vector parameters sit
    strictly below one half.  ``swap_class`` names the state swap (rows,
    columns, or both) that would bring the table into noisy-or form.
    """

    def __init__(self, message: str, swap_class: "object" = None):
        super().__init__(message)
        self.swap_class = swap_class


class NonPositiveWeightError(IntercausalError):
    """An axis-scaling weight was zero or negative."""


class ZeroPreposteriorError(IntercausalError):
    """Bayesian reversal failed: a conditioning state has zero mass."""


class ImpossibleEvidenceError(IntercausalError):
    """All joint states have zero potential; beliefs are undefined."""


class InfeasibleError(IntercausalError):
    """No parameters in the valid range reproduce the observed targets."""


class ParseError(IntercausalError):
    """An input file or parameter string could not be parsed."""
