"""Reportable failures shared across the package.

DomainError covers everything a caller can trigger with legitimate but
unworkable input (bad files, positive-dimensional loci, exhausted budgets);
the command line maps it to exit code 1.
"""


class DomainError(Exception):
    """Expected, reportable failure of a computation or validation."""


class BudgetExceededError(DomainError):
    """The configured pair-reduction budget ran out: desk-scale exceeded."""


class PositiveDimensionalError(DomainError):
    """A zero-dimensional ideal was required."""


class NonIsolatedSingularityError(DomainError):
    """The germ does not have an isolated critical point at the origin."""


class InconsistentDataError(DomainError):
    """Stored invariants contradict each other."""
