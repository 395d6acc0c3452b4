"""Exception hierarchy shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can emit
structured diagnostics, and an ``exit_code`` matching the documented process
exit codes (1 input error, 2 oracle disagreement, 3 budget exceeded).
"""


class SunlrError(Exception):
    code = "error"
    exit_code = 1


class InvalidInputError(SunlrError):
    """Malformed or out-of-domain input (bad sequence, bad subset, bad JSON)."""

    code = "invalid-input"
    exit_code = 1


class UnsupportedShapeError(InvalidInputError):
    """Problem shape the theory does not cover, e.g. an odd number of flags."""

    code = "unsupported-shape"


class WallPreconditionError(InvalidInputError):
    """Factorization requested for an inequality that is not tight."""

    code = "not-on-wall"

    def __init__(self, message, slack):
        super().__init__(message)
        self.slack = slack


class BudgetExceededError(SunlrError):
    """An enumeration would exceed the configured size budget."""

    code = "budget-exceeded"
    exit_code = 3


class OracleDisagreementError(SunlrError):
    """Two independent evaluation methods returned different results."""

    code = "oracle-disagreement"
    exit_code = 2
