"""Exception taxonomy shared across the package.

The CLI maps these onto distinct exit codes, so keep the split:
precondition/domain problems are user-fixable (exit 2), cache-file problems
are environment problems (exit 3), convergence failures are numerical events
worth a diagnostic dump.
"""


class DomainError(ValueError):
    """Argument outside an operation's stated domain; message names the bound."""


class PreconditionError(ValueError):
    """Structured input violates a module precondition."""


class CacheMismatchError(RuntimeError):
    """On-disk cache was produced under an incompatible configuration."""


class OutOfRangeError(ValueError):
    """Query beyond the cached range; message names the required extension."""


class ConvergenceError(RuntimeError):
    """Root finding or series control failed; carries diagnostics."""
