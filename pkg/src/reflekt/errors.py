"""Exception types shared across the toolkit.

Everything raised on bad domain input derives from ToolkitError so the CLI
can map it to exit code 1 uniformly.
"""


class ToolkitError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidInputError(ToolkitError):
    """A precondition on the arguments is violated."""


class DegenerateLatticeError(ToolkitError):
    """A Gram matrix is singular where a nondegenerate form is required."""


class DependentBasisError(ToolkitError):
    """Sublattice basis rows are linearly dependent over the rationals."""


class SpanMismatchError(ToolkitError):
    """Two sublattices fail the required span/containment relation."""


class IsotropicFormError(ToolkitError):
    """Operation undefined for isotropic (square-discriminant) binary forms."""


class NotARootError(ToolkitError):
    """A reflection was requested in a vector that is not a root."""


class EffortLimitExceeded(ToolkitError):
    """A search exhausted its configured effort budget.

    The budget is an operational safeguard only; callers can raise it.
    """


class ConstructionError(ToolkitError):
    """A constructive step could not be completed within its search bounds."""


class CertificateError(ToolkitError):
    """A certificate file is malformed or fails re-validation."""


class InternalCheckError(ToolkitError):
    """A cross-check that should be unconditionally true failed.

    This never indicates bad input; it indicates a bug and is surfaced
    loudly instead of being swallowed.
    """
