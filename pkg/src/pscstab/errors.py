"""Exception and warning types shared across the package.

Every rejected input raises a subclass of InputError.  The CLI maps any
InputError to exit code 2 together with a machine-readable error object
whose "error" field is the subclass' ``code`` string.
"""


class InputError(ValueError):
    """Base class for any rejected input."""

    code = "bad_input"


class ValidationError(InputError):
    """Matrix data is malformed: ragged, empty, non-integer, asymmetric."""

    code = "invalid_matrix"


class DegeneracyError(InputError):
    """A bilinear form that must be nondegenerate has determinant zero."""

    code = "degenerate_form"


class DimensionError(InputError):
    """Mismatched matrix or vector dimensions."""

    code = "dimension_mismatch"


class NotAnIsometryError(InputError):
    """A matrix that should preserve a form fails A^T Q A = Q."""

    code = "not_an_isometry"


class IsotropicVectorError(InputError):
    """A reflection vector with b(v, v) = 0 determines no reflection."""

    code = "isotropic_vector"


class SpinMismatchError(InputError):
    """A spin flag contradicts the parity of the intersection form.

    For closed oriented simply connected 4-manifolds, spin is equivalent
    to the intersection form being even, so a contradictory flag means
    the stated hypotheses cannot all hold.  Callers may override
    explicitly when they really mean to drop that dictionary.
    """

    code = "spin_mismatch"


class UnknownEntryError(InputError):
    """A catalog lookup used a name the catalog does not know."""

    code = "unknown_entry"


class GeneratorModeError(InputError):
    """A sampling mode was requested for a form it does not support."""

    code = "incompatible_generator_mode"


class NonUnimodularFormWarning(UserWarning):
    """Raised when an invariant is computed outside its intended domain.

    The bordism-theoretic interpretation of the invariant triple assumes
    a unimodular intersection form (a closed 4-manifold).  The linear
    algebra still makes sense for any nondegenerate symmetric form, so
    the value is computed anyway and this warning marks it as outside
    that domain.
    """
