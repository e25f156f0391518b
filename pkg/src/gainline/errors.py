"""Exception hierarchy shared by all modules."""


class GainlineError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GainlineError):
    """A constructed object violates a structural invariant.

    Raised for bad multiplication tables, mismatched dimensions or groups,
    non-Hermitian matrices, invalid representations, and similar defects.
    """


class InputError(GainlineError):
    """User-supplied data is malformed or inconsistent.

    Raised for unparsable files, walks over non-adjacent vertices, unknown
    element labels and the like.
    """
