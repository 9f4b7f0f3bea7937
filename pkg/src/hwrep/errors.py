"""Exception types shared across the package."""


class HwError(Exception):
    """Base class for all hwrep errors."""


class ParameterError(HwError, ValueError):
    """Invalid argument: bad residue range, modulus, or mismatched sizes."""


class ResourceLimitError(HwError, RuntimeError):
    """Requested enumeration or check exceeds the configured size cap."""


class NonCanonicalLabelError(HwError, ValueError):
    """A matrix-level operation received a label that is not in canonical form.

    Equivalent labels share characters but not matrices, so silent
    canonicalization would corrupt matrix-level identities.  Canonicalize
    explicitly first.
    """


class NotRationalIntegerError(HwError, ArithmeticError):
    """A cyclotomic value expected to be a rational integer is not one.

    This always signals an internal computation bug (or an inconsistent
    input), never a recoverable condition; it must not be swallowed.
    """
