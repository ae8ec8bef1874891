"""Exception types shared across the package."""

from __future__ import annotations


class AffoldError(Exception):
    """Base class for all package errors."""

    code = "error"


class NotSkewSymmetrizable(AffoldError):
    code = "not_skew_symmetrizable"


class NotSkewSymmetric(AffoldError):
    code = "not_skew_symmetric"


class IndexOutOfRange(AffoldError, IndexError):
    code = "index_out_of_range"


class EmptySubset(AffoldError):
    code = "empty_subset"


class LengthMismatch(AffoldError):
    code = "length_mismatch"


class SizeMismatch(AffoldError):
    code = "size_mismatch"


class NotAdmissible(AffoldError):
    code = "not_admissible"


class NotAnOrbit(AffoldError):
    code = "not_an_orbit"


class UnknownTriple(AffoldError):
    code = "unknown_triple"


class InvalidRank(AffoldError):
    code = "invalid_rank"


class InvalidOrientation(AffoldError):
    code = "invalid_orientation"


class Disconnected(AffoldError):
    code = "disconnected"


class NotAffine(AffoldError):
    code = "not_affine"


class NotAcyclic(AffoldError):
    code = "not_acyclic"


class BudgetExceeded(AffoldError):
    code = "budget_exceeded"


class NonIntegerResult(AffoldError):
    code = "non_integer_result"


class NonLaurentIntermediate(AffoldError):
    code = "non_laurent_intermediate"


class FormatError(AffoldError, ValueError):
    code = "format_error"
