"""Exception types raised by the library."""
from __future__ import annotations


class DihedralCodesError(Exception):
    """Base class; `code` is the short tag used in CLI error objects."""

    code = "Error"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail


class NonPrime(DihedralCodesError):
    code = "NonPrime"


class NotBasicIrreducible(DihedralCodesError):
    code = "NotBasicIrreducible"


class NotAUnit(DihedralCodesError):
    code = "NotAUnit"


class BadSubfieldDegree(DihedralCodesError):
    code = "BadSubfieldDegree"


class NotCoprime(DihedralCodesError):
    code = "NotCoprime"


class ZeroPolynomial(DihedralCodesError):
    code = "ZeroPolynomial"


class InternalBezoutFailure(DihedralCodesError):
    code = "InternalBezoutFailure"


class IndexOutOfRange(DihedralCodesError):
    code = "IndexOutOfRange"


class KindMismatch(DihedralCodesError):
    code = "KindMismatch"


class MismatchWithEnumeration(DihedralCodesError):
    code = "MismatchWithEnumeration"


class ComponentMismatch(DihedralCodesError):
    code = "ComponentMismatch"


class IncompleteSelection(DihedralCodesError):
    code = "IncompleteSelection"


class TooLarge(DihedralCodesError):
    code = "TooLarge"


class LeeUndefined(DihedralCodesError):
    code = "LeeUndefined"


class SchemaError(DihedralCodesError):
    code = "SchemaError"

    def __init__(self, detail: str = "", pointer: str = ""):
        super().__init__(f"{pointer}: {detail}" if pointer else detail)
        self.pointer = pointer
