"""
Custom exception hierarchy for the partial weight one search toolkit.
Provides structured error handling with proper context.
"""

from typing import Optional, Dict, Any


class PW1Exception(Exception):
    """Base exception for all toolkit errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize exception with message and optional context.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code
            context: Additional context information
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.context = context or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for logging/CLI output."""
        return {
            "error": self.error_code,
            "message": self.message,
            "context": {key: str(value) for key, value in self.context.items()},
        }


# ==================== Arithmetic Exceptions ====================


class ArithmeticException(PW1Exception):
    """Base exception for exact field arithmetic errors."""

    pass


class ZeroElementError(ArithmeticException):
    """Raised when an operation needs a nonzero field element."""

    def __init__(self, operation: str):
        super().__init__(
            message=f"{operation} is undefined for the zero element",
            error_code="ZERO_ELEMENT",
            context={"operation": operation},
        )


class DivisionByZeroError(ArithmeticException):
    """Raised when inverting zero in a coefficient field."""

    def __init__(self, field: str):
        super().__init__(
            message=f"Division by zero in {field}",
            error_code="DIVISION_BY_ZERO",
            context={"field": field},
        )


class MissingRadicalError(ArithmeticException):
    """Raised when a coefficient field lacks a radical an operation needs."""

    def __init__(self, radicand: int, radicands: Any):
        super().__init__(
            message=f"Coefficient field with radicands {radicands} does not contain sqrt({radicand})",
            error_code="MISSING_RADICAL",
            context={"radicand": radicand, "radicands": radicands},
        )


class NotAUnitError(ArithmeticException):
    """Raised when a unit was expected."""

    def __init__(self, element: Any, reason: str = "norm is not +-1"):
        super().__init__(
            message=f"{element} is not a unit: {reason}",
            error_code="NOT_A_UNIT",
            context={"element": element, "reason": reason},
        )


class NarrowClassNumberError(ArithmeticException):
    """Raised when the base field cannot have narrow class number one."""

    def __init__(self, d: int, reason: str):
        super().__init__(
            message=f"Q(sqrt({d})) rejected: {reason}",
            error_code="NARROW_CLASS_NUMBER",
            context={"d": d, "reason": reason},
        )


# ==================== Ray Class Exceptions ====================


class RayClassException(PW1Exception):
    """Base exception for ray class group and character errors."""

    pass


class TooLargeError(RayClassException):
    """Raised when a residue group is too large to enumerate."""

    def __init__(self, norm: int, guard: int):
        super().__init__(
            message=f"Residue ring of norm {norm} exceeds the enumeration guard {guard}",
            error_code="TOO_LARGE",
            context={"norm": norm, "guard": guard},
        )


class NotCoprimeError(RayClassException):
    """Raised when a character is evaluated at an ideal sharing a factor with its conductor."""

    def __init__(self, ideal: Any, modulus: Any):
        super().__init__(
            message=f"Ideal {ideal} is not coprime to {modulus}",
            error_code="NOT_COPRIME",
            context={"ideal": ideal, "modulus": modulus},
        )


class UnsupportedCharacterOrderError(RayClassException):
    """Raised for character values outside the multiquadratic roots of unity."""

    def __init__(self, order: int):
        super().__init__(
            message=f"Character order {order} is not in {{1, 2, 3, 4, 6}}",
            error_code="UNSUPPORTED_CHARACTER_ORDER",
            context={"order": order},
        )


# ==================== Series Exceptions ====================


class SeriesException(PW1Exception):
    """Base exception for truncated Fourier expansion errors."""

    pass


class BoundTooLargeError(SeriesException):
    """Raised when truncating to a box that is not contained in the current one."""

    def __init__(self, requested: Any, available: Any):
        super().__init__(
            message=f"Bound {requested} exceeds available bound {available}",
            error_code="BOUND_TOO_LARGE",
            context={"requested": requested, "available": available},
        )


class MetadataMismatchError(SeriesException):
    """Raised when two series disagree on field, bound, weight or character."""

    def __init__(self, attribute: str, left: Any, right: Any):
        super().__init__(
            message=f"Series disagree on {attribute}: {left} != {right}",
            error_code="METADATA_MISMATCH",
            context={"attribute": attribute, "left": left, "right": right},
        )


class NonInvertibleConstantError(SeriesException):
    """Raised when dividing by a series with zero constant term."""

    def __init__(self):
        super().__init__(
            message="Divisor series has zero constant term",
            error_code="NON_INVERTIBLE_CONSTANT",
        )


class OddWeightDifferenceError(SeriesException):
    """Raised when (k1 - k2)/2 is needed but k1 and k2 differ in parity."""

    def __init__(self, k1: int, k2: int):
        super().__init__(
            message=f"Weight [{k1},{k2}] has odd difference",
            error_code="ODD_WEIGHT_DIFFERENCE",
            context={"k1": k1, "k2": k2},
        )


class OutOfBoxError(SeriesException):
    """Raised when no representative of an ideal lies in the truncation box."""

    def __init__(self, ideal: Any, bound: Any):
        super().__init__(
            message=f"No generator of {ideal} lies inside bound {bound}",
            error_code="OUT_OF_BOX",
            context={"ideal": ideal, "bound": bound},
        )


class InsufficientBoundError(SeriesException):
    """Raised when an input box cannot cover the requested output box."""

    def __init__(self, needed: Any, available: Any, reason: str = ""):
        super().__init__(
            message=f"Bound {available} cannot cover {needed}" + (f": {reason}" if reason else ""),
            error_code="INSUFFICIENT_BOUND",
            context={"needed": needed, "available": available},
        )


# ==================== Hecke Exceptions ====================


class HeckeException(PW1Exception):
    """Base exception for Hecke operator and newform errors."""

    pass


class NotPrimeError(HeckeException):
    """Raised when a Hecke operator is requested at a non-prime ideal."""

    def __init__(self, ideal: Any):
        super().__init__(
            message=f"{ideal} is not a prime ideal",
            error_code="NOT_PRIME",
            context={"ideal": ideal},
        )


class BadLevelRelationError(HeckeException):
    """Raised when q^2 divides the level."""

    def __init__(self, prime: Any, level: Any):
        super().__init__(
            message=f"{prime} squared divides level {level}",
            error_code="BAD_LEVEL_RELATION",
            context={"prime": prime, "level": level},
        )


class MissingEigenvalueError(HeckeException):
    """Raised when a newform record lacks a needed prime."""

    def __init__(self, prime: Any, source: str = ""):
        super().__init__(
            message=f"Missing eigenvalue at prime {prime}" + (f" in {source}" if source else ""),
            error_code="MISSING_EIGENVALUE",
            context={"prime": prime, "source": source},
        )


class NotNormalizedError(HeckeException):
    """Raised when a newform record has c((1)) != 1."""

    def __init__(self, value: Any):
        super().__init__(
            message=f"Newform is not normalized: c((1)) = {value}",
            error_code="NOT_NORMALIZED",
            context={"value": value},
        )


# ==================== Eisenstein Exceptions ====================


class EisensteinException(PW1Exception):
    """Base exception for Eisenstein series and L-value errors."""

    pass


class NotTotallyOddError(EisensteinException):
    """Raised when a weight one construction receives a character that is not totally odd."""

    def __init__(self, character: Any):
        super().__init__(
            message=f"Character {character} is not totally odd",
            error_code="NOT_TOTALLY_ODD",
            context={"character": character},
        )


class NumericMismatchError(EisensteinException):
    """Raised when the exact and numeric L-values disagree."""

    def __init__(self, exact: Any, numeric: Any, tolerance: float):
        super().__init__(
            message=f"Exact L-value {exact} disagrees with numeric {numeric} beyond {tolerance}",
            error_code="NUMERIC_MISMATCH",
            context={"exact": exact, "numeric": numeric, "tolerance": tolerance},
        )


# ==================== Search Exceptions ====================


class SearchException(PW1Exception):
    """Base exception for search pipeline errors."""

    pass


class RankDeficientError(SearchException):
    """Raised when truncated expansions have smaller rank than the declared dimension."""

    def __init__(self, rank: int, expected: int, bound: Any):
        super().__init__(
            message=f"Truncated basis has rank {rank} < {expected} at bound {bound}; increase the bound",
            error_code="RANK_DEFICIENT",
            context={"rank": rank, "expected": expected, "bound": bound},
        )


# ==================== Data Exceptions ====================


class DataException(PW1Exception):
    """Base exception for fixture loading and report emission."""

    pass


class FixtureParseError(DataException):
    """Raised when a fixture line cannot be parsed."""

    def __init__(self, source: str, line: int, field: str, reason: str):
        super().__init__(
            message=f"{source}:{line}: cannot parse {field}: {reason}",
            error_code="PARSE_ERROR",
            context={"source": source, "line": line, "field": field},
        )


class FixtureValidationError(DataException):
    """Raised when a parsed fixture violates a named invariant."""

    def __init__(self, source: str, invariant: str, reason: str):
        super().__init__(
            message=f"{source}: {invariant} violated: {reason}",
            error_code="VALIDATION_ERROR",
            context={"source": source, "invariant": invariant},
        )


# ==================== Validation Exceptions ====================


class ValidationException(PW1Exception):
    """Base exception for validation errors."""

    pass


class InvalidInputError(ValidationException):
    """Raised when input validation fails."""

    def __init__(self, field: str, reason: str):
        super().__init__(
            message=f"Invalid input: {field} - {reason}",
            error_code="INVALID_INPUT",
            context={"field": field, "reason": reason},
        )


class ConfigurationError(ValidationException):
    """Raised when configuration is invalid."""

    def __init__(self, setting: str, reason: str):
        super().__init__(
            message=f"Configuration error: {setting} - {reason}",
            error_code="CONFIGURATION_ERROR",
            context={"setting": setting, "reason": reason},
        )
