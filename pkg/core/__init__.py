"""
Core infrastructure for the partial weight one search toolkit.
"""

from core.exceptions import (
    PW1Exception,
    ArithmeticException,
    ZeroElementError,
    DivisionByZeroError,
    MissingRadicalError,
    NotAUnitError,
    NarrowClassNumberError,
    RayClassException,
    TooLargeError,
    NotCoprimeError,
    UnsupportedCharacterOrderError,
    SeriesException,
    BoundTooLargeError,
    MetadataMismatchError,
    NonInvertibleConstantError,
    OddWeightDifferenceError,
    OutOfBoxError,
    InsufficientBoundError,
    HeckeException,
    NotPrimeError,
    BadLevelRelationError,
    MissingEigenvalueError,
    NotNormalizedError,
    EisensteinException,
    NotTotallyOddError,
    NumericMismatchError,
    SearchException,
    RankDeficientError,
    DataException,
    FixtureParseError,
    FixtureValidationError,
    ValidationException,
    InvalidInputError,
    ConfigurationError,
)
from core.logging_config import configure_logging, get_logger

__all__ = [
    "PW1Exception",
    "ArithmeticException",
    "ZeroElementError",
    "DivisionByZeroError",
    "MissingRadicalError",
    "NotAUnitError",
    "NarrowClassNumberError",
    "RayClassException",
    "TooLargeError",
    "NotCoprimeError",
    "UnsupportedCharacterOrderError",
    "SeriesException",
    "BoundTooLargeError",
    "MetadataMismatchError",
    "NonInvertibleConstantError",
    "OddWeightDifferenceError",
    "OutOfBoxError",
    "InsufficientBoundError",
    "HeckeException",
    "NotPrimeError",
    "BadLevelRelationError",
    "MissingEigenvalueError",
    "NotNormalizedError",
    "EisensteinException",
    "NotTotallyOddError",
    "NumericMismatchError",
    "SearchException",
    "RankDeficientError",
    "DataException",
    "FixtureParseError",
    "FixtureValidationError",
    "ValidationException",
    "InvalidInputError",
    "ConfigurationError",
    "configure_logging",
    "get_logger",
]
