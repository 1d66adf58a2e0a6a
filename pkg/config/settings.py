"""
Configuration settings for the partial weight one search toolkit.
Uses Pydantic Settings for type-safe configuration with validation.
"""

from typing import List, Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


def split_schedule(text: str) -> List[str]:
    """Non-empty ';'-separated entries of a bound schedule."""
    return [entry.strip() for entry in text.split(";") if entry.strip()]


class Settings(BaseSettings):
    """
    Toolkit settings loaded from PW1_* environment variables or a .env file.

    Pydantic validates types and provides clear error messages for misconfigurations.
    """

    model_config = SettingsConfigDict(
        env_prefix="PW1_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Fixtures
    FIXTURES: str = Field(
        default="fixtures",
        description="Default directory searched for newform, space and character fixtures",
    )

    # Application
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="INFO",
        description="Logging level",
    )

    BASE_FIELD_D: int = Field(
        default=5,
        description="Radicand of the default real quadratic base field",
        ge=2,
    )

    # ==================== Exact Arithmetic Guards ====================

    RESIDUE_NORM_GUARD: int = Field(
        default=10**6,
        description="Largest modulus norm for which (O_F/n)^x is enumerated explicitly",
        ge=1,
    )
    GENERATOR_SEARCH_LIMIT: int = Field(
        default=10**5,
        description="Coordinate bound when searching generators of prime ideals",
        ge=10,
    )

    # ==================== L-value Cross-check ====================

    L_VALUE_TOLERANCE: float = Field(
        default=1e-8,
        description="Maximum allowed |exact - numeric| for L(psi, 0)",
        gt=0,
    )
    NUMERIC_DPS: int = Field(
        default=30,
        description="mpmath decimal precision for the functional-equation sum",
        ge=15,
    )
    INTERVAL_DPS: int = Field(
        default=50,
        description="mpmath.iv decimal precision for certified embeddings",
        ge=25,
    )

    # ==================== Search Configuration ====================

    HECKE_BOUND_SCALING: Literal["embedding", "norm"] = Field(
        default="embedding",
        description="Per-embedding bound shrinking, or the conservative norm scaling",
    )
    BOUND_SCHEDULE: str = Field(
        default="bn:24;bn:26;bn:28",
        description="Semicolon separated rerun schedule of bounds ('bn:N' or 'b1,b2')",
    )
    HECKE_ITERATIONS: int = Field(
        default=1,
        description="Number of nested Hecke intersections V, V cap T V, ...",
        ge=1,
        le=10,
    )

    @field_validator("BOUND_SCHEDULE")
    @classmethod
    def validate_schedule(cls, v: str) -> str:
        """Each schedule entry must be a 'bn:N' shorthand or a 'b1,b2' pair."""
        entries = split_schedule(v)
        if not entries:
            raise ValueError("BOUND_SCHEDULE must contain at least one bound")
        for entry in entries:
            if entry.startswith("bn:"):
                if not entry[3:].isdigit() or int(entry[3:]) < 1:
                    raise ValueError(f"bad b(n) shorthand {entry!r}")
            elif entry.count(",") != 1:
                raise ValueError(f"bad bound pair {entry!r}")
        return v

    @property
    def bound_schedule(self) -> List[str]:
        """Schedule entries as a list, unparsed."""
        return split_schedule(self.BOUND_SCHEDULE)


# Global settings instance
settings = Settings()
