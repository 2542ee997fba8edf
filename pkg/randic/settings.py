from functools import lru_cache
from typing import Optional, Tuple

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


LOG_LEVELS: Tuple[str, ...] = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """
    Central configuration loaded from environment (.env).
    Invalid values fail at import with a pydantic ValidationError.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",      # ignore unknown env vars safely
    )

    # ======================
    # META
    # ======================
    app_name: str = Field(default="randic", alias="RANDIC_APP_NAME")
    app_version: str = Field(default="1.0.0", alias="RANDIC_APP_VERSION")

    # ======================
    # VERIFICATION
    # ======================
    jobs: int = Field(
        default=1,
        ge=1,
        alias="RANDIC_JOBS",
        description="default number of worker processes for sweeps",
    )
    tolerance: float = Field(
        default=1e-9,
        gt=0,
        alias="RANDIC_TOLERANCE",
        description="relative tolerance for index comparisons",
    )

    # ======================
    # LIMITS
    # ======================
    canon_max_n: int = Field(default=12, ge=1, le=64, alias="RANDIC_CANON_MAX_N")
    chain_step_factor: int = Field(default=10, ge=1, alias="RANDIC_CHAIN_STEP_FACTOR")

    # ======================
    # LOGGING
    # ======================
    log_level: str = Field(default="WARNING", alias="RANDIC_LOG_LEVEL")
    log_file: Optional[str] = Field(
        default=None,
        alias="RANDIC_LOG_FILE",
        description="rotated log file; stderr only when unset",
    )

    @field_validator("log_level")
    @classmethod
    def known_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return level


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
