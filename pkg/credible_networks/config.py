"""Application configuration using Pydantic Settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-wide defaults loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="CREDIBLE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application settings
    environment: str = Field(default="development")
    log_level: str = Field(default="WARNING")
    app_name: str = "credible-networks"
    app_version: str = "0.1.0"

    # Scoring
    default_alpha: float = Field(
        default=1.0,
        gt=0,
        description="BDeu equivalent sample size",
    )
    max_parent_instantiations: int = Field(
        default=2**60,
        description="Largest parent instantiation count r_Pi accepted by the scorers",
    )

    # Pruning
    bdeu_parent_cap: int = Field(
        default=8,
        ge=0,
        description="Parent-set cardinality cap for BDeu lattices (no data-driven bound exists)",
    )
    jobs: int = Field(
        default=1,
        ge=1,
        description="Worker threads used for candidate generation",
    )

    # Solver
    counting_limit: int = Field(
        default=150_000,
        ge=1,
        description="Maximum number of credible networks collected",
    )
    dp_variable_limit: int = Field(
        default=24,
        ge=1,
        description="Largest variable count accepted by the subset dynamic program",
    )
    score_tolerance: float = Field(
        default=1e-9,
        ge=0,
        description="Absolute slack applied to every score comparison",
    )


settings = Settings()
