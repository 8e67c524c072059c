"""Per-run options (request model of the command line)."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from credible_networks.config import settings
from credible_networks.domain.entities.credible_set import EpsilonSpec
from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.domain.enums.score_function import ScoreFunction
from credible_networks.domain.exceptions.config_exceptions import (
    ConflictingEpsilonOptionsError,
    MissingEpsilonOptionError,
)


class RunConfig(BaseModel):
    """Options shared by the score, solve and report commands."""

    model_config = ConfigDict(frozen=True)

    input: Path = Field(..., description="Dataset or score file")
    format: Optional[DataFormat] = Field(None, description="Input format; inferred when omitted")
    function: ScoreFunction = Field(default=ScoreFunction.BIC)
    alpha: float = Field(default_factory=lambda: settings.default_alpha, gt=0)
    epsilon: Optional[float] = Field(None, description="Score window epsilon")
    bf: Optional[float] = Field(None, description="Score window as a Bayes factor")
    rho: Optional[float] = Field(None, description="Score window as a factor of OPT")
    limit: int = Field(default_factory=lambda: settings.counting_limit, ge=1)
    max_parents: Optional[int] = Field(None, ge=0, description="Parent-set cardinality cap")
    out: Optional[Path] = Field(None, description="Output file (score) or directory")
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)
    seed: Optional[int] = Field(None, description="Seed for randomised tooling (unused by core)")
    sweep: list[float] = Field(default_factory=list, description="Bayes factors for report")
    require_epsilon: bool = Field(default=True, exclude=True)

    @model_validator(mode="after")
    def validate_epsilon_options(self) -> "RunConfig":
        """Exactly one of epsilon, Bayes factor or rho, each inside its domain."""
        given = [v for v in (self.epsilon, self.bf, self.rho) if v is not None]
        if len(given) > 1:
            raise ConflictingEpsilonOptionsError()
        if not given and self.require_epsilon:
            raise MissingEpsilonOptionError()
        spec = self.epsilon_spec()
        if spec is not None:
            spec.resolve(0.0)
        for bf in self.sweep:
            EpsilonSpec.bayes_factor(bf).resolve()
        return self

    @property
    def input_format(self) -> DataFormat:
        """Explicit format or the one implied by the file extension."""
        return self.format or DataFormat.from_path(str(self.input))

    def epsilon_spec(self) -> Optional[EpsilonSpec]:
        """The score window as given on the command line."""
        if self.epsilon is not None:
            return EpsilonSpec.direct(self.epsilon)
        if self.bf is not None:
            return EpsilonSpec.bayes_factor(self.bf)
        if self.rho is not None:
            return EpsilonSpec.factor(self.rho)
        return None
