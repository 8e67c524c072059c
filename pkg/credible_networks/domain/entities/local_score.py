"""Scoring entities - score configuration and local scores."""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from credible_networks.domain.enums.score_function import ScoreFunction


class ScoreConfig(BaseModel):
    """Scoring function choice plus the data-derived penalty weight."""

    model_config = ConfigDict(frozen=True)

    function: ScoreFunction = Field(..., description="BIC or BDeu")
    alpha: float = Field(default=1.0, gt=0, description="BDeu equivalent sample size")
    sample_size: int = Field(..., ge=1, description="Number of instances N")

    @property
    def w(self) -> float:
        """Penalty weight (log N) / 2."""
        return math.log(self.sample_size) / 2.0

    @property
    def is_bic(self) -> bool:
        """Whether this configuration scores with BIC."""
        return self.function is ScoreFunction.BIC


class LocalScore(BaseModel):
    """Local score sigma(Pi_i) of one family; lower is better."""

    model_config = ConfigDict(frozen=True)

    child: int = Field(..., ge=0, description="Child variable index")
    parents: tuple[int, ...] = Field(..., description="Sorted parent indices")
    value: float = Field(..., description="Local score (lower is better)")
    log_lik: Optional[float] = Field(
        None, description="Maximised log-likelihood L(Pi_i) (BIC only)"
    )
    penalty: Optional[float] = Field(None, description="t(Pi_i) * w (BIC only)")
