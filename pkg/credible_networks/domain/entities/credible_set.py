"""Credible set entities - the score window and the networks inside it."""

import math
import sys
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.enums.epsilon_origin import EpsilonOrigin
from credible_networks.domain.enums.evidence_strength import EvidenceStrength
from credible_networks.domain.exceptions.config_exceptions import EpsilonDomainError

_LOG_FLOAT_MAX = math.log(sys.float_info.max)


class EpsilonSpec(BaseModel):
    """How wide the score window above OPT is, and how it was given."""

    model_config = ConfigDict(frozen=True)

    origin: EpsilonOrigin = Field(..., description="epsilon, Bayes factor or factor rho")
    value: float = Field(..., description="epsilon, BF or rho depending on origin")

    @classmethod
    def direct(cls, epsilon: float) -> "EpsilonSpec":
        """Window given directly as epsilon."""
        return cls(origin=EpsilonOrigin.DIRECT, value=epsilon)

    @classmethod
    def bayes_factor(cls, bf: float) -> "EpsilonSpec":
        """Window given as a Bayes factor, epsilon = ln BF."""
        return cls(origin=EpsilonOrigin.BAYES_FACTOR, value=bf)

    @classmethod
    def factor(cls, rho: float) -> "EpsilonSpec":
        """Window given as a factor of optimal, epsilon = (rho - 1) * |OPT|."""
        return cls(origin=EpsilonOrigin.FACTOR, value=rho)

    @property
    def needs_optimum(self) -> bool:
        """Whether OPT must be known before epsilon can be resolved."""
        return self.origin is EpsilonOrigin.FACTOR and self.value != 1.0

    def resolve(self, opt: Optional[float] = None) -> float:
        """Resolve the window to a non-negative epsilon.

        Args:
            opt: Optimal network score (only needed for the factor origin)

        Returns:
            Non-negative epsilon in natural-log score units

        Raises:
            EpsilonDomainError: If the value lies outside its domain
        """
        if self.origin is EpsilonOrigin.DIRECT:
            if not self.value >= 0 or math.isinf(self.value):
                raise EpsilonDomainError(f"epsilon must be finite and >= 0, got {self.value}")
            return float(self.value)
        if self.origin is EpsilonOrigin.BAYES_FACTOR:
            if not self.value > 1 or math.isinf(self.value):
                raise EpsilonDomainError(f"Bayes factor must be > 1, got {self.value}")
            # log1p keeps precision for BF just above 1
            return math.log1p(self.value - 1.0)
        if not self.value >= 1 or math.isinf(self.value):
            raise EpsilonDomainError(f"rho must be >= 1, got {self.value}")
        if self.value == 1.0:
            return 0.0
        if opt is None:
            raise EpsilonDomainError("rho needs the optimal score to resolve epsilon")
        # |OPT|: imported score files may carry either sign
        return (self.value - 1.0) * abs(opt)


def resolve_epsilon(spec: EpsilonSpec, opt: Optional[float] = None) -> float:
    """Resolve an epsilon specification against the optimal score."""
    return spec.resolve(opt)


def evidence_strength(bf: float) -> EvidenceStrength:
    """Verbal category of a Bayes factor in favour of the better model.

    Raises:
        EpsilonDomainError: If bf < 1
    """
    if not bf >= 1:
        raise EpsilonDomainError(f"Bayes factor must be >= 1, got {bf}")
    if bf < 3:
        return EvidenceStrength.ANECDOTAL
    if bf < 20:
        return EvidenceStrength.POSITIVE
    if bf < 150:
        return EvidenceStrength.STRONG
    return EvidenceStrength.VERY_STRONG


def bayes_factor_against_optimum(score: float, opt: float) -> float:
    """Bayes factor by which the optimum is favoured over a network of this score."""
    deviation = max(score - opt, 0.0)
    if deviation > _LOG_FLOAT_MAX:
        return math.inf
    return math.exp(deviation)


class CredibleSet(BaseModel):
    """Every network with OPT <= score <= OPT + epsilon (up to the counting limit)."""

    model_config = ConfigDict(frozen=True)

    networks: tuple[Dag, ...] = Field(..., description="Sorted by (score, canonical key)")
    opt_score: float = Field(..., description="OPT")
    epsilon: float = Field(..., ge=0, description="Resolved epsilon")
    truncated: bool = Field(default=False, description="Counting limit was hit")
    limit: int = Field(..., ge=1, description="Counting limit used")

    @property
    def worst_score(self) -> float:
        """Largest score among collected networks."""
        return self.networks[-1].score if self.networks else self.opt_score

    def within(self, epsilon: float) -> tuple[Dag, ...]:
        """Members whose score is within a narrower window (nested credible set)."""
        bound = self.opt_score + epsilon
        return tuple(g for g in self.networks if g.score <= bound)

    def __len__(self) -> int:
        """Number of collected networks."""
        return len(self.networks)
