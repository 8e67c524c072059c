"""Use case for score-deviation curves and Bayes factor sweeps."""

from typing import Literal, Optional

from pydantic import BaseModel, Field

from credible_networks.application.use_cases.partition_mec import PartitionMecUseCase
from credible_networks.config import settings
from credible_networks.domain.entities.credible_set import (
    CredibleSet,
    EpsilonSpec,
    bayes_factor_against_optimum,
    evidence_strength,
)
from credible_networks.domain.enums.evidence_strength import EvidenceStrength


class DeviationRow(BaseModel):
    """One point of the deviation curve, or a reference line at ln BF."""

    kind: Literal["network", "reference"]
    rank: Optional[int] = Field(None, ge=1, description="1-based rank (network rows only)")
    deviation: float = Field(..., ge=0, description="score - OPT, or ln BF for reference rows")
    bayes_factor: float = Field(..., ge=1)
    evidence: EvidenceStrength


class SweepRow(BaseModel):
    """Credible set size at one Bayes factor threshold."""

    bf: float
    epsilon: float
    networks: int
    classes: int
    complete: bool = Field(..., description="Every network within this window was collected")


class ScoreReportUseCase:
    """Use case for reports derived from one enumeration at the widest window."""

    def __init__(self, partitioner: PartitionMecUseCase) -> None:
        """Initialize ScoreReportUseCase.

        Args:
            partitioner: Equivalence-class partitioner used for class counts
        """
        self._partitioner = partitioner

    def deviation_curve(
        self, credible_set: CredibleSet, bayes_factors: list[float]
    ) -> list[DeviationRow]:
        """Deviation from OPT by rank, followed by one reference row per Bayes factor.

        Raises:
            EpsilonDomainError: If a Bayes factor is not > 1
        """
        opt = credible_set.opt_score
        rows = []
        for rank, dag in enumerate(credible_set.networks, start=1):
            bf = bayes_factor_against_optimum(dag.score, opt)
            rows.append(
                DeviationRow(
                    kind="network",
                    rank=rank,
                    deviation=max(dag.score - opt, 0.0),
                    bayes_factor=bf,
                    evidence=evidence_strength(bf),
                )
            )
        for bf in bayes_factors:
            rows.append(
                DeviationRow(
                    kind="reference",
                    deviation=EpsilonSpec.bayes_factor(bf).resolve(),
                    bayes_factor=bf,
                    evidence=evidence_strength(bf),
                )
            )
        return rows

    def sweep_summary(
        self, credible_set: CredibleSet, bayes_factors: list[float]
    ) -> list[SweepRow]:
        """Nested credible sets at each Bayes factor, filtered from the widest enumeration.

        Raises:
            EpsilonDomainError: If a Bayes factor is not > 1
        """
        tol = settings.score_tolerance
        opt = credible_set.opt_score
        rows = []
        for bf in bayes_factors:
            epsilon = EpsilonSpec.bayes_factor(bf).resolve()
            members = credible_set.within(epsilon + tol)
            nested = CredibleSet(
                networks=members,
                opt_score=opt,
                epsilon=min(epsilon, credible_set.epsilon),
                truncated=credible_set.truncated,
                limit=credible_set.limit,
            )
            partition = self._partitioner.execute(nested)
            complete = epsilon <= credible_set.epsilon + tol and (
                not credible_set.truncated
                or credible_set.worst_score > opt + epsilon + tol
            )
            rows.append(
                SweepRow(
                    bf=bf,
                    epsilon=epsilon,
                    networks=len(members),
                    classes=len(partition.classes),
                    complete=complete,
                )
            )
        return rows


def widest_epsilon(epsilon: Optional[float], bayes_factors: list[float]) -> float:
    """Largest window needed: the explicit epsilon or ln of the largest Bayes factor."""
    candidates = [EpsilonSpec.bayes_factor(bf).resolve() for bf in bayes_factors]
    if epsilon is not None:
        candidates.append(epsilon)
    if not candidates:
        return 0.0
    return max(candidates)
