"""Domain enums."""

from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.domain.enums.epsilon_origin import EpsilonOrigin
from credible_networks.domain.enums.evidence_strength import EvidenceStrength
from credible_networks.domain.enums.prune_rule import CandidateStatus, PruneRule
from credible_networks.domain.enums.score_function import ScoreFunction

__all__ = [
    "CandidateStatus",
    "DataFormat",
    "EpsilonOrigin",
    "EvidenceStrength",
    "PruneRule",
    "ScoreFunction",
]
