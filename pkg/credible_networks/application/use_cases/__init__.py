"""Use cases."""

from credible_networks.application.use_cases.enumerate_credible import EnumerateCredibleUseCase
from credible_networks.application.use_cases.generate_candidates import (
    GenerateCandidatesUseCase,
    rule_bic_entropy,
)
from credible_networks.application.use_cases.learn_credible_set import (
    LearnCredibleSetUseCase,
    LearnResult,
)
from credible_networks.application.use_cases.partition_mec import PartitionMecUseCase, mec_key
from credible_networks.application.use_cases.score_report import (
    DeviationRow,
    ScoreReportUseCase,
    SweepRow,
    widest_epsilon,
)
from credible_networks.application.use_cases.solve_optimum import SolveOptimumUseCase, SolveResult
from credible_networks.application.use_cases.verify_credible import (
    VerificationResult,
    VerifyCredibleUseCase,
)

__all__ = [
    "DeviationRow",
    "EnumerateCredibleUseCase",
    "GenerateCandidatesUseCase",
    "LearnCredibleSetUseCase",
    "LearnResult",
    "PartitionMecUseCase",
    "ScoreReportUseCase",
    "SolveOptimumUseCase",
    "SolveResult",
    "SweepRow",
    "VerificationResult",
    "VerifyCredibleUseCase",
    "mec_key",
    "rule_bic_entropy",
    "widest_epsilon",
]
