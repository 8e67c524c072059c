"""Dependency container for command-line use cases."""

from credible_networks.application.repositories.dataset_repository import DatasetRepository
from credible_networks.application.repositories.local_score_repository import (
    LocalScoreRepository,
)
from credible_networks.application.use_cases.enumerate_credible import EnumerateCredibleUseCase
from credible_networks.application.use_cases.learn_credible_set import LearnCredibleSetUseCase
from credible_networks.application.use_cases.partition_mec import PartitionMecUseCase
from credible_networks.application.use_cases.score_report import ScoreReportUseCase
from credible_networks.application.use_cases.solve_optimum import SolveOptimumUseCase
from credible_networks.application.use_cases.verify_credible import VerifyCredibleUseCase
from credible_networks.infrastructure.repositories.dataset_repository_impl import (
    DatasetRepositoryImpl,
)
from credible_networks.infrastructure.repositories.score_file_repository_impl import (
    ScoreFileRepositoryImpl,
)

# Stateless singletons
_dataset_repository: DatasetRepository = DatasetRepositoryImpl()
_score_file_repository: LocalScoreRepository = ScoreFileRepositoryImpl()
_partitioner = PartitionMecUseCase()


def get_dataset_repository() -> DatasetRepository:
    """Get dataset repository instance."""
    return _dataset_repository


def get_score_file_repository() -> LocalScoreRepository:
    """Get score file repository instance."""
    return _score_file_repository


def get_learn_use_case() -> LearnCredibleSetUseCase:
    """Get pipeline use case instance."""
    return LearnCredibleSetUseCase(
        SolveOptimumUseCase(), EnumerateCredibleUseCase(), _partitioner
    )


def get_report_use_case() -> ScoreReportUseCase:
    """Get report use case instance."""
    return ScoreReportUseCase(_partitioner)


def get_verify_use_case() -> VerifyCredibleUseCase:
    """Get verification use case instance."""
    return VerifyCredibleUseCase()
