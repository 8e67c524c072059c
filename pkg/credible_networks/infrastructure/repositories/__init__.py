"""Repository implementations."""

from credible_networks.infrastructure.repositories.dataset_repository_impl import (
    DatasetRepositoryImpl,
)
from credible_networks.infrastructure.repositories.score_file_repository_impl import (
    ScoreFileRepositoryImpl,
)

__all__ = ["DatasetRepositoryImpl", "ScoreFileRepositoryImpl"]
