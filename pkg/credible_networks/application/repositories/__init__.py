"""Repository interfaces (abstractions)."""

from credible_networks.application.repositories.dataset_repository import DatasetRepository
from credible_networks.application.repositories.local_score_repository import (
    LocalScoreRepository,
)

__all__ = ["DatasetRepository", "LocalScoreRepository"]
