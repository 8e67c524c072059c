"""Infrastructure services."""

from credible_networks.infrastructure.services.counting_service import CountingService
from credible_networks.infrastructure.services.scoring_service import ScoringService

__all__ = ["CountingService", "ScoringService"]
