"""Application service ports."""

from credible_networks.application.services.local_score_lookup import LocalScoreLookup

__all__ = ["LocalScoreLookup"]
