"""Domain entities."""

from credible_networks.domain.entities.candidates import (
    CandidateEntry,
    CandidateList,
    CandidateLists,
    PruneStats,
)
from credible_networks.domain.entities.contingency import ContingencyTable
from credible_networks.domain.entities.credible_set import CredibleSet, EpsilonSpec
from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.dataset import Dataset, Variable
from credible_networks.domain.entities.local_score import LocalScore, ScoreConfig
from credible_networks.domain.entities.mec import ArcStatistic, MecClass, MecKey, MecPartition
from credible_networks.domain.entities.subset_tables import SubsetTables

__all__ = [
    "ArcStatistic",
    "CandidateEntry",
    "CandidateList",
    "CandidateLists",
    "ContingencyTable",
    "CredibleSet",
    "Dag",
    "Dataset",
    "EpsilonSpec",
    "LocalScore",
    "MecClass",
    "MecKey",
    "MecPartition",
    "PruneStats",
    "ScoreConfig",
    "SubsetTables",
    "Variable",
]
