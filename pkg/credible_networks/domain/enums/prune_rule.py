"""Pruning rule enumeration."""

from enum import Enum


class PruneRule(str, Enum):
    """Rule that removed a candidate parent set (or stopped expansion above it)."""

    SUBSET_SCORE = "subset_score"
    BIC_PENALTY = "bic_penalty"
    BIC_INSTANTIATIONS = "bic_instantiations"
    BIC_CARDINALITY = "bic_cardinality"
    BIC_ENTROPY = "bic_entropy"
    BDEU_POSITIVE_COUNTS = "bdeu_positive_counts"
    PARENT_CAP = "parent_cap"


class CandidateStatus(str, Enum):
    """Outcome for a visited parent set."""

    KEPT = "kept"
    PRUNED = "pruned"
