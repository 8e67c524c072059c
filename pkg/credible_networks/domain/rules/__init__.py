"""Domain rules."""

from credible_networks.domain.rules.pruning_rules import (
    bic_entropy_bound_exceeded,
    bic_parent_limit,
    rule_bdeu_positive_counts,
    rule_bic_cardinality,
    rule_bic_instantiations,
    rule_bic_penalty,
    rule_subset_eps,
)

__all__ = [
    "bic_entropy_bound_exceeded",
    "bic_parent_limit",
    "rule_bdeu_positive_counts",
    "rule_bic_cardinality",
    "rule_bic_instantiations",
    "rule_bic_penalty",
    "rule_subset_eps",
]
