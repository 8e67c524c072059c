"""Epsilon-relaxed pruning predicates for candidate parent sets.

Every predicate answers "may this set (and possibly its supersets) be
discarded without losing a network scoring within epsilon of optimal?".
Scores follow the lower-is-better convention. All comparisons are strict
so that networks exactly at OPT + epsilon survive.
"""

import math


def rule_subset_eps(sigma_subset: float, sigma_superset: float, eps: float) -> bool:
    """A superset scoring more than epsilon worse than one of its subsets.

    Prunes only the superset itself; its own supersets are still visited.
    """
    return sigma_subset + eps < sigma_superset


def rule_bic_penalty(sigma_subset: float, penalty_superset: float, eps: float) -> bool:
    """BIC: the superset's penalty alone exceeds a subset's full score plus epsilon.

    The negated log-likelihood is non-negative and penalties grow with parents,
    so the superset and every superset of it are pruned.
    """
    return sigma_subset - penalty_superset + eps < 0


def rule_bic_instantiations(
    r_parent_inst: int, r_child: int, n_instances: int, w: float, eps: float
) -> bool:
    """BIC: adding any parent to this set costs more penalty than it can gain.

    The likelihood gain from extra parents is at most N log r_i while the extra
    penalty is at least r_Pi (r_i - 1) w. When true, every proper superset is
    pruned; the set itself stays.
    """
    return r_parent_inst * (r_child - 1) * w - n_instances * math.log(r_child) > eps


def bic_parent_limit(n_instances: int, eps: float) -> int:
    """Largest BIC parent-set cardinality worth scoring: ceil(log2 N + eps)."""
    return math.ceil(math.log2(n_instances) + eps)


def rule_bic_cardinality(parent_count: int, n_instances: int, eps: float) -> bool:
    """BIC: the set has more elements than the data can ever support."""
    return parent_count > bic_parent_limit(n_instances, eps)


def bic_entropy_bound_exceeded(
    n_instances: int,
    h_child_given: float,
    h_new_given: float,
    r_new: int,
    t_parents: int,
    w: float,
    eps: float,
) -> bool:
    """BIC: extending Pi by V_j costs more penalty than the information it can add.

    The likelihood gain of adding V_j to any superset of Pi is bounded by
    N * min{H(V_i | Pi), H(V_j | Pi)}, while the extra penalty is at least
    (r_j - 1) * t(Pi) * w. When the penalty wins by more than epsilon, Pi + V_j
    and all its supersets are pruned.
    """
    gain = n_instances * min(h_child_given, h_new_given)
    return (r_new - 1) * t_parents * w - gain > eps


def rule_bdeu_positive_counts(
    sigma_subset: float, positive_count_superset: int, r_child: int, eps: float
) -> bool:
    """BDeu: a subset beats the superset's certified lower bound by more than epsilon.

    BDeu(Pi') >= r_i^+(Pi') log r_i, and r_i^+ never decreases when parents are
    added, so the superset and every superset of it are pruned.
    """
    return sigma_subset + eps < positive_count_superset * math.log(r_child)
