"""Use case for generating pruned candidate parent sets."""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple, Optional

from credible_networks.config import settings
from credible_networks.domain.entities.candidates import (
    CandidateEntry,
    CandidateList,
    CandidateLists,
    PruneStats,
)
from credible_networks.domain.entities.local_score import ScoreConfig
from credible_networks.domain.enums.prune_rule import CandidateStatus, PruneRule
from credible_networks.domain.exceptions.solver_exceptions import InvalidQueryError
from credible_networks.domain.rules.pruning_rules import (
    bic_entropy_bound_exceeded,
    bic_parent_limit,
    rule_bdeu_positive_counts,
    rule_bic_instantiations,
    rule_bic_penalty,
    rule_subset_eps,
)
from credible_networks.infrastructure.services.counting_service import CountingService
from credible_networks.infrastructure.services.scoring_service import ScoringService
from credible_networks.logger import get_logger

logger = get_logger(__name__)


def rule_bic_entropy(
    counting: CountingService,
    child: int,
    parents: tuple[int, ...],
    new_parent: int,
    config: ScoreConfig,
    eps: float,
) -> bool:
    """Whether parents + new_parent (and all its supersets) can be pruned under BIC.

    Args:
        counting: Counting service over the dataset
        child: Child variable index
        parents: Current parent set
        new_parent: Variable considered for addition
        config: BIC score configuration
        eps: Relaxation

    Raises:
        InvalidQueryError: If new_parent is the child or already a parent
    """
    if new_parent == child or new_parent in parents:
        raise InvalidQueryError(f"{new_parent} cannot extend parents {list(parents)} of {child}")
    arities = counting.dataset.arities
    h_parents = counting.entropy(parents)
    h_child = max(0.0, counting.entropy((*parents, child)) - h_parents)
    h_new = max(0.0, counting.entropy((*parents, new_parent)) - h_parents)
    t_parents = math.prod(arities[p] for p in parents) * (arities[child] - 1)
    return bic_entropy_bound_exceeded(
        n_instances=config.sample_size,
        h_child_given=h_child,
        h_new_given=h_new,
        r_new=arities[new_parent],
        t_parents=t_parents,
        w=config.w,
        eps=eps,
    )


class _Node(NamedTuple):
    """Frontier entry: best score among the set and its subsets."""

    best: float


class GenerateCandidatesUseCase:
    """Use case for scoring and pruning the parent-set lattice of every variable.

    Each lattice is walked layer by layer. A set is visited only when all of
    its immediate subsets are in the frontier, so superset-pruning rules act
    by keeping a set out of the frontier.
    """

    def __init__(self, counting: CountingService) -> None:
        """Initialize GenerateCandidatesUseCase.

        Args:
            counting: Counting service over the dataset to learn from
        """
        self._counting = counting

    def execute(
        self,
        config: ScoreConfig,
        epsilon: float,
        hard_cap: Optional[int] = None,
        jobs: int = 1,
    ) -> CandidateLists:
        """Execute the candidate generation use case.

        Args:
            config: Score configuration
            epsilon: Score window the lists must stay sound for
            hard_cap: Parent-set cardinality cap (BDeu defaults to settings.bdeu_parent_cap)
            jobs: Worker threads, one child variable per task

        Returns:
            CandidateLists with one list per variable

        Raises:
            ValueError: If epsilon is negative or jobs < 1
        """
        if not epsilon >= 0:
            raise ValueError("epsilon must be non-negative")
        if jobs < 1:
            raise ValueError("jobs must be positive")
        dataset = self._counting.dataset
        children = range(dataset.n_variables)
        if jobs == 1:
            lists = [self._generate(c, config, epsilon, hard_cap) for c in children]
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                lists = list(
                    pool.map(lambda c: self._generate(c, config, epsilon, hard_cap), children)
                )
        result = CandidateLists(variables=dataset.names, lists=tuple(lists))
        stats = result.stats
        logger.info(
            "Candidate parent sets generated",
            function=config.function.value,
            epsilon=epsilon,
            kept=sum(len(cl.kept()) for cl in lists),
            scored=stats.scored,
            skipped=stats.skipped,
        )
        return result

    def _cap(
        self, config: ScoreConfig, eps: float, hard_cap: Optional[int]
    ) -> tuple[int, PruneRule, bool]:
        """Effective cardinality cap, the rule it counts as, and whether a user cap binds."""
        full = self._counting.dataset.n_variables - 1
        user_cap = hard_cap
        if user_cap is None and not config.is_bic:
            user_cap = settings.bdeu_parent_cap
        data_cap = min(full, bic_parent_limit(config.sample_size, eps)) if config.is_bic else full
        if user_cap is not None and user_cap < data_cap:
            return max(user_cap, 0), PruneRule.PARENT_CAP, True
        rule = PruneRule.BIC_CARDINALITY if config.is_bic else PruneRule.PARENT_CAP
        return data_cap, rule, False

    def _generate(
        self, child: int, config: ScoreConfig, epsilon: float, hard_cap: Optional[int]
    ) -> CandidateList:
        counting = self._counting
        dataset = counting.dataset
        arities = dataset.arities
        r_child = arities[child]
        n_instances = config.sample_size
        eps = epsilon + settings.score_tolerance
        cap, cap_rule, user_bound = self._cap(config, eps, hard_cap)
        stats = PruneStats(cap=cap)
        candidates = [v for v in range(dataset.n_variables) if v != child]

        def extends(parents: tuple[int, ...]) -> bool:
            return config.is_bic and rule_bic_instantiations(
                math.prod(arities[p] for p in parents), r_child, n_instances, config.w, eps
            )

        empty = ScoringService.local_score(counting.counts(child, ()), config)
        stats.scored += 1
        entries = [CandidateEntry(parents=(), score=empty)]
        frontier: dict[tuple[int, ...], _Node] = {}
        if extends(()) and cap > 0:
            stats.count(PruneRule.BIC_INSTANTIATIONS)
        else:
            frontier[()] = _Node(best=empty.value)

        for size in range(1, cap + 1):
            layer: dict[tuple[int, ...], _Node] = {}
            for parents, node in frontier.items():
                start = candidates.index(parents[-1]) + 1 if parents else 0
                for new_parent in candidates[start:]:
                    superset = (*parents, new_parent)
                    subsets = [superset[:i] + superset[i + 1 :] for i in range(size)]
                    if any(s not in frontier for s in subsets):
                        stats.skipped += 1
                        continue
                    bss = min(frontier[s].best for s in subsets)

                    rule = self._prune_before_scoring(child, superset, bss, config, eps)
                    table = None
                    if rule is None and not config.is_bic:
                        table = counting.counts(child, superset)
                        if rule_bdeu_positive_counts(bss, table.positive_count, r_child, eps):
                            rule = PruneRule.BDEU_POSITIVE_COUNTS
                    if rule is not None:
                        stats.count(rule)
                        stats.skipped += 1
                        entries.append(
                            CandidateEntry(
                                parents=superset, status=CandidateStatus.PRUNED, rule=rule
                            )
                        )
                        continue

                    table = table or counting.counts(child, superset)
                    score = ScoringService.local_score(table, config)
                    stats.scored += 1
                    if rule_subset_eps(bss, score.value, eps):
                        stats.count(PruneRule.SUBSET_SCORE)
                        entries.append(
                            CandidateEntry(
                                parents=superset,
                                score=score,
                                status=CandidateStatus.PRUNED,
                                rule=PruneRule.SUBSET_SCORE,
                            )
                        )
                    else:
                        entries.append(CandidateEntry(parents=superset, score=score))

                    if size < cap and extends(superset):
                        stats.count(PruneRule.BIC_INSTANTIATIONS)
                        continue
                    layer[superset] = _Node(best=min(score.value, bss))
            frontier = layer
            if not frontier:
                break

        # Extensions beyond the cap are never scored
        beyond = 0
        for parents in frontier:
            if len(parents) == cap:
                start = candidates.index(parents[-1]) + 1 if parents else 0
                beyond += len(candidates) - start
        if beyond:
            stats.count(cap_rule, beyond)
            stats.skipped += beyond
            stats.cap_bound = user_bound

        result = CandidateList(
            child=child, entries=entries, epsilon=epsilon, max_size=cap, stats=stats
        )
        logger.debug(
            "Lattice walked",
            child=dataset.names[child],
            kept=len(result.kept()),
            scored=stats.scored,
            skipped=stats.skipped,
            cap=cap,
        )
        return result

    def _prune_before_scoring(
        self,
        child: int,
        superset: tuple[int, ...],
        bss: float,
        config: ScoreConfig,
        eps: float,
    ) -> Optional[PruneRule]:
        """BIC rules that discard a set and its supersets without counting."""
        if not config.is_bic:
            return None
        arities = self._counting.dataset.arities
        penalty = math.prod(arities[p] for p in superset) * (arities[child] - 1) * config.w
        if rule_bic_penalty(bss, penalty, eps):
            return PruneRule.BIC_PENALTY
        for i, new_parent in enumerate(superset):
            parents = superset[:i] + superset[i + 1 :]
            if rule_bic_entropy(self._counting, child, parents, new_parent, config, eps):
                return PruneRule.BIC_ENTROPY
        return None
