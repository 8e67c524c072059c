"""Use case for collecting every network within epsilon of the optimum."""

import heapq
from typing import NamedTuple, Optional

from credible_networks.config import settings
from credible_networks.domain.entities.candidates import CandidateLists
from credible_networks.domain.entities.credible_set import CredibleSet
from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.subset_tables import SubsetTables, variables_mask
from credible_networks.infrastructure.services.scoring_service import ScoringService
from credible_networks.logger import get_logger

logger = get_logger(__name__)


class _Family(NamedTuple):
    score: float
    mask: int
    parents: tuple[int, ...]


class _Retained:
    """Heap item ordered worst-first by (score, canonical key)."""

    __slots__ = ("dag",)

    def __init__(self, dag: Dag) -> None:
        self.dag = dag

    def __lt__(self, other: "_Retained") -> bool:
        return (self.dag.score, self.dag.canonical_key) > (
            other.dag.score,
            other.dag.canonical_key,
        )


class EnumerateCredibleUseCase:
    """Use case for branch-and-bound enumeration of credible networks.

    Sinks are removed one at a time. Each network is built from exactly one
    sink sequence: the removed sink must always be the largest-index sink of
    the remaining graph, so vertices above it that are not among its parents
    stay pending until a later vertex takes them as a parent.
    """

    def execute(
        self,
        lists: CandidateLists,
        tables: SubsetTables,
        opt: float,
        epsilon: float,
        limit: Optional[int] = None,
    ) -> CredibleSet:
        """Execute the enumeration.

        Args:
            lists: Candidate lists the tables were built from
            tables: Subset tables from the optimum search
            opt: Optimal network score
            epsilon: Score window above the optimum
            limit: Maximum number of networks kept (the best by score, then key)

        Returns:
            CredibleSet sorted by (score, canonical key)

        Raises:
            ValueError: If epsilon is negative or limit < 1
        """
        limit = settings.counting_limit if limit is None else limit
        if not epsilon >= 0:
            raise ValueError("epsilon must be non-negative")
        if limit < 1:
            raise ValueError("limit must be positive")
        tol = settings.score_tolerance
        n = lists.n_variables
        families = [
            [_Family(e.score.value, variables_mask(e.parents), e.parents) for e in lists.kept(v)]
            for v in range(n)
        ]
        best_net = tables.best_net

        heap: list[_Retained] = []
        keys: set[bytes] = set()
        threshold = opt + epsilon + tol
        truncated = False
        parent_sets: list[tuple[int, ...]] = [()] * n

        def collect() -> None:
            nonlocal threshold, truncated
            dag = Dag(parent_sets=tuple(parent_sets), score=0.0)
            score = ScoringService.network_score(dag, lists)
            if score > opt + epsilon + tol:
                return
            dag = Dag(parent_sets=dag.parent_sets, score=score)
            if dag.canonical_key in keys:
                return
            item = _Retained(dag)
            if len(heap) < limit:
                heapq.heappush(heap, item)
                keys.add(dag.canonical_key)
                return
            truncated = True
            worst = heap[0]
            if worst < item:
                # item is better than the current worst
                heapq.heapreplace(heap, item)
                keys.discard(worst.dag.canonical_key)
                keys.add(dag.canonical_key)
            threshold = min(threshold, heap[0].dag.score + tol)

        def search(remaining: int, cost: float, pending: int) -> None:
            if remaining == 0:
                collect()
                return
            for v in range(n):
                bit = 1 << v
                if not remaining & bit or pending & bit:
                    continue
                rest = remaining ^ bit
                floor = cost + best_net[rest]
                above = rest & ~((bit << 1) - 1)
                for family in families[v]:
                    if floor + family.score > threshold:
                        break
                    if family.mask & ~rest:
                        continue
                    next_pending = (pending & ~family.mask) | (above & ~family.mask)
                    if rest and rest & ~next_pending == 0:
                        continue
                    parent_sets[v] = family.parents
                    search(rest, cost + family.score, next_pending)
                parent_sets[v] = ()

        search(tables.full_mask, 0.0, 0)

        networks = sorted(
            (item.dag for item in heap), key=lambda g: (g.score, g.canonical_key)
        )
        logger.info(
            "Credible networks collected",
            opt=opt,
            epsilon=epsilon,
            networks=len(networks),
            truncated=truncated,
        )
        return CredibleSet(
            networks=tuple(networks),
            opt_score=opt,
            epsilon=epsilon,
            truncated=truncated,
            limit=limit,
        )
