"""Use case for finding the optimal network score."""

import numpy as np

from credible_networks.config import settings
from credible_networks.domain.entities.candidates import CandidateLists
from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.subset_tables import (
    SubsetTables,
    drop_bit,
    variables_mask,
)
from credible_networks.domain.exceptions.input_exceptions import InfeasibleProblemError
from credible_networks.domain.exceptions.solver_exceptions import VariableLimitExceededError
from credible_networks.infrastructure.services.scoring_service import ScoringService
from credible_networks.logger import get_logger

logger = get_logger(__name__)


class SolveResult:
    """Result of the optimum search."""

    opt: float
    tables: SubsetTables
    witness: Dag

    def __init__(self, opt: float, tables: SubsetTables, witness: Dag) -> None:
        """Initialize SolveResult.

        Args:
            opt: Optimal network score
            tables: Subset tables used to reach it
            witness: An optimal network
        """
        self.opt = opt
        self.tables = tables
        self.witness = witness


def _popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        counts += ((masks >> b) & 1).astype(np.int8)
    return counts


class SolveOptimumUseCase:
    """Use case for the exact subset dynamic program over sinks."""

    def execute(self, lists: CandidateLists) -> SolveResult:
        """Execute the optimum search.

        Args:
            lists: Candidate lists of every variable

        Returns:
            SolveResult with OPT, the subset tables and an optimal witness

        Raises:
            VariableLimitExceededError: If there are more variables than the DP limit
            InfeasibleProblemError: If the lists admit no acyclic network
        """
        n = lists.n_variables
        if n > settings.dp_variable_limit:
            raise VariableLimitExceededError(n, settings.dp_variable_limit)
        tables = self.build_tables(lists)
        full = tables.full_mask
        if not np.isfinite(tables.best_net[full]):
            raise InfeasibleProblemError("candidate lists admit no acyclic network")
        witness = self._backtrack(lists, tables)
        opt = ScoringService.network_score(witness, lists)
        witness = Dag(parent_sets=witness.parent_sets, score=opt)
        logger.info("Optimum found", opt=opt, variables=n, arcs=len(witness.arcs()))
        return SolveResult(opt=opt, tables=tables, witness=witness)

    @staticmethod
    def build_tables(lists: CandidateLists) -> SubsetTables:
        """Compute bestParents for every variable and bestNet for every subset."""
        n = lists.n_variables
        best_parents = []
        for v in range(n):
            table = np.full(1 << max(n - 1, 0), np.inf)
            kept = lists.kept(v)
            if kept:
                idx = np.array(
                    [drop_bit(variables_mask(e.parents), v) for e in kept], dtype=np.int64
                )
                np.minimum.at(table, idx, np.array([e.score.value for e in kept]))
            # Min over subsets, one bit at a time
            for b in range(n - 1):
                view = table.reshape(-1, 2, 1 << b)
                np.minimum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])
            table.setflags(write=False)
            best_parents.append(table)

        best_net = np.full(1 << n, np.inf)
        best_net[0] = 0.0
        popcounts = _popcounts(n)
        masks = np.arange(1 << n, dtype=np.int64)
        for size in range(1, n + 1):
            layer = masks[popcounts == size]
            best = np.full(layer.shape[0], np.inf)
            for v in range(n):
                has = (layer >> v) & 1 == 1
                rest = layer[has] ^ (1 << v)
                candidate = best_parents[v][drop_bit(rest, v)] + best_net[rest]
                best[has] = np.minimum(best[has], candidate)
            best_net[layer] = best
        best_net.setflags(write=False)
        return SubsetTables(n_variables=n, best_parents=tuple(best_parents), best_net=best_net)

    @staticmethod
    def _backtrack(lists: CandidateLists, tables: SubsetTables) -> Dag:
        n = lists.n_variables
        parent_sets: list[tuple[int, ...]] = [()] * n
        remaining = tables.full_mask
        while remaining:
            sinks = [v for v in range(n) if remaining >> v & 1]
            values = [
                tables.best_parent_score(v, remaining ^ (1 << v))
                + tables.best_network_score(remaining ^ (1 << v))
                for v in sinks
            ]
            v = sinks[int(np.argmin(values))]
            rest = remaining ^ (1 << v)
            target = tables.best_parent_score(v, rest)
            for entry in lists.kept(v):
                if variables_mask(entry.parents) & ~rest == 0 and entry.score.value <= target:
                    parent_sets[v] = entry.parents
                    break
            remaining = rest
        return Dag(parent_sets=tuple(parent_sets), score=tables.best_network_score(tables.full_mask))
