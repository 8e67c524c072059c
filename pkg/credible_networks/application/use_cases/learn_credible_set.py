"""Use case wiring scoring, pruning, solving, enumeration and grouping."""

from typing import Optional

from credible_networks.application.use_cases.enumerate_credible import EnumerateCredibleUseCase
from credible_networks.application.use_cases.generate_candidates import (
    GenerateCandidatesUseCase,
)
from credible_networks.application.use_cases.partition_mec import PartitionMecUseCase
from credible_networks.application.use_cases.solve_optimum import SolveOptimumUseCase, SolveResult
from credible_networks.domain.entities.candidates import CandidateLists
from credible_networks.domain.entities.credible_set import CredibleSet, EpsilonSpec
from credible_networks.domain.entities.dataset import Dataset
from credible_networks.domain.entities.local_score import ScoreConfig
from credible_networks.domain.entities.mec import MecPartition
from credible_networks.domain.enums.score_function import ScoreFunction
from credible_networks.infrastructure.services.counting_service import CountingService
from credible_networks.logger import get_logger

logger = get_logger(__name__)


class LearnResult:
    """Everything one pipeline run produced."""

    lists: CandidateLists
    solution: SolveResult
    credible_set: CredibleSet
    partition: MecPartition
    n_instances: Optional[int]

    def __init__(
        self,
        lists: CandidateLists,
        solution: SolveResult,
        credible_set: CredibleSet,
        partition: MecPartition,
        n_instances: Optional[int],
    ) -> None:
        """Initialize LearnResult.

        Args:
            lists: Candidate lists the networks were built from
            solution: Optimum search result
            credible_set: Collected credible networks
            partition: Equivalence classes of the credible set
            n_instances: Sample size (None for score-file input)
        """
        self.lists = lists
        self.solution = solution
        self.credible_set = credible_set
        self.partition = partition
        self.n_instances = n_instances

    @property
    def epsilon(self) -> float:
        """Resolved epsilon."""
        return self.credible_set.epsilon


class LearnCredibleSetUseCase:
    """Use case for the full credible-network pipeline."""

    def __init__(
        self,
        solver: SolveOptimumUseCase,
        enumerator: EnumerateCredibleUseCase,
        partitioner: PartitionMecUseCase,
    ) -> None:
        """Initialize LearnCredibleSetUseCase.

        Args:
            solver: Optimum search
            enumerator: Credible network enumeration
            partitioner: Equivalence-class grouping
        """
        self._solver = solver
        self._enumerator = enumerator
        self._partitioner = partitioner

    def candidates(
        self,
        dataset: Dataset,
        function: ScoreFunction,
        alpha: float,
        spec: EpsilonSpec,
        hard_cap: Optional[int] = None,
        jobs: int = 1,
        min_epsilon: float = 0.0,
    ) -> CandidateLists:
        """Score and prune a dataset for a window given as an epsilon specification.

        A factor-of-optimum window first solves on lists pruned at epsilon 0 to learn OPT.
        """
        generator = GenerateCandidatesUseCase(CountingService(dataset))
        config = ScoreConfig(function=function, alpha=alpha, sample_size=dataset.n_instances)
        if spec.needs_optimum:
            exact = generator.execute(config, 0.0, hard_cap=hard_cap, jobs=jobs)
            epsilon = spec.resolve(self._solver.execute(exact).opt)
        else:
            epsilon = spec.resolve()
        return generator.execute(config, max(epsilon, min_epsilon), hard_cap=hard_cap, jobs=jobs)

    def from_dataset(
        self,
        dataset: Dataset,
        function: ScoreFunction,
        alpha: float,
        spec: EpsilonSpec,
        limit: Optional[int] = None,
        hard_cap: Optional[int] = None,
        jobs: int = 1,
        min_epsilon: float = 0.0,
    ) -> LearnResult:
        """Run the pipeline on a dataset.

        Args:
            dataset: Data to learn from
            function: Scoring function
            alpha: BDeu equivalent sample size
            spec: Score window
            limit: Counting limit
            hard_cap: Parent-set cardinality cap
            jobs: Worker threads for candidate generation
            min_epsilon: Lower bound on the resolved epsilon (report sweeps)

        Returns:
            LearnResult
        """
        lists = self.candidates(
            dataset, function, alpha, spec, hard_cap=hard_cap, jobs=jobs, min_epsilon=min_epsilon
        )
        result = self.from_lists(lists, spec, limit=limit, min_epsilon=min_epsilon)
        result.n_instances = dataset.n_instances
        return result

    def from_lists(
        self,
        lists: CandidateLists,
        spec: EpsilonSpec,
        limit: Optional[int] = None,
        min_epsilon: float = 0.0,
    ) -> LearnResult:
        """Run solving, enumeration and grouping on precomputed candidate lists."""
        solution = self._solver.execute(lists)
        epsilon = max(spec.resolve(solution.opt), min_epsilon)
        if lists.epsilon is not None and epsilon > lists.epsilon:
            logger.warning(
                "Window wider than the lists were pruned for; the credible set may be incomplete",
                epsilon=epsilon,
                pruned_for=lists.epsilon,
            )
        credible_set = self._enumerator.execute(
            lists, solution.tables, solution.opt, epsilon, limit=limit
        )
        partition = self._partitioner.execute(credible_set)
        return LearnResult(
            lists=lists,
            solution=solution,
            credible_set=credible_set,
            partition=partition,
            n_instances=None,
        )
