"""Shared fixtures: reference dataset, random datasets and a brute-force DAG oracle."""

import math
from functools import lru_cache
from itertools import combinations, product

import networkx as nx
import numpy as np
import pytest

from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.dataset import Dataset, Variable
from credible_networks.domain.entities.local_score import ScoreConfig
from credible_networks.domain.enums.score_function import ScoreFunction
from credible_networks.infrastructure.services.counting_service import CountingService
from credible_networks.infrastructure.services.scoring_service import ScoringService

D1_NATIVE = "A B\n2 2\n0 0\n0 0\n0 0\n0 1\n1 0\n1 1\n1 1\n1 1\n"

# Hand-derived reference values on D1
BIC_B_GIVEN_A = 6.578122699
BIC_B_EMPTY = 6.584898215
BIC_NETWORK_AB = 13.163020914
BIC_NETWORK_EMPTY = 13.16979643

LN3, LN20, LN150 = math.log(3), math.log(20), math.log(150)


def make_dataset(rows: list[list[int]], arities: list[int], names: list[str] | None = None) -> Dataset:
    """Build a dataset from integer rows."""
    names = names or [chr(ord("A") + i) for i in range(len(arities))]
    return Dataset(
        variables=tuple(Variable.with_arity(n, r) for n, r in zip(names, arities)),
        rows=np.asarray(rows, dtype=np.int64),
    )


def random_dataset(seed: int, n: int, n_instances: int, arities: list[int] | None = None) -> Dataset:
    """Random dataset where each column partly copies the previous one."""
    rng = np.random.default_rng(seed)
    if arities is None:
        arities = [int(a) for a in rng.choice([2, 3], size=n)]
    rows = np.zeros((n_instances, n), dtype=np.int64)
    for j, r in enumerate(arities):
        noise = rng.integers(0, r, size=n_instances)
        if j == 0:
            rows[:, j] = noise
        else:
            copy = rng.random(n_instances) < 0.6
            rows[:, j] = np.where(copy, rows[:, j - 1] % r, noise)
    return make_dataset(rows.tolist(), arities)


@lru_cache(maxsize=None)
def all_dags(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Every DAG on n labelled nodes as a parent-set assignment (3 / 25 / 543 for n = 2 / 3 / 4)."""
    options = []
    for v in range(n):
        others = [u for u in range(n) if u != v]
        options.append([c for k in range(n) for c in combinations(others, k)])
    dags = []
    for assignment in product(*options):
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from((p, c) for c, ps in enumerate(assignment) for p in ps)
        if nx.is_directed_acyclic_graph(graph):
            dags.append(tuple(assignment))
    return tuple(dags)


def brute_force_scores(dataset: Dataset, config: ScoreConfig) -> list[Dag]:
    """All DAGs scored without pruning, sorted by (score, canonical key)."""
    counting = CountingService(dataset)
    n = dataset.n_variables
    local: dict[tuple[int, tuple[int, ...]], float] = {}
    for v in range(n):
        others = [u for u in range(n) if u != v]
        for k in range(n):
            for parents in combinations(others, k):
                table = counting.counts(v, parents)
                local[(v, parents)] = ScoringService.local_score(table, config).value
    dags = []
    for assignment in all_dags(n):
        score = 0.0
        for child, parents in enumerate(assignment):
            score += local[(child, parents)]
        dags.append(Dag(parent_sets=assignment, score=score))
    return sorted(dags, key=lambda g: (g.score, g.canonical_key))


def brute_force_credible(dataset: Dataset, config: ScoreConfig, epsilon: float) -> list[Dag]:
    """Brute-force credible set at epsilon (1e-9 slack)."""
    dags = brute_force_scores(dataset, config)
    opt = dags[0].score
    return [g for g in dags if g.score <= opt + epsilon + 1e-9]


@pytest.fixture
def d1() -> Dataset:
    """Reference dataset: A uniform, B copies A three times out of four."""
    a = [0, 0, 0, 0, 1, 1, 1, 1]
    b = [0, 0, 0, 1, 0, 1, 1, 1]
    return make_dataset([list(r) for r in zip(a, b)], [2, 2])


@pytest.fixture
def d1_bic(d1: Dataset) -> ScoreConfig:
    """BIC configuration for D1."""
    return ScoreConfig(function=ScoreFunction.BIC, sample_size=d1.n_instances)


@pytest.fixture
def d1_bdeu(d1: Dataset) -> ScoreConfig:
    """BDeu (alpha = 1) configuration for D1."""
    return ScoreConfig(function=ScoreFunction.BDEU, alpha=1.0, sample_size=d1.n_instances)


@pytest.fixture
def d1_file(tmp_path):
    """D1 written in the native format."""
    path = tmp_path / "d1.dat"
    path.write_text(D1_NATIVE)
    return path
