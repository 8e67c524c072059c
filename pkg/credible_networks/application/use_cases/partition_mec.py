"""Use case for grouping credible networks into Markov equivalence classes."""

from collections import defaultdict
from itertools import combinations

import numpy as np
from scipy.special import logsumexp

from credible_networks.domain.entities.credible_set import CredibleSet
from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.mec import ArcStatistic, MecClass, MecKey, MecPartition
from credible_networks.logger import get_logger

logger = get_logger(__name__)


def mec_key(dag: Dag) -> MecKey:
    """Skeleton and v-structures of a network.

    A v-structure (a, c, b) is a -> c <- b with a < b and a, b not adjacent.
    """
    graph = dag.to_networkx()
    skeleton = graph.to_undirected()
    vstructures = []
    for c in graph.nodes:
        for a, b in combinations(sorted(graph.predecessors(c)), 2):
            if not skeleton.has_edge(a, b):
                vstructures.append((a, c, b))
    return MecKey(
        skeleton=tuple(sorted((min(u, v), max(u, v)) for u, v in skeleton.edges)),
        vstructures=tuple(sorted(vstructures)),
    )


class PartitionMecUseCase:
    """Use case for equivalence classes plus model-averaged arc statistics."""

    def execute(self, credible_set: CredibleSet) -> MecPartition:
        """Execute the partition.

        Arc probabilities weight each member by exp(-(score - OPT)), normalised
        over the collected members only.

        Args:
            credible_set: Networks to group

        Returns:
            MecPartition with classes sorted by best score
        """
        networks = sorted(credible_set.networks, key=lambda g: (g.score, g.canonical_key))
        groups: dict[MecKey, list[Dag]] = defaultdict(list)
        for dag in networks:
            groups[mec_key(dag)].append(dag)
        classes = sorted(
            (
                MecClass(key=key, members=tuple(members), best_score=members[0].score)
                for key, members in groups.items()
            ),
            key=lambda c: (c.best_score, c.representative.canonical_key),
        )
        partition = MecPartition(classes=tuple(classes), arcs=self._arc_statistics(networks))
        logger.info("Equivalence classes formed", networks=len(networks), classes=len(classes))
        return partition

    @staticmethod
    def _arc_statistics(networks: list[Dag]) -> tuple[ArcStatistic, ...]:
        if not networks:
            return ()
        n = networks[0].n_variables
        log_weights = -np.array([g.score for g in networks])
        weights = np.exp(log_weights - logsumexp(log_weights))
        presence = np.zeros((len(networks), n, n), dtype=bool)
        for m, dag in enumerate(networks):
            for parent, child in dag.arcs():
                presence[m, parent, child] = True
        counts = presence.sum(axis=0)
        probabilities = np.clip(np.tensordot(weights, presence, axes=1), 0.0, 1.0)
        return tuple(
            ArcStatistic(
                source=u,
                target=v,
                presence_count=int(counts[u, v]),
                weighted_probability=float(probabilities[u, v]),
            )
            for u in range(n)
            for v in range(n)
            if u != v
        )
