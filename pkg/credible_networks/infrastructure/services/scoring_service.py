"""Decomposable local scores (BIC, BDeu) in the lower-is-better convention."""

import math

import numpy as np
from scipy.special import gammaln, xlogy

from credible_networks.application.services.local_score_lookup import LocalScoreLookup
from credible_networks.config import settings
from credible_networks.domain.entities.contingency import ContingencyTable
from credible_networks.domain.entities.dag import Dag
from credible_networks.domain.entities.local_score import LocalScore, ScoreConfig
from credible_networks.domain.exceptions.solver_exceptions import ParentSetTooLargeError


class ScoringService:
    """Service for computing local and network scores."""

    @staticmethod
    def _check_size(table: ContingencyTable) -> None:
        if table.parent_instantiations > settings.max_parent_instantiations:
            raise ParentSetTooLargeError(
                table.child, table.parents, table.parent_instantiations
            )

    @staticmethod
    def log_likelihood(table: ContingencyTable) -> float:
        """Maximised log-likelihood sum_jk n_ijk log(n_ijk / n_ij)."""
        counts = table.child_counts.astype(np.float64)
        totals = counts.sum(axis=1, keepdims=True)
        # xlogy gives 0 for empty cells
        return float(xlogy(counts, counts).sum() - xlogy(totals, totals).sum())

    @staticmethod
    def bic_local(table: ContingencyTable, config: ScoreConfig) -> LocalScore:
        """BIC local score: -L(Pi) + r_Pi (r_i - 1) w.

        Args:
            table: Contingency table of the family
            config: Score configuration (sample size gives w)

        Returns:
            LocalScore with log-likelihood and penalty filled in

        Raises:
            ParentSetTooLargeError: If r_Pi exceeds the configured maximum
        """
        ScoringService._check_size(table)
        log_lik = ScoringService.log_likelihood(table)
        penalty = table.parent_instantiations * (table.child_arity - 1) * config.w
        return LocalScore(
            child=table.child,
            parents=table.parents,
            value=-log_lik + penalty,
            log_lik=log_lik,
            penalty=penalty,
        )

    @staticmethod
    def bdeu_local(table: ContingencyTable, config: ScoreConfig) -> LocalScore:
        """BDeu local score with per-instantiation weight alpha / r_Pi.

        Only observed instantiations are summed; unobserved ones contribute 0.

        Raises:
            ParentSetTooLargeError: If r_Pi exceeds the configured maximum
        """
        ScoringService._check_size(table)
        alpha_j = config.alpha / table.parent_instantiations
        alpha_jk = alpha_j / table.child_arity
        counts = table.child_counts.astype(np.float64)
        totals = counts.sum(axis=1)
        log_marginal = (
            np.sum(gammaln(alpha_j) - gammaln(alpha_j + totals))
            + np.sum(gammaln(alpha_jk + counts) - gammaln(alpha_jk))
        )
        return LocalScore(child=table.child, parents=table.parents, value=-float(log_marginal))

    @staticmethod
    def bdeu_lower_bound(table: ContingencyTable) -> float:
        """Certified lower bound r_i^+ log r_i on the BDeu score of this family and its supersets."""
        return table.positive_count * math.log(table.child_arity)

    @staticmethod
    def local_score(table: ContingencyTable, config: ScoreConfig) -> LocalScore:
        """Score a family with the configured function."""
        if config.is_bic:
            return ScoringService.bic_local(table, config)
        return ScoringService.bdeu_local(table, config)

    @staticmethod
    def network_score(dag: Dag, lookup: LocalScoreLookup) -> float:
        """Sum of local scores in ascending variable order.

        Raises:
            MissingLocalScoreError: If a family has no local score in the lookup
        """
        total = 0.0
        for child, parents in enumerate(dag.parent_sets):
            total += lookup.local_score(child, parents).value
        return total
