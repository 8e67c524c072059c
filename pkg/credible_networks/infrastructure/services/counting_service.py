"""Counting service - contingency tables and empirical entropies."""

import math
from collections.abc import Iterable

import numpy as np
from scipy.special import entr

from credible_networks.domain.entities.contingency import ContingencyTable
from credible_networks.domain.entities.dataset import Dataset
from credible_networks.domain.exceptions.solver_exceptions import InvalidQueryError

# Mixed-radix codes must fit in int64 for the fast path.
_MAX_RADIX = 2**62


class CountingService:
    """Exact sufficient statistics over one immutable dataset.

    Entropies are memoised per variable set; the cache is only ever written
    with identical values, so concurrent readers need no coordination.
    """

    def __init__(self, dataset: Dataset) -> None:
        """Initialize CountingService.

        Args:
            dataset: Dataset to tally
        """
        self._dataset = dataset
        self._entropies: dict[frozenset[int], float] = {}

    @property
    def dataset(self) -> Dataset:
        """Dataset being counted."""
        return self._dataset

    def _check(self, indices: Iterable[int]) -> tuple[int, ...]:
        columns = tuple(sorted(set(int(i) for i in indices)))
        n = self._dataset.n_variables
        for i in columns:
            if not 0 <= i < n:
                raise InvalidQueryError(f"variable index {i} out of range [0, {n})")
        return columns

    def _group(self, columns: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
        """Observed joint configurations of the columns and each row's group."""
        rows = self._dataset.rows
        n_rows = rows.shape[0]
        if not columns:
            return np.zeros((1, 0), dtype=np.int64), np.zeros(n_rows, dtype=np.intp)
        arities = [self._dataset.variables[c].arity for c in columns]
        if math.prod(arities) <= _MAX_RADIX:
            codes = np.zeros(n_rows, dtype=np.int64)
            for c, r in zip(columns, arities):
                codes = codes * r + rows[:, c]
            unique, inverse = np.unique(codes, return_inverse=True)
            configurations = np.stack(np.unravel_index(unique, arities), axis=1)
            return configurations.astype(np.int64), inverse.reshape(-1)
        configurations, inverse = np.unique(
            rows[:, list(columns)], axis=0, return_inverse=True
        )
        return configurations, inverse.reshape(-1)

    def counts(self, child: int, parents: Iterable[int]) -> ContingencyTable:
        """Tally n_ij and n_ijk for a child and parent set.

        Args:
            child: Child variable index
            parents: Parent variable indices

        Returns:
            ContingencyTable holding only instantiations with a positive count

        Raises:
            InvalidQueryError: If an index is invalid or the child is among the parents
        """
        (child,) = self._check([child])
        columns = self._check(parents)
        if child in columns:
            raise InvalidQueryError(f"child {child} cannot be its own parent")
        r_child = self._dataset.variables[child].arity
        configurations, inverse = self._group(columns)
        m = configurations.shape[0]
        flat = np.bincount(
            inverse * r_child + self._dataset.rows[:, child], minlength=m * r_child
        )
        return ContingencyTable(
            child=child,
            child_arity=r_child,
            parents=columns,
            parent_instantiations=math.prod(self._dataset.variables[p].arity for p in columns),
            configurations=configurations,
            child_counts=flat.reshape(m, r_child),
        )

    def entropy(self, variables: Iterable[int]) -> float:
        """Empirical joint entropy H(X) in nats (0 log 0 = 0)."""
        columns = self._check(variables)
        if not columns:
            return 0.0
        key = frozenset(columns)
        cached = self._entropies.get(key)
        if cached is not None:
            return cached
        _, inverse = self._group(columns)
        frequencies = np.bincount(inverse) / self._dataset.n_instances
        value = float(entr(frequencies).sum())
        self._entropies[key] = value
        return value

    def conditional_entropy(self, x: Iterable[int], y: Iterable[int]) -> float:
        """H(X | Y) = H(X u Y) - H(Y), clamped at zero."""
        x_cols = self._check(x)
        y_cols = self._check(y)
        value = self.entropy(set(x_cols) | set(y_cols)) - self.entropy(y_cols)
        return max(0.0, value)
