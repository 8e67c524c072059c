"""Contingency table entity - sufficient statistics for one family."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class ContingencyTable(BaseModel):
    """Joint counts n_ij / n_ijk for a (child, parent set) pair.

    Only parent instantiations with a positive count are stored, one row per
    instantiation in lexicographic order of the parent states.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    child: int = Field(..., ge=0, description="Child variable index i")
    child_arity: int = Field(..., ge=2, description="Child arity r_i")
    parents: tuple[int, ...] = Field(..., description="Sorted parent indices")
    parent_instantiations: int = Field(
        ..., ge=1, description="Full instantiation count r_Pi (product of parent arities)"
    )
    configurations: np.ndarray = Field(
        ..., description="m x |parents| matrix of observed parent instantiations"
    )
    child_counts: np.ndarray = Field(..., description="m x r_i matrix of counts n_ijk")

    @property
    def parent_counts(self) -> np.ndarray:
        """Counts n_ij per stored instantiation."""
        return self.child_counts.sum(axis=1)

    @property
    def positive_count(self) -> int:
        """r_i^+: number of instantiations with n_ij > 0."""
        return int(self.child_counts.shape[0])

    @property
    def sample_size(self) -> int:
        """Total count N."""
        return int(self.child_counts.sum())

    def cells(self) -> dict[tuple[int, ...], tuple[int, tuple[int, ...]]]:
        """Map each stored instantiation j to (n_ij, per-state counts n_ijk)."""
        return {
            tuple(int(s) for s in config): (int(counts.sum()), tuple(int(c) for c in counts))
            for config, counts in zip(self.configurations, self.child_counts)
        }
