"""Subset dynamic-program tables."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


def variables_mask(variables: tuple[int, ...]) -> int:
    """Bit mask with one bit per variable index."""
    mask = 0
    for v in variables:
        mask |= 1 << v
    return mask


def drop_bit(masks: np.ndarray | int, v: int) -> np.ndarray | int:
    """Re-index masks that exclude bit v onto n - 1 bits (bits above v shift down)."""
    low = (1 << v) - 1
    return (masks & low) | ((masks >> 1) & ~low)


class SubsetTables(BaseModel):
    """Best parent choices and best partial networks for every variable subset.

    best_parents[v] is indexed by subsets of the other variables (bit v
    removed); best_net is indexed by subsets of all variables.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_variables: int = Field(..., ge=1)
    best_parents: tuple[np.ndarray, ...] = Field(
        ..., description="Per variable: min kept local score over parent sets inside each subset"
    )
    best_net: np.ndarray = Field(..., description="Min network score over each variable subset")

    def best_parent_score(self, v: int, subset: int) -> float:
        """bestParents(v, S): min kept local score of v over parent sets contained in S."""
        if subset >> v & 1:
            raise ValueError(f"subset contains variable {v}")
        return float(self.best_parents[v][drop_bit(subset, v)])

    def best_network_score(self, subset: int) -> float:
        """bestNet(S): min score of a network over the variables in S."""
        return float(self.best_net[subset])

    @property
    def full_mask(self) -> int:
        """Mask of all variables."""
        return (1 << self.n_variables) - 1
