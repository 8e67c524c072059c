"""Dag entity - a parent-set assignment forming a network structure."""

from functools import cached_property

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator


class Dag(BaseModel):
    """A network structure given as one parent set per variable."""

    model_config = ConfigDict(frozen=True)

    parent_sets: tuple[tuple[int, ...], ...] = Field(
        ..., description="Sorted parent indices per variable, in variable order"
    )
    score: float = Field(..., description="Network score (sum of local scores)")

    @field_validator("parent_sets")
    @classmethod
    def sort_parent_sets(cls, v: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        """Store every parent set sorted."""
        return tuple(tuple(sorted(ps)) for ps in v)

    @cached_property
    def canonical_key(self) -> bytes:
        """Byte string identifying the structure (ascending variable order)."""
        return ";".join(
            f"{child}:{','.join(str(p) for p in parents)}"
            for child, parents in enumerate(self.parent_sets)
        ).encode("ascii")

    @property
    def n_variables(self) -> int:
        """Number of variables."""
        return len(self.parent_sets)

    def arcs(self) -> list[tuple[int, int]]:
        """Directed arcs (parent, child) in ascending order."""
        return sorted((p, child) for child, ps in enumerate(self.parent_sets) for p in ps)

    def to_networkx(self) -> nx.DiGraph:
        """Build the equivalent networkx directed graph."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n_variables))
        graph.add_edges_from(self.arcs())
        return graph

    def is_acyclic(self) -> bool:
        """Whether the parent sets form a directed acyclic graph."""
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def __repr__(self) -> str:
        """String representation of the structure."""
        return f"Dag({self.canonical_key.decode('ascii')}, score={self.score!r})"
