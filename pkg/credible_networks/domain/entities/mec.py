"""Markov equivalence class entities."""

from pydantic import BaseModel, ConfigDict, Field

from credible_networks.domain.entities.dag import Dag


class MecKey(BaseModel):
    """Skeleton plus v-structures; equal keys mean Markov-equivalent DAGs."""

    model_config = ConfigDict(frozen=True)

    skeleton: tuple[tuple[int, int], ...] = Field(
        ..., description="Sorted undirected pairs (a, b) with a < b"
    )
    vstructures: tuple[tuple[int, int, int], ...] = Field(
        ..., description="Sorted triples (a, c, b): a -> c <- b, a < b, a and b non-adjacent"
    )


class MecClass(BaseModel):
    """One equivalence class found in a credible set."""

    model_config = ConfigDict(frozen=True)

    key: MecKey
    members: tuple[Dag, ...] = Field(..., description="Members sorted by (score, key)")
    best_score: float

    @property
    def size(self) -> int:
        """Number of member DAGs."""
        return len(self.members)

    @property
    def representative(self) -> Dag:
        """Best-scoring member."""
        return self.members[0]


class ArcStatistic(BaseModel):
    """Model-averaged presence of one directed arc."""

    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    presence_count: int = Field(..., ge=0)
    weighted_probability: float = Field(..., ge=0.0, le=1.0)


class MecPartition(BaseModel):
    """Grouping of a credible set into equivalence classes plus arc aggregates."""

    model_config = ConfigDict(frozen=True)

    classes: tuple[MecClass, ...]
    arcs: tuple[ArcStatistic, ...]

    @property
    def n_networks(self) -> int:
        """Total number of member DAGs."""
        return sum(c.size for c in self.classes)
