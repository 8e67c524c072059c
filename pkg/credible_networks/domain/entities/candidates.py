"""Candidate parent set entities - per-variable lists and prune statistics."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from credible_networks.domain.entities.local_score import LocalScore
from credible_networks.domain.enums.prune_rule import CandidateStatus, PruneRule
from credible_networks.domain.exceptions.solver_exceptions import MissingLocalScoreError


class CandidateEntry(BaseModel):
    """One visited parent set with its score (if scored) and outcome."""

    model_config = ConfigDict(frozen=True)

    parents: tuple[int, ...] = Field(..., description="Sorted parent indices")
    score: Optional[LocalScore] = Field(
        None, description="Local score; None when pruned before scoring"
    )
    status: CandidateStatus = Field(default=CandidateStatus.KEPT)
    rule: Optional[PruneRule] = Field(None, description="Rule that pruned this set")

    @property
    def is_kept(self) -> bool:
        """Whether this set survived pruning."""
        return self.status is CandidateStatus.KEPT


class PruneStats(BaseModel):
    """Counters describing one lattice traversal (or the merge of several)."""

    pruned: dict[PruneRule, int] = Field(default_factory=dict)
    scored: int = Field(default=0, ge=0, description="Parent sets scored")
    skipped: int = Field(default=0, ge=0, description="Parent sets skipped without scoring")
    cap: Optional[int] = Field(None, description="Largest cardinality cap applied")
    cap_bound: bool = Field(
        default=False,
        description="Whether a user or BDeu cap stopped the lattice (completeness caveat)",
    )

    @property
    def visited(self) -> int:
        """Lattice nodes visited (scored + skipped)."""
        return self.scored + self.skipped

    def count(self, rule: PruneRule, amount: int = 1) -> None:
        """Increment the counter of one rule."""
        self.pruned[rule] = self.pruned.get(rule, 0) + amount

    def merge(self, other: "PruneStats") -> "PruneStats":
        """Return the sum of two statistics."""
        pruned = dict(self.pruned)
        for rule, amount in other.pruned.items():
            pruned[rule] = pruned.get(rule, 0) + amount
        caps = [c for c in (self.cap, other.cap) if c is not None]
        return PruneStats(
            pruned=pruned,
            scored=self.scored + other.scored,
            skipped=self.skipped + other.skipped,
            cap=max(caps) if caps else None,
            cap_bound=self.cap_bound or other.cap_bound,
        )

    def render(self) -> str:
        """Plain-text report, one `key=value` line per counter."""
        lines = [f"rule={rule.value} pruned={self.pruned.get(rule, 0)}" for rule in PruneRule]
        lines.append(f"scored={self.scored}")
        lines.append(f"skipped={self.skipped}")
        lines.append(f"visited={self.visited}")
        lines.append(f"cap={'none' if self.cap is None else self.cap}")
        if self.cap_bound:
            lines.append(
                "caveat: the parent-set cardinality cap bound; "
                "larger parent sets were never scored and the result may be incomplete"
            )
        return "\n".join(lines) + "\n"


class CandidateList(BaseModel):
    """Surviving (and pruned) parent sets of one child variable."""

    child: int = Field(..., ge=0, description="Child variable index")
    entries: list[CandidateEntry] = Field(default_factory=list)
    epsilon: Optional[float] = Field(
        None, description="Epsilon used for pruning; None when imported"
    )
    max_size: Optional[int] = Field(None, description="Cardinality cap actually applied")
    stats: PruneStats = Field(default_factory=PruneStats)

    def kept(self) -> list[CandidateEntry]:
        """Kept entries sorted by (score, parents)."""
        kept = [e for e in self.entries if e.is_kept and e.score is not None]
        return sorted(kept, key=lambda e: (e.score.value, e.parents))


class CandidateLists(BaseModel):
    """Candidate lists of every variable, addressable by (child, parents)."""

    variables: tuple[str, ...] = Field(..., description="Variable names in index order")
    lists: tuple[CandidateList, ...] = Field(..., description="One list per variable")

    _index: Optional[dict[tuple[int, tuple[int, ...]], LocalScore]] = PrivateAttr(default=None)

    @property
    def n_variables(self) -> int:
        """Number of variables."""
        return len(self.variables)

    @property
    def epsilon(self) -> Optional[float]:
        """Common pruning epsilon, None if imported or mixed."""
        values = {cl.epsilon for cl in self.lists}
        return values.pop() if len(values) == 1 else None

    @property
    def stats(self) -> PruneStats:
        """Prune statistics merged over all variables."""
        total = PruneStats()
        for cl in self.lists:
            total = total.merge(cl.stats)
        return total

    def kept(self, child: int) -> list[CandidateEntry]:
        """Kept entries of one child, sorted by (score, parents)."""
        return self.lists[child].kept()

    def local_score(self, child: int, parents: tuple[int, ...]) -> LocalScore:
        """Look up the kept local score of a family.

        Raises:
            MissingLocalScoreError: If the family is not a kept candidate
        """
        if self._index is None:
            self._index = {
                (cl.child, e.parents): e.score
                for cl in self.lists
                for e in cl.entries
                if e.is_kept and e.score is not None
            }
        key = (child, tuple(sorted(parents)))
        try:
            return self._index[key]
        except KeyError:
            raise MissingLocalScoreError(child, key[1]) from None
