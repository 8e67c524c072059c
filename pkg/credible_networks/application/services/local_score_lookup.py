"""Local score lookup port."""

from typing import Protocol

from credible_networks.domain.entities.local_score import LocalScore


class LocalScoreLookup(Protocol):
    """Port for retrieving the local score of a (child, parent set) family."""

    def local_score(self, child: int, parents: tuple[int, ...]) -> LocalScore:
        """Return the local score of a family.

        Args:
            child: Child variable index
            parents: Parent variable indices

        Returns:
            Local score of the family

        Raises:
            MissingLocalScoreError: If the family has no computed score
        """
        ...
