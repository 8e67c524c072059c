"""Local score file repository interface (Protocol)."""

from pathlib import Path
from typing import BinaryIO, Protocol, Union

from credible_networks.domain.entities.candidates import CandidateLists


class LocalScoreRepository(Protocol):
    """Repository interface for persisting candidate lists as score files."""

    def read(self, source: Union[bytes, BinaryIO]) -> CandidateLists:
        """Parse candidate lists from score-file bytes.

        Raises:
            ScoreFileParseError: If the content is malformed
        """
        ...

    def write(self, lists: CandidateLists) -> bytes:
        """Serialise the kept entries of candidate lists."""
        ...

    def load(self, path: Union[str, Path]) -> CandidateLists:
        """Read a score file from disk.

        Raises:
            InputNotFoundError: If the file cannot be opened
        """
        ...

    def save(self, lists: CandidateLists, path: Union[str, Path]) -> None:
        """Write a score file to disk."""
        ...
