"""Input format enumeration."""

from enum import Enum


class DataFormat(str, Enum):
    """Input file format accepted by the command line."""

    NATIVE = "native"
    CSV = "csv"
    SCORES = "scores"

    @classmethod
    def from_path(cls, path: str) -> "DataFormat":
        """Infer the format from a file extension (native when unknown)."""
        lowered = path.lower()
        if lowered.endswith(".csv"):
            return cls.CSV
        if lowered.endswith((".scores", ".jkl")):
            return cls.SCORES
        return cls.NATIVE
