"""Dataset repository interface (Protocol)."""

from pathlib import Path
from typing import BinaryIO, Protocol, Union

from credible_networks.domain.entities.dataset import Dataset
from credible_networks.domain.enums.data_format import DataFormat


class DatasetRepository(Protocol):
    """Repository interface for reading discrete datasets."""

    def parse(self, source: Union[bytes, BinaryIO], fmt: DataFormat) -> Dataset:
        """Parse a dataset from raw bytes.

        Args:
            source: Byte content or binary stream
            fmt: Native or CSV format

        Returns:
            Parsed dataset

        Raises:
            DatasetParseError: If the content is malformed
        """
        ...

    def load(self, path: Union[str, Path], fmt: DataFormat) -> Dataset:
        """Read and parse a dataset file.

        Raises:
            InputNotFoundError: If the file cannot be opened
            DatasetParseError: If the content is malformed
        """
        ...
