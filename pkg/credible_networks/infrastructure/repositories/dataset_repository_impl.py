"""Dataset repository implementation for native and CSV files."""

import csv
import io
import re
from pathlib import Path
from typing import BinaryIO, Optional, Union

import numpy as np
import pandas as pd

from credible_networks.domain.entities.dataset import Dataset, Variable
from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.domain.exceptions.config_exceptions import InputNotFoundError
from credible_networks.domain.exceptions.input_exceptions import (
    DatasetParseError,
    EmptyDatasetError,
    InvalidArityError,
    InvalidValueError,
    MalformedHeaderError,
    MissingValueError,
    RowLengthError,
    ValueOutOfRangeError,
)
from credible_networks.logger import get_logger

logger = get_logger(__name__)

_PARSER_LINE = re.compile(r"line (\d+)")


def _read_bytes(source: Union[bytes, BinaryIO]) -> bytes:
    return source if isinstance(source, bytes) else source.read()


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        raise DatasetParseError(f"input is not UTF-8 text: {e.reason}") from e


def _check_names(names: list[str], line: int) -> None:
    if any(not name for name in names):
        raise MalformedHeaderError("empty variable name", line)
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise MalformedHeaderError(f"duplicate variable name {name!r}", line)
        seen.add(name)


class DatasetRepositoryImpl:
    """Reads datasets in the native whitespace format or as CSV."""

    def parse(self, source: Union[bytes, BinaryIO], fmt: DataFormat) -> Dataset:
        """Parse a dataset from raw bytes.

        Args:
            source: Byte content or binary stream
            fmt: DataFormat.NATIVE or DataFormat.CSV

        Returns:
            Parsed dataset

        Raises:
            DatasetParseError: If the content is malformed
            ValueError: If fmt is not a dataset format
        """
        raw = _read_bytes(source)
        if fmt is DataFormat.NATIVE:
            dataset = self._parse_native(_decode(raw))
        elif fmt is DataFormat.CSV:
            dataset = self._parse_csv(_decode(raw))
        else:
            raise ValueError(f"{fmt.value} is not a dataset format")
        logger.info(
            "Dataset parsed",
            format=fmt.value,
            variables=dataset.n_variables,
            instances=dataset.n_instances,
        )
        return dataset

    def load(self, path: Union[str, Path], fmt: Optional[DataFormat] = None) -> Dataset:
        """Read and parse a dataset file (format inferred from the extension if omitted).

        Raises:
            InputNotFoundError: If the file cannot be opened
            DatasetParseError: If the content is malformed
        """
        fmt = fmt or DataFormat.from_path(str(path))
        try:
            raw = Path(path).read_bytes()
        except OSError as e:
            raise InputNotFoundError(str(path)) from e
        return self.parse(raw, fmt)

    def _parse_native(self, text: str) -> Dataset:
        lines = text.splitlines()
        if not lines or not lines[0].split():
            raise MalformedHeaderError("missing variable names", 1)
        names = lines[0].split()
        _check_names(names, 1)
        if len(lines) < 2 or not lines[1].split():
            raise MalformedHeaderError("missing arity line", 2)
        arity_tokens = lines[1].split()
        if len(arity_tokens) != len(names):
            raise MalformedHeaderError(
                f"{len(arity_tokens)} arities given for {len(names)} variables", 2
            )
        try:
            arities = [int(token) for token in arity_tokens]
        except ValueError:
            raise MalformedHeaderError("arities must be integers", 2) from None
        for name, arity in zip(names, arities):
            if arity < 2:
                raise InvalidArityError(f"variable {name!r} has arity {arity} < 2", 2)

        rows: list[list[int]] = []
        for number, line in enumerate(lines[2:], start=3):
            tokens = line.split()
            if not tokens:
                continue
            if len(tokens) != len(names):
                raise RowLengthError(
                    f"row has {len(tokens)} values, expected {len(names)}", number
                )
            try:
                values = [int(token) for token in tokens]
            except ValueError:
                raise InvalidValueError("values must be integers", number) from None
            for name, value, arity in zip(names, values, arities):
                if not 0 <= value < arity:
                    raise ValueOutOfRangeError(
                        f"value out of range: {value} for {name!r} with arity {arity}", number
                    )
            rows.append(values)
        if not rows:
            raise EmptyDatasetError("dataset has no instances", len(lines) + 1)

        variables = tuple(Variable.with_arity(n, r) for n, r in zip(names, arities))
        return Dataset(variables=variables, rows=np.asarray(rows, dtype=np.int64))

    def _parse_csv(self, text: str) -> Dataset:
        lines = text.splitlines()
        # Fields per physical line, 0 for blank lines
        widths = [
            len(fields) if line.strip() else 0
            for line, fields in zip(lines, csv.reader(lines))
        ]
        try:
            frame = pd.read_csv(
                io.StringIO(text),
                header=None,
                dtype=str,
                na_filter=False,
                skip_blank_lines=False,
            )
        except pd.errors.EmptyDataError:
            raise MalformedHeaderError("missing header row", 1) from None
        except pd.errors.ParserError as e:
            match = _PARSER_LINE.search(str(e))
            line = int(match.group(1)) if match else None
            raise RowLengthError("row length differs from the header", line) from None

        # Row labels are zero-based line numbers
        width = {i: widths[i] if i < len(widths) else 0 for i in frame.index}
        frame = frame.loc[[i for i in frame.index if width[i] > 0]]
        if frame.empty:
            raise MalformedHeaderError("missing header row", 1)
        header_index = int(frame.index[0])
        names = [str(name).strip() for name in frame.iloc[0]]
        _check_names(names, header_index + 1)

        if len(frame) < 2:
            raise EmptyDatasetError("dataset has no instances", header_index + 2)
        body = frame.iloc[1:].map(lambda v: v.strip() if isinstance(v, str) else "")
        for index in body.index:
            if width[index] != len(names):
                raise RowLengthError(
                    f"row has {width[index]} values, expected {len(names)}", int(index) + 1
                )
        empty = (body == "").any(axis=1)
        if empty.any():
            line = int(body.index[empty.to_numpy().argmax()]) + 1
            raise MissingValueError("missing value", line)

        variables: list[Variable] = []
        columns: list[np.ndarray] = []
        for name, position in zip(names, body.columns):
            codes, uniques = pd.factorize(body[position], sort=False)
            if len(uniques) < 2:
                raise InvalidArityError(
                    f"variable {name!r} takes fewer than two distinct values"
                )
            variables.append(Variable(name=name, states=tuple(str(u) for u in uniques)))
            columns.append(codes.astype(np.int64))
        return Dataset(variables=tuple(variables), rows=np.column_stack(columns))
