"""Tests for native and CSV dataset parsing."""

import io

import numpy as np
import pytest

from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.domain.exceptions import (
    EmptyDatasetError,
    InputNotFoundError,
    InvalidArityError,
    InvalidValueError,
    MalformedHeaderError,
    MissingValueError,
    RowLengthError,
    ValueOutOfRangeError,
)
from credible_networks.infrastructure.repositories.dataset_repository_impl import (
    DatasetRepositoryImpl,
)
from tests.conftest import D1_NATIVE


@pytest.fixture
def repo() -> DatasetRepositoryImpl:
    return DatasetRepositoryImpl()


class TestNativeFormat:
    def test_smallest_file(self, repo):
        dataset = repo.parse(b"A B\n2 2\n0 0\n1 1\n", DataFormat.NATIVE)
        assert dataset.n_variables == 2
        assert dataset.n_instances == 2
        assert dataset.arities == (2, 2)
        assert dataset.names == ("A", "B")

    def test_reads_stream(self, repo):
        dataset = repo.parse(io.BytesIO(D1_NATIVE.encode()), DataFormat.NATIVE)
        assert dataset.n_instances == 8
        np.testing.assert_array_equal(dataset.rows[:, 0], [0, 0, 0, 0, 1, 1, 1, 1])

    def test_declared_arity_kept_when_state_unobserved(self, repo):
        dataset = repo.parse(b"A B\n3 2\n0 0\n1 1\n", DataFormat.NATIVE)
        assert dataset.arities == (3, 2)

    def test_value_out_of_range(self, repo):
        with pytest.raises(ValueOutOfRangeError, match="value out of range") as exc:
            repo.parse(b"A B\n2 2\n0 0\n3 1\n", DataFormat.NATIVE)
        assert exc.value.line == 4

    def test_row_length(self, repo):
        with pytest.raises(RowLengthError) as exc:
            repo.parse(b"A B\n2 2\n0 0 1\n", DataFormat.NATIVE)
        assert exc.value.line == 3
        assert "line 3" in str(exc.value)

    def test_non_integer_value(self, repo):
        with pytest.raises(InvalidValueError):
            repo.parse(b"A B\n2 2\n0 x\n", DataFormat.NATIVE)

    def test_arity_below_two(self, repo):
        with pytest.raises(InvalidArityError) as exc:
            repo.parse(b"A B\n1 2\n0 0\n", DataFormat.NATIVE)
        assert exc.value.line == 2

    def test_malformed_header(self, repo):
        with pytest.raises(MalformedHeaderError):
            repo.parse(b"A B\n2\n0 0\n", DataFormat.NATIVE)
        with pytest.raises(MalformedHeaderError):
            repo.parse(b"A A\n2 2\n0 0\n", DataFormat.NATIVE)
        with pytest.raises(MalformedHeaderError):
            repo.parse(b"", DataFormat.NATIVE)

    def test_empty_dataset(self, repo):
        with pytest.raises(EmptyDatasetError):
            repo.parse(b"A B\n2 2\n", DataFormat.NATIVE)

    def test_blank_lines_ignored(self, repo):
        dataset = repo.parse(b"A B\n2 2\n0 0\n\n1 1\n\n", DataFormat.NATIVE)
        assert dataset.n_instances == 2


class TestCsvFormat:
    def test_arity_is_distinct_value_count(self, repo):
        dataset = repo.parse(b"X,Y\nyes,a\nno,b\nmaybe,a\n", DataFormat.CSV)
        assert dataset.variables[0].arity == 3
        assert dataset.variables[0].states == ("yes", "no", "maybe")
        np.testing.assert_array_equal(dataset.rows[:, 0], [0, 1, 2])
        np.testing.assert_array_equal(dataset.rows[:, 1], [0, 1, 0])

    def test_ragged_long_row(self, repo):
        with pytest.raises(RowLengthError) as exc:
            repo.parse(b"X,Y\na,b\na,b,c\n", DataFormat.CSV)
        assert exc.value.line == 3

    def test_ragged_short_row(self, repo):
        with pytest.raises(RowLengthError) as exc:
            repo.parse(b"X,Y\na,b\nb\n", DataFormat.CSV)
        assert exc.value.line == 3

    def test_ragged_short_row_after_blank_line(self, repo):
        with pytest.raises(RowLengthError) as exc:
            repo.parse(b"X,Y,Z\na,b,c\n\nb,a\n", DataFormat.CSV)
        assert exc.value.line == 4

    def test_missing_value(self, repo):
        with pytest.raises(MissingValueError) as exc:
            repo.parse(b"X,Y\na,b\n,a\n", DataFormat.CSV)
        assert exc.value.line == 3

    def test_trailing_empty_field_is_missing_value(self, repo):
        with pytest.raises(MissingValueError) as exc:
            repo.parse(b"X,Y\na,b\nb,\n", DataFormat.CSV)
        assert exc.value.line == 3

    @pytest.mark.parametrize(
        "raw",
        [
            b"X,Y\nyes,a\nno,b\n\n\n",
            b"X,Y\nyes,a\n\nno,b\n",
            b"X,Y\n\nyes,a\nno,b\n\n",
        ],
    )
    def test_blank_lines_ignored(self, repo, raw):
        dataset = repo.parse(raw, DataFormat.CSV)
        assert dataset.n_instances == 2
        np.testing.assert_array_equal(dataset.rows, [[0, 0], [1, 1]])

    def test_header_with_only_blank_lines(self, repo):
        with pytest.raises(EmptyDatasetError):
            repo.parse(b"X,Y\n\n\n", DataFormat.CSV)

    def test_constant_column(self, repo):
        with pytest.raises(InvalidArityError):
            repo.parse(b"X,Y\na,b\na,c\n", DataFormat.CSV)

    def test_header_only(self, repo):
        with pytest.raises(EmptyDatasetError):
            repo.parse(b"X,Y\n", DataFormat.CSV)

    def test_empty_file(self, repo):
        with pytest.raises(MalformedHeaderError):
            repo.parse(b"", DataFormat.CSV)


class TestLoad:
    def test_missing_file(self, repo, tmp_path):
        with pytest.raises(InputNotFoundError, match="cannot open"):
            repo.load(tmp_path / "absent.dat", DataFormat.NATIVE)

    def test_format_from_extension(self, repo, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("X,Y\nu,v\nw,v\nu,z\n")
        dataset = repo.load(path)
        assert dataset.arities == (2, 2)

    def test_data_format_from_path(self):
        assert DataFormat.from_path("a.CSV") is DataFormat.CSV
        assert DataFormat.from_path("a.scores") is DataFormat.SCORES
        assert DataFormat.from_path("a.jkl") is DataFormat.SCORES
        assert DataFormat.from_path("a.dat") is DataFormat.NATIVE
