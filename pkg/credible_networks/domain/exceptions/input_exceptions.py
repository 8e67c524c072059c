"""Input (dataset and score file) domain exceptions."""

from typing import Optional

from credible_networks.domain.exceptions.base import CredibleNetworksError


class InputError(CredibleNetworksError):
    """Base exception for malformed input content."""

    pass


class LineError(InputError):
    """Input error located at a line of the source (1-based)."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DatasetParseError(LineError):
    """Base exception for dataset parse failures."""

    pass


class MalformedHeaderError(DatasetParseError):
    """Raised when the name or arity header is missing or malformed."""

    pass


class RowLengthError(DatasetParseError):
    """Raised when a row does not hold exactly one value per variable."""

    pass


class InvalidValueError(DatasetParseError):
    """Raised when a native-format value is not an integer."""

    pass


class ValueOutOfRangeError(DatasetParseError):
    """Raised when a value is not below its declared arity."""

    pass


class InvalidArityError(DatasetParseError):
    """Raised when a variable has fewer than two states."""

    pass


class MissingValueError(DatasetParseError):
    """Raised when a row contains an empty value."""

    pass


class EmptyDatasetError(DatasetParseError):
    """Raised when a dataset holds no instances."""

    pass


class ScoreFileParseError(LineError):
    """Base exception for score file parse failures."""

    pass


class SectionCountMismatchError(ScoreFileParseError):
    """Raised when the number of sections differs from the declared count."""

    pass


class ParentCountMismatchError(ScoreFileParseError):
    """Raised when a score line lists a different number of parents than declared."""

    pass


class UnknownParentError(ScoreFileParseError):
    """Raised when a parent name does not resolve to a declared variable."""

    pass


class DuplicateParentSetError(ScoreFileParseError):
    """Raised when a section lists the same parent set twice."""

    pass


class InfeasibleProblemError(InputError):
    """Raised when the candidate lists admit no acyclic network at all."""

    pass
