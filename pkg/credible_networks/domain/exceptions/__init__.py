"""Domain exceptions."""

from credible_networks.domain.exceptions.base import CredibleNetworksError
from credible_networks.domain.exceptions.config_exceptions import (
    ConfigurationError,
    ConflictingEpsilonOptionsError,
    EpsilonDomainError,
    InputNotFoundError,
    MissingEpsilonOptionError,
)
from credible_networks.domain.exceptions.input_exceptions import (
    DatasetParseError,
    DuplicateParentSetError,
    EmptyDatasetError,
    InfeasibleProblemError,
    InputError,
    InvalidArityError,
    InvalidValueError,
    MalformedHeaderError,
    MissingValueError,
    ParentCountMismatchError,
    RowLengthError,
    ScoreFileParseError,
    SectionCountMismatchError,
    UnknownParentError,
    ValueOutOfRangeError,
)
from credible_networks.domain.exceptions.solver_exceptions import (
    CapacityError,
    InvalidQueryError,
    MissingLocalScoreError,
    ParentSetTooLargeError,
    VariableLimitExceededError,
)

__all__ = [
    "CredibleNetworksError",
    "ConfigurationError",
    "ConflictingEpsilonOptionsError",
    "EpsilonDomainError",
    "InputNotFoundError",
    "MissingEpsilonOptionError",
    "InputError",
    "DatasetParseError",
    "MalformedHeaderError",
    "RowLengthError",
    "InvalidValueError",
    "ValueOutOfRangeError",
    "InvalidArityError",
    "MissingValueError",
    "EmptyDatasetError",
    "ScoreFileParseError",
    "SectionCountMismatchError",
    "ParentCountMismatchError",
    "UnknownParentError",
    "DuplicateParentSetError",
    "InfeasibleProblemError",
    "CapacityError",
    "VariableLimitExceededError",
    "ParentSetTooLargeError",
    "InvalidQueryError",
    "MissingLocalScoreError",
]
