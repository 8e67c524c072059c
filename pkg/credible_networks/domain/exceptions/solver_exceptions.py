"""Capacity and query domain exceptions."""

from credible_networks.domain.exceptions.base import CredibleNetworksError


class CapacityError(CredibleNetworksError):
    """Base exception for problems too large for the exact machinery."""

    pass


class VariableLimitExceededError(CapacityError):
    """Raised when the subset dynamic program would exceed its variable limit."""

    def __init__(self, n_variables: int, limit: int) -> None:
        self.n_variables = n_variables
        self.limit = limit
        super().__init__(
            f"{n_variables} variables exceed the dynamic-program limit of {limit}; "
            "reduce the dataset (drop variables) or raise CREDIBLE_DP_VARIABLE_LIMIT"
        )


class ParentSetTooLargeError(CapacityError):
    """Raised when a parent set has too many joint instantiations to score."""

    def __init__(self, child: int, parents: tuple[int, ...], instantiations: int) -> None:
        self.child = child
        self.parents = parents
        self.instantiations = instantiations
        super().__init__(
            f"parent set too large: {instantiations} instantiations for child {child} "
            f"with parents {list(parents)}"
        )


class InvalidQueryError(CredibleNetworksError, ValueError):
    """Raised when a counting query is malformed (bad index, child among parents)."""

    pass


class MissingLocalScoreError(CredibleNetworksError, LookupError):
    """Raised when a (child, parent set) pair has no computed local score."""

    def __init__(self, child: int, parents: tuple[int, ...]) -> None:
        self.child = child
        self.parents = parents
        super().__init__(f"no local score for child {child} with parents {list(parents)}")
