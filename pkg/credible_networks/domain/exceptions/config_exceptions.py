"""Configuration and usage domain exceptions."""

from credible_networks.domain.exceptions.base import CredibleNetworksError


class ConfigurationError(CredibleNetworksError):
    """Base exception for invalid run configuration."""

    pass


class ConflictingEpsilonOptionsError(ConfigurationError):
    """Raised when more than one of epsilon / Bayes factor / rho is given."""

    def __init__(self, message: str = "conflicting epsilon options") -> None:
        super().__init__(message)


class MissingEpsilonOptionError(ConfigurationError):
    """Raised when none of epsilon / Bayes factor / rho is given."""

    def __init__(self, message: str = "one of --epsilon, --bf or --rho is required") -> None:
        super().__init__(message)


class EpsilonDomainError(ConfigurationError):
    """Raised when an epsilon, Bayes factor or rho lies outside its domain."""

    pass


class InputNotFoundError(ConfigurationError):
    """Raised when an input path cannot be opened."""

    def __init__(self, path: str) -> None:
        self.path = path
        super().__init__(f"cannot open {path}")
