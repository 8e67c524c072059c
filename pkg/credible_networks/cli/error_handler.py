"""Maps domain exceptions to process exit codes."""

import sys

from pydantic import ValidationError

from credible_networks.domain.exceptions.base import CredibleNetworksError
from credible_networks.domain.exceptions.config_exceptions import ConfigurationError
from credible_networks.domain.exceptions.input_exceptions import InputError
from credible_networks.domain.exceptions.solver_exceptions import (
    CapacityError,
    MissingLocalScoreError,
)
from credible_networks.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CAPACITY = 4


def exit_code_for(exc: BaseException) -> int:
    """Stable exit code of an exception.

    Args:
        exc: Raised exception

    Returns:
        2 for usage/configuration, 3 for input, 4 for capacity, 1 otherwise
    """
    if isinstance(exc, (ConfigurationError, ValidationError)):
        return EXIT_USAGE
    if isinstance(exc, (InputError, MissingLocalScoreError)):
        return EXIT_INPUT
    if isinstance(exc, CapacityError):
        return EXIT_CAPACITY
    return EXIT_FAILURE


def _message(exc: BaseException) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'options'}: {err['msg']}"
            for err in exc.errors()
        )
    return str(exc) or type(exc).__name__


def handle_error(exc: BaseException) -> int:
    """Report an exception on stderr and return its exit code."""
    code = exit_code_for(exc)
    if code == EXIT_FAILURE and not isinstance(exc, CredibleNetworksError):
        logger.error("Unexpected failure", error=str(exc), exc_info=True)
    print(f"error: {_message(exc)}", file=sys.stderr)
    return code
