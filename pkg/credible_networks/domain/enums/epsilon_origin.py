"""Epsilon origin enumeration."""

from enum import Enum


class EpsilonOrigin(str, Enum):
    """How the score window epsilon was specified."""

    DIRECT = "epsilon"
    BAYES_FACTOR = "bf"
    FACTOR = "rho"
