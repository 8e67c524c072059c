"""Scoring function enumeration."""

from enum import Enum


class ScoreFunction(str, Enum):
    """Decomposable scoring function (lower is better)."""

    BIC = "bic"
    BDEU = "bdeu"
