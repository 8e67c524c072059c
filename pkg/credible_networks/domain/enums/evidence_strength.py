"""Bayes factor evidence scale enumeration."""

from enum import Enum


class EvidenceStrength(str, Enum):
    """Verbal category for a Bayes factor in favour of the better model."""

    ANECDOTAL = "anecdotal"
    POSITIVE = "positive"
    STRONG = "strong"
    VERY_STRONG = "very_strong"
