"""Use case for independently checking a credible set."""

from credible_networks.application.services.local_score_lookup import LocalScoreLookup
from credible_networks.config import settings
from credible_networks.domain.entities.credible_set import CredibleSet
from credible_networks.domain.exceptions.solver_exceptions import MissingLocalScoreError
from credible_networks.infrastructure.services.scoring_service import ScoringService
from credible_networks.logger import get_logger

logger = get_logger(__name__)

# Members must reproduce their stored score this closely
_SCORE_MATCH = 1e-9


class VerificationResult:
    """Outcome of a credible-set check."""

    ok: bool
    failures: list[str]

    def __init__(self, failures: list[str]) -> None:
        """Initialize VerificationResult.

        Args:
            failures: Human-readable failure descriptions (empty when all checks pass)
        """
        self.failures = failures
        self.ok = not failures

    def __bool__(self) -> bool:
        """True when every check passed."""
        return self.ok


class VerifyCredibleUseCase:
    """Use case for re-checking scores, acyclicity, bounds and uniqueness."""

    def execute(self, credible_set: CredibleSet, lookup: LocalScoreLookup) -> VerificationResult:
        """Execute the verification.

        Args:
            credible_set: Set to check
            lookup: Local scores the members must be scored with

        Returns:
            VerificationResult listing every failed check
        """
        tol = settings.score_tolerance
        opt = credible_set.opt_score
        upper = opt + credible_set.epsilon + tol
        failures: list[str] = []
        seen: set[bytes] = set()

        for position, dag in enumerate(credible_set.networks, start=1):
            label = f"network {position} ({dag.canonical_key.decode('ascii')})"
            if not dag.is_acyclic():
                failures.append(f"{label}: cycle detected")
            try:
                score = ScoringService.network_score(dag, lookup)
            except MissingLocalScoreError as e:
                failures.append(f"{label}: missing local score: {e}")
                score = None
            if score is not None and abs(score - dag.score) > _SCORE_MATCH:
                failures.append(f"{label}: score mismatch: stored {dag.score!r}, recomputed {score!r}")
            if not opt - tol <= dag.score <= upper:
                failures.append(f"{label}: score {dag.score!r} outside [{opt!r}, {upper!r}]")
            if dag.canonical_key in seen:
                failures.append(f"{label}: duplicate network")
            seen.add(dag.canonical_key)

        if credible_set.networks:
            best = min(g.score for g in credible_set.networks)
            if abs(best - opt) > tol:
                failures.append(f"best member score {best!r} differs from optimum {opt!r}")

        logger.info(
            "Credible set verified",
            networks=len(credible_set.networks),
            failures=len(failures),
        )
        return VerificationResult(failures=failures)
