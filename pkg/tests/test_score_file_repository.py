"""Tests for reading and writing score files."""

import pytest

from credible_networks.application.use_cases.generate_candidates import GenerateCandidatesUseCase
from credible_networks.domain.exceptions import (
    DuplicateParentSetError,
    InputNotFoundError,
    ParentCountMismatchError,
    ScoreFileParseError,
    SectionCountMismatchError,
    UnknownParentError,
)
from credible_networks.infrastructure.repositories.score_file_repository_impl import (
    ScoreFileRepositoryImpl,
)
from credible_networks.infrastructure.services.counting_service import CountingService
from tests.conftest import BIC_B_EMPTY, BIC_B_GIVEN_A, LN20

TWO_VARIABLES = b"""2
A 2
-6.578122699 1 B
-6.584898215 0
B 2
-6.578122699 1 A
-6.584898215 0
"""


@pytest.fixture
def repo() -> ScoreFileRepositoryImpl:
    return ScoreFileRepositoryImpl()


class TestRead:
    def test_scores_negated(self, repo):
        lists = repo.read(TWO_VARIABLES)
        assert lists.variables == ("A", "B")
        assert lists.local_score(1, (0,)).value == pytest.approx(BIC_B_GIVEN_A)
        assert lists.local_score(1, ()).value == pytest.approx(BIC_B_EMPTY)
        assert lists.epsilon is None

    def test_blank_lines_ignored(self, repo):
        lists = repo.read(b"\n1\n\nX 1\n\n-2.5 0\n\n")
        assert lists.local_score(0, ()).value == 2.5

    def test_empty_section(self, repo):
        lists = repo.read(b"2\nX 0\nY 1\n-1.0 0\n")
        assert lists.kept(0) == []

    def test_too_few_sections(self, repo):
        with pytest.raises(SectionCountMismatchError, match="section count mismatch"):
            repo.read(b"2\nX 1\n-1.0 0\n")

    def test_too_many_sections(self, repo):
        with pytest.raises(SectionCountMismatchError) as exc:
            repo.read(b"1\nX 1\n-1.0 0\nY 1\n-1.0 0\n")
        assert exc.value.line == 4

    def test_parent_count_mismatch(self, repo):
        with pytest.raises(ParentCountMismatchError) as exc:
            repo.read(b"2\nX 1\n-1.0 2 Y\nY 1\n-1.0 0\n")
        assert exc.value.line == 3
        assert "line 3" in str(exc.value)

    def test_unknown_parent(self, repo):
        with pytest.raises(UnknownParentError, match="unknown parent"):
            repo.read(b"2\nX 1\n-1.0 1 Z\nY 1\n-1.0 0\n")

    def test_self_parent(self, repo):
        with pytest.raises(UnknownParentError):
            repo.read(b"2\nX 1\n-1.0 1 X\nY 1\n-1.0 0\n")

    def test_duplicate_parent_set(self, repo):
        with pytest.raises(DuplicateParentSetError) as exc:
            repo.read(b"2\nX 2\n-1.0 0\n-2.0 0\nY 1\n-1.0 0\n")
        assert exc.value.line == 4

    def test_bad_score(self, repo):
        with pytest.raises(ScoreFileParseError):
            repo.read(b"1\nX 1\nabc 0\n")

    @pytest.mark.parametrize("token", [b"nan", b"inf", b"-inf", b"NaN"])
    def test_non_finite_score(self, repo, token):
        with pytest.raises(ScoreFileParseError, match="finite") as exc:
            repo.read(b"2\nX 1\n-1.0 0\nY 2\n" + token + b" 0\n-2.0 1 X\n")
        assert exc.value.line == 5

    def test_missing_count(self, repo):
        with pytest.raises(ScoreFileParseError):
            repo.read(b"")

    def test_missing_file(self, repo, tmp_path):
        with pytest.raises(InputNotFoundError):
            repo.load(tmp_path / "absent.scores")


class TestWrite:
    def test_layout(self, repo, d1, d1_bic):
        lists = GenerateCandidatesUseCase(CountingService(d1)).execute(d1_bic, LN20)
        text = repo.write(lists).decode()
        lines = text.splitlines()
        assert lines[0] == "2"
        assert lines[1] == "A 2"
        # best entry first, higher-is-better on disk
        assert lines[2].split()[1:] == ["1", "B"]
        assert float(lines[2].split()[0]) == pytest.approx(-BIC_B_GIVEN_A, abs=1e-8)
        assert lines[3].split()[1:] == ["0"]
        assert lines[4] == "B 2"

    def test_round_trip_exact(self, repo, d1, d1_bic, tmp_path):
        lists = GenerateCandidatesUseCase(CountingService(d1)).execute(d1_bic, LN20)
        path = tmp_path / "d1.scores"
        repo.save(lists, path)
        loaded = repo.load(path)
        assert loaded.variables == lists.variables
        for child in range(2):
            original = [(e.parents, e.score.value) for e in lists.kept(child)]
            reread = [(e.parents, e.score.value) for e in loaded.kept(child)]
            assert reread == original

    def test_rewrite_is_stable(self, repo):
        once = repo.write(repo.read(TWO_VARIABLES))
        assert repo.write(repo.read(once)) == once
