"""Tests for candidate parent-set generation over the pruned lattice."""

import pytest

from credible_networks.application.use_cases.generate_candidates import (
    GenerateCandidatesUseCase,
    rule_bic_entropy,
)
from credible_networks.domain.entities.local_score import ScoreConfig
from credible_networks.domain.enums.prune_rule import CandidateStatus, PruneRule
from credible_networks.domain.enums.score_function import ScoreFunction
from credible_networks.domain.exceptions import InvalidQueryError, MissingLocalScoreError
from credible_networks.infrastructure.services.counting_service import CountingService
from tests.conftest import BIC_B_EMPTY, BIC_B_GIVEN_A, LN20, make_dataset, random_dataset


def generate(dataset, config, epsilon, **kwargs):
    return GenerateCandidatesUseCase(CountingService(dataset)).execute(config, epsilon, **kwargs)


class TestReferenceLists:
    def test_both_sets_kept_at_zero(self, d1, d1_bic):
        lists = generate(d1, d1_bic, 0.0)
        kept = lists.kept(1)
        assert [e.parents for e in kept] == [(0,), ()]
        assert kept[0].score.value == pytest.approx(BIC_B_GIVEN_A, abs=1e-8)
        assert kept[1].score.value == pytest.approx(BIC_B_EMPTY, abs=1e-8)
        assert lists.epsilon == 0.0
        assert lists.variables == ("A", "B")

    def test_lookup(self, d1, d1_bic):
        lists = generate(d1, d1_bic, LN20)
        assert lists.local_score(1, (0,)).value == pytest.approx(BIC_B_GIVEN_A, abs=1e-8)
        with pytest.raises(MissingLocalScoreError):
            lists.local_score(1, (1,))

    def test_stats_add_up(self, d1, d1_bic):
        stats = generate(d1, d1_bic, LN20).stats
        assert stats.scored == 4
        assert stats.visited == stats.scored + stats.skipped
        assert stats.cap == 1
        assert not stats.cap_bound

    def test_stats_render(self, d1, d1_bic):
        text = generate(d1, d1_bic, 0.0).stats.render()
        assert "rule=subset_score pruned=0" in text
        assert "scored=4" in text
        assert "cap=1" in text
        assert "caveat" not in text

    def test_negative_epsilon(self, d1, d1_bic):
        with pytest.raises(ValueError):
            generate(d1, d1_bic, -1.0)


class TestEntropyRule:
    def test_deterministic_child_pruned(self):
        dataset = make_dataset([[0, 0], [1, 0], [0, 0], [1, 0]], [2, 2])
        config = ScoreConfig(function=ScoreFunction.BIC, sample_size=4)
        assert rule_bic_entropy(CountingService(dataset), 1, (), 0, config, 0.0)

    def test_informative_parent_kept(self, d1, d1_bic):
        assert not rule_bic_entropy(CountingService(d1), 1, (), 0, d1_bic, 0.0)

    def test_huge_epsilon(self, d1, d1_bic):
        assert not rule_bic_entropy(CountingService(d1), 1, (), 0, d1_bic, 1e6)

    def test_invalid_extension(self, d1, d1_bic):
        with pytest.raises(InvalidQueryError):
            rule_bic_entropy(CountingService(d1), 1, (), 1, d1_bic, 0.0)


class TestPruning:
    def test_dominated_superset_pruned(self):
        # C is noise: adding it to B's parents only costs penalty
        dataset = random_dataset(4, 3, 50, arities=[2, 2, 3])
        config = ScoreConfig(function=ScoreFunction.BIC, sample_size=50)
        lists = generate(dataset, config, 0.0)
        pruned = [e for cl in lists.lists for e in cl.entries if e.status is CandidateStatus.PRUNED]
        assert pruned
        assert all(e.rule is not None for e in pruned)

    @pytest.mark.parametrize("seed", range(4))
    def test_kept_sets_not_dominated(self, seed):
        dataset = random_dataset(seed, 4, 40)
        config = ScoreConfig(function=ScoreFunction.BIC, sample_size=40)
        lists = generate(dataset, config, 0.0)
        for cl in lists.lists:
            scored = {e.parents: e.score.value for e in cl.entries if e.score is not None}
            for entry in cl.kept():
                for other, value in scored.items():
                    if set(other) < set(entry.parents):
                        assert not value + 1e-9 < entry.score.value - 1e-9

    @pytest.mark.parametrize("seed", range(4))
    def test_wider_window_keeps_more(self, seed):
        dataset = random_dataset(seed, 4, 30)
        config = ScoreConfig(function=ScoreFunction.BIC, sample_size=30)
        narrow = generate(dataset, config, 0.0)
        wide = generate(dataset, config, LN20)
        for child in range(4):
            narrow_sets = {e.parents for e in narrow.kept(child)}
            wide_sets = {e.parents for e in wide.kept(child)}
            assert narrow_sets <= wide_sets

    def test_threads_give_identical_lists(self):
        dataset = random_dataset(9, 5, 60)
        config = ScoreConfig(function=ScoreFunction.BDEU, alpha=1.0, sample_size=60)
        serial = generate(dataset, config, LN20, jobs=1)
        threaded = generate(dataset, config, LN20, jobs=3)
        for a, b in zip(serial.lists, threaded.lists):
            assert a.entries == b.entries

    def test_bad_jobs(self, d1, d1_bic):
        with pytest.raises(ValueError):
            generate(d1, d1_bic, 0.0, jobs=0)


class TestCardinalityCap:
    def test_bic_limit_from_sample_size(self):
        dataset = random_dataset(1, 13, 100, arities=[3] * 13)
        config = ScoreConfig(function=ScoreFunction.BIC, sample_size=100)
        lists = generate(dataset, config, LN20)
        assert lists.stats.cap == 10
        assert all(len(e.parents) <= 10 for cl in lists.lists for e in cl.entries)

    def test_bdeu_user_cap_binds(self):
        dataset = random_dataset(2, 3, 30)
        config = ScoreConfig(function=ScoreFunction.BDEU, alpha=1.0, sample_size=30)
        lists = generate(dataset, config, LN20, hard_cap=1)
        stats = lists.stats
        assert stats.cap == 1
        assert stats.cap_bound
        assert stats.pruned[PruneRule.PARENT_CAP] > 0
        assert "caveat" in stats.render()
        assert all(len(e.parents) <= 1 for cl in lists.lists for e in cl.entries)

    def test_bdeu_default_cap_not_binding(self):
        dataset = random_dataset(2, 3, 30)
        config = ScoreConfig(function=ScoreFunction.BDEU, alpha=1.0, sample_size=30)
        stats = generate(dataset, config, LN20).stats
        assert stats.cap == 2
        assert not stats.cap_bound
