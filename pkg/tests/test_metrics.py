"""Matching, per-sample scores, aggregation, and the paired bootstrap."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ingreval.errors import ValidationError
from ingreval.metrics import (
    CATASTROPHIC_F1_THRESHOLD,
    SampleMetrics,
    aggregate,
    compute_sample_metrics,
    levenshtein,
    match_exact,
    match_fuzzy,
    paired_bootstrap,
)
from ingreval.model import canonicalize

small_names = st.lists(st.sampled_from(
    ["water", "sugar", "salt", "flour", "oil", "yeast"]), max_size=8)


def sample(image_id, f1, language="en", fuzzy_f1=None, **overrides):
    fuzzy = f1 if fuzzy_f1 is None else fuzzy_f1
    fields = dict(image_id=image_id, language=language, n_detected=10,
                  n_truth=10, tp_exact=0, tp_fuzzy=0, precision=f1,
                  recall=f1, f1=f1, fuzzy_f1=fuzzy,
                  is_catastrophic=f1 < CATASTROPHIC_F1_THRESHOLD)
    fields.update(overrides)
    return SampleMetrics(**fields)


class TestMatchExact:
    def test_disjoint(self):
        r = match_exact(["water"], ["salt"])
        assert r.true_positives == 0
        assert r.unmatched_detected == (0,)
        assert r.unmatched_truth == (0,)

    def test_pairs_first_free_truth(self):
        r = match_exact(["salt", "salt"], ["salt", "water", "salt"])
        assert r.pairs == ((0, 0, 0), (1, 2, 0))
        assert r.unmatched_truth == (1,)

    def test_duplicates_count_once_per_occurrence(self):
        r = match_exact(["salt", "salt", "salt"], ["salt"])
        assert r.true_positives == 1
        assert r.unmatched_detected == (1, 2)

    def test_empty_sides(self):
        assert match_exact([], []).true_positives == 0
        assert match_exact([], ["a"]).unmatched_truth == (0,)
        assert match_exact(["a"], []).unmatched_detected == (0,)

    def test_accepts_canonical_names(self):
        r = match_exact([canonicalize("Water ")], [canonicalize("water")])
        assert r.true_positives == 1

    @given(small_names, small_names)
    def test_tp_is_multiset_intersection(self, detected, truth):
        r = match_exact(detected, truth)
        want = sum((Counter(detected) & Counter(truth)).values())
        assert r.true_positives == want

    @given(small_names, small_names)
    def test_indices_used_at_most_once(self, detected, truth):
        r = match_exact(detected, truth)
        d_used = [d for d, _, _ in r.pairs]
        t_used = [t for _, t, _ in r.pairs]
        assert len(d_used) == len(set(d_used))
        assert len(t_used) == len(set(t_used))
        assert sorted(d_used + list(r.unmatched_detected)) == \
            list(range(len(detected)))
        assert sorted(t_used + list(r.unmatched_truth)) == \
            list(range(len(truth)))


def brute_force_max_matching(detected, truth, max_distance=2):
    """Exponential reference: maximum one-to-one matching size."""
    ok = [[levenshtein(d, t) <= max_distance for t in truth]
          for d in detected]

    def best(i, used):
        if i == len(detected):
            return 0
        r = best(i + 1, used)
        for j in range(len(truth)):
            if ok[i][j] and not used & (1 << j):
                r = max(r, 1 + best(i + 1, used | (1 << j)))
        return r

    return best(0, 0)


class TestMatchFuzzy:
    def test_exact_pairs_consumed_first(self):
        # both detected names are within reach of the single truth
        # name, but the exact one must take it
        r = match_fuzzy(["salte", "salt"], ["salt"])
        assert r.pairs == ((1, 0, 0),)
        assert r.unmatched_detected == (0,)

    def test_distance_recorded(self):
        r = match_fuzzy(["gelaton"], ["gelatin"])
        assert r.pairs == ((0, 0, 1),)

    def test_beyond_limit_unmatched(self):
        r = match_fuzzy(["wutoz"], ["water"])
        assert r.true_positives == 0

    def test_tie_breaks_by_detected_then_truth_index(self):
        r = match_fuzzy(["aa", "aa"], ["ab", "ac"], max_distance=1)
        assert r.pairs == ((0, 0, 1), (1, 1, 1))

    def test_negative_distance_rejected(self):
        with pytest.raises(ValidationError):
            match_fuzzy(["a"], ["a"], max_distance=-1)

    def test_zero_distance_equals_exact(self):
        detected = ["salt", "salt", "water"]
        truth = ["salt", "water", "water"]
        fz = match_fuzzy(detected, truth, max_distance=0)
        ex = match_exact(detected, truth)
        assert fz.true_positives == ex.true_positives

    def test_greedy_blocking_case_documented(self):
        # greedy takes the distance-1 edge and strands both leftovers;
        # a maximum matching would pair all four names
        detected = ["abcx", "abzw"]
        truth = ["abcd", "qbcx"]
        assert levenshtein("abcx", "abcd") == 1
        assert levenshtein("abcx", "qbcx") == 1
        assert levenshtein("abzw", "abcd") == 2
        assert levenshtein("abzw", "qbcx") == 3
        r = match_fuzzy(detected, truth, max_distance=2)
        assert r.true_positives == 1
        assert brute_force_max_matching(detected, truth, 2) == 2

    @given(small_names, small_names)
    def test_fuzzy_tp_bounds(self, detected, truth):
        ex = match_exact(detected, truth).true_positives
        fz = match_fuzzy(detected, truth).true_positives
        opt = brute_force_max_matching(detected, truth)
        assert ex <= fz <= opt

    @given(small_names, small_names)
    def test_pairs_respect_distance_bound(self, detected, truth):
        r = match_fuzzy(detected, truth, max_distance=2)
        for d_idx, t_idx, dist in r.pairs:
            assert dist == levenshtein(detected[d_idx], truth[t_idx])
            assert dist <= 2


class TestComputeSampleMetrics:
    def test_worked_example(self):
        # 2 of 4 detected correct against 5 truth names
        detected = ["water", "salt", "qqqqq", "zzzzz"]
        truth = ["water", "salt", "flour", "honey", "yeast"]
        m = compute_sample_metrics(detected, truth, image_id="i",
                                   language="en")
        assert m.tp_exact == 2
        assert m.precision == pytest.approx(0.5)
        assert m.recall == pytest.approx(0.4)
        assert m.f1 == pytest.approx(4 / 9)

    def test_nothing_detected(self):
        m = compute_sample_metrics([], ["water"], image_id="i",
                                   language="en")
        assert (m.precision, m.recall, m.f1) == (0.0, 0.0, 0.0)
        assert m.is_catastrophic

    def test_perfect(self):
        m = compute_sample_metrics(["water"], ["water"], image_id="i",
                                   language="en")
        assert m.f1 == 1.0
        assert not m.is_catastrophic

    def test_catastrophic_threshold_is_strict(self):
        # F1 exactly 0.05 is not catastrophic; just below is
        at = compute_sample_metrics(
            ["water"] + ["x%02d" % i for i in range(19)],
            ["water"] + ["y%02d" % i for i in range(19)],
            image_id="i", language="en")
        assert at.f1 == pytest.approx(0.05)
        assert not at.is_catastrophic
        below = compute_sample_metrics(
            ["water"] + ["x%02d" % i for i in range(39)],
            ["water"] + ["y%02d" % i for i in range(39)],
            image_id="i", language="en")
        assert below.f1 == pytest.approx(0.025)
        assert below.is_catastrophic

    def test_fuzzy_never_below_exact(self):
        m = compute_sample_metrics(["gelaton", "sall"],
                                   ["gelatin", "salt"],
                                   image_id="i", language="en")
        assert m.tp_exact == 0
        assert m.tp_fuzzy == 2
        assert m.fuzzy_f1 >= m.f1

    @given(small_names, small_names)
    def test_matches_rational_arithmetic(self, detected, truth):
        m = compute_sample_metrics(detected, truth, image_id="i",
                                   language="en")
        tp = Fraction(m.tp_exact)
        p = tp / len(detected) if detected else Fraction(0)
        r = tp / len(truth) if truth else Fraction(0)
        f1 = 2 * p * r / (p + r) if p + r > 0 else Fraction(0)
        assert abs(m.precision - p) <= 1e-12
        assert abs(m.recall - r) <= 1e-12
        assert abs(m.f1 - f1) <= 1e-12


class TestAggregate:
    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            aggregate([])

    def test_unweighted_means(self):
        stats = aggregate([sample("a", 1.0), sample("b", 0.5),
                           sample("c", 0.0)])
        assert stats.n_samples == 3
        assert stats.mean_f1 == pytest.approx(0.5)
        assert stats.catastrophic_rate_pct == pytest.approx(100 / 3)

    def test_catastrophic_rate_example(self):
        samples = [sample(f"c{i}", 0.0) for i in range(12)] + \
                  [sample(f"g{i}", 1.0) for i in range(24)]
        stats = aggregate(samples)
        assert abs(stats.catastrophic_rate_pct - 33.3) <= 0.05

    def test_per_language_breakdown(self):
        stats = aggregate([sample("a", 1.0, language="en"),
                           sample("b", 0.0, language="en"),
                           sample("c", 0.8, language="no")])
        assert stats.per_language_f1 == \
            pytest.approx({"en": 0.5, "no": 0.8})
        assert stats.per_language_n == {"en": 2, "no": 1}
        assert list(stats.per_language_f1) == ["en", "no"]

    @given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1,
                    max_size=12),
           st.randoms(use_true_random=False))
    def test_permutation_invariant(self, f1s, rnd):
        samples = [sample(f"s{i}", v) for i, v in enumerate(f1s)]
        shuffled = list(samples)
        rnd.shuffle(shuffled)
        a, b = aggregate(samples), aggregate(shuffled)
        assert a.mean_f1 == pytest.approx(b.mean_f1, abs=1e-12)
        assert a.catastrophic_rate_pct == \
            pytest.approx(b.catastrophic_rate_pct, abs=1e-12)
        assert a.per_language_n == b.per_language_n


class TestPairedBootstrap:
    def a_samples(self, f1s, prefix="img"):
        return [sample(f"{prefix}{i}", v) for i, v in enumerate(f1s)]

    def test_identical_runs_give_p_one(self):
        a = self.a_samples([0.2, 0.5, 0.9, 0.4])
        b = self.a_samples([0.2, 0.5, 0.9, 0.4])
        r = paired_bootstrap(a, b, resamples=500, seed=7)
        assert r.p_value == 1.0
        assert r.observed_diff == 0.0

    def test_fully_separated_runs_give_p_zero(self):
        a = self.a_samples([0.9, 0.8, 0.95, 0.85])
        b = self.a_samples([0.1, 0.2, 0.05, 0.15])
        r = paired_bootstrap(a, b, resamples=500, seed=7)
        assert r.p_value == 0.0
        assert r.observed_diff == pytest.approx(0.75)

    def test_deterministic_in_seed(self):
        a = self.a_samples([0.2, 0.9, 0.4, 0.6, 0.3])
        b = self.a_samples([0.3, 0.7, 0.5, 0.4, 0.5])
        r1 = paired_bootstrap(a, b, resamples=2000, seed=11)
        r2 = paired_bootstrap(a, b, resamples=2000, seed=11)
        assert r1 == r2

    def test_alignment_enforced(self):
        a = self.a_samples([0.5, 0.6])
        b = list(reversed(self.a_samples([0.5, 0.6])))
        with pytest.raises(ValidationError, match="misaligned"):
            paired_bootstrap(a, b)

    def test_equal_lengths_enforced(self):
        with pytest.raises(ValidationError, match="equal sample counts"):
            paired_bootstrap(self.a_samples([0.5]), self.a_samples([]))

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            paired_bootstrap([], [])

    def test_resamples_validated(self):
        a = self.a_samples([0.5])
        with pytest.raises(ValidationError):
            paired_bootstrap(a, a, resamples=0)

    def test_p_value_in_unit_interval(self):
        a = self.a_samples([0.5, 0.7, 0.2, 0.9, 0.4, 0.6])
        b = self.a_samples([0.6, 0.5, 0.3, 0.8, 0.5, 0.5])
        r = paired_bootstrap(a, b, resamples=3000, seed=3)
        assert 0.0 <= r.p_value <= 1.0
