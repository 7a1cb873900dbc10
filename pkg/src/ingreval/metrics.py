"""Matching detected ingredient names to ground truth, and the scores
built on top of the matchings.

Exact matching pairs names per equal canonical value; fuzzy matching
additionally tolerates small recognition slips (edit distance bounded
by 2 by default, so "gelaton" still finds "gelatin"). The fuzzy greedy
consumes distance-0 pairs first, which guarantees fuzzy true positives
never fall below exact true positives on the same sample.
"""

from __future__ import annotations

import numpy as np
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import kernels
from .errors import ValidationError
from .model import CanonicalName
from .prng import stream_u64

# A sample whose exact F1 falls below this is counted as a catastrophic
# failure: the pipeline produced essentially nothing usable.
CATASTROPHIC_F1_THRESHOLD = 0.05

FUZZY_MAX_DISTANCE = 2


def _value(name: CanonicalName | str) -> str:
    return name.value if isinstance(name, CanonicalName) else name


def levenshtein(a: CanonicalName | str, b: CanonicalName | str) -> int:
    """Unit-cost edit distance over code points."""
    return kernels.levenshtein(_value(a), _value(b))


@dataclass(frozen=True)
class MatchResult:
    """Pairing between detected and truth name lists.

    pairs holds (detected_index, truth_index, distance) triples; each
    index appears in at most one pair.
    """

    pairs: tuple[tuple[int, int, int], ...]
    unmatched_detected: tuple[int, ...]
    unmatched_truth: tuple[int, ...]

    @property
    def true_positives(self) -> int:
        return len(self.pairs)


def _build_result(n_detected: int, n_truth: int,
                  pairs: list[tuple[int, int, int]]) -> MatchResult:
    used_d = {d for d, _, _ in pairs}
    used_t = {t for _, t, _ in pairs}
    return MatchResult(
        pairs=tuple(pairs),
        unmatched_detected=tuple(i for i in range(n_detected)
                                 if i not in used_d),
        unmatched_truth=tuple(i for i in range(n_truth) if i not in used_t))


def match_exact(detected: Sequence[CanonicalName],
                truth: Sequence[CanonicalName]) -> MatchResult:
    """Greedy one-to-one pairing of equal values.

    Each detected name, in order, takes the first still-unmatched truth
    name with the same value, so duplicates count once per occurrence
    on each side.
    """
    available: dict[str, list[int]] = {}
    for t_idx in range(len(truth) - 1, -1, -1):
        available.setdefault(_value(truth[t_idx]), []).append(t_idx)
    pairs = []
    for d_idx, name in enumerate(detected):
        stack = available.get(_value(name))
        if stack:
            pairs.append((d_idx, stack.pop(), 0))
    return _build_result(len(detected), len(truth), pairs)


def match_fuzzy(detected: Sequence[CanonicalName],
                truth: Sequence[CanonicalName],
                max_distance: int = FUZZY_MAX_DISTANCE) -> MatchResult:
    """Greedy one-to-one pairing by ascending edit distance.

    All pairs within max_distance are sorted by (distance,
    detected index, truth index) and accepted while both ends are free.
    Greedy, not optimal: a rare blocking arrangement can score one pair
    fewer than a maximum matching, which is an accepted trade for
    linearithmic behavior over the candidate edges.
    """
    if max_distance < 0:
        raise ValidationError(
            f"max_distance must be >= 0, got {max_distance}")
    edges = []
    for d_idx, d in enumerate(detected):
        dv = _value(d)
        for t_idx, t in enumerate(truth):
            dist = kernels.levenshtein_within(dv, _value(t), max_distance)
            if dist <= max_distance:
                edges.append((dist, d_idx, t_idx))
    edges.sort()
    d_free = [True] * len(detected)
    t_free = [True] * len(truth)
    pairs = []
    for dist, d_idx, t_idx in edges:
        if d_free[d_idx] and t_free[t_idx]:
            d_free[d_idx] = False
            t_free[t_idx] = False
            pairs.append((d_idx, t_idx, dist))
    pairs.sort(key=lambda p: p[0])
    return _build_result(len(detected), len(truth), pairs)


@dataclass(frozen=True)
class SampleMetrics:
    """Scores for one image."""

    image_id: str
    language: str
    n_detected: int
    n_truth: int
    tp_exact: int
    tp_fuzzy: int
    precision: float
    recall: float
    f1: float
    fuzzy_f1: float
    is_catastrophic: bool


def _prf(tp: int, n_detected: int, n_truth: int) -> tuple[float, float, float]:
    precision = tp / n_detected if n_detected else 0.0
    recall = tp / n_truth if n_truth else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall > 0 else 0.0)
    return precision, recall, f1


def compute_sample_metrics(detected: Sequence[CanonicalName],
                           truth: Sequence[CanonicalName], *,
                           image_id: str, language: str,
                           fuzzy_max_distance: int = FUZZY_MAX_DISTANCE
                           ) -> SampleMetrics:
    """Exact and fuzzy scores for one image.

    Precision is 0 when nothing was detected; recall is 0 when truth is
    empty; F1 is 0 whenever precision + recall is 0. The catastrophic
    flag uses exact F1.
    """
    exact = match_exact(detected, truth)
    fuzzy = match_fuzzy(detected, truth, fuzzy_max_distance)
    precision, recall, f1 = _prf(exact.true_positives,
                                 len(detected), len(truth))
    _, _, fuzzy_f1 = _prf(fuzzy.true_positives, len(detected), len(truth))
    return SampleMetrics(
        image_id=image_id,
        language=language,
        n_detected=len(detected),
        n_truth=len(truth),
        tp_exact=exact.true_positives,
        tp_fuzzy=fuzzy.true_positives,
        precision=precision,
        recall=recall,
        f1=f1,
        fuzzy_f1=fuzzy_f1,
        is_catastrophic=f1 < CATASTROPHIC_F1_THRESHOLD)


@dataclass(frozen=True)
class AggregateStats:
    """Macro averages over a set of samples."""

    n_samples: int
    mean_precision: float
    mean_recall: float
    mean_f1: float
    mean_fuzzy_f1: float
    catastrophic_rate_pct: float
    per_language_f1: Mapping[str, float] = field(default_factory=dict)
    per_language_n: Mapping[str, int] = field(default_factory=dict)


def aggregate(samples: Sequence[SampleMetrics]) -> AggregateStats:
    """Unweighted means over samples; catastrophic rate in percent.

    Per-language F1 averages only that language's samples.
    """
    if not samples:
        raise ValidationError("cannot aggregate zero samples")
    n = len(samples)
    by_lang: dict[str, list[float]] = {}
    for s in samples:
        by_lang.setdefault(s.language, []).append(s.f1)
    return AggregateStats(
        n_samples=n,
        mean_precision=sum(s.precision for s in samples) / n,
        mean_recall=sum(s.recall for s in samples) / n,
        mean_f1=sum(s.f1 for s in samples) / n,
        mean_fuzzy_f1=sum(s.fuzzy_f1 for s in samples) / n,
        catastrophic_rate_pct=100.0 * sum(s.is_catastrophic
                                          for s in samples) / n,
        per_language_f1={lang: sum(v) / len(v)
                         for lang, v in sorted(by_lang.items())},
        per_language_n={lang: len(v) for lang, v in sorted(by_lang.items())})


@dataclass(frozen=True)
class BootstrapResult:
    """Outcome of a paired bootstrap comparison on mean exact F1."""

    p_value: float
    observed_diff: float
    resamples: int
    seed: int


def paired_bootstrap(samples_a: Sequence[SampleMetrics],
                     samples_b: Sequence[SampleMetrics], *,
                     resamples: int = 10000, seed: int = 0
                     ) -> BootstrapResult:
    """Two-sided paired bootstrap over per-image exact F1.

    Samples must align one-to-one by image_id. Each resample draws n
    image indices with replacement and recomputes the mean F1
    difference; the p-value is 2 x min(fraction <= 0, fraction >= 0)
    clipped to [0, 1]. Deterministic in (inputs, resamples, seed).
    """
    if len(samples_a) != len(samples_b):
        raise ValidationError(
            f"paired bootstrap needs equal sample counts, got "
            f"{len(samples_a)} and {len(samples_b)}")
    if not samples_a:
        raise ValidationError("paired bootstrap needs at least one sample")
    for i, (a, b) in enumerate(zip(samples_a, samples_b)):
        if a.image_id != b.image_id:
            raise ValidationError(
                f"samples misaligned at position {i}: "
                f"{a.image_id!r} vs {b.image_id!r}")
    if resamples < 1:
        raise ValidationError(f"resamples must be >= 1, got {resamples}")

    diff = np.array([a.f1 - b.f1 for a, b in zip(samples_a, samples_b)],
                    dtype=np.float64)
    n = len(diff)
    le = 0
    ge = 0
    chunk = max(1, min(resamples, 4_000_000 // max(n, 1)))
    done = 0
    while done < resamples:
        take = min(chunk, resamples - done)
        raw = stream_u64(seed, take * n, offset=done * n)
        idx = (raw % np.uint64(n)).astype(np.intp).reshape(take, n)
        stats = diff[idx].mean(axis=1)
        le += int(np.count_nonzero(stats <= 0.0))
        ge += int(np.count_nonzero(stats >= 0.0))
        done += take
    p = 2.0 * min(le / resamples, ge / resamples)
    return BootstrapResult(p_value=min(max(p, 0.0), 1.0),
                           observed_diff=float(diff.mean()),
                           resamples=resamples, seed=seed)
