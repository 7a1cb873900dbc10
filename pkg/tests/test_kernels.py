"""Hot kernels against independent references, and compiled/pure
backend equivalence.

The references here are deliberately written in a different style from
the shipped code: the edit-distance oracle fills the full DP matrix,
and the clustering oracle is declarative (cores, core components,
closed-form border assignment) rather than an index-order BFS.
"""

from __future__ import annotations

import numpy as np
import pytest

from ingreval import _fallback
from ingreval.kernels import COMPILED, dbscan_labels, levenshtein, levenshtein_within
from ingreval.prng import SplitMix64

try:
    from ingreval import _speedups
except ImportError:
    _speedups = None


def ref_levenshtein(a: str, b: str) -> int:
    """Textbook full-matrix edit distance."""
    n, m = len(a), len(b)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        d[i][0] = i
    for j in range(m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + cost)
    return d[n][m]


def ref_dbscan(xs, ys, eps, min_samples):
    """Declarative density clustering with the documented border rule.

    Cores have >= min_samples points (self included) within eps.
    Clusters are connected components of cores under the eps relation.
    A non-core point within eps of any core joins the component whose
    minimum core index is smallest; everything else is noise (-1).
    """
    pts = np.column_stack([np.asarray(xs, float), np.asarray(ys, float)])
    n = len(pts)
    if n == 0:
        return []
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
    adj = d2 <= eps * eps
    counts = adj.sum(axis=1)
    core = counts >= min_samples

    comp = [-1] * n
    comps: list[list[int]] = []
    for i in range(n):
        if not core[i] or comp[i] != -1:
            continue
        cid = len(comps)
        stack, members = [i], []
        comp[i] = cid
        while stack:
            j = stack.pop()
            members.append(j)
            for k in np.flatnonzero(adj[j]):
                if core[k] and comp[k] == -1:
                    comp[k] = cid
                    stack.append(int(k))
        comps.append(members)

    labels = [-1] * n
    order = sorted(range(len(comps)), key=lambda c: min(comps[c]))
    rank = {cid: r for r, cid in enumerate(order)}
    for i in range(n):
        if core[i]:
            labels[i] = rank[comp[i]]
            continue
        adjacent = {comp[k] for k in np.flatnonzero(adj[i]) if core[k]}
        if adjacent:
            labels[i] = min(rank[c] for c in adjacent)
    return labels


def partition(labels):
    """Set-of-sets view: clusters as sets, each noise point a singleton."""
    groups: dict[int, set[int]] = {}
    noise = []
    for i, lab in enumerate(labels):
        if lab == -1:
            noise.append(frozenset([i]))
        else:
            groups.setdefault(lab, set()).add(i)
    return frozenset(map(frozenset, groups.values())) | frozenset(noise)


def random_points(rng: SplitMix64, n: int, spread: float = 100.0):
    xs = [rng.uniform() * spread for _ in range(n)]
    ys = [rng.uniform() * spread for _ in range(n)]
    return xs, ys


class TestLevenshtein:
    def test_single_vowel_ocr_slip(self):
        assert levenshtein("gelatin", "gelaton") == 1

    def test_basics(self):
        assert levenshtein("", "") == 0
        assert levenshtein("abc", "") == 3
        assert levenshtein("kitten", "sitting") == 3
        assert levenshtein("水あめ", "水飴") == 2

    def test_against_reference_1000_pairs(self):
        rng = SplitMix64(2024)
        alphabet = "abcdefgh水飴é"
        mismatches = 0
        for _ in range(1000):
            a = "".join(rng.choice(alphabet)
                        for _ in range(rng.randint(31)))
            b = "".join(rng.choice(alphabet)
                        for _ in range(rng.randint(31)))
            if levenshtein(a, b) != ref_levenshtein(a, b):
                mismatches += 1
        assert mismatches == 0

    def test_within_matches_full_when_below_limit(self):
        rng = SplitMix64(55)
        alphabet = "abcde"
        for _ in range(400):
            a = "".join(rng.choice(alphabet)
                        for _ in range(rng.randint(12)))
            b = "".join(rng.choice(alphabet)
                        for _ in range(rng.randint(12)))
            true = ref_levenshtein(a, b)
            for limit in (0, 1, 2, 3):
                got = levenshtein_within(a, b, limit)
                if true <= limit:
                    assert got == true
                else:
                    assert got > limit

    def test_within_length_gap_short_circuit(self):
        assert levenshtein_within("ab", "abcdefgh", 2) > 2


class TestDbscan:
    @pytest.mark.parametrize("eps,min_samples", [(5.0, 3), (12.0, 4),
                                                 (2.0, 2)])
    def test_against_reference_random_sets(self, eps, min_samples):
        rng = SplitMix64(hash((eps, min_samples)) & (2**32 - 1))
        for trial in range(60):
            n = 1 + rng.randint(120)
            xs, ys = random_points(rng, n)
            got = list(dbscan_labels(xs, ys, eps, min_samples))
            want = ref_dbscan(xs, ys, eps, min_samples)
            assert partition(got) == partition(want), \
                f"trial {trial}, n={n}"

    def test_labels_are_contiguous_from_zero(self):
        rng = SplitMix64(9)
        xs, ys = random_points(rng, 80, spread=30.0)
        labels = list(dbscan_labels(xs, ys, 6.0, 3))
        seen = sorted(set(labels) - {-1})
        assert seen == list(range(len(seen)))

    def test_border_point_joins_first_founded_cluster(self):
        # two 4-point cores flank one point that is border to both
        # (only one core from each side in reach, so it is not a core
        # itself); the cluster founded by the lower index wins
        xs = [0.0, 0.0, 0.0, 0.0, 5.0, 10.0, 10.0, 10.0, 10.0]
        ys = [0.0, 1.0, 2.0, 3.0, 0.0, 0.0, 1.0, 2.0, 3.0]
        labels = list(dbscan_labels(xs, ys, 5.0, 4))
        assert labels[:5] == [0, 0, 0, 0, 0]
        assert labels[5:] == [1, 1, 1, 1]

    def test_noise_reclaimed_as_border(self):
        # index 0 is isolated from the low-index side and initially
        # noise; a later core within eps must adopt it
        xs = [0.0, 100.0, 1.0, 1.0, 1.0]
        ys = [0.0, 0.0, 0.5, 1.0, 1.5]
        labels = list(dbscan_labels(xs, ys, 2.0, 3))
        assert labels[1] == -1
        assert labels[0] == labels[2] == labels[3] == labels[4] == 0

    def test_all_noise_when_sparse(self):
        xs = [0.0, 50.0, 100.0]
        ys = [0.0, 50.0, 100.0]
        assert list(dbscan_labels(xs, ys, 1.0, 2)) == [-1, -1, -1]

    def test_empty_and_single(self):
        assert list(dbscan_labels([], [], 1.0, 2)) == []
        assert list(dbscan_labels([1.0], [1.0], 1.0, 1)) == [0]
        assert list(dbscan_labels([1.0], [1.0], 1.0, 2)) == [-1]


@pytest.mark.skipif(_speedups is None,
                    reason="compiled extension not built")
class TestBackendEquivalence:
    def test_levenshtein_lockstep(self):
        rng = SplitMix64(77)
        alphabet = "abcdefg日本語"
        for _ in range(500):
            a = "".join(rng.choice(alphabet)
                        for _ in range(rng.randint(25)))
            b = "".join(rng.choice(alphabet)
                        for _ in range(rng.randint(25)))
            assert _speedups.levenshtein(a, b) == \
                _fallback.levenshtein(a, b)
            for limit in (0, 1, 2, 5):
                assert _speedups.levenshtein_within(a, b, limit) == \
                    _fallback.levenshtein_within(a, b, limit)

    def test_dbscan_lockstep(self):
        rng = SplitMix64(88)
        for trial in range(150):
            n = 1 + rng.randint(200)
            xs, ys = random_points(rng, n, spread=60.0)
            eps = 1.0 + rng.uniform() * 10.0
            min_samples = 2 + rng.randint(4)
            a = list(_speedups.dbscan_labels(
                np.ascontiguousarray(xs), np.ascontiguousarray(ys),
                eps, min_samples))
            b = _fallback.dbscan_labels(xs, ys, eps, min_samples)
            assert a == list(b), f"trial {trial}, n={n}"

    def test_active_backend_is_compiled(self):
        assert COMPILED
