"""Pure-Python implementations of the hot kernels.

ingreval.kernels re-exports these when the compiled module is absent.
Both implementations follow the same contracts and are tested against
each other, so which one is loaded never changes results, only speed.
"""

from __future__ import annotations

from collections.abc import Sequence


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance (insert / delete / substitute).

    Two-row dynamic program over code points.
    """
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la < lb:
        a, b, la, lb = b, a, lb, la
    prev = list(range(lb + 1))
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        cur[0] = i
        ca = a[i - 1]
        for j in range(1, lb + 1):
            cost = 0 if ca == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev, cur = cur, prev
    return prev[lb]


def levenshtein_within(a: str, b: str, limit: int) -> int:
    """Edit distance if it is <= limit, else limit + 1.

    Length difference alone settles hopeless pairs; otherwise the DP is
    restricted to a diagonal band of half-width `limit`.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    la, lb = len(a), len(b)
    if abs(la - lb) > limit:
        return limit + 1
    if a == b:
        return 0
    if la == 0 or lb == 0:
        return max(la, lb)  # length gap check above bounds this
    if limit == 0:
        return 1
    if la < lb:
        a, b, la, lb = b, a, lb, la
    big = limit + 1
    prev = [min(j, big) for j in range(lb + 1)]
    cur = [0] * (lb + 1)
    for i in range(1, la + 1):
        lo = max(1, i - limit)
        hi = min(lb, i + limit)
        cur[0] = min(i, big)
        if lo > 1:
            cur[lo - 1] = big
        ca = a[i - 1]
        row_best = big
        for j in range(lo, hi + 1):
            cost = 0 if ca == b[j - 1] else 1
            val = prev[j - 1] + cost
            if prev[j] + 1 < val:
                val = prev[j] + 1
            if cur[j - 1] + 1 < val:
                val = cur[j - 1] + 1
            if val > big:
                val = big
            cur[j] = val
            if val < row_best:
                row_best = val
        if hi < lb:
            cur[hi + 1] = big
        if row_best >= big:
            return big
        prev, cur = cur, prev
    return min(prev[lb], big)


NOISE = -1
_UNSEEN = -2


def dbscan_labels(xs: Sequence[float], ys: Sequence[float],
                  eps: float, min_samples: int) -> list[int]:
    """Density clustering over 2-D points; returns one label per point.

    Labels are consecutive integers from 0 in discovery order; -1 marks
    noise. Deterministic: points are visited in index order, neighbor
    lists are in index order, and expansion is breadth-first, so a
    border point in reach of several clusters joins the one discovered
    first.
    """
    n = len(xs)
    if len(ys) != n:
        raise ValueError("xs and ys must have equal length")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if min_samples < 1:
        raise ValueError(f"min_samples must be >= 1, got {min_samples}")
    eps2 = eps * eps
    labels = [_UNSEEN] * n

    def region(i: int) -> list[int]:
        xi, yi = xs[i], ys[i]
        out = []
        for j in range(n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            if dx * dx + dy * dy <= eps2:
                out.append(j)
        return out

    cluster = -1
    for i in range(n):
        if labels[i] != _UNSEEN:
            continue
        neighbors = region(i)
        if len(neighbors) < min_samples:
            labels[i] = NOISE
            continue
        cluster += 1
        labels[i] = cluster
        queue = [j for j in neighbors if j != i]
        head = 0
        while head < len(queue):
            q = queue[head]
            head += 1
            if labels[q] == NOISE:
                labels[q] = cluster  # border point reached from a core
            if labels[q] != _UNSEEN:
                continue
            labels[q] = cluster
            q_neighbors = region(q)
            if len(q_neighbors) >= min_samples:
                # noise neighbors re-enter the queue so a border point
                # within eps of this core is reclaimed by the cluster
                queue.extend(j for j in q_neighbors
                             if labels[j] == _UNSEEN or labels[j] == NOISE)
    return labels
