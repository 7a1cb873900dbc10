# cython: boundscheck=False, wraparound=False, cdivision=True
"""C implementations of the hot kernels.

Reference semantics live in _fallback.py; the two modules must stay in
lockstep and are cross-checked by the test suite. The only intentional
difference is here a point is enqueued at most once during cluster
expansion (duplicate queue entries are no-ops in the reference), which
leaves visit order and labels unchanged but bounds queue memory.
"""

from libc.stdlib cimport free, malloc

NOISE = -1


def levenshtein(str a, str b):
    """Unit-cost edit distance over code points."""
    if a == b:
        return 0
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef int *prev = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((lb + 1) * sizeof(int))
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int val, tmp, result
    cdef Py_UCS4 ca
    cdef int *swap
    for j in range(lb + 1):
        prev[j] = <int> j
    for i in range(1, la + 1):
        cur[0] = <int> i
        ca = a[i - 1]
        for j in range(1, lb + 1):
            val = prev[j - 1] + (0 if ca == b[j - 1] else 1)
            tmp = prev[j] + 1
            if tmp < val:
                val = tmp
            tmp = cur[j - 1] + 1
            if tmp < val:
                val = tmp
            cur[j] = val
        swap = prev
        prev = cur
        cur = swap
    result = prev[lb]
    free(prev)
    free(cur)
    return result


def levenshtein_within(str a, str b, int limit):
    """Edit distance if it is <= limit, else limit + 1 (banded DP)."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    cdef Py_ssize_t diff = la - lb if la >= lb else lb - la
    if diff > <Py_ssize_t> limit:
        return limit + 1
    if a == b:
        return 0
    if la == 0 or lb == 0:
        return la if la >= lb else lb  # gap check above bounds this
    if limit == 0:
        return 1
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef int big = limit + 1
    cdef int *prev = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((lb + 1) * sizeof(int))
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j, lo, hi
    cdef int val, tmp, row_best, result
    cdef Py_UCS4 ca
    cdef int *swap
    for j in range(lb + 1):
        prev[j] = <int> j if j < big else big
    for i in range(1, la + 1):
        lo = i - limit if i - limit > 1 else 1
        hi = i + limit if i + limit < lb else lb
        cur[0] = <int> i if i < big else big
        if lo > 1:
            cur[lo - 1] = big
        ca = a[i - 1]
        row_best = big
        for j in range(lo, hi + 1):
            val = prev[j - 1] + (0 if ca == b[j - 1] else 1)
            tmp = prev[j] + 1
            if tmp < val:
                val = tmp
            tmp = cur[j - 1] + 1
            if tmp < val:
                val = tmp
            if val > big:
                val = big
            cur[j] = val
            if val < row_best:
                row_best = val
        if hi < lb:
            cur[hi + 1] = big
        if row_best >= big:
            free(prev)
            free(cur)
            return big
        swap = prev
        prev = cur
        cur = swap
    result = prev[lb] if prev[lb] < big else big
    free(prev)
    free(cur)
    return result


cdef int _UNSEEN = -2
cdef int _NOISE = -1


def dbscan_labels(double[::1] xs, double[::1] ys, double eps, int min_samples):
    """Density clustering over 2-D points; returns one label per point.

    Same contract as the reference: index-order visits, breadth-first
    expansion, noise labeled -1.
    """
    cdef Py_ssize_t n = xs.shape[0]
    if ys.shape[0] != n:
        raise ValueError("xs and ys must have equal length")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if min_samples < 1:
        raise ValueError(f"min_samples must be >= 1, got {min_samples}")
    cdef double eps2 = eps * eps
    cdef int *labels = <int *> malloc(n * sizeof(int))
    cdef Py_ssize_t *queue = <Py_ssize_t *> malloc((2 * n + 1) * sizeof(Py_ssize_t))
    cdef char *queued = <char *> malloc(n * sizeof(char))
    cdef Py_ssize_t *neigh = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if labels == NULL or queue == NULL or queued == NULL or neigh == NULL:
        free(labels)
        free(queue)
        free(queued)
        free(neigh)
        raise MemoryError()
    cdef Py_ssize_t i, j, q, head, tail, n_neigh, k
    cdef int cluster = -1
    cdef double xi, yi, dx, dy
    for i in range(n):
        labels[i] = _UNSEEN
        queued[i] = 0
    for i in range(n):
        if labels[i] != _UNSEEN:
            continue
        xi = xs[i]
        yi = ys[i]
        n_neigh = 0
        for j in range(n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            if dx * dx + dy * dy <= eps2:
                neigh[n_neigh] = j
                n_neigh += 1
        if n_neigh < min_samples:
            labels[i] = _NOISE
            continue
        cluster += 1
        labels[i] = cluster
        head = 0
        tail = 0
        for k in range(n_neigh):
            j = neigh[k]
            if j != i and not queued[j]:
                queue[tail] = j
                queued[j] = 1
                tail += 1
        while head < tail:
            q = queue[head]
            head += 1
            if labels[q] == _NOISE:
                labels[q] = cluster  # border point reached from a core
            if labels[q] != _UNSEEN:
                continue
            labels[q] = cluster
            xi = xs[q]
            yi = ys[q]
            n_neigh = 0
            for j in range(n):
                dx = xs[j] - xi
                dy = ys[j] - yi
                if dx * dx + dy * dy <= eps2:
                    neigh[n_neigh] = j
                    n_neigh += 1
            if n_neigh >= min_samples:
                for k in range(n_neigh):
                    j = neigh[k]
                    if (labels[j] == _UNSEEN or labels[j] == _NOISE) \
                            and not queued[j]:
                        queue[tail] = j
                        queued[j] = 1
                        tail += 1
    out = [labels[i] for i in range(n)]
    free(labels)
    free(queue)
    free(queued)
    free(neigh)
    return out
