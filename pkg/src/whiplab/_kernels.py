"""Hot layer-update kernels for the early-evaluation engine.

The front state lives in a dense ``(2L, 2L)`` upper-triangular coefficient
matrix: index ``2x + 1`` is the not-yet-propagated site with column ``x`` on
the current diagonal front, index ``2x`` the corresponding site on the next
front.  One layer update walks every site of the current front and, for each,
rescans the whole matrix for pairs touching it -- the same per-gate-times-
per-term cost model as conjugating a term list gate by gate, which is what
makes the total run time Theta(L^4) while the live term count stays O(L^2).

The numba kernel is the default; set ``WHIPLAB_NO_NUMBA=1`` (or run without
numba installed) to use the vectorized numpy fallback, which updates each
site by row/column gather instead of a rescan.  Both produce identical
coefficients; ``whiplab bench compare`` times them against each other.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_DISABLED = os.environ.get("WHIPLAB_NO_NUMBA", "") not in ("", "0")

try:  # pragma: no cover - exercised via the env flag in tests
    if NUMBA_DISABLED:
        raise ImportError
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def _step_layer_scan(D, csum, L, w_bulk, w_edge, scalar):
    """Propagate one layer by full-matrix rescans (jitted hot loop).

    ``csum`` is the coordinate sum of the current front.  Returns the updated
    scalar accumulator; ``D`` is modified in place.
    """
    n2 = 2 * L
    xmin = csum - (L - 1)
    if xmin < 0:
        xmin = 0
    xmax = csum if csum < L - 1 else L - 1
    for x in range(xmin, xmax + 1):
        u = 2 * x + 1
        y = csum - x
        s1 = 2 * (x - 1) if x - 1 >= 0 else -1
        s2 = 2 * x if y - 1 >= 0 else -1
        w = w_bulk if (s1 >= 0 and s2 >= 0) else w_edge
        for i in range(n2):
            for j in range(i + 1, n2):
                cij = D[i, j]
                if cij == 0.0:
                    continue
                if i != u and j != u:
                    continue
                v = j if i == u else i
                D[i, j] = 0.0
                if s1 >= 0:
                    if s1 == v:
                        scalar += w * cij
                    elif s1 < v:
                        D[s1, v] += w * cij
                    else:
                        D[v, s1] += w * cij
                if s2 >= 0:
                    if s2 == v:
                        scalar += w * cij
                    elif s2 < v:
                        D[s2, v] += w * cij
                    else:
                        D[v, s2] += w * cij
    return scalar


def _step_layer_numpy(D, csum, L, w_bulk, w_edge, scalar):
    """Numpy fallback: per-site row/column gather-scatter, same algebra."""
    n2 = 2 * L
    xmin = max(0, csum - (L - 1))
    xmax = min(L - 1, csum)
    for x in range(xmin, xmax + 1):
        u = 2 * x + 1
        y = csum - x
        succ = []
        if x - 1 >= 0:
            succ.append(2 * (x - 1))
        if y - 1 >= 0:
            succ.append(2 * x)
        w = w_bulk if len(succ) == 2 else w_edge
        row = D[u, :].copy()
        row[:u] += D[:u, u]
        if not row.any():
            continue
        D[u, :] = 0.0
        D[:u, u] = 0.0
        for s in succ:
            scalar += w * row[s]
            vec = w * row
            vec[s] = 0.0
            D[s, s + 1:] += vec[s + 1:]
            D[:s, s] += vec[:s]
    return scalar


def step_layer(D, csum, L, w_bulk, w_edge, scalar, use_numba=None):
    if use_numba is None:
        use_numba = HAS_NUMBA
    if use_numba and HAS_NUMBA:
        return _step_layer_scan(D, csum, L, w_bulk, w_edge, scalar)
    return _step_layer_numpy(D, csum, L, w_bulk, w_edge, scalar)


def repack(D, L):
    """Move next-front entries (even indices) back onto odd indices for the
    next layer; returns the max live-term count seen in the packed matrix."""
    n2 = 2 * L
    even = D[0:n2:2, 0:n2:2].copy()
    D[:, :] = 0.0
    D[1:n2:2, 1:n2:2] = even
    return int(np.count_nonzero(even))


def warmup():
    """Trigger JIT compilation on a tiny instance."""
    D = np.zeros((8, 8))
    D[1, 3] = 1.0
    step_layer(D, 2, 4, -0.2, -0.4, 0.0)
