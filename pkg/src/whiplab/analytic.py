"""Closed forms, infinite series and exact path counts for the whip circuits.

Everything here is an infinite-volume statement (or an exact combinatorial
count); finite-size engines converge to these values.  Removable
singularities are written in regular form wherever possible, e.g. the ZZ
closed form ``(|cos 2t| - 1)/sin 2t`` is evaluated as ``-sin 2t/(1+|cos 2t|)``
which is continuous on the whole angle domain.
"""

from __future__ import annotations

import math
from math import comb
from typing import List, Tuple

TWO_PI = 2.0 * math.pi
THETA_C = math.pi / 4.0


def canonical_angle(theta: float) -> float:
    """Fold an angle into (-pi, pi]; idempotent."""
    out = math.fmod(theta, TWO_PI)
    if out <= -math.pi:
        out += TWO_PI
    elif out > math.pi:
        out -= TWO_PI
    return out


def zz_closed_form(theta: float) -> float:
    """Infinite-volume nearest-neighbor ZZ expectation of the 2-d whip.

    Equals ``(|cos 2t| - 1)/sin 2t`` with the removable zeros at multiples of
    pi/2 built in; cusps at pi/4 + m pi/2.
    """
    s2 = math.sin(2.0 * theta)
    c2 = math.cos(2.0 * theta)
    return -s2 / (1.0 + abs(c2))


def zz_derivative(theta: float) -> float:
    """One-sided derivative of the ZZ closed form away from the cusps."""
    s2 = math.sin(2.0 * theta)
    c2 = math.cos(2.0 * theta)
    return 2.0 * (c2 - math.copysign(1.0, c2)) / (s2 * s2)


def energy_density_2d(theta: float) -> float:
    """Ising energy density of the whip state, ``-<ZZ>``; -1 at theta=-pi/4."""
    return -zz_closed_form(theta)


def zz_series(theta: float, layer_cutoff: int) -> float:
    """Partial sum of the layer series for the ZZ expectation.

    Term ``L`` carries the exact cycle count ``4^(L-1) Gamma(L-1/2) /
    (sqrt(pi) L!)`` times ``(cos t sin t)^(2L-1)``; computed by a joint
    term recurrence so large cutoffs neither overflow nor lose the ratio.
    """
    if layer_cutoff < 1:
        raise ValueError("layer cutoff must be >= 1")
    sc = math.sin(theta) * math.cos(theta)
    term = sc
    total = sc
    for layer in range(1, layer_cutoff):
        term *= (4.0 * layer - 2.0) / (layer + 1.0) * sc * sc
        total += term
    return -total


def lgv_count(l: int, w: int) -> int:
    """Exact number of non-intersecting cycle pairs on the l x w rectangle.

    Binomial-difference form of the LGV determinant; equals
    ``lw/((l+w-1)(l+w)^2) * C(l+w, l)^2``.
    """
    if l < 1 or w < 1:
        raise ValueError("rectangle sides must be >= 1")
    n = l + w - 2
    first = comb(n, w - 1) ** 2
    second = comb(n, w) * comb(n, w - 2) if w >= 2 else 0
    return first - second


def cycle_count_layer(layer: int) -> int:
    """Exact number of cycles closing at layer ``L`` (sum of lgv_count over
    widths); the Gamma closed form ``4^(L-1) Gamma(L-1/2)/(sqrt(pi) L!)``
    evaluates to the same integer."""
    if layer < 1:
        raise ValueError("layer index must be >= 1")
    if layer == 1:
        return 1
    m = 2 * layer - 4
    return comb(m, layer - 2) - comb(m, layer)


def cycle_count_layer_gamma(layer: int) -> float:
    """Floating-point Gamma closed form of :func:`cycle_count_layer`."""
    if layer < 1:
        raise ValueError("layer index must be >= 1")
    log_val = ((layer - 1) * math.log(4.0) + math.lgamma(layer - 0.5)
               - 0.5 * math.log(math.pi) - math.lgamma(layer + 1.0))
    return math.exp(log_val)


def asymptotic_cycle_ratio(l: int) -> float:
    """Ratio of the exact square cycle count to its Stirling asymptote
    ``2 * 2^(4l) / (pi (4l)^2)``; tends to 1 as ``l`` grows."""
    if l < 2:
        raise ValueError("need l >= 2")
    exact = lgv_count(l, l)
    cycle_len = 4 * l
    log_asym = math.log(2.0) + cycle_len * math.log(2.0) - math.log(math.pi) \
        - 2.0 * math.log(cycle_len)
    return math.exp(math.log(exact) - log_asym)


def cycle_expectation(theta: float, n: int) -> float:
    """Closed form for the ZZ pair at the seam of an n-site rotation cycle:
    ``-sin t cos t + (-sin t)^(n-1) cos t``."""
    if n < 3:
        raise ValueError("cycle length must be >= 3")
    s, c = math.sin(theta), math.cos(theta)
    return -s * c + (-s) ** (n - 1) * c


def energy_1d(theta: float, L: int, boundary: str = "obc", coupling: int = 1) -> float:
    """Exact 1-d whip Hamiltonian expectation ``<H_J>``, ``H_J = J sum ZZ``.

    OBC: ``-J (L-1) sin t``.  PBC (bipolar cycle circuit):
    ``-J [(L-2) sin 2t + 2 sin t cos t + 2 (-sin 2t)^(L-2) sin t cos t]``.
    """
    if boundary == "obc":
        if L < 2:
            raise ValueError("obc needs L >= 2")
        return -coupling * (L - 1) * math.sin(theta)
    if boundary == "pbc":
        if L < 3:
            raise ValueError("pbc needs L >= 3")
        s, c = math.sin(theta), math.cos(theta)
        s2 = math.sin(2.0 * theta)
        return -coupling * ((L - 2) * s2 + 2 * s * c + 2 * (-s2) ** (L - 2) * s * c)
    raise ValueError(f"unknown boundary {boundary!r}")


def entropy_1d_obc(theta: float) -> Tuple[float, Tuple[float, float]]:
    """Middle-cut entanglement of the 1-d OBC whip chain.

    Schmidt weights ``cos^2(t/2), sin^2(t/2)``; returns ``(S, (lam0, lam1))``.
    """
    lam0 = math.cos(theta / 2.0) ** 2
    lam1 = math.sin(theta / 2.0) ** 2
    entropy = 0.0
    for lam in (lam0, lam1):
        if lam > 0.0:
            entropy -= lam * math.log(lam)
    return entropy, (lam0, lam1)


def correlation_closed_form(theta: float, d: int) -> float:
    """Diagonal two-point function ``<Z_(d,0) Z_(0,d)>`` in the infinite
    volume: ``[sin 2t / (1 + |cos 2t|)]^(2d)``."""
    if d < 0:
        raise ValueError("separation must be >= 0")
    base = math.sin(2.0 * theta) / (1.0 + abs(math.cos(2.0 * theta)))
    return (base * base) ** d


def correlation_path_count(d: int, w: int, l: int) -> int:
    """Exact non-intersecting path-pair count for the separation-d
    correlation; the second LGV product is zero when an index is negative."""
    if d < 1:
        raise ValueError("separation must be >= 1")
    if w < 0 or l < 0:
        raise ValueError("path indices must be >= 0")
    n = d + l + w - 1
    first = comb(n, w) * comb(n, l)
    second = comb(n, w - 1) * comb(n, l - 1) if (w >= 1 and l >= 1) else 0
    return first - second


def correlation_layer_sum(d: int, h: int) -> int:
    """Sum of path counts over all meeting points at height ``h``; equals
    ``2d (2(d+h)-1)! / (h! (2d+h)!)`` exactly."""
    return sum(correlation_path_count(d, w, h - w) for w in range(h + 1))


def inverse_correlation_length(theta: float) -> float:
    """``1/xi`` near the cusp at pi/4: ``log(cos 2phi / (1 - |sin 2phi|))``
    with ``phi = theta - pi/4``; zero exactly at the cusp."""
    phi = theta - THETA_C
    s2 = abs(math.sin(2.0 * phi))
    c2 = math.cos(2.0 * phi)
    if s2 >= 1.0 or c2 <= 0.0:
        raise ValueError("angle too far from the critical point")
    return math.log(c2 / (1.0 - s2))


def correlation_length(theta: float) -> float:
    """Correlation length ``xi``; +inf at the critical angle."""
    inv = inverse_correlation_length(theta)
    return math.inf if inv == 0.0 else 1.0 / inv


def order_parameter_closed_form(theta: float) -> float:
    """Boundary-X order parameter ``(cos 2t + |cos 2t|)/(2 cos t)``.

    Identically zero on the symmetry-preserving arcs (cos 2t <= 0, including
    the removable points theta = +-pi/2).
    """
    c2 = math.cos(2.0 * theta)
    if c2 <= 0.0:
        return 0.0
    return (c2 + abs(c2)) / (2.0 * math.cos(theta))


def order_parameter_decomposed(theta: float) -> float:
    """Same order parameter via the three-string decomposition
    ``cos^3 t - cos t sin^2 t * corr(theta, 1)``."""
    c, s = math.cos(theta), math.sin(theta)
    return c ** 3 - c * s * s * correlation_closed_form(theta, 1)


def energy_density_no_pt(theta: float, L: int) -> float:
    """Energy density of the tree-subgraph (no-phase-transition) whip:
    ``(1/2L) [(L+1) sin 2t + sum_{l=1}^{L-1} (sin 2t)^(2l+1)]``.

    Equals -1 at theta = -pi/4 for every L and tends to ``sin(2t)/2`` off the
    removable points; analytic in theta, hence no transition.
    """
    if L < 2:
        raise ValueError("side length must be >= 2")
    s2 = math.sin(2.0 * theta)
    tail = sum(s2 ** (2 * layer + 1) for layer in range(1, L))
    return ((L + 1) * s2 + tail) / (2.0 * L)


def wala_plaquette_no_pt(theta: float, column_height: int = 1) -> float:
    """Bottom-plaquette expectation of the loop ansatz without phase
    transition on a column of ``column_height`` cubes: ``(sin 2t)^(4h+1)``."""
    if column_height < 1:
        raise ValueError("column height must be >= 1")
    return math.sin(2.0 * theta) ** (4 * column_height + 1)


def truncation_error_model(theta: float, layer_cutoff: int) -> float:
    """Asymptotic layer-truncation error of the ZZ series.

    ``1/sqrt(L0)`` at the critical angle; otherwise
    ``|sin 2t|^(2 L0 - 1) / (-L0^(3/2) log|sin 2t|)``.
    """
    if layer_cutoff < 1:
        raise ValueError("layer cutoff must be >= 1")
    s2 = abs(math.sin(2.0 * theta))
    if s2 == 0.0:
        return 0.0
    if s2 >= 1.0:
        return 1.0 / math.sqrt(layer_cutoff)
    return s2 ** (2 * layer_cutoff - 1) / (-(layer_cutoff ** 1.5) * math.log(s2))


# ---------------------------------------------------------------------------
# brute-force oracles (test support; deliberately independent of the formulas)

def brute_force_lgv(l: int, w: int) -> int:
    """Count vertex-disjoint monotone path pairs by explicit enumeration.

    Paths step down/left; path one runs (w-1, l) -> (0, 1), path two runs
    (w, l-1) -> (1, 0).  Small sizes only.
    """
    def paths(start, end):
        out: List[frozenset] = []

        def walk(pos, visited):
            if pos == end:
                out.append(frozenset(visited))
                return
            x, y = pos
            for nxt in ((x - 1, y), (x, y - 1)):
                if end[0] <= nxt[0] and end[1] <= nxt[1]:
                    walk(nxt, visited | {nxt})
        walk(start, {start})
        return out

    count = 0
    for p1 in paths((w - 1, l), (0, 1)):
        for p2 in paths((w, l - 1), (1, 0)):
            if not (p1 & p2):
                count += 1
    return count


def brute_force_correlation_count(d: int, w: int, l: int) -> int:
    """Enumeration oracle for :func:`correlation_path_count`.

    Paths step up/right; path one runs (d, 0) -> (d+l, d+w-1), path two runs
    (0, d) -> (d+l-1, d+w).
    """
    def paths(start, end):
        out: List[frozenset] = []

        def walk(pos, visited):
            if pos == end:
                out.append(frozenset(visited))
                return
            x, y = pos
            for nxt in ((x + 1, y), (x, y + 1)):
                if nxt[0] <= end[0] and nxt[1] <= end[1]:
                    walk(nxt, visited | {nxt})
        walk(start, {start})
        return out

    count = 0
    for p1 in paths((d, 0), (d + l, d + w - 1)):
        for p2 in paths((0, d), (d + l - 1, d + w)):
            if not (p1 & p2):
                count += 1
    return count
