"""Exact maximum average degree and potential minimization.

Both problems reduce to minimizing ``p*|S| - q*e(S)`` over vertex sets, which
is a minimum cut in Goldberg's network: source to every vertex with capacity
``q*m``, every vertex to sink with ``q*m + 2p - q*d(v)``, and capacity ``q``
both ways along each edge.  A cut with source side ``S`` costs
``q*m*n + 2*(p*|S| - q*e(S))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import EmptyGraphError, TooLargeError
from .graph import Graph
from .rational import mad_threshold, potential_slope, validate_c_eps

BRUTE_FORCE_MAX_N = 20


@dataclass(frozen=True)
class DensityResult:
    """Maximum of ``e(S)/|S|`` and a set attaining it."""

    value: Fraction
    witness: frozenset[int]


@dataclass(frozen=True)
class PotentialResult:
    """Minimum over nonempty ``S`` of ``(2 - 2/(c+1) - eps/2)|S| - e(S)``."""

    min_value: Fraction
    witness: frozenset[int]
    c: int
    eps: Fraction


def _min_cut_set(g: Graph, p: int, q: int, forced: int | None = None) -> tuple[int, frozenset[int]]:
    """Minimize ``p*|S| - q*e(S)``; ``S`` must contain ``forced`` if given.

    Returns the minimum and the inclusion-minimal minimizer.
    """
    n, m = g.n, g.m
    s, t = n, n + 1
    base = q * m
    degs = g.degrees()
    tails, heads, caps, rcaps = [], [], [], []
    for v in range(n):
        tails.append(s)
        heads.append(v)
        caps.append(base)
        rcaps.append(0)
        tails.append(v)
        heads.append(t)
        caps.append(base + 2 * p - q * degs[v])
        rcaps.append(0)
    for u, v in g.edges():
        tails.append(u)
        heads.append(v)
        caps.append(q)
        rcaps.append(q)
    if forced is not None:
        caps[2 * forced] = sum(caps) + sum(rcaps) + 1
    cut, side = kernels.max_flow(n + 2, tails, heads, caps, rcaps, s, t)
    witness = frozenset(v for v in range(n) if side[v])
    # an uncuttable source arc keeps `forced` on the source side; the cut
    # formula is unchanged for such sets
    assert forced is None or forced in witness
    value2 = cut - base * n  # = 2 * (p|S| - q e(S))
    assert value2 % 2 == 0
    return value2 // 2, witness


def densest_subgraph(g: Graph) -> DensityResult:
    """Maximum density ``e(S)/|S|`` by binary search over flow feasibility tests.

    Two distinct densities with denominators at most ``n`` differ by at least
    ``1/(n(n-1))``, so once the search bracket is narrower than that, the last
    feasible witness is exactly optimal.
    """
    n = g.n
    if n == 0:
        raise EmptyGraphError("density of the empty graph is undefined")
    if g.m == 0:
        return DensityResult(Fraction(0), frozenset({0}))
    lo, hi = Fraction(0), Fraction(n - 1, 2)
    tol = Fraction(1, n * (n - 1))
    witness: frozenset[int] | None = None
    while hi - lo >= tol:
        mid = (lo + hi) / 2
        value, side = _min_cut_set(g, mid.numerator, mid.denominator)
        if value < 0:
            lo, witness = mid, side
        else:
            hi = mid
    assert witness, "bracket closed without a feasible density"
    return DensityResult(Fraction(g.induced_edge_count(witness), len(witness)), witness)


def mad(g: Graph) -> Fraction:
    """Maximum average degree: twice the maximum density."""
    return 2 * densest_subgraph(g).value


def min_potential(g: Graph, c: int, eps) -> PotentialResult:
    c, eps = validate_c_eps(c, eps)
    if g.n == 0:
        raise EmptyGraphError("potential of the empty graph is undefined")
    alpha = potential_slope(c, eps)
    a, b = alpha.numerator, alpha.denominator
    value, side = _min_cut_set(g, a, b)
    if not side:
        # optimum over all sets is the empty set; fix each vertex in turn
        best = None
        for v in g.vertices():
            val, s = _min_cut_set(g, a, b, forced=v)
            if best is None or val < best[0]:
                best = (val, s)
        value, side = best
    return PotentialResult(Fraction(value, b), side, c, eps)


def potential(g: Graph, c: int, eps, vertices) -> Fraction:
    """``rho_G(S)`` for one set, exactly."""
    c, eps = validate_c_eps(c, eps)
    s = frozenset(vertices)
    return potential_slope(c, eps) * len(s) - g.induced_edge_count(s)


def check_mad_bound(g: Graph, c: int, eps) -> bool:
    """``mad(g) < 4 - 4/(c+1) - eps``; vacuously true on the empty graph."""
    c, eps = validate_c_eps(c, eps)
    if g.n == 0:
        return True
    return mad(g) < mad_threshold(c, eps)


def _adjmasks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.neighbors(v)) for v in g.vertices()]


def _check_brute(g: Graph) -> None:
    if g.n == 0:
        raise EmptyGraphError("empty graph")
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLargeError(f"subset enumeration limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")


def _mask_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def brute_density(g: Graph, *, backend: str | None = None) -> DensityResult:
    """Densest subgraph by enumerating every nonempty vertex subset."""
    _check_brute(g)
    e, s, mask = kernels.densest_subset(g.n, _adjmasks(g), backend=backend)
    return DensityResult(Fraction(e, s), _mask_set(mask))


def brute_min_potential(g: Graph, c: int, eps, *, backend: str | None = None) -> PotentialResult:
    """Minimum potential by enumerating every nonempty vertex subset."""
    c, eps = validate_c_eps(c, eps)
    _check_brute(g)
    alpha = potential_slope(c, eps)
    val, mask = kernels.min_linear_subset(
        g.n, _adjmasks(g), alpha.numerator, alpha.denominator, backend=backend
    )
    return PotentialResult(Fraction(val, alpha.denominator), _mask_set(mask), c, eps)
