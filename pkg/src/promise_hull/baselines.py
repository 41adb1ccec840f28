"""Classical hull and Pareto algorithms: correctness oracles, recursion base
cases, and benchmark baselines.

A hull chain is a plain list of IndexedPoint with strictly increasing x;
upper hulls are additionally strictly concave (every consecutive triple turns
clockwise), Pareto fronts have strictly decreasing y.  Chains are minimal:
collinear middle points are not vertices, so Graham-style pops treat a
collinear triple as a pop.
"""

from __future__ import annotations

from .errors import EmptyInputError, NotSortedError, TooLargeError, BudgetExceeded
from .geometry import (
    LEFT,
    RIGHT,
    IndexedPoint,
    PredicateCounters,
    as_points,
    cmp_x,
    cmp_y,
    orientation,
    require_nonempty,
    sort_points_by_x,
    sort_points_by_x_desc,
)

BRUTE_FORCE_LIMIT = 1 << 12


def _upper_scan(sorted_pts, ctx) -> list[IndexedPoint]:
    """Graham scan over x-sorted points; pops non-clockwise turns."""
    hull: list[IndexedPoint] = []
    for p in sorted_pts:
        while len(hull) >= 2 and orientation(hull[-2], hull[-1], p, ctx) != RIGHT:
            hull.pop()
        hull.append(p)
    return hull


def monotone_chain_upper(points, ctx: PredicateCounters) -> list[IndexedPoint]:
    """Upper hull via sort-by-x plus one Graham scan; O(n log n) counted."""
    pts = require_nonempty(points)
    return _upper_scan(sort_points_by_x(pts, ctx), ctx)


def graham_presorted_upper(points, ctx: PredicateCounters) -> list[IndexedPoint]:
    """Upper hull of an already x-sorted sequence, O(n).

    Raises NotSortedError on the first descending x pair.
    """
    pts = require_nonempty(points)
    for i in range(1, len(pts)):
        if cmp_x(pts[i - 1], pts[i], ctx) > 0:
            raise NotSortedError(f"descending x at position {i}")
    return _upper_scan(pts, ctx)


def jarvis_upper(points, budget: int | None, ctx: PredicateCounters) -> list[IndexedPoint]:
    """Upper hull by gift wrapping from the leftmost point.

    With a budget, raises BudgetExceeded as soon as more than `budget`
    vertices would be emitted; the output-sensitive guessing scheme relies on
    this.  Collinear candidates resolve to the farthest point so the chain
    stays minimal.
    """
    pts = require_nonempty(points)
    current = pts[0]
    for p in pts[1:]:
        if cmp_x(p, current, ctx) < 0:
            current = p
    chain = [current]
    while True:
        best = None
        for q in pts:
            if cmp_x(q, current, ctx) <= 0:
                continue
            if best is None:
                best = q
                continue
            o = orientation(current, best, q, ctx)
            if o == LEFT or (o == 0 and cmp_x(q, best, ctx) > 0):
                best = q
        if best is None:
            return chain
        if budget is not None and len(chain) + 1 > budget:
            raise BudgetExceeded(f"hull exceeds budget {budget}")
        chain.append(best)
        current = best


def _chord_at_or_above(p, a, b) -> bool:
    # p on or below the chord a-b, assuming a.x < p.x < b.x
    return (p.y - a.y) * (b.x - a.x) <= (b.y - a.y) * (p.x - a.x)


def brute_force_upper(points) -> list[IndexedPoint]:
    """O(n^3) upper hull oracle; raw integer arithmetic, nothing counted.

    A point is kept iff it is an x-extreme or no spanning pair has it on or
    below their chord.
    """
    pts = as_points(points)
    if not pts:
        raise EmptyInputError("empty point sequence")
    if len(pts) > BRUTE_FORCE_LIMIT:
        raise TooLargeError(f"brute force limited to {BRUTE_FORCE_LIMIT} points")
    xmin = min(p.x for p in pts)
    xmax = max(p.x for p in pts)
    kept = []
    for p in pts:
        if p.x == xmin or p.x == xmax:
            kept.append(p)
            continue
        covered = False
        for a in pts:
            if a.x >= p.x:
                continue
            for b in pts:
                if b.x <= p.x:
                    continue
                if _chord_at_or_above(p, a, b):
                    covered = True
                    break
            if covered:
                break
        if not covered:
            kept.append(p)
    kept.sort(key=lambda q: q.x)
    return kept


def brute_force_pareto(points) -> list[IndexedPoint]:
    """O(n^2) Pareto front oracle: all points not dominated in both
    coordinates, sorted by x (hence descending y)."""
    pts = as_points(points)
    if not pts:
        raise EmptyInputError("empty point sequence")
    if len(pts) > BRUTE_FORCE_LIMIT:
        raise TooLargeError(f"brute force limited to {BRUTE_FORCE_LIMIT} points")
    front = [
        p
        for p in pts
        if not any(q.x > p.x and q.y > p.y for q in pts)
    ]
    front.sort(key=lambda q: q.x)
    return front


def pareto_sweep(points, ctx: PredicateCounters) -> list[IndexedPoint]:
    """Pareto front via sort by descending x and one max-y sweep; the
    O(n log n) counted baseline and per-slab finisher."""
    pts = require_nonempty(points)
    front_rev = []
    best = None
    for p in sort_points_by_x_desc(pts, ctx):
        if best is None or cmp_y(p, best, ctx) > 0:
            front_rev.append(p)
            best = p
    front_rev.reverse()
    return front_rev


def chain_indices(chain) -> list[int]:
    return [p.index for p in chain]
