"""Bridge finding: the unique upper-hull (or Pareto-front) edge crossing a
vertical line.

``bridge_upper`` is deterministic prune-and-search: pair the points, select
the median pair slope with deterministic selection, probe the supporting line
of that slope, and discard a constant fraction of the points each round.
Worst-case linear in the number of points.

``bridge_mixed`` handles a mixture of loose points and precomputed convex
chains ("groups") by randomized incremental search over the items, with an
O(log g) tangent binary search as the violation test per chain.  Degenerate
inputs (points exactly on the query line can make the optimum a plateau) are
caught by a restart cap that falls back to flattening the groups and running
``bridge_upper``; either path returns the exact edge.

``bridge_pareto`` finds the front edge crossing a line in one linear scan.
"""

from __future__ import annotations

from typing import NamedTuple

from .baselines import monotone_chain_upper
from .errors import NotSpanningError
from .geometry import (
    COLLINEAR,
    LEFT,
    RIGHT,
    IndexedPoint,
    PredicateCounters,
    VerticalLine,
    as_points,
    cmp_x,
    cmp_y,
    det2_sign,
    orientation,
    side_of_line,
    strictly_above,
)
from .selection import select_kth


class Bridge(NamedTuple):
    left: IndexedPoint
    right: IndexedPoint


def _crossing_edge(chain, line, ctx) -> Bridge:
    """Edge of an x-sorted hull chain whose half-open x-interval covers the line."""
    for i in range(len(chain) - 1):
        if side_of_line(chain[i], line, ctx) == LEFT and side_of_line(chain[i + 1], line, ctx) == RIGHT:
            return Bridge(chain[i], chain[i + 1])
    raise NotSpanningError("no hull edge crosses the line")


def _small_bridge(pts, line, ctx) -> Bridge:
    return _crossing_edge(monotone_chain_upper(pts, ctx), line, ctx)


def bridge_upper(points, line: VerticalLine, ctx: PredicateCounters) -> Bridge:
    """The upper-hull edge of the point set crossed by the line.

    Requires at least one point strictly left of the line and one on or
    right of it (half-open convention), else NotSpanningError.
    """
    pts = as_points(points)
    seen_left = seen_right = False
    for p in pts:
        if side_of_line(p, line, ctx) == LEFT:
            seen_left = True
        else:
            seen_right = True
    if not (seen_left and seen_right):
        raise NotSpanningError("all points on one side of the line")

    def slope_cmp(t1, t2):
        return det2_sign(t1[2], t1[3], t2[2], t2[3], ctx)

    cand = pts
    while len(cand) > 4:
        pairs = []
        for i in range(0, len(cand) - 1, 2):
            a, b = cand[i], cand[i + 1]
            if cmp_x(a, b, ctx) > 0:
                a, b = b, a
            pairs.append((a, b, b.y - a.y, b.x - a.x))
        odd = cand[-1] if len(cand) % 2 else None

        kdy, kdx = select_kth(pairs, (len(pairs) - 1) // 2, slope_cmp)[2:4]

        # Supporting line of slope k: maximize y*kdx - kdy*x, keeping the
        # extreme-x contacts (collinear contacts collapse into one edge).
        pm = pM = cand[0]
        for p in cand[1:]:
            c = det2_sign(p.y - pM.y, p.x - pM.x, kdy, kdx, ctx)
            if c > 0:
                pm = pM = p
            elif c == 0:
                if cmp_x(p, pm, ctx) < 0:
                    pm = p
                elif cmp_x(p, pM, ctx) > 0:
                    pM = p

        if side_of_line(pM, line, ctx) == LEFT:
            # Contacts entirely left: the bridge is steeper down, slope < k.
            # The left point of any pair at slope >= k can be neither endpoint.
            nxt = []
            for a, b, dy, dx in pairs:
                if det2_sign(dy, dx, kdy, kdx, ctx) < 0:
                    nxt.append(a)
                nxt.append(b)
        elif side_of_line(pm, line, ctx) == RIGHT:
            nxt = []
            for a, b, dy, dx in pairs:
                nxt.append(a)
                if det2_sign(dy, dx, kdy, kdx, ctx) > 0:
                    nxt.append(b)
        else:
            return Bridge(pm, pM)
        if odd is not None:
            nxt.append(odd)
        cand = nxt

    return _small_bridge(cand, line, ctx)


def _support_index(chain, kdy: int, kdx: int, ctx) -> int:
    """Index of a vertex of the strictly concave chain maximizing
    y*kdx - kdy*x, by binary search on the (decreasing) edge slopes.
    Returns the leftmost maximizer.
    """
    lo, hi = 0, len(chain) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        a, b = chain[mid], chain[mid + 1]
        if det2_sign(b.y - a.y, b.x - a.x, kdy, kdx, ctx) > 0:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _union_bridge(chains, line, ctx) -> Bridge:
    pts = [p for ch in chains for p in ch]
    return _small_bridge(pts, line, ctx)


def bridge_mixed(loose, groups, line: VerticalLine, rng, ctx: PredicateCounters) -> Bridge:
    """Bridge of (loose points) + (union of convex groups) across the line.

    Each group must lie entirely on one side of the line and supply its upper
    hull chain; the union must span the line.
    """
    items: list[tuple[IndexedPoint, ...]] = [(p,) for p in as_points(loose)]
    for g in groups:
        items.append(tuple(g.chain))
    if not items:
        raise NotSpanningError("no points")

    sides = []
    for it in items:
        s = side_of_line(it[0], line, ctx)
        if len(it) > 1 and side_of_line(it[-1], line, ctx) != s:
            raise ValueError("group straddles the query line")
        sides.append(s)
    if LEFT not in sides or RIGHT not in sides:
        raise NotSpanningError("all items on one side of the line")

    order = list(range(len(items)))
    if rng is not None:
        rng.shuffle(order)
    basis_l = next(i for i in order if sides[i] == LEFT)
    basis_r = next(i for i in order if sides[i] == RIGHT)
    u, w = _union_bridge([items[basis_l], items[basis_r]], line, ctx)

    rebases = 0
    cap = 4 * len(items) + 16
    i = 0
    while i < len(order):
        idx = order[i]
        if idx == basis_l or idx == basis_r:
            i += 1
            continue
        it = items[idx]
        v = it[_support_index(it, w.y - u.y, w.x - u.x, ctx)] if len(it) > 1 else it[0]
        if strictly_above(v, u, w, ctx):
            if sides[idx] == LEFT:
                basis_l = idx
            else:
                basis_r = idx
            u, w = _union_bridge([items[basis_l], items[basis_r]], line, ctx)
            rebases += 1
            if rebases > cap:
                flat = [p for it2 in items for p in it2]
                return bridge_upper(flat, line, ctx)
            i = 0
            continue
        i += 1

    # The supporting line is settled; collect its extreme contacts so the
    # returned edge endpoints are hull vertices even with collinear contacts
    # across items.
    lo, hi = u, w
    kdy, kdx = w.y - u.y, w.x - u.x
    for it in items:
        j = _support_index(it, kdy, kdx, ctx) if len(it) > 1 else 0
        for v in (it[j], it[j + 1] if j + 1 < len(it) else None):
            if v is None:
                continue
            if orientation(u, w, v, ctx) == COLLINEAR:
                if cmp_x(v, lo, ctx) < 0:
                    lo = v
                if cmp_x(v, hi, ctx) > 0:
                    hi = v
    return Bridge(lo, hi)


def bridge_pareto(points, line: VerticalLine, ctx: PredicateCounters) -> Bridge:
    """The Pareto-front edge crossing the line: the front vertices
    immediately before and after it.

    Right endpoint: the maximum-y point on or right of the line (the first
    front vertex after the line).  Left endpoint: among points strictly left
    with y above that maximum, the one of maximum x (the last front vertex
    before the line).  One linear scan each.
    """
    pts = as_points(points)
    rstar = None
    lefts = []
    for p in pts:
        if side_of_line(p, line, ctx) == LEFT:
            lefts.append(p)
        elif rstar is None or cmp_y(p, rstar, ctx) > 0:
            rstar = p
    if rstar is None or not lefts:
        raise NotSpanningError("all points on one side of the line")
    w = None
    for p in lefts:
        if cmp_y(p, rstar, ctx) > 0 and (w is None or cmp_x(p, w, ctx) > 0):
            w = p
    if w is None:
        raise NotSpanningError("no front vertex left of the line")
    return Bridge(w, rstar)
