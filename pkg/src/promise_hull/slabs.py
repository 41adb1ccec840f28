"""Slab decomposition machinery: incremental vertical-line generation with
live/dead marking, the Graham-style bridge scan over slabs, safe-point
filtering, and the guided line refinement with live/dead/located marks.

Points are consumed in index order.  A set of current lines L' behaves as a
stack (new lines split only the rightmost slab, deletions remove only the
rightmost line), so slabs of Gamma(L') are kept as a parallel stack of live
lists.  A point arriving left of the rightmost slab kills itself and one
live point of that slab: the two are separated by the rightmost line and
their index order opposes their x order, so they form a bad pair and at most
one of them can be a hull vertex under the promise.
"""

from __future__ import annotations

from bisect import bisect_right

from .bridges import Bridge, bridge_upper
from .errors import NotSpanningError
from .geometry import (
    LEFT,
    IndexedPoint,
    PredicateCounters,
    VerticalLine,
    as_points,
    cmp_x,
    side_of_line,
    sort_lines_by_x,
    strictly_above,
)
from .selection import select_kth


class Group:
    """A located cluster of points confined to one slab, with its
    precomputed chain (upper hull, or Pareto front in the front pipelines).

    ``slab_id`` is the index of the owning slab of the line set the current
    caller works with.
    """

    __slots__ = ("members", "chain", "slab_id")

    def __init__(self, members, chain, slab_id: int):
        self.members = members
        self.chain = chain
        self.slab_id = slab_id

    def __repr__(self):
        return f"Group({len(self.members)} pts, slab={self.slab_id})"


class SlabAssignment:
    """Per-slab point lists for a sorted line set.

    ``slabs[i]`` holds the points with x in the half-open interval
    [lines[i-1], lines[i]); there are len(lines) + 1 slabs.  ``unassigned``
    carries the bad-pair points the guided refinement deliberately does not
    locate (empty for ``generate_lines``, which redistributes them).
    """

    __slots__ = ("lines", "slabs", "unassigned")

    def __init__(self, lines, slabs, unassigned):
        self.lines = lines
        self.slabs = slabs
        self.unassigned = unassigned


class SafeSets:
    """Safe subsets per slab plus the (v-, v+) window endpoints used."""

    __slots__ = ("per_slab", "windows")

    def __init__(self, per_slab, windows):
        self.per_slab = per_slab
        self.windows = windows


def _bisect_lines(p: IndexedPoint, lines, ctx) -> int:
    """Number of lines (sorted) with x <= x(p): the slab offset of p."""
    lo, hi = 0, len(lines)
    while lo < hi:
        mid = (lo + hi) // 2
        if side_of_line(p, lines[mid], ctx) == LEFT:
            hi = mid
        else:
            lo = mid + 1
    return lo


def generate_lines(points, b: int, ctx: PredicateCounters):
    """Incrementally build O(b) vertical lines over the input sequence.

    Returns (assignment, bad_pairs) where the assignment covers all of P
    over Gamma(L) with every slab holding at most 2n/b + 1 points, and
    bad_pairs are disjoint L-bad pairs (the full set of Case-2 casualties,
    redistributed into slabs afterwards by binary search with median
    splits of any slab this pushes past n/b).
    """
    pts = as_points(points)
    n = len(pts)
    if n == 0:
        return SlabAssignment([], [[]], []), []
    b = max(1, min(b, n))
    s = max(1, n // b)
    cap = 2 * s

    lstack: list[VerticalLine] = []
    live: list[list[IndexedPoint]] = [[]]
    created: list[VerticalLine] = []
    registry: dict[int, VerticalLine] = {}  # anchor index -> line, ever created
    bad_pairs: list[tuple[IndexedPoint, IndexedPoint]] = []

    def make_line(m: IndexedPoint) -> VerticalLine:
        ln = registry.get(m.index)
        if ln is None:
            ln = VerticalLine(m.x, anchor=m)
            registry[m.index] = ln
            created.append(ln)
        return ln

    xcmp = lambda a, c: cmp_x(a, c, ctx)

    for p in pts:
        if lstack and side_of_line(p, lstack[-1], ctx) == LEFT:
            # Case 2: p is not in the rightmost slab.
            q = live[-1].pop()
            bad_pairs.append((q, p))
            while lstack and not live[-1]:
                live.pop()
                lstack.pop()
        else:
            cur = live[-1]
            cur.append(p)
            if len(cur) == cap:
                # Case 1: split at the (n/b)-th smallest x.  The split
                # position is floored at 2 so the new line always has a
                # point strictly left of it and never duplicates the slab's
                # left boundary (matters only when n/b = 1).
                k = max(2, s)
                m = select_kth(cur, k - 1, xcmp)
                left_part, right_part = [], []
                for q in cur:
                    (left_part if cmp_x(q, m, ctx) < 0 else right_part).append(q)
                live[-1] = left_part
                live.append(right_part)
                lstack.append(make_line(m))

    lines = sort_lines_by_x(created, ctx)

    # Locate live points in Gamma(L): binary search only among the lines
    # inside the point's current Gamma(L') slab.
    pos_of = {id(ln): i for i, ln in enumerate(lines)}
    slab_pts: list[list[IndexedPoint]] = [[] for _ in range(len(lines) + 1)]
    for j, bucket in enumerate(live):
        start = pos_of[id(lstack[j - 1])] + 1 if j >= 1 else 0
        end = pos_of[id(lstack[j])] if j < len(lstack) else len(lines)
        seg = lines[start:end]
        for p in bucket:
            slab_pts[start + _bisect_lines(p, seg, ctx)].append(p)

    # Redistribute the dead points; split any slab this pushes past n/b.
    for pair in bad_pairs:
        for p in pair:
            i = _bisect_lines(p, lines, ctx)
            slab_pts[i].append(p)
            cur = slab_pts[i]
            if len(cur) > s and len(cur) >= 2:
                k = max(2, (len(cur) + 1) // 2)
                m = select_kth(cur, k - 1, xcmp)
                left_part, right_part = [], []
                for q in cur:
                    (left_part if cmp_x(q, m, ctx) < 0 else right_part).append(q)
                lines.insert(i, VerticalLine(m.x, anchor=m))
                slab_pts[i : i + 1] = [left_part, right_part]

    return SlabAssignment(lines, slab_pts, []), bad_pairs


def scan_bridges(assign: SlabAssignment, ctx: PredicateCounters, stats: dict | None = None):
    """Bridges(P, L) for the slab assignment, Graham-scan style.

    Maintains the stack of slab indices that still contribute hull vertices.
    A candidate bridge of the top slab and the incoming slab is compatible
    iff the top's maintained bridge has its left endpoint on or below the
    candidate's supporting line; otherwise no point of the top slab can be
    on the hull of the union and it is popped.  At most 2|L| bridge
    computations.  Returns (bridges per line, surviving slab ids); a line
    with no points strictly to its left or right gets None.
    """
    lines, slabs = assign.lines, assign.slabs
    bridges: list[Bridge | None] = [None] * len(lines)
    stack: list[tuple[int, Bridge | None]] = []
    calls = pops = 0
    for j, pts_j in enumerate(slabs):
        if not pts_j:
            continue
        if not stack:
            stack.append((j, None))
            continue
        ell = lines[j - 1]
        while True:
            k, bridge_k = stack[-1]
            cand = bridge_upper(slabs[k] + pts_j, ell, ctx)
            calls += 1
            if bridge_k is None:
                break
            if strictly_above(bridge_k.left, cand.left, cand.right, ctx):
                stack.pop()
                pops += 1
            else:
                break
        stack.append((j, cand))
    for t in range(1, len(stack)):
        k_prev = stack[t - 1][0]
        k_cur, br = stack[t]
        for m in range(k_prev, k_cur):
            bridges[m] = br
    if stats is not None:
        stats["bridge_calls"] = calls
        stats["pops"] = pops
        stats["pushes"] = len(stack) + pops
    return bridges, [k for k, _ in stack]


def safe_filter(assign: SlabAssignment, bridges, ctx: PredicateCounters) -> SafeSets:
    """Per slab, keep exactly the points inside the index- and x-windows of
    the adjacent bridge endpoints v- (right endpoint of the left line's
    bridge) and v+ (left endpoint of the right line's bridge).

    Boundary slabs have no constraint on their open side; a slab spanned by
    a single hull edge gets an empty window and loses all its points.  Index
    comparisons are free bookkeeping and run first.
    """
    lines, slabs = assign.lines, assign.slabs
    per_slab, windows = [], []
    for i, pts_i in enumerate(slabs):
        vm = bridges[i - 1].right if i >= 1 and bridges[i - 1] is not None else None
        vp = bridges[i].left if i < len(lines) and bridges[i] is not None else None
        windows.append((vm, vp))
        if not pts_i or (vm is not None and vp is not None and vm.index > vp.index):
            per_slab.append([])
            continue
        keep = []
        for p in pts_i:
            if vm is not None and p is not vm:
                if p.index < vm.index or cmp_x(p, vm, ctx) < 0:
                    continue
            if vp is not None and p is not vp:
                if p.index > vp.index or cmp_x(p, vp, ctx) > 0:
                    continue
            keep.append(p)
        per_slab.append(keep)
    return SafeSets(per_slab, windows)


def refine_lines_guided(points, l0_lines, b: int, ctx: PredicateCounters):
    """Coarsen a sorted line set L0 to L (a subset including the b quantiles
    of L0) while splitting the points into good points, each located in its
    Gamma(L) slab, and bad points forming disjoint L-bad pairs.

    Case-1 splits that land in an unsplittable L0-slab mark that slab's live
    points as located; their Gamma(L) slab follows from the L0 slab by index
    arithmetic.  Bad points are returned unlocated in ``unassigned``.

    Returns (assignment, bad_pairs, member_idx) where member_idx are the
    L0-indices of the chosen lines, so callers can partition the remaining
    L0 lines per slab without coordinate comparisons.
    """
    pts = as_points(points)
    n = len(pts)
    lam = len(l0_lines)
    if lam == 0:
        return SlabAssignment([], [list(pts)], []), [], []
    b = max(1, min(b, lam))
    s = max(1, n // b) if n else 1
    cap = 2 * s

    lstack: list[int] = []  # L0 indices, increasing
    live: list[list[IndexedPoint]] = [[]]
    ever: list[int] = []
    ever_seen: set[int] = set()
    located: list[tuple[list[IndexedPoint], int]] = []  # (points, L0 slab id)
    bad_pairs: list[tuple[IndexedPoint, IndexedPoint]] = []

    xcmp = lambda a, c: cmp_x(a, c, ctx)

    for p in pts:
        if lstack and side_of_line(p, l0_lines[lstack[-1]], ctx) == LEFT:
            q = live[-1].pop()
            bad_pairs.append((q, p))
            while lstack and not live[-1]:
                live.pop()
                lstack.pop()
        else:
            cur = live[-1]
            cur.append(p)
            if len(cur) == cap:
                k = max(2, s)
                m = select_kth(cur, k - 1, xcmp)
                s0 = _bisect_lines(m, l0_lines, ctx)  # L0 slab holding the median
                lm = s0 - 1
                left_part, inside, right_part = [], [], []
                for q in cur:
                    if lm >= 0 and side_of_line(q, l0_lines[lm], ctx) == LEFT:
                        left_part.append(q)
                    elif s0 < lam and side_of_line(q, l0_lines[s0], ctx) != LEFT:
                        right_part.append(q)
                    else:
                        inside.append(q)
                located.append((inside, s0))
                if lm >= 0 and (not lstack or lm > lstack[-1]):
                    if lm not in ever_seen:
                        ever_seen.add(lm)
                        ever.append(lm)
                    live[-1] = left_part
                    live.append(right_part)
                    lstack.append(lm)
                else:
                    # gamma_m's left boundary is -inf or already the current
                    # rightmost boundary; only the located marks change.
                    live[-1] = left_part + right_part
                while lstack and not live[-1]:
                    live.pop()
                    lstack.pop()

    q_step = -(-lam // b)  # ceil
    member_idx = sorted(ever_seen | set(range(q_step - 1, lam, q_step)))
    chosen = [l0_lines[i] for i in member_idx]
    pos_of = {v: i for i, v in enumerate(member_idx)}

    slab_pts: list[list[IndexedPoint]] = [[] for _ in range(len(member_idx) + 1)]
    for j, bucket in enumerate(live):
        start = pos_of[lstack[j - 1]] + 1 if j >= 1 else 0
        end = pos_of[lstack[j]] if j < len(lstack) else len(member_idx)
        seg = chosen[start:end]
        for p in bucket:
            slab_pts[start + _bisect_lines(p, seg, ctx)].append(p)
    for bucket, s0 in located:
        slab_pts[bisect_right(member_idx, s0 - 1)].extend(bucket)

    dead = [p for pair in bad_pairs for p in pair]
    return SlabAssignment(chosen, slab_pts, dead), bad_pairs, member_idx
