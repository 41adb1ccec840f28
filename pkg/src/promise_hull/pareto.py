"""Pareto-front analogues of the promise algorithms.

A front is a strictly-descending-y chain, so slab machinery simplifies: a
slab survives the bridge scan iff its maximum y beats everything to its
right, and the mixed bridge across a line needs only one tangent-style
binary search per group front.  Window filtering reuses the hull rule with
front vertices in the v-/v+ roles.
"""

from __future__ import annotations

import random

from .baselines import pareto_sweep
from .bridges import Bridge
from .errors import NotSpanningError
from .geometry import (
    LEFT,
    PredicateCounters,
    as_points,
    cmp_x,
    cmp_y,
    max_y_point,
    require_nonempty,
    side_of_line,
)
from .hull import (
    ParameterSchedule,
    _sample_lines,
    _windows_of,
    line_guided_bridges,
    locate_by_windows,
)
from .slabs import generate_lines, safe_filter


def pareto_scan_bridges(assign, ctx: PredicateCounters):
    """Front bridges for every line of a slab assignment.

    A slab stays on the stack iff its maximum y exceeds the incoming slab's;
    the settled stack then yields, per consecutive pair (k, j), the edge
    (rightmost point of slab k above max-y(j), max-y point of slab j).
    """
    lines, slabs = assign.lines, assign.slabs
    bridges: list[Bridge | None] = [None] * len(lines)
    stack: list[tuple[int, object]] = []  # (slab id, its max-y point)
    for j, sl in enumerate(slabs):
        if not sl:
            continue
        mj = max_y_point(sl, ctx)
        while stack and cmp_y(stack[-1][1], mj, ctx) < 0:
            stack.pop()
        stack.append((j, mj))
    for t in range(1, len(stack)):
        k, _ = stack[t - 1]
        j, mj = stack[t]
        w = None
        for p in slabs[k]:
            if cmp_y(p, mj, ctx) > 0 and (w is None or cmp_x(p, w, ctx) > 0):
                w = p
        br = Bridge(w, mj)
        for m in range(k, j):
            bridges[m] = br
    return bridges, [k for k, _ in stack]


def pareto_det(points, sched: ParameterSchedule | None = None,
               ctx: PredicateCounters | None = None, diagnostics=None):
    """Deterministic Pareto front under the front promise: same control flow
    as the deterministic hull, with the front bridge scan and the
    descending-staircase finisher."""
    pts = require_nonempty(as_points(points))
    sched = sched or ParameterSchedule()
    ctx = ctx if ctx is not None else PredicateCounters()
    if len(pts) <= 2:
        return pareto_sweep(pts, ctx)
    b = sched.det_slabs(len(pts))
    return _pareto_rec(pts, b, ctx, diagnostics, 0)


def _pareto_rec(pts, b, ctx, diag, depth):
    if len(pts) <= max(b, 2):
        return pareto_sweep(pts, ctx)
    assign, bad = generate_lines(pts, b, ctx)
    bridges, _ = pareto_scan_bridges(assign, ctx)
    safe = safe_filter(assign, bridges, ctx)
    if diag is not None:
        diag.append({
            "depth": depth,
            "n": len(pts),
            "z": len(bad),
            "safe_total": sum(len(s) for s in safe.per_slab),
        })
    out = []
    for sub in safe.per_slab:
        if sub:
            out.extend(_pareto_rec(sub, b, ctx, diag, depth + 1))
    return out


def _front_bridge_mixed(loose, groups, line, rng, ctx):
    """Front edge across a line for loose points plus group fronts.

    Right endpoint: maximum y on or right of the line; a right group
    contributes its front's first point.  Left endpoint: rightmost point
    above that maximum among the left items; within a left group front
    (y descending) that point is found by binary search.
    """
    rstar = None
    left_pts, left_chains = [], []
    for p in as_points(loose):
        if side_of_line(p, line, ctx) == LEFT:
            left_pts.append(p)
        elif rstar is None or cmp_y(p, rstar, ctx) > 0:
            rstar = p
    for g in groups:
        ch = g.chain
        s = side_of_line(ch[0], line, ctx)
        if len(ch) > 1 and side_of_line(ch[-1], line, ctx) != s:
            raise ValueError("group straddles the query line")
        if s == LEFT:
            left_chains.append(ch)
        elif rstar is None or cmp_y(ch[0], rstar, ctx) > 0:
            rstar = ch[0]
    if rstar is None:
        raise NotSpanningError("no points on the right side")
    w = None
    for p in left_pts:
        if cmp_y(p, rstar, ctx) > 0 and (w is None or cmp_x(p, w, ctx) > 0):
            w = p
    for ch in left_chains:
        if cmp_y(ch[0], rstar, ctx) <= 0:
            continue
        lo, hi = 0, len(ch) - 1
        while lo < hi:  # last front vertex with y above rstar
            mid = (lo + hi + 1) // 2
            if cmp_y(ch[mid], rstar, ctx) > 0:
                lo = mid
            else:
                hi = mid - 1
        if w is None or cmp_x(ch[lo], w, ctx) > 0:
            w = ch[lo]
    if w is None:
        raise NotSpanningError("no front vertex left of the line")
    return Bridge(w, rstar)


def _compressing_rebuild(members, ctx):
    """Group chain keeping only the first and last front points."""
    front = pareto_sweep(members, ctx)
    return front if len(front) <= 2 else [front[0], front[-1]]


def pareto_rand(points, sched: ParameterSchedule | None = None, rng=None,
                ctx: PredicateCounters | None = None,
                compress_groups: bool = False):
    """Randomized Pareto front: sampled lines, the line-guided recursion
    with front bridges, window filtering, staircase finisher per slab.

    ``compress_groups`` stores only each group front's first and last point,
    mirroring the two-point compression idea; full fronts are the default.
    """
    pts = require_nonempty(as_points(points))
    sched = sched or ParameterSchedule()
    ctx = ctx if ctx is not None else PredicateCounters()
    rng = rng if rng is not None else random.Random(0)
    n = len(pts)
    if n <= 2:
        return pareto_sweep(pts, ctx)
    lines = _sample_lines(pts, sched.rand_sample(n), rng, ctx)
    g = sched.rand_group(n)
    rebuild = _compressing_rebuild if compress_groups else pareto_sweep
    bridges = line_guided_bridges(
        lines, pts, [], g, sched, rng, ctx,
        bridge_base=_front_bridge_mixed, rebuild_chain=rebuild,
    )
    windows = _windows_of(bridges, len(lines))
    out = []
    for sub in locate_by_windows(pts, windows, ctx):
        if sub:
            out.extend(pareto_sweep(sub, ctx))
    return out
