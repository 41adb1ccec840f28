"""The promise-hull algorithms: the deterministic slab-recursion, the
line-guided bridge recursion, the randomized sampler on top of it, the
output-sensitive guessing wrapper, and full-hull assembly.

All of them assume the convex hull promise (hull vertices appear in the
input ordered by x).  The promise is never checked here: checking costs
Omega(n log n) comparisons, so a violating input yields an arbitrary result
(or NotSpanningError), with termination and memory safety still guaranteed.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right
from dataclasses import dataclass

from .baselines import jarvis_upper, monotone_chain_upper
from .bridges import Bridge, bridge_mixed
from .errors import BudgetExceeded
from .geometry import (
    IndexedPoint,
    PredicateCounters,
    VerticalLine,
    as_points,
    cmp_line_x,
    cmp_x,
    min_x_point,
    require_nonempty,
    sort_lines_by_x,
)
from .slabs import Group, generate_lines, refine_lines_guided, safe_filter, scan_bridges


@dataclass(frozen=True)
class ParameterSchedule:
    """Deterministic parameter rules; None fields fall back to the defaults
    below, ceilings chosen so all rules are integer-exact.

    det slab count      b(n) = 2^ceil(sqrt(log2 n))
    sample size         lambda(n) = max(1, ceil(n / ceil(log2 n)^2))
    group size          g(n) = max(1, ceil(log2 n))
    guided branching    b(lam) = 2^ceil((log2 lam)^(k/(k+1))),
                        k(lam) = max(1, ceil(sqrt(log2 log2 max(lam, 4))))
    guided base case    |L0| <= base_lines
    """

    b: int | None = None
    sample: int | None = None
    group: int | None = None
    base_lines: int = 8

    def det_slabs(self, n: int) -> int:
        if self.b is not None:
            return max(2, self.b)
        return 1 << max(1, math.ceil(math.sqrt(math.log2(n))))

    def rand_sample(self, n: int) -> int:
        if self.sample is not None:
            return max(1, self.sample)
        return max(1, math.ceil(n / math.ceil(math.log2(n)) ** 2))

    def rand_group(self, n: int) -> int:
        if self.group is not None:
            return max(1, self.group)
        return max(1, math.ceil(math.log2(n)))

    def guided_branch(self, lam: int) -> int:
        k = max(1, math.ceil(math.sqrt(math.log2(math.log2(max(lam, 4))))))
        b = 1 << math.ceil(math.log2(lam) ** (k / (k + 1)))
        return max(2, min(b, lam))


def upper_hull_det(points, sched: ParameterSchedule | None = None,
                   ctx: PredicateCounters | None = None, diagnostics=None):
    """Deterministic upper hull under the promise.

    Builds a balanced slab decomposition, computes all bridges with a
    Graham-style scan, filters each slab down to its safe points, and
    recurses per slab with the same slab count b fixed from the top-level n.
    """
    pts = require_nonempty(as_points(points))
    sched = sched or ParameterSchedule()
    ctx = ctx if ctx is not None else PredicateCounters()
    if len(pts) <= 2:
        return monotone_chain_upper(pts, ctx)
    b = sched.det_slabs(len(pts))
    return _det_rec(pts, b, ctx, diagnostics, 0)


def _det_rec(pts, b, ctx, diag, depth):
    if len(pts) <= max(b, 2):
        return monotone_chain_upper(pts, ctx)
    assign, bad = generate_lines(pts, b, ctx)
    bridges, _ = scan_bridges(assign, ctx)
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
            out.extend(_det_rec(sub, b, ctx, diag, depth + 1))
    return out


def _windows_of(bridges, n_lines):
    return [
        (
            bridges[t - 1].right if t >= 1 and bridges[t - 1] is not None else None,
            bridges[t].left if t < n_lines and bridges[t] is not None else None,
        )
        for t in range(n_lines + 1)
    ]


def locate_by_windows(points, windows, ctx):
    """Distribute points into per-slab safe sets using the windows.

    The slab is found by binary search on the window index intervals, which
    are disjoint and increasing whenever the promise holds; index lookups
    are free, so only the two x-window comparisons are counted per point.
    """
    per_slab = [[] for _ in windows]
    table = []
    for sid, (vm, vp) in enumerate(windows):
        lo = vm.index if vm is not None else 0
        hi = vp.index if vp is not None else None
        if hi is not None and lo > hi:
            continue
        table.append((lo, hi, sid, vm, vp))
    table.sort(key=lambda t: t[0])
    starts = [t[0] for t in table]
    for p in points:
        j = bisect_right(starts, p.index) - 1
        if j < 0:
            continue
        lo, hi, sid, vm, vp = table[j]
        if hi is not None and p.index > hi:
            continue
        if vm is not None and p is not vm and cmp_x(p, vm, ctx) < 0:
            continue
        if vp is not None and p is not vp and cmp_x(p, vp, ctx) > 0:
            continue
        per_slab[sid].append(p)
    return per_slab


def _filter_group(gr: Group, vm, vp, rebuild_chain, ctx):
    """Restrict a group to the x-window [x(v-), x(v+)]; rebuild its chain
    when the window actually cut members away."""
    members = []
    for p in gr.members:
        if vm is not None and p is not vm and cmp_x(p, vm, ctx) < 0:
            continue
        if vp is not None and p is not vp and cmp_x(p, vp, ctx) > 0:
            continue
        members.append(p)
    if not members:
        return None
    if len(members) == len(gr.members):
        return members, gr.chain
    return members, rebuild_chain(members, ctx)


def line_guided_bridges(l0_lines, loose, groups, g, sched, rng, ctx,
                        bridge_base=bridge_mixed,
                        rebuild_chain=monotone_chain_upper):
    """Bridges of (loose points + groups) across every line of sorted L0.

    Base case: one mixed-LP bridge per line.  Otherwise refine L0 to a
    subset L, regroup the located good points into size-g chains, recurse
    once on (bad points, all groups, L), then per slab of Gamma(L) filter
    by the bridge windows and recurse on the lines of L0 inside the slab.
    Interior lines already covered by a boundary bridge inherit it directly.

    ``bridge_base`` and ``rebuild_chain`` switch the same recursion between
    the upper-hull and Pareto-front pipelines.
    """
    lam = len(l0_lines)
    if lam == 0:
        return []
    if lam > sched.base_lines:
        b = sched.guided_branch(lam)
        assign, bad_pairs, member_idx = refine_lines_guided(loose, l0_lines, b, ctx)
        if len(member_idx) < lam:
            return _guided_recursive(
                l0_lines, loose, groups, g, sched, rng, ctx,
                assign, member_idx, bridge_base, rebuild_chain,
            )
        # Refinement failed to shrink the line set (tiny inputs); fall
        # through to the direct per-line computation.
    return [bridge_base(loose, groups, ell, rng, ctx) for ell in l0_lines]


def _guided_recursive(l0_lines, loose, groups, g, sched, rng, ctx,
                      assign, member_idx, bridge_base, rebuild_chain):
    lam = len(l0_lines)
    chosen = assign.lines

    call1_groups = [
        Group(gr.members, gr.chain, bisect_right(member_idx, gr.slab_id - 1))
        for gr in groups
    ]
    for t, slab in enumerate(assign.slabs):
        for i in range(0, len(slab), g):
            members = slab[i : i + g]
            call1_groups.append(Group(members, rebuild_chain(members, ctx), t))

    bridges_l = line_guided_bridges(
        chosen, assign.unassigned, call1_groups, g, sched, rng, ctx,
        bridge_base, rebuild_chain,
    )

    windows = _windows_of(bridges_l, len(chosen))
    slab_loose = locate_by_windows(loose, windows, ctx)
    # Original groups keep their L0-relative slab ids: the per-slab
    # recursion re-bases them against its own line subset by arithmetic.
    slab_groups: list[list[Group]] = [[] for _ in range(len(chosen) + 1)]
    for gr in groups:
        slab_groups[bisect_right(member_idx, gr.slab_id - 1)].append(gr)

    result: list[Bridge | None] = [None] * lam
    for pos, l0i in enumerate(member_idx):
        result[l0i] = bridges_l[pos]

    for t in range(len(chosen) + 1):
        lo_i = member_idx[t - 1] if t >= 1 else -1
        hi_i = member_idx[t] if t < len(member_idx) else lam
        first, last = lo_i + 1, hi_i  # interior L0 lines [first, last)
        if first >= last:
            continue
        vm, vp = windows[t]
        while first < last and vm is not None and cmp_line_x(l0_lines[first], vm, ctx) <= 0:
            result[first] = bridges_l[t - 1]
            first += 1
        while last > first and vp is not None and cmp_line_x(l0_lines[last - 1], vp, ctx) > 0:
            result[last - 1] = bridges_l[t]
            last -= 1
        if first >= last:
            continue
        sub_lines = l0_lines[first:last]
        sub_groups = []
        for gr in slab_groups[t]:
            kept = _filter_group(gr, vm, vp, rebuild_chain, ctx)
            if kept is None:
                continue
            members, chain = kept
            sid = min(max(gr.slab_id - first, 0), len(sub_lines))
            sub_groups.append(Group(members, chain, sid))
        sub_bridges = line_guided_bridges(
            sub_lines, slab_loose[t], sub_groups, g, sched, rng, ctx,
            bridge_base, rebuild_chain,
        )
        result[first:last] = sub_bridges
    return result


def _sample_lines(pts, lam, rng, ctx):
    """Vertical lines at a without-replacement sample of point x-coordinates.

    A line at the globally smallest x would have nothing strictly left of it
    and no bridge; it is dropped if sampled.
    """
    lam = max(1, min(lam, len(pts)))
    picked = rng.sample(range(len(pts)), lam)
    pmin = min_x_point(pts, ctx)
    lines = [VerticalLine(pts[i].x, anchor=pts[i]) for i in picked if pts[i] is not pmin]
    return sort_lines_by_x(lines, ctx)


def upper_hull_rand(points, sched: ParameterSchedule | None = None, rng=None,
                    ctx: PredicateCounters | None = None):
    """Randomized upper hull: sample lambda lines, compute their bridges via
    the line-guided recursion, filter every point through the bridge
    windows, and finish each slab with a monotone chain."""
    pts = require_nonempty(as_points(points))
    sched = sched or ParameterSchedule()
    ctx = ctx if ctx is not None else PredicateCounters()
    rng = rng if rng is not None else random.Random(0)
    n = len(pts)
    if n <= 2:
        return monotone_chain_upper(pts, ctx)
    lines = _sample_lines(pts, sched.rand_sample(n), rng, ctx)
    g = sched.rand_group(n)
    bridges = line_guided_bridges(lines, pts, [], g, sched, rng, ctx)
    windows = _windows_of(bridges, len(lines))
    out = []
    for sub in locate_by_windows(pts, windows, ctx):
        if sub:
            out.extend(monotone_chain_upper(sub, ctx))
    return out


def upper_hull_output_sensitive(points, sched: ParameterSchedule | None = None,
                                rng=None, ctx: PredicateCounters | None = None,
                                trace=None):
    """Output-sensitive variant: guess h = 2^(2^i), run the randomized
    pipeline with Jarvis march under a total vertex budget of h in place of
    the per-slab monotone chain, and escalate on BudgetExceeded.  Guesses
    stop at sqrt(n), beyond which the plain randomized version is already
    the right tool.
    """
    pts = require_nonempty(as_points(points))
    sched = sched or ParameterSchedule()
    ctx = ctx if ctx is not None else PredicateCounters()
    rng = rng if rng is not None else random.Random(0)
    n = len(pts)
    if n <= 2:
        return monotone_chain_upper(pts, ctx)
    limit = math.isqrt(n)
    i = 1
    while True:
        h = 1 << (1 << i)
        if h > limit:
            break
        res = _guess_round(pts, h, sched, rng, ctx)
        if trace is not None:
            trace.append(("guess", h, res is not None))
        if res is not None:
            return res
        i += 1
    if trace is not None:
        trace.append(("default",))
    return upper_hull_rand(pts, sched, rng, ctx)


def _guess_round(pts, h, sched, rng, ctx):
    lines = _sample_lines(pts, h * h, rng, ctx)
    g = max(1, math.ceil(math.log2(h)))
    bridges = line_guided_bridges(lines, pts, [], g, sched, rng, ctx)
    windows = _windows_of(bridges, len(lines))
    out = []
    budget = h
    for sub in locate_by_windows(pts, windows, ctx):
        if not sub:
            continue
        try:
            chain = jarvis_upper(sub, budget, ctx)
        except BudgetExceeded:
            return None
        out.extend(chain)
        budget -= len(chain)
    return out


def run_upper(algo: str, points, sched=None, rng=None, ctx=None):
    """Dispatch an upper-hull algorithm by name."""
    if algo == "det":
        return upper_hull_det(points, sched, ctx)
    if algo == "rand":
        return upper_hull_rand(points, sched, rng, ctx)
    if algo == "output-sensitive":
        return upper_hull_output_sensitive(points, sched, rng, ctx)
    if algo == "monotone":
        return monotone_chain_upper(points, ctx if ctx is not None else PredicateCounters())
    if algo == "brute":
        from .baselines import brute_force_upper

        return brute_force_upper(points)
    raise ValueError(f"unknown algorithm {algo!r}")


def convex_hull_full(points, algo: str = "det", sched=None, rng=None, ctx=None):
    """Full hull as a clockwise cyclic vertex list starting at the leftmost
    point: the upper hull, then the lower hull walked right to left.

    The lower hull is the upper hull of the y-negated points; negating y
    keeps x order, so the promise carries over to the flipped sequence.
    """
    pts = require_nonempty(as_points(points))
    upper = run_upper(algo, pts, sched, rng, ctx)
    flipped = [IndexedPoint(p.x, -p.y, p.index) for p in pts]
    lower_f = run_upper(algo, flipped, sched, rng, ctx)
    by_index = {p.index: p for p in pts}
    lower = [by_index[q.index] for q in lower_f]
    return upper + lower[-2:0:-1]
