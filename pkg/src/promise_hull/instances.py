"""Instance generators with embedded ground truth, and the O(n log n)
promise verifier.

All generators emit integer coordinates with magnitude at most 4n^2 + 4n.
The adversarial family uses a scale factor of 4 with a one-unit epsilon:
each below point sits exactly 1 under its covering parabola chord while the
nearest other spanning chord passes 2 above it, so strictness survives in
integers.  Scaled parabola y-values are divisible by 4 and the extra points'
y-values are odd, which keeps general position for free.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .baselines import monotone_chain_upper, pareto_sweep
from .errors import InvalidPermutationError
from .geometry import IndexedPoint, PointSeq, PredicateCounters, as_points


@dataclass
class Instance:
    seq: PointSeq
    family: str
    seed: int = 0
    truth: list[int] | None = None
    params: dict = field(default_factory=dict)


def _seq(coords, require_gp=True) -> PointSeq:
    return PointSeq.from_coords(coords, require_general_position=require_gp)


def random_permutation(n: int, rng: random.Random) -> list[int]:
    """A uniform permutation of [n-1], as a list of 1-based values."""
    perm = list(range(1, n))
    rng.shuffle(perm)
    return perm


def _check_permutation(n: int, perm) -> list[int]:
    perm = list(perm)
    if sorted(perm) != list(range(1, n)):
        raise InvalidPermutationError(f"not a bijection on [{n - 1}]")
    return perm


def parabola_coords(n: int) -> list[tuple[int, int]]:
    return [(4 * i, 4 * (n * n - i * i)) for i in range(1, n + 1)]


def gen_parabola(n: int) -> Instance:
    """n points on a downward parabola, left to right: hull and front are
    the whole sequence, in order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Instance(
        seq=_seq(parabola_coords(n)),
        family="parabola",
        truth=list(range(1, n + 1)),
        params={"n": n},
    )


def _below_point(n: int, k: int) -> tuple[int, int]:
    # 1 below the chord from parabola point k to k+1 (scaled by 4)
    return (4 * k + 2, 4 * n * n - 2 * ((k + 1) ** 2 + k * k) - 1)


def _lifted_point(n: int, k: int) -> tuple[int, int]:
    # on the scaled parabola at the half-integer position k + 1/2
    return (4 * k + 2, 4 * n * n - (2 * k + 1) ** 2)


def gen_adversarial(n: int, perm, j: int) -> Instance:
    """The lower-bound family P followed by Q_pi^j.

    Point q_m hangs just below the pi(m)-th hull edge of P; for j <= n-1 the
    point q_j is lifted onto the parabola instead and appears on the hull
    between parabola points pi(j) and pi(j)+1.  j = n means no lifted point,
    and the sequence then fulfils the promise (hull = P, in order).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if not 1 <= j <= n:
        raise InvalidPermutationError(f"j={j} outside [1, {n}]")
    perm = _check_permutation(n, perm)
    coords = parabola_coords(n)
    for m in range(1, n):
        k = perm[m - 1]
        coords.append(_lifted_point(n, k) if m == j else _below_point(n, k))
    if j <= n - 1:
        k = perm[j - 1]
        truth = list(range(1, k + 1)) + [n + j] + list(range(k + 1, n + 1))
    else:
        truth = list(range(1, n + 1))
    return Instance(
        seq=_seq(coords),
        family="adversarial",
        truth=truth,
        params={"n": n, "perm": perm, "j": j},
    )


def gen_supersequence(n: int, perm, j: int) -> Instance:
    """P followed by Q_pi^j followed by P again: a supersequence containing
    the hull as an x-sorted subsequence while the lower bound still applies.

    The repeated parabola introduces exact duplicate coordinates, so this is
    the one family that violates general position; consumers deduplicate by
    coordinates (keeping the earliest index) before running hull algorithms,
    and the truth refers to the deduplicated sequence.
    """
    if not 1 <= j <= n - 1:
        raise InvalidPermutationError("supersequence needs j <= n-1")
    base = gen_adversarial(n, perm, j)
    coords = [p.coords() for p in base.seq] + parabola_coords(n)
    return Instance(
        seq=_seq(coords, require_gp=False),
        family="supersequence",
        truth=base.truth,
        params=dict(base.params),
    )


def dedup_earliest(points) -> list[IndexedPoint]:
    """Drop exact coordinate duplicates, keeping the earliest index."""
    seen = set()
    out = []
    for p in as_points(points):
        c = (p.x, p.y)
        if c not in seen:
            seen.add(c)
            out.append(p)
    return out


def gen_random_promise(n: int, hull_fraction: float, rng: random.Random) -> Instance:
    """A promise-holding workload: ceil(hull_fraction * n) hull vertices on
    a strictly concave parabola-like arc, emitted in x-order, with the
    remaining points strictly below every chord at random positions in the
    sequence.  The front promise holds too (the front is the arc's
    descending tail)."""
    if not 0 < hull_fraction <= 1:
        raise ValueError("hull_fraction must be in (0, 1]")
    if n == 1:
        return Instance(_seq([(0, 0)]), "random-promise", truth=[1],
                        params={"n": 1, "hull_fraction": hull_fraction})
    h = max(2, min(n, math.ceil(hull_fraction * n)))

    def arc_y(x: int) -> int:
        return 4 * (n * n - x * x) + x

    xs = sorted([-n, n] + rng.sample(range(-n + 1, n), h - 2))
    arc = [(x, arc_y(x)) for x in xs]
    free_x = [x for x in range(-n + 1, n) if x not in set(xs)]
    interior_x = rng.sample(free_x, n - h)
    interior_y = rng.sample(range(-4 * n, -n), n - h)
    interior = list(zip(interior_x, interior_y))

    hull_pos = sorted(rng.sample(range(n), h))
    hull_pos_set = set(hull_pos)
    coords: list[tuple[int, int] | None] = [None] * n
    ai = ii = 0
    for pos in range(n):
        if pos in hull_pos_set:
            coords[pos] = arc[ai]
            ai += 1
        else:
            coords[pos] = interior[ii]
            ii += 1
    return Instance(
        seq=_seq(coords),
        family="random-promise",
        truth=[pos + 1 for pos in hull_pos],
        params={"n": n, "hull_fraction": hull_fraction},
    )


def gen_sorted(n: int, rng: random.Random) -> Instance:
    """A fully x-sorted random sequence; the promise holds trivially."""
    xs = sorted(rng.sample(range(4 * n + 1), n))
    ys = rng.sample(range(4 * n + 1), n)
    inst = Instance(_seq(list(zip(xs, ys))), "sorted", params={"n": n})
    if n <= 4096:
        ctx = PredicateCounters()
        inst.truth = [p.index for p in monotone_chain_upper(inst.seq, ctx)]
    return inst


def verify_promise(points, mode: str = "upper") -> bool:
    """Check the promise by computing the oracle hull (or front) and testing
    that its vertices appear in the input with increasing x.  O(n log n) by
    design; this cannot live inside the sub-O(n log n) algorithms."""
    pts = as_points(points)
    if len(pts) <= 1:
        return True
    ctx = PredicateCounters()
    if mode == "upper":
        vertices = monotone_chain_upper(pts, ctx)
    elif mode == "pareto":
        vertices = pareto_sweep(pts, ctx)
    elif mode == "full":
        upper = monotone_chain_upper(pts, ctx)
        flipped = [IndexedPoint(p.x, -p.y, p.index) for p in pts]
        lower = monotone_chain_upper(flipped, ctx)
        vertices = upper + lower
    else:
        raise ValueError(f"unknown mode {mode!r}")
    on_hull = {p.index for p in vertices}
    last_x = None
    for p in pts:
        if p.index in on_hull:
            if last_x is not None and p.x < last_x:
                return False
            last_x = p.x
    return True
