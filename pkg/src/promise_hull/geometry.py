"""Exact integer planar primitives with per-invocation predicate counting.

Every coordinate comparison and orientation test the library performs goes
through this module and is tallied on a :class:`PredicateCounters` owned by
the invocation.  Coordinates are Python ints (arbitrary precision, so the
double-width products of the orientation test are exact); the documented
contract is |x|, |y| < 2**62.

Counting convention: ``cmp_x``/``cmp_y`` and the sorted-order helpers count
one coordinate comparison each; ``orientation`` and ``det2_sign`` count one
orientation test each.  ``det2_sign`` covers the slope and tangent-objective
comparisons used by prune-and-search bridge finding; they are sign tests of a
2x2 determinant of coordinate differences, the same algebraic degree as an
orientation test, and are booked under that counter.  Comparisons of sequence
indices are plain integer bookkeeping and are never counted.
"""

from __future__ import annotations

from .errors import (
    CoordinateError,
    EmptyInputError,
    GeneralPositionError,
    VerticalLineError,
)

COORD_LIMIT = 1 << 62

LEFT = 1
COLLINEAR = 0
RIGHT = -1


class PredicateCounters:
    """Tallies of coordinate comparisons and orientation tests.

    One instance belongs to exactly one algorithm invocation at a time;
    distinct invocations with distinct counters may run concurrently.
    """

    __slots__ = ("coord_cmps", "orientation_tests")

    def __init__(self, coord_cmps: int = 0, orientation_tests: int = 0):
        self.coord_cmps = coord_cmps
        self.orientation_tests = orientation_tests

    def total(self) -> int:
        return self.coord_cmps + self.orientation_tests

    def add(self, other: "PredicateCounters") -> None:
        self.coord_cmps += other.coord_cmps
        self.orientation_tests += other.orientation_tests

    def snapshot(self) -> tuple[int, int]:
        return (self.coord_cmps, self.orientation_tests)

    def __repr__(self):
        return f"PredicateCounters(coord_cmps={self.coord_cmps}, orientation_tests={self.orientation_tests})"


class IndexedPoint:
    """A planar point carrying its 1-based position in the input sequence."""

    __slots__ = ("x", "y", "index")

    def __init__(self, x: int, y: int, index: int):
        self.x = x
        self.y = y
        self.index = index

    def coords(self) -> tuple[int, int]:
        return (self.x, self.y)

    def __repr__(self):
        return f"({self.x}, {self.y})#{self.index}"

    def __eq__(self, other):
        return (
            isinstance(other, IndexedPoint)
            and self.x == other.x
            and self.y == other.y
            and self.index == other.index
        )

    def __hash__(self):
        return hash((self.x, self.y, self.index))


# A bare Point in the contracts is an IndexedPoint whose index is irrelevant.
Point = IndexedPoint


def pt(x: int, y: int, index: int = 0) -> IndexedPoint:
    return IndexedPoint(x, y, index)


class VerticalLine:
    """A vertical line x = x0.  Slabs are half-open: a point with x == x0
    lies on the line's right side.

    ``anchor`` is the input point whose x-coordinate placed the line, when
    there is one; comparing a point against the line is then a point-point
    coordinate comparison.
    """

    __slots__ = ("x", "anchor")

    def __init__(self, x: int, anchor: IndexedPoint | None = None):
        self.x = x
        self.anchor = anchor

    def __repr__(self):
        return f"VerticalLine(x={self.x})"


def _validate_coord(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise CoordinateError(f"coordinate {v!r} is not an integer")
    if not (-COORD_LIMIT < v < COORD_LIMIT):
        raise CoordinateError(f"coordinate {v} outside (-2^62, 2^62)")
    return v


class PointSeq:
    """An ingested input sequence: integer coordinates, general position,
    indices exactly 1..n in list order.  Sublists passed around by the
    algorithms are plain lists of IndexedPoint and keep original indices.
    """

    __slots__ = ("points",)

    def __init__(self, points: list[IndexedPoint]):
        self.points = points

    @classmethod
    def from_coords(cls, coords, require_general_position: bool = True) -> "PointSeq":
        points = []
        for i, (x, y) in enumerate(coords, start=1):
            points.append(IndexedPoint(_validate_coord(x), _validate_coord(y), i))
        if require_general_position and not check_general_position(points):
            raise GeneralPositionError("duplicate x- or y-coordinate in input")
        return cls(points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


def as_points(seq) -> list[IndexedPoint]:
    """Accept a PointSeq or a list of IndexedPoint; return the point list."""
    if isinstance(seq, PointSeq):
        return seq.points
    return list(seq)


def orientation(a: IndexedPoint, b: IndexedPoint, c: IndexedPoint, ctx: PredicateCounters) -> int:
    """Sign of the cross product (b - a) x (c - a), computed exactly.

    LEFT (+1) if c lies to the left of the directed line a->b, RIGHT (-1) if
    to the right, COLLINEAR (0) on the line.
    """
    ctx.orientation_tests += 1
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if d > 0:
        return LEFT
    if d < 0:
        return RIGHT
    return COLLINEAR


def det2_sign(a: int, b: int, c: int, d: int, ctx: PredicateCounters) -> int:
    """Sign of a*d - c*b; counted as one orientation test.

    Used for slope comparisons ((dy1,dx1) vs (dy2,dx2)) and for comparing two
    points under a linear objective y*dx - dy*x.
    """
    ctx.orientation_tests += 1
    v = a * d - c * b
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def cmp_x(a: IndexedPoint, b: IndexedPoint, ctx: PredicateCounters) -> int:
    """Three-way x comparison; general position forbids ties on distinct points."""
    ctx.coord_cmps += 1
    if a.x < b.x:
        return -1
    if a.x > b.x:
        return 1
    return 0


def cmp_y(a: IndexedPoint, b: IndexedPoint, ctx: PredicateCounters) -> int:
    ctx.coord_cmps += 1
    if a.y < b.y:
        return -1
    if a.y > b.y:
        return 1
    return 0


def side_of_line(p: IndexedPoint, line: VerticalLine, ctx: PredicateCounters) -> int:
    """LEFT if x(p) < x0, RIGHT if x(p) >= x0 (half-open slab convention)."""
    ctx.coord_cmps += 1
    return LEFT if p.x < line.x else RIGHT


def cmp_line_x(line: VerticalLine, p: IndexedPoint, ctx: PredicateCounters) -> int:
    """Three-way comparison of a line abscissa against a point's x."""
    ctx.coord_cmps += 1
    if line.x < p.x:
        return -1
    if line.x > p.x:
        return 1
    return 0


def strictly_above(p: IndexedPoint, a: IndexedPoint, b: IndexedPoint, ctx: PredicateCounters) -> bool:
    """True iff p lies strictly above the infinite line through a and b.

    One coordinate comparison to order the operands by x, then one
    orientation test.  Raises VerticalLineError when x(a) == x(b).
    """
    c = cmp_x(a, b, ctx)
    if c == 0:
        raise VerticalLineError("line through two points with equal x")
    if c > 0:
        a, b = b, a
    return orientation(a, b, p, ctx) == LEFT


class _XKey:
    """Sort key that routes the sort's comparisons through the x counter."""

    __slots__ = ("p", "ctx")

    def __init__(self, p: IndexedPoint, ctx: PredicateCounters):
        self.p = p
        self.ctx = ctx

    def __lt__(self, other: "_XKey") -> bool:
        self.ctx.coord_cmps += 1
        return self.p.x < other.p.x


def sort_points_by_x(points, ctx: PredicateCounters) -> list[IndexedPoint]:
    """Return the points sorted by x, counting the sort's comparisons."""
    return [k.p for k in sorted((_XKey(p, ctx) for p in points))]


class _XDescKey(_XKey):
    __slots__ = ()

    def __lt__(self, other: "_XDescKey") -> bool:
        self.ctx.coord_cmps += 1
        return self.p.x > other.p.x


def sort_points_by_x_desc(points, ctx: PredicateCounters) -> list[IndexedPoint]:
    return [k.p for k in sorted((_XDescKey(p, ctx) for p in points))]


class _LineXKey:
    __slots__ = ("line", "ctx")

    def __init__(self, line: VerticalLine, ctx: PredicateCounters):
        self.line = line
        self.ctx = ctx

    def __lt__(self, other: "_LineXKey") -> bool:
        self.ctx.coord_cmps += 1
        return self.line.x < other.line.x


def sort_lines_by_x(lines, ctx: PredicateCounters) -> list[VerticalLine]:
    return [k.line for k in sorted((_LineXKey(l, ctx) for l in lines))]


def check_general_position(points) -> bool:
    """True iff no two points share an x and no two share a y.

    Oracle-grade O(n log n) check used at ingestion and in tests, never
    inside the promise algorithms; its comparisons are not counted.
    """
    pts = as_points(points)
    xs = sorted(p.x for p in pts)
    for i in range(1, len(xs)):
        if xs[i] == xs[i - 1]:
            return False
    ys = sorted(p.y for p in pts)
    for i in range(1, len(ys)):
        if ys[i] == ys[i - 1]:
            return False
    return True


def require_nonempty(points) -> list[IndexedPoint]:
    pts = as_points(points)
    if not pts:
        raise EmptyInputError("empty point sequence")
    return pts


def min_x_point(points, ctx: PredicateCounters) -> IndexedPoint:
    pts = require_nonempty(points)
    best = pts[0]
    for p in pts[1:]:
        if cmp_x(p, best, ctx) < 0:
            best = p
    return best


def max_x_point(points, ctx: PredicateCounters) -> IndexedPoint:
    pts = require_nonempty(points)
    best = pts[0]
    for p in pts[1:]:
        if cmp_x(p, best, ctx) > 0:
            best = p
    return best


def max_y_point(points, ctx: PredicateCounters) -> IndexedPoint:
    pts = require_nonempty(points)
    best = pts[0]
    for p in pts[1:]:
        if cmp_y(p, best, ctx) > 0:
            best = p
    return best
