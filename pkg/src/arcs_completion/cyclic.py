"""The marked circle: Z = [N] x Z with N accumulation points interleaved.

Segment i is the open stretch between Acc(i) and Acc(i+1); segment N wraps
around to Acc(1).  Points are compared through their linear key, anchored
at Acc(1).
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, slots=True)
class BoundaryPoint:
    segment: int
    index: int | None = None  # None marks the accumulation point Acc(segment)
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.index is None:
            object.__setattr__(self, "key", (self.segment, 0, 0))
        else:
            object.__setattr__(self, "key", (self.segment, 1, self.index))

    @property
    def is_acc(self) -> bool:
        return self.index is None

    @property
    def is_marked(self) -> bool:
        return self.index is not None

    def __repr__(self):
        if self.index is None:
            return f"Acc({self.segment})"
        return f"Marked({self.segment},{self.index})"


def marked(segment: int, index: int) -> BoundaryPoint:
    return BoundaryPoint(segment, index)


def acc(segment: int) -> BoundaryPoint:
    return BoundaryPoint(segment, None)


def wrap(segment: int, n: int) -> int:
    """Reduce a segment label into 1..n."""
    return (segment - 1) % n + 1


def normalize(p: BoundaryPoint, n: int) -> BoundaryPoint:
    s = wrap(p.segment, n)
    return p if s == p.segment else BoundaryPoint(s, p.index)


def check_point(p: BoundaryPoint, n: int) -> BoundaryPoint:
    if n < 1:
        raise ValueError("need at least one accumulation point")
    if not 1 <= p.segment <= n:
        raise ValueError(f"segment of {p!r} outside 1..{n}")
    return p


def succ(p: BoundaryPoint) -> BoundaryPoint:
    if p.index is None:
        return p
    return BoundaryPoint(p.segment, p.index + 1)


def pred(p: BoundaryPoint) -> BoundaryPoint:
    if p.index is None:
        return p
    return BoundaryPoint(p.segment, p.index - 1)


def iterate(p: BoundaryPoint, n: int) -> BoundaryPoint:
    if p.index is None or n == 0:
        return p
    return BoundaryPoint(p.segment, p.index + n)


def _cyc3(a, b, c) -> bool:
    # keys a, b, c met in this order walking anticlockwise (strict)
    return a < b < c or b < c < a or c < a < b


def cyclically_ordered(points) -> bool:
    """True iff the points are pairwise distinct and met in this order
    walking anticlockwise around the circle."""
    keys = [p.key for p in points]
    if len(keys) < 2:
        raise ValueError("need at least two points")
    if len(set(keys)) != len(keys):
        return False
    descents = sum(1 for i in range(len(keys)) if keys[i] > keys[(i + 1) % len(keys)])
    return descents == 1


@dataclass(frozen=True, slots=True)
class Interval:
    """Points met walking anticlockwise from lo to hi.

    ``full_turn`` only matters when lo == hi: the walk then goes once around
    the circle instead of standing still.  This happens for N = 1, where the
    single segment starts and ends at Acc(1).
    """

    lo: BoundaryPoint
    hi: BoundaryPoint
    lo_closed: bool = False
    hi_closed: bool = False
    full_turn: bool = False

    def __contains__(self, p) -> bool:
        return in_interval(p, self)

    def __repr__(self):
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        turn = " full" if self.full_turn else ""
        return f"{left}{self.lo!r}, {self.hi!r}{right}{turn}"


def in_interval(p: BoundaryPoint, iv: Interval) -> bool:
    lo, hi = iv.lo, iv.hi
    if lo == hi:
        if p == lo:
            if iv.full_turn:
                return iv.lo_closed or iv.hi_closed
            return iv.lo_closed and iv.hi_closed
        return iv.full_turn
    if p == lo:
        return iv.lo_closed
    if p == hi:
        return iv.hi_closed
    return _cyc3(lo.key, p.key, hi.key)


def closed(a: BoundaryPoint, c: BoundaryPoint) -> Interval:
    return Interval(a, c, True, True)


def open_interval(a: BoundaryPoint, c: BoundaryPoint) -> Interval:
    return Interval(a, c, False, False)


def segment_of_limit(p: BoundaryPoint, n: int, left_closed: bool) -> int:
    """Index i with p in (a_i, a_{i+1}] (left_closed False) or in
    [a_i, a_{i+1}) (left_closed True)."""
    if p.index is not None or left_closed:
        return p.segment
    return wrap(p.segment - 1, n)


def limit_of_track(start: BoundaryPoint, advancing: bool, n: int) -> BoundaryPoint:
    if not advancing:
        return start
    if start.index is None:
        raise ValueError("an advancing track must start at a marked point")
    return acc(wrap(start.segment + 1, n))


def _candidates(intervals, n: int):
    # Marked points probing every stretch cut out by the given intervals:
    # neighbours of marked endpoints plus deep points next to every Acc.
    bound = 2
    probes = []
    for iv in intervals:
        for e in (iv.lo, iv.hi):
            if e.index is not None:
                bound = max(bound, abs(e.index) + 2)
                probes.extend((pred(e), e, succ(e)))
    for i in range(1, n + 1):
        probes.append(marked(i, -bound))
        probes.append(marked(i, bound))
    return probes


def marked_witness(regions, window: Interval, n: int):
    """A marked point lying in ``window`` and in some interval of ``regions``,
    or None when there is none.  Exact: no enumeration bound involved."""
    regions = list(regions)
    if not regions:
        return None
    for q in _candidates(regions + [window], n):
        if in_interval(q, window) and any(in_interval(q, iv) for iv in regions):
            return q
    return None


class IntervalSystem:
    """Blocks of intervals; an arc lies in the system when both endpoints
    fall in the union of a single block."""

    __slots__ = ("n", "blocks", "_memo")

    def __init__(self, n: int, blocks):
        self.n = n
        self.blocks = tuple((bid, tuple(ivs)) for bid, ivs in blocks)
        self._memo = {}

    def __eq__(self, other):
        return isinstance(other, IntervalSystem) and (self.n, self.blocks) == (other.n, other.blocks)

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"IntervalSystem(n={self.n}, blocks={list(self.blocks)!r})"

    def blocks_of(self, p: BoundaryPoint) -> frozenset:
        got = self._memo.get(p)
        if got is None:
            got = frozenset(bid for bid, ivs in self.blocks if any(in_interval(p, iv) for iv in ivs))
            self._memo[p] = got
        return got

    def contains_point(self, p: BoundaryPoint) -> bool:
        return bool(self.blocks_of(p))

    def block_of_pair(self, p: BoundaryPoint, q: BoundaryPoint):
        common = self.blocks_of(p) & self.blocks_of(q)
        if not common:
            return None
        return min(common, key=repr)

    def contains_pair(self, p: BoundaryPoint, q: BoundaryPoint) -> bool:
        return bool(self.blocks_of(p) & self.blocks_of(q))

    def straddles(self, p: BoundaryPoint, q: BoundaryPoint) -> bool:
        """Whether some block has marked points strictly on both sides of the
        chord pq, i.e. some arc of the system crosses {p, q}."""
        left = open_interval(p, q)
        right = open_interval(q, p)
        for _, ivs in self.blocks:
            if marked_witness(ivs, left, self.n) and marked_witness(ivs, right, self.n):
                return True
        return False

    def marked_points(self, window: int):
        """Marked points with |index| <= window lying in the system, per block."""
        out = {}
        for bid, ivs in self.blocks:
            pts = []
            for i in range(1, self.n + 1):
                for k in range(-window, window + 1):
                    p = marked(i, k)
                    if any(in_interval(p, iv) for iv in ivs):
                        pts.append(p)
            out[bid] = pts
        return out
