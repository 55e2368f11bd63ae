"""The completion of C(Z) for a coaisle metric, realized by arcs of Z-bar."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .category import Arc, FormalObject, arc_or_zero, suspend
from .cyclic import BoundaryPoint, Interval, in_interval, pred, wrap
from .sequences import ADV, CONST, EndpointTrack, FanSequence, ThreadSequence
from .tstructure import LEFT, RIGHT, DecoratedNC, coaisle_member, kreweras


def zbar_contains(t: DecoratedNC, block, p: BoundaryPoint) -> bool:
    """Whether p lies in the completed support of the block of P."""
    i = p.segment
    if i not in block or t.dec(i).kind == LEFT:
        return False
    if p.index is None:
        return t.dec(wrap(i - 1, t.n)).kind != RIGHT
    return True


def zbar_of_block(t: DecoratedNC, block):
    block = tuple(block)
    return lambda p: zbar_contains(t, block, p)


def completion_member(f: Arc, t: DecoratedNC):
    """The block of P whose completed support holds both endpoints, or None."""
    block = t.partition.block_of(f.a.segment)
    if zbar_contains(t, block, f.a) and zbar_contains(t, block, f.b):
        return block
    return None


@dataclass(frozen=True)
class CompletedArc:
    arc: Arc
    block: tuple

    @classmethod
    def of(cls, arc: Arc, t: DecoratedNC) -> "CompletedArc":
        block = completion_member(arc, t)
        if block is None:
            raise ValueError(f"{arc!r} is not in the completion")
        return cls(arc, block)


def _arc(x) -> Arc:
    return x.arc if isinstance(x, CompletedArc) else x


class CompletedLabeling(NamedTuple):
    f: BoundaryPoint
    f1: BoundaryPoint
    g: BoundaryPoint
    g1: BoundaryPoint


def _enabling(f: BoundaryPoint, f1: BoundaryPoint, g_arc: Arc):
    # g in [f, f1^-) and g' in [f1, f^-)
    first = Interval(f, pred(f1), True, False)
    second = Interval(f1, pred(f), True, False)
    for g, g1 in ((g_arc.a, g_arc.b), (g_arc.b, g_arc.a)):
        if in_interval(g, first) and in_interval(g1, second):
            return CompletedLabeling(f, f1, g, g1)
    return None


def completed_labeling(x, y):
    """Labels f, f', g, g' enabling a nonzero map x -> y (f the smaller endpoint)."""
    a = _arc(x)
    return _enabling(a.a, a.b, _arc(y))


def hom_completed_dim(x, y) -> int:
    if isinstance(x, CompletedArc) and isinstance(y, CompletedArc) and x.block != y.block:
        return 0
    return 0 if completed_labeling(x, y) is None else 1


def _weakly_between(lo: BoundaryPoint, mid: BoundaryPoint, hi: BoundaryPoint) -> bool:
    # lo <= mid <= hi walking anticlockwise
    return in_interval(mid, Interval(lo, hi, True, True))


def compose_completed_nonzero(x, y, z) -> bool:
    """Whether the composite of the canonical maps x -> y -> z is nonzero.

    Beyond the chains f <= g <= h and f' <= g' <= h' the composite needs a
    nonzero map x -> z enabled by the same labels; without it the chains can
    hold while Hom(x, z) = 0.
    """
    first = completed_labeling(x, y)
    if first is None:
        return False
    second = _enabling(first.g, first.g1, _arc(z))
    if second is None:
        return False
    h, h1 = second.g, second.g1
    direct = _enabling(first.f, first.f1, _arc(z))
    if direct is None or (direct.g, direct.g1) != (h, h1):
        return False
    return _weakly_between(first.f, first.g, h) and _weakly_between(first.f1, first.g1, h1)


def suspend_completed(x, times: int = 1):
    if isinstance(x, CompletedArc):
        return CompletedArc(suspend(x.arc, times), x.block)
    return suspend(x, times)


def cone_completed(x, y) -> FormalObject:
    lab = completed_labeling(x, y)
    if lab is None:
        raise ValueError("no nonzero map to take the cone of")
    return FormalObject.of(arc_or_zero(pred(lab.f), lab.g), arc_or_zero(pred(lab.f1), lab.g1))


def _track_for(p: BoundaryPoint, other: BoundaryPoint, n: int) -> EndpointTrack:
    if p.index is not None:
        return EndpointTrack(p, CONST)
    seg = wrap(p.segment - 1, n)
    start = 0
    if other.index is not None and other.segment == seg:
        # keep the advancing endpoint clear of the fixed one
        start = max(0, other.index + 2)
    return EndpointTrack(BoundaryPoint(seg, start), ADV)


def realize_as_fan(f: Arc, n: int) -> FanSequence:
    """A double fan whose module colimit is f."""
    a, b = _arc(f).endpoints
    return FanSequence((ThreadSequence(_track_for(a, b, n), _track_for(b, a, n), 1),))


def aisle_completion_member(x: Arc, t: DecoratedNC) -> bool:
    """Closed form for the union of all shifts of the coaisle: both endpoints
    in segments of one Kreweras block, neither decorated at its right end."""
    i, j = x.a.segment, x.b.segment
    if t.dec(i).kind == RIGHT or t.dec(j).kind == RIGHT:
        return False
    return j in kreweras(t.partition).block_of(i)


def aisle_completion_by_search(x: Arc, t: DecoratedNC, p_bound: int = 12) -> bool:
    return any(coaisle_member(x, t, p) for p in range(-p_bound, p_bound + 1))
