"""Metrics from t-structures, morphism lengths, thread and fan sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .category import (
    Arc,
    CanonicalMorphism,
    FormalObject,
    ZERO,
    arc_or_zero,
    canonical,
    compose,
    cone,
)
from .cyclic import BoundaryPoint, iterate, limit_of_track, pred, segment_of_limit, wrap
from .tstructure import LEFT, RIGHT, DecoratedNC, aisle_system, coaisle_system, system_member

COAISLE, AISLE = "coaisle", "aisle"


@dataclass(frozen=True)
class MetricSpec:
    kind: str
    t: DecoratedNC

    def __post_init__(self):
        if self.kind not in (COAISLE, AISLE):
            raise ValueError(f"unknown metric kind {self.kind!r}")


def ball_system(m: MetricSpec, radius: int):
    """Interval system of the ball B_radius; None stands for the whole category."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if radius == 0:
        return None
    if m.kind == COAISLE:
        return coaisle_system(m.t, -radius)
    return aisle_system(m.t, radius)


def ball_member(m: MetricSpec, radius: int, obj) -> bool:
    system = ball_system(m, radius)
    return True if system is None else system_member(obj, system)


def metric_ball(m: MetricSpec, radius: int) -> Callable:
    return lambda obj: ball_member(m, radius, obj)


@dataclass(frozen=True)
class Length:
    value: Fraction
    exact: bool = True  # False: value is only an upper bound

    def __str__(self):
        return str(self.value) if self.exact else f"<={self.value}"


def morphism_length(f: CanonicalMorphism, m: MetricSpec, t_max: int) -> Length:
    c = cone(f)
    if c.is_zero:
        return Length(Fraction(0))
    best = 0
    for radius in range(1, t_max + 2):
        if not ball_member(m, radius, c):
            break
        best = radius
    if best > t_max:
        return Length(Fraction(1, t_max + 2), exact=False)
    return Length(Fraction(1, best + 1))


CONST, ADV = "const", "adv"


@dataclass(frozen=True)
class EndpointTrack:
    start: BoundaryPoint
    mode: str = CONST

    def __post_init__(self):
        if self.mode not in (CONST, ADV):
            raise ValueError(f"unknown track mode {self.mode!r}")
        if self.start.index is None:
            raise ValueError("tracks start at marked points")

    @property
    def advancing(self) -> bool:
        return self.mode == ADV

    def at(self, n: int) -> BoundaryPoint:
        return iterate(self.start, n) if self.advancing else self.start

    def limit(self, n: int) -> BoundaryPoint:
        return limit_of_track(self.start, self.advancing, n)


def _tracks_collide(t0: EndpointTrack, t1: EndpointTrack, offset: int) -> bool:
    # does {t0(k), t1(k)} degenerate for some k >= offset?
    a, b = t0.start, t1.start
    if a.segment != b.segment:
        return False
    if t0.advancing == t1.advancing:
        return abs(a.index - b.index) <= 1
    if t0.advancing:
        a, b = b, a
    # a constant, b advancing: b.index + k meets a.index +- 1 for a large k
    return a.index - b.index + 1 >= offset


@dataclass(frozen=True)
class ThreadSequence:
    t0: EndpointTrack
    t1: EndpointTrack
    offset: int = 1

    def __post_init__(self):
        if self.offset < 1:
            raise ValueError("offset must be at least 1")
        if _tracks_collide(self.t0, self.t1, self.offset):
            raise ValueError("thread entries degenerate")

    @property
    def first(self) -> int:
        return self.offset

    def entry(self, n: int) -> Arc:
        if n < self.offset:
            raise IndexError(n)
        return Arc(self.t0.at(n), self.t1.at(n))

    def step(self, n: int) -> CanonicalMorphism:
        return canonical(self.entry(n), self.entry(n + 1))

    def composite(self, m: int, m2: int) -> CanonicalMorphism:
        """f_{m,m2}: the composite of the step maps from entry m to entry m2."""
        if not self.offset <= m <= m2:
            raise IndexError((m, m2))
        return _composite(self, m, m2)

    def cone(self, m: int, m2: int) -> FormalObject:
        return cone(self.composite(m, m2))


@lru_cache(maxsize=65536)
def _composite(s: ThreadSequence, m: int, m2: int) -> CanonicalMorphism:
    if m2 == m:
        return canonical(s.entry(m), s.entry(m))
    f = _composite(s, m, m2 - 1)
    if f.is_zero:
        return CanonicalMorphism(s.entry(m), s.entry(m2), Fraction(0))
    return compose(f, s.step(m2 - 1))


def thread_entry(s, n: int) -> Arc:
    return s.entry(n)


def thread_cone(s, m: int, m2: int) -> FormalObject:
    if not m < m2:
        raise ValueError("need m < m'")
    return s.cone(m, m2)


def fan_cone_formula(s: ThreadSequence, m: int, m2: int) -> FormalObject:
    """{f_m^-, f_m'} + {f'_m^-, f'_m'}, the cone of f_{m,m'} on a double fan."""
    return FormalObject.of(
        arc_or_zero(pred(s.t0.at(m)), s.t0.at(m2)),
        arc_or_zero(pred(s.t1.at(m)), s.t1.at(m2)),
    )


@dataclass(frozen=True)
class FanSequence:
    threads: tuple

    def __post_init__(self):
        object.__setattr__(self, "threads", tuple(self.threads))

    def entry(self, n: int) -> FormalObject:
        return FormalObject(tuple(s.entry(n) for s in self.threads))

    def cone(self, m: int, m2: int) -> FormalObject:
        out = ZERO
        for s in self.threads:
            out = out + s.cone(m, m2)
        return out

    @property
    def first(self) -> int:
        return max((s.first for s in self.threads), default=1)


def as_fan(s) -> FanSequence:
    return s if isinstance(s, FanSequence) else FanSequence((s,))


def mocolim_thread(s, n: int):
    """The Z-bar arc {lim f_k, lim f'_k}, or None for the zero colimit."""
    base = s.thread if isinstance(s, Subsequence) else s
    l0, l1 = base.t0.limit(n), base.t1.limit(n)
    if l0 == l1:
        return None
    return Arc(l0, l1)


def is_null_thread(s, n: int) -> bool:
    return mocolim_thread(s, n) is None


def _track_cauchy(track: EndpointTrack, t: DecoratedNC) -> bool:
    if not track.advancing:
        return True
    i = segment_of_limit(track.limit(t.n), t.n, left_closed=False)
    return t.dec(i).kind != RIGHT


def is_cauchy_fan(s, t: DecoratedNC) -> bool:
    """Closed form for the coaisle metric of t: an endpoint converging to
    a_{i+1} from segment i needs x_i != a_{i+1}."""
    return all(_track_cauchy(th.t0, t) and _track_cauchy(th.t1, t) for th in _threads(s))


def is_compactly_supported_fan(s, t: DecoratedNC) -> bool:
    """Closed form for the coaisle metric of t: the colimit {f, f'} with f in
    [a_k, a_k+1) and f' in [a_l, a_l+1) needs k, l in one block of P and
    neither x_k = a_k nor x_l = a_l."""
    n = t.n
    for th in _threads(s):
        lim = mocolim_thread(th, n)
        if lim is None:
            continue
        k = segment_of_limit(lim.a, n, left_closed=True)
        l = segment_of_limit(lim.b, n, left_closed=True)
        if l not in t.partition.block_of(k):
            return False
        if t.dec(k).kind == LEFT or t.dec(l).kind == LEFT:
            return False
    return True


def _threads(s):
    if isinstance(s, FanSequence):
        return s.threads
    if isinstance(s, Subsequence):
        return (s.thread,)
    return (s,)


@dataclass(frozen=True)
class Subsequence:
    """The thread restricted to indices index_map(first), index_map(first+1), ..."""

    thread: ThreadSequence
    index_map: Callable[[int], int]
    offset: int = 1

    def __post_init__(self):
        prev = None
        for k in range(self.offset, self.offset + 64):
            cur = self.index_map(k)
            if cur < self.thread.offset or (prev is not None and cur <= prev):
                raise ValueError("index sequence must be strictly increasing inside the thread")
            prev = cur

    @property
    def first(self) -> int:
        return self.offset

    def entry(self, k: int) -> Arc:
        return self.thread.entry(self.index_map(k))

    def composite(self, m: int, m2: int) -> CanonicalMorphism:
        return self.thread.composite(self.index_map(m), self.index_map(m2))

    def cone(self, m: int, m2: int) -> FormalObject:
        return self.thread.cone(self.index_map(m), self.index_map(m2))


def subsequence(s: ThreadSequence, index_map, offset: int = 1) -> Subsequence:
    return Subsequence(s, index_map, offset)


def component(s: FanSequence, selector) -> FanSequence:
    """Keep the threads whose position satisfies ``selector`` (a callable on
    positions or a collection of positions)."""
    keep = selector if callable(selector) else (lambda i, chosen=frozenset(selector): i in chosen)
    return FanSequence(tuple(th for i, th in enumerate(s.threads) if keep(i)))


def null_by_composites(s: ThreadSequence, window: int | None = None) -> bool:
    """Direct check: some composite of step maps out of the first entry
    vanishes within the window."""
    gap = abs(s.t0.start.index - s.t1.start.index) + 1 if s.t0.start.segment == s.t1.start.segment else 1
    window = window if window is not None else max(3, 3 * gap)
    m = s.first
    return any(s.composite(m, m + d).is_zero for d in range(1, window + 1))


def cauchy_by_window(s, m: MetricSpec, t_max: int = 4, window: int = 20) -> bool:
    """Definitional check: for every radius t <= t_max some n_t within the
    window has cone(f_{m,m'}) in B_t for all n_t <= m < m' <= n_t + window."""
    first = s.first
    for radius in range(1, t_max + 1):
        found = False
        for start in range(first, first + window):
            if all(
                ball_member(m, radius, s.cone(a, b))
                for a in range(start, start + window)
                for b in range(a + 1, start + window + 1)
            ):
                found = True
                break
        if not found:
            return False
    return True


def supported_by_crossing(s, m: MetricSpec, t_max: int = 5) -> bool:
    """Definitional check through the colimit: Hom(Y, colim) = 0 for all Y in
    B_t exactly when the colimit crosses no arc of Sigma B_t."""
    n = m.t.n
    lims = [mocolim_thread(th, n) for th in _threads(s)]
    lims = [x for x in lims if x is not None]
    if not lims:
        return True
    for radius in range(1, t_max + 1):
        if m.kind == COAISLE:
            shifted = coaisle_system(m.t, 1 - radius)
        else:
            shifted = aisle_system(m.t, radius + 1)
        if not any(shifted.straddles(x.a, x.b) for x in lims):
            return True
    return False


def is_eventually_constant(s) -> bool:
    return all(not th.t0.advancing and not th.t1.advancing for th in _threads(s))


def acc_limit_track(k: int, n: int, start_index: int = 0) -> EndpointTrack:
    """An advancing track converging to Acc(k)."""
    return EndpointTrack(BoundaryPoint(wrap(k - 1, n), start_index), ADV)

