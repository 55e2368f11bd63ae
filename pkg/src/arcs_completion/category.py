"""Arcs, Hom spaces, canonical morphisms and cones in the cluster category C(Z)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .cyclic import (
    BoundaryPoint,
    IntervalSystem,
    _cyc3,
    closed,
    in_interval,
    iterate,
    marked,
    pred,
    succ,
)


def is_arc(p: BoundaryPoint, q: BoundaryPoint) -> bool:
    return q != p and q != pred(p) and q != succ(p)


@dataclass(frozen=True, slots=True)
class Arc:
    a: BoundaryPoint
    b: BoundaryPoint
    shift_keys: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_arc(self.a, self.b):
            raise ValueError(f"degenerate pair {{{self.a!r}, {self.b!r}}}")
        if self.b.key < self.a.key:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        # keys of the suspended endpoints, used by hom_dim
        object.__setattr__(self, "shift_keys", (_shift_key(self.a), _shift_key(self.b)))

    @property
    def endpoints(self):
        return (self.a, self.b)

    @property
    def is_plain(self) -> bool:
        """Both endpoints marked, i.e. an object of C(Z) itself."""
        return self.a.index is not None and self.b.index is not None

    def __repr__(self):
        return f"{{{self.a!r}, {self.b!r}}}"


def arc_or_zero(p: BoundaryPoint, q: BoundaryPoint):
    """The arc {p, q}, or None for a degenerate pair (the zero object)."""
    return Arc(p, q) if is_arc(p, q) else None


@dataclass(frozen=True)
class FormalObject:
    summands: tuple = ()

    def __post_init__(self):
        kept = tuple(sorted((s for s in self.summands if s is not None), key=lambda s: (s.a.key, s.b.key)))
        object.__setattr__(self, "summands", kept)

    @classmethod
    def of(cls, *summands):
        return cls(tuple(summands))

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __add__(self, other):
        return FormalObject(self.summands + other.summands)


ZERO = FormalObject()


def as_object(obj) -> FormalObject:
    if obj is None:
        return ZERO
    if isinstance(obj, Arc):
        return FormalObject((obj,))
    return obj


def _crosses_keys(x0, x1, y0, y1) -> bool:
    inside0 = x0 < y0 < x1
    inside1 = x0 < y1 < x1
    if inside0 == inside1:
        return False
    out = y1 if inside0 else y0
    return out != x0 and out != x1


def crosses(x: Arc, y: Arc) -> bool:
    return _crosses_keys(x.a.key, x.b.key, y.a.key, y.b.key)


def _shift_key(p: BoundaryPoint):
    # key of Sigma p; suspension keeps the key order of an arc's endpoints
    k = p.key
    return k if p.index is None else (k[0], 1, k[2] - 1)


def suspend(x: Arc, n: int = 1) -> Arc:
    return Arc(iterate(x.a, -n), iterate(x.b, -n))


def suspend_object(obj, n: int = 1) -> FormalObject:
    return FormalObject(tuple(suspend(s, n) for s in as_object(obj)))


def hom_dim(x: Arc, y: Arc) -> int:
    x0, x1 = x.shift_keys
    return 1 if _crosses_keys(x0, x1, y.a.key, y.b.key) else 0


def ext1_dim(x: Arc, y: Arc) -> int:
    return 1 if crosses(x, y) else 0


class Labeling(NamedTuple):
    x0: BoundaryPoint
    x1: BoundaryPoint
    y0: BoundaryPoint
    y1: BoundaryPoint


def enabled_ordering(x: Arc, y: Arc):
    """Labels with pred(x0) < y0 < pred(x1) < y1, x0 the smaller endpoint of x;
    None when Hom(x, y) = 0."""
    x0, x1 = x.a, x.b
    s0, s1 = pred(x0).key, pred(x1).key
    for y0, y1 in ((y.a, y.b), (y.b, y.a)):
        k0, k1 = y0.key, y1.key
        if len({s0, s1, k0, k1}) == 4 and _cyc3(s0, k0, s1) and _cyc3(k0, s1, k1) and _cyc3(s1, k1, s0):
            return Labeling(x0, x1, y0, y1)
    return None


def factors_through(x: Arc, y: Arc, s: Arc) -> bool:
    lab = enabled_ordering(x, y)
    if lab is None:
        return False
    first, second = closed(lab.x0, lab.y0), closed(lab.x1, lab.y1)
    return (in_interval(s.a, first) and in_interval(s.b, second)) or (
        in_interval(s.b, first) and in_interval(s.a, second)
    )


@dataclass(frozen=True)
class CanonicalMorphism:
    src: Arc
    tgt: Arc
    scalar: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if self.scalar != 0 and hom_dim(self.src, self.tgt) == 0:
            raise ValueError(f"Hom({self.src!r}, {self.tgt!r}) = 0")

    @property
    def is_zero(self) -> bool:
        return self.scalar == 0


def canonical(x: Arc, y: Arc, scalar=1) -> CanonicalMorphism:
    """scalar * e_XY, collapsing to the zero morphism when Hom vanishes."""
    return CanonicalMorphism(x, y, Fraction(scalar) if hom_dim(x, y) else Fraction(0))


def identity(x: Arc) -> CanonicalMorphism:
    return CanonicalMorphism(x, x, Fraction(1))


def compose(f: CanonicalMorphism, g: CanonicalMorphism) -> CanonicalMorphism:
    """g after f."""
    if f.tgt != g.src:
        raise ValueError("middle objects differ")
    x, y, z = f.src, f.tgt, g.tgt
    scalar = f.scalar * g.scalar
    if scalar == 0 or not hom_dim(x, z) or not factors_through(x, z, y):
        return CanonicalMorphism(x, z, Fraction(0))
    return CanonicalMorphism(x, z, scalar)


def cone_of_canonical(f: CanonicalMorphism) -> FormalObject:
    if f.is_zero:
        raise ValueError("cone_of_canonical needs a nonzero morphism")
    lab = enabled_ordering(f.src, f.tgt)
    return FormalObject.of(arc_or_zero(pred(lab.x0), lab.y0), arc_or_zero(pred(lab.x1), lab.y1))


def cone(f: CanonicalMorphism) -> FormalObject:
    """Cone of any canonical morphism; the zero map X -> Y has cone Y + Sigma X."""
    if f.is_zero:
        return FormalObject.of(f.tgt, suspend(f.src))
    return cone_of_canonical(f)


def cx_member(x: Arc, region) -> bool:
    """Both endpoints in ``region``: a set of points, a predicate, or an
    IntervalSystem (then both must sit in one block)."""
    if isinstance(region, IntervalSystem):
        return region.contains_pair(x.a, x.b)
    if callable(region):
        return bool(region(x.a)) and bool(region(x.b))
    return x.a in region and x.b in region


def support(obj) -> frozenset:
    return frozenset(p for s in as_object(obj) for p in s.endpoints)


def window_points(n: int, w: int):
    return [marked(i, k) for i in range(1, n + 1) for k in range(-w, w + 1)]


def window_arcs(n: int, w: int):
    pts = window_points(n, w)
    out = []
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if is_arc(p, q):
                out.append(Arc(p, q))
    return out


def shortest_arcs(z: BoundaryPoint):
    """The two shortest arcs ending at z: {z, z(2)} and {z(-2), z}."""
    return Arc(z, iterate(z, 2)), Arc(iterate(z, -2), z)
