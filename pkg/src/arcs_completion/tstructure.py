"""Decorated non-crossing partitions and the t-structures they classify."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .category import as_object
from .cyclic import BoundaryPoint, Interval, IntervalSystem, acc, iterate, marked, wrap


def _crossing_blocks(a, b) -> bool:
    for i, j in combinations(sorted(a), 2):
        inner = [k for k in b if i < k < j]
        if inner and len(inner) < len(b):
            return True
    return False


def is_noncrossing(blocks, n: int) -> bool:
    blocks = [tuple(b) for b in blocks]
    seen = sorted(x for b in blocks for x in b)
    if seen != list(range(1, n + 1)) or any(not b for b in blocks):
        raise ValueError(f"not a partition of [{n}]")
    return not any(_crossing_blocks(a, b) for a, b in combinations(blocks, 2))


@dataclass(frozen=True)
class NCPartition:
    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if not is_noncrossing(blocks, self.n):
            raise ValueError(f"crossing partition {blocks}")

    @classmethod
    def finest(cls, n):
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def full(cls, n):
        return cls(n, (tuple(range(1, n + 1)),))

    def block_of(self, i: int) -> tuple:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def is_singleton(self, i: int) -> bool:
        return len(self.block_of(i)) == 1

    def is_adjacency(self, i: int) -> bool:
        return wrap(i + 1, self.n) in self.block_of(i)

    def refines(self, other: "NCPartition") -> bool:
        return all(any(set(b) <= set(c) for c in other.blocks) for b in self.blocks)

    def rotate(self, step: int) -> "NCPartition":
        return NCPartition(self.n, tuple(tuple(wrap(i + step, self.n) for i in b) for b in self.blocks))

    def __repr__(self):
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def _set_partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[head] + part[k]] + part[k + 1:]
        yield [[head]] + part


def all_nc_partitions(n: int):
    out = []
    for part in _set_partitions(list(range(1, n + 1))):
        if is_noncrossing(part, n):
            out.append(NCPartition(n, tuple(tuple(b) for b in part)))
    return sorted(out, key=lambda p: p.blocks)


class _Union:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def join(self, x, y):
        self.parent[self.find(x)] = self.find(y)

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [tuple(sorted(g)) for g in out.values()]


@lru_cache(maxsize=None)
def kreweras(p: NCPartition) -> NCPartition:
    """Kreweras complement; label i' sits between i and i+1 and is reported as i."""
    n = p.n
    uf = _Union(range(1, n + 1))
    for i, j in combinations(range(1, n + 1), 2):
        # i' and j' bound the side {i+1, ..., j}
        side = set(range(i + 1, j + 1))
        if not any(side & set(b) and set(b) - side for b in p.blocks):
            uf.join(i, j)
    return NCPartition(n, tuple(uf.groups()))


def nc_join(p1: NCPartition, p2: NCPartition) -> NCPartition:
    if p1.n != p2.n:
        raise ValueError("partitions of different sets")
    uf = _Union(range(1, p1.n + 1))
    for b in p1.blocks + p2.blocks:
        for x in b[1:]:
            uf.join(b[0], x)
    while True:
        groups = uf.groups()
        clash = next(((a, b) for a, b in combinations(groups, 2) if _crossing_blocks(a, b)), None)
        if clash is None:
            return NCPartition(p1.n, tuple(groups))
        uf.join(clash[0][0], clash[1][0])


LEFT, RIGHT, POINT = "left", "right", "point"


@dataclass(frozen=True)
class Decoration:
    kind: str
    point: BoundaryPoint | None = None

    def __post_init__(self):
        if self.kind not in (LEFT, RIGHT, POINT):
            raise ValueError(f"unknown decoration kind {self.kind!r}")
        if (self.kind == POINT) != (self.point is not None and self.point.index is not None):
            raise ValueError("a point decoration carries exactly one marked point")

    def __repr__(self):
        return repr(self.point) if self.kind == POINT else self.kind


AT_LEFT = Decoration(LEFT)
AT_RIGHT = Decoration(RIGHT)


def in_segment(i: int, k: int = 0) -> Decoration:
    return Decoration(POINT, marked(i, k))


@dataclass(frozen=True)
class DecoratedNC:
    partition: NCPartition
    decoration: tuple

    def __post_init__(self):
        object.__setattr__(self, "decoration", tuple(self.decoration))
        if len(self.decoration) != self.partition.n:
            raise ValueError("one decoration per index is required")

    @property
    def n(self) -> int:
        return self.partition.n

    def dec(self, i: int) -> Decoration:
        return self.decoration[wrap(i, self.n) - 1]

    def value(self, i: int) -> BoundaryPoint:
        """x_i as a point of the closure."""
        d = self.dec(i)
        if d.kind == LEFT:
            return acc(i)
        if d.kind == RIGHT:
            return acc(wrap(i + 1, self.n))
        return d.point

    def z_indices(self) -> frozenset:
        return frozenset(i for i in range(1, self.n + 1) if self.dec(i).kind == POINT)

    def __repr__(self):
        return f"DecoratedNC({self.partition!r}, {list(self.decoration)!r})"


def decoration_valid(t: DecoratedNC) -> bool:
    p = t.partition
    for i in range(1, t.n + 1):
        d = t.dec(i)
        if d.kind == POINT and d.point.segment != i:
            return False
        # for N = 1 the index is both a singleton and an adjacency
        if d.kind == LEFT and not p.is_singleton(i):
            return False
        if d.kind == RIGHT and not p.is_adjacency(i):
            return False
    return True


def _span(i: int, n: int, lo, hi, lo_closed: bool, hi_closed: bool, whole: bool) -> Interval:
    return Interval(lo, hi, lo_closed, hi_closed, full_turn=whole and n == 1)


@lru_cache(maxsize=4096)
def aisle_system(t: DecoratedNC, p: int = 0) -> IntervalSystem:
    """Sigma^p of the aisle: per block of P the intervals (a_i, x_i^(-p)]."""
    n = t.n
    blocks = []
    for b in t.partition.blocks:
        ivs = []
        for i in b:
            d = t.dec(i)
            if d.kind == LEFT:
                continue
            if d.kind == RIGHT:
                ivs.append(_span(i, n, acc(i), acc(wrap(i + 1, n)), False, True, True))
            else:
                ivs.append(Interval(acc(i), iterate(d.point, -p), False, True))
        blocks.append((b, ivs))
    return IntervalSystem(n, blocks)


@lru_cache(maxsize=4096)
def coaisle_system(t: DecoratedNC, p: int = 0) -> IntervalSystem:
    """Sigma^p of the coaisle: per Kreweras block the intervals [x_i^(-p-1), a_{i+1})."""
    n = t.n
    blocks = []
    for b in kreweras(t.partition).blocks:
        ivs = []
        for i in b:
            d = t.dec(i)
            if d.kind == RIGHT:
                continue
            if d.kind == LEFT:
                ivs.append(_span(i, n, acc(i), acc(wrap(i + 1, n)), True, False, True))
            else:
                ivs.append(Interval(iterate(d.point, -p - 1), acc(wrap(i + 1, n)), True, False))
        blocks.append((b, ivs))
    return IntervalSystem(n, blocks)


def system_member(obj, system: IntervalSystem) -> bool:
    return all(system.contains_pair(s.a, s.b) for s in as_object(obj))


def aisle_member(obj, t: DecoratedNC, p: int = 0) -> bool:
    return system_member(obj, aisle_system(t, p))


def coaisle_member(obj, t: DecoratedNC, p: int = 0) -> bool:
    return system_member(obj, coaisle_system(t, p))


def tstructs_equivalent(t1: DecoratedNC, t2: DecoratedNC) -> bool:
    return t1.partition == t2.partition and t1.z_indices() == t2.z_indices()


def is_right_nondegenerate(t: DecoratedNC) -> bool:
    return all(d.kind != LEFT for d in t.decoration)


def largest_aisle_in_coaisle(t: DecoratedNC) -> DecoratedNC:
    """A representative of the largest aisle inside the coaisle of t.

    Only segments decorated at their left end carry the whole segment in
    every shift of the coaisle, so the aisle lives there, grouped along the
    Kreweras blocks.  Inside a group, an index followed by its neighbour may
    take the whole segment (right end decoration); that choice is the
    maximal one.
    """
    n = t.n
    s = {i for i in range(1, n + 1) if t.dec(i).kind == LEFT}
    blocks = [tuple(sorted(set(b) & s)) for b in kreweras(t.partition).blocks if set(b) & s]
    blocks += [(i,) for i in range(1, n + 1) if i not in s]
    part = NCPartition(n, tuple(blocks))
    decs = []
    for i in range(1, n + 1):
        if i not in s:
            decs.append(AT_LEFT)
        elif part.is_adjacency(i):
            decs.append(AT_RIGHT)
        else:
            decs.append(in_segment(i, 0))
    return DecoratedNC(part, tuple(decs))


def rndg_reduction_member(obj, t: DecoratedNC, r: int) -> bool:
    """Membership in Y intersected with Sigma^r of the coaisle paired with the
    largest aisle inside Y."""
    hat = largest_aisle_in_coaisle(t)
    return coaisle_member(obj, t, 0) and coaisle_member(obj, hat, r)


def decorated_classes(n: int, points=(0,)):
    """All valid decorated NC partitions on [n] with marked decorations drawn
    from Marked(i, k) for k in ``points``."""
    out = []
    for part in all_nc_partitions(n):
        choices = []
        for i in range(1, n + 1):
            opts = [in_segment(i, k) for k in points]
            if part.is_singleton(i):
                opts.append(AT_LEFT)
            if part.is_adjacency(i):
                opts.append(AT_RIGHT)
            choices.append(opts)
        out.extend(_product_decorations(part, choices))
    return out


def _product_decorations(part, choices):
    if not choices:
        return []
    combos = [[]]
    for opts in choices:
        combos = [c + [o] for c in combos for o in opts]
    return [DecoratedNC(part, tuple(c)) for c in combos]
