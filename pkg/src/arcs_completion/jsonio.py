"""JSON encoding of every domain value; decode(encode(x)) == x."""
from __future__ import annotations

import json
from fractions import Fraction

from .category import Arc, CanonicalMorphism, FormalObject
from .cyclic import BoundaryPoint, Interval, IntervalSystem
from .sequences import EndpointTrack, FanSequence, ThreadSequence
from .tstructure import DecoratedNC, Decoration, NCPartition


class FormatError(ValueError):
    pass


def need(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing field {key!r}")
    return obj[key]


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what} must be an integer")
    return v


def point_to_json(p: BoundaryPoint) -> dict:
    if p.index is None:
        return {"kind": "acc", "segment": p.segment}
    return {"kind": "marked", "segment": p.segment, "index": p.index}


def point_from_json(d) -> BoundaryPoint:
    kind = need(d, "kind")
    seg = _int(need(d, "segment"), "segment")
    if kind == "acc":
        return BoundaryPoint(seg, None)
    if kind == "marked":
        return BoundaryPoint(seg, _int(need(d, "index"), "index"))
    raise FormatError(f"unknown point kind {kind!r}")


def interval_to_json(iv: Interval) -> dict:
    out = {
        "lo": point_to_json(iv.lo),
        "hi": point_to_json(iv.hi),
        "lo_closed": iv.lo_closed,
        "hi_closed": iv.hi_closed,
    }
    if iv.full_turn:
        out["full_turn"] = True
    return out


def interval_from_json(d) -> Interval:
    return Interval(
        point_from_json(need(d, "lo")),
        point_from_json(need(d, "hi")),
        bool(need(d, "lo_closed")),
        bool(need(d, "hi_closed")),
        bool(d.get("full_turn", False)),
    )


def system_to_json(s: IntervalSystem) -> dict:
    return {
        "n": s.n,
        "blocks": [{"id": list(bid), "intervals": [interval_to_json(iv) for iv in ivs]} for bid, ivs in s.blocks],
    }


def system_from_json(d) -> IntervalSystem:
    blocks = [
        (tuple(need(b, "id")), [interval_from_json(iv) for iv in need(b, "intervals")])
        for b in need(d, "blocks")
    ]
    return IntervalSystem(_int(need(d, "n"), "n"), blocks)


def arc_to_json(x: Arc) -> dict:
    return {"a": point_to_json(x.a), "b": point_to_json(x.b)}


def arc_from_json(d) -> Arc:
    try:
        return Arc(point_from_json(need(d, "a")), point_from_json(need(d, "b")))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def object_to_json(obj: FormalObject) -> dict:
    return {"summands": [arc_to_json(s) for s in obj]}


def object_from_json(d) -> FormalObject:
    if isinstance(d, dict) and "summands" not in d and "a" in d:
        return FormalObject.of(arc_from_json(d))
    return FormalObject(tuple(arc_from_json(s) for s in need(d, "summands")))


def scalar_to_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def scalar_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise FormatError("scalar must be a rational")
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise FormatError(f"bad scalar {v!r}") from None


def morphism_to_json(f: CanonicalMorphism) -> dict:
    return {"src": arc_to_json(f.src), "tgt": arc_to_json(f.tgt), "scalar": scalar_to_json(f.scalar)}


def morphism_from_json(d) -> CanonicalMorphism:
    src, tgt = arc_from_json(need(d, "src")), arc_from_json(need(d, "tgt"))
    scalar = scalar_from_json(d.get("scalar", "1/1"))
    try:
        return CanonicalMorphism(src, tgt, scalar)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def partition_to_json(p: NCPartition) -> dict:
    return {"n": p.n, "blocks": [list(b) for b in p.blocks]}


def partition_from_json(d) -> NCPartition:
    n = _int(need(d, "n"), "n")
    blocks = need(d, "blocks")
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        raise FormatError("blocks must be a list of lists")
    try:
        return NCPartition(n, tuple(tuple(_int(x, "block entry") for x in b) for b in blocks))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def decoration_to_json(d: Decoration) -> dict:
    if d.point is None:
        return {"kind": d.kind}
    return {"kind": d.kind, "point": point_to_json(d.point)}


def decoration_from_json(d) -> Decoration:
    kind = need(d, "kind")
    point = point_from_json(d["point"]) if d.get("point") is not None else None
    try:
        return Decoration(kind, point)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def tstruct_to_json(t: DecoratedNC) -> dict:
    return {"partition": partition_to_json(t.partition), "decoration": [decoration_to_json(d) for d in t.decoration]}


def tstruct_from_json(d) -> DecoratedNC:
    part = partition_from_json(need(d, "partition"))
    decs = tuple(decoration_from_json(x) for x in need(d, "decoration"))
    try:
        return DecoratedNC(part, decs)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def track_to_json(tr: EndpointTrack) -> dict:
    return {"start": point_to_json(tr.start), "mode": tr.mode}


def track_from_json(d) -> EndpointTrack:
    try:
        return EndpointTrack(point_from_json(need(d, "start")), need(d, "mode"))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def thread_to_json(s: ThreadSequence) -> dict:
    return {"t0": track_to_json(s.t0), "t1": track_to_json(s.t1), "offset": s.offset}


def thread_from_json(d) -> ThreadSequence:
    t0, t1 = track_from_json(need(d, "t0")), track_from_json(need(d, "t1"))
    try:
        return ThreadSequence(t0, t1, _int(d.get("offset", 1), "offset"))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def fan_to_json(s: FanSequence) -> dict:
    return {"threads": [thread_to_json(th) for th in s.threads]}


def fan_from_json(d) -> FanSequence:
    if isinstance(d, dict) and "threads" not in d and "t0" in d:
        return FanSequence((thread_from_json(d),))
    return FanSequence(tuple(thread_from_json(x) for x in need(d, "threads")))


def dumps(obj) -> str:
    """Canonical text form: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
