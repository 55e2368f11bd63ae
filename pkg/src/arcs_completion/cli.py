"""Command line entry point.

Every command reads one JSON document (a file argument or stdin) and writes
JSON, or SVG for ``render``.  Exit status: 0 success, 1 domain error or
malformed input, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import jsonio as J
from .category import compose, cone, hom_dim, suspend, suspend_object
from .completion import (
    completion_member,
    compose_completed_nonzero,
    cone_completed,
    hom_completed_dim,
    realize_as_fan,
)
from .cyclic import check_point
from .render import Scene, render_svg
from .sequences import (
    MetricSpec,
    as_fan,
    ball_member,
    is_cauchy_fan,
    is_compactly_supported_fan,
    mocolim_thread,
    morphism_length,
)
from .tstructure import (
    aisle_system,
    coaisle_member,
    aisle_member,
    coaisle_system,
    decoration_valid,
    is_right_nondegenerate,
    kreweras,
    largest_aisle_in_coaisle,
    tstructs_equivalent,
)


class DomainError(ValueError):
    pass


def _load(path):
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _n(doc, args, t=None):
    if t is not None:
        return t.n
    if args.n is not None:
        return args.n
    if isinstance(doc, dict) and "n" in doc:
        return doc["n"]
    raise DomainError("the accumulation point count is needed: pass --n or an 'n' field")


def _check_arcs(n, *arcs):
    for x in arcs:
        for p in x.endpoints:
            check_point(p, n)


def _tstruct(doc, key="t"):
    t = J.tstruct_from_json(J.need(doc, key))
    if not decoration_valid(t):
        raise DomainError("decoration violates the singleton/adjacency rules")
    return t


def _metric(doc):
    return MetricSpec(doc.get("kind", "coaisle"), _tstruct(doc))


def cmd_hom(doc, args):
    x, y = J.arc_from_json(J.need(doc, "x")), J.arc_from_json(J.need(doc, "y"))
    _check_arcs(_n(doc, args), x, y)
    return {"dim": hom_dim(x, y)}


def cmd_compose(doc, args):
    f, g = J.morphism_from_json(J.need(doc, "f")), J.morphism_from_json(J.need(doc, "g"))
    _check_arcs(_n(doc, args), f.src, f.tgt, g.src, g.tgt)
    return J.morphism_to_json(compose(f, g))


def cmd_cone(doc, args):
    f = J.morphism_from_json(J.need(doc, "f"))
    _check_arcs(_n(doc, args), f.src, f.tgt)
    return J.object_to_json(cone(f))


def cmd_suspend(doc, args):
    times = doc.get("times", 1)
    if "arc" in doc:
        x = J.arc_from_json(doc["arc"])
        _check_arcs(_n(doc, args), x)
        return J.arc_to_json(suspend(x, times))
    obj = J.object_from_json(J.need(doc, "object"))
    _check_arcs(_n(doc, args), *obj)
    return J.object_to_json(suspend_object(obj, times))


def cmd_tstruct_check(doc, args):
    t = J.tstruct_from_json(J.need(doc, "t"))
    valid = decoration_valid(t)
    return {"valid": valid, "right_nondegenerate": valid and is_right_nondegenerate(t)}


def cmd_tstruct_kreweras(doc, args):
    part = J.partition_from_json(doc.get("partition", doc))
    return J.partition_to_json(kreweras(part))


def cmd_tstruct_member(doc, args):
    t = _tstruct(doc)
    obj = J.object_from_json(doc["arc"] if "arc" in doc else J.need(doc, "object"))
    _check_arcs(t.n, *obj)
    side, shift = doc.get("side", "aisle"), doc.get("shift", 0)
    if side == "aisle":
        return {"member": aisle_member(obj, t, shift)}
    if side == "coaisle":
        return {"member": coaisle_member(obj, t, shift)}
    raise DomainError(f"unknown side {side!r}")


def cmd_tstruct_largest(doc, args):
    return {"t": J.tstruct_to_json(largest_aisle_in_coaisle(_tstruct(doc)))}


def cmd_tstruct_equiv(doc, args):
    return {"equivalent": tstructs_equivalent(_tstruct(doc, "t1"), _tstruct(doc, "t2"))}


def cmd_metric_length(doc, args):
    m = _metric(doc)
    f = J.morphism_from_json(J.need(doc, "f"))
    _check_arcs(m.t.n, f.src, f.tgt)
    length = morphism_length(f, m, args.tmax)
    return {"length": J.scalar_to_json(length.value), "exact": length.exact}


def cmd_metric_ball(doc, args):
    m = _metric(doc)
    obj = J.object_from_json(doc["arc"] if "arc" in doc else J.need(doc, "object"))
    _check_arcs(m.t.n, *obj)
    return {"member": ball_member(m, doc.get("radius", 1), obj)}


def _fan_doc(doc, t):
    fan = J.fan_from_json(J.need(doc, "fan"))
    for th in fan.threads:
        check_point(th.t0.start, t.n)
        check_point(th.t1.start, t.n)
    return fan


def cmd_fan_cauchy(doc, args):
    t = _tstruct(doc)
    return {"cauchy": is_cauchy_fan(_fan_doc(doc, t), t)}


def cmd_fan_support(doc, args):
    t = _tstruct(doc)
    return {"supported": is_compactly_supported_fan(_fan_doc(doc, t), t)}


def cmd_fan_colimit(doc, args):
    n = _n(doc, args, _tstruct(doc) if "t" in doc else None)
    fan = J.fan_from_json(J.need(doc, "fan"))
    lims = [mocolim_thread(th, n) for th in fan.threads]
    return {"colimits": [None if x is None else J.arc_to_json(x) for x in lims]}


def cmd_fan_cone(doc, args):
    fan = as_fan(J.fan_from_json(J.need(doc, "fan")))
    m = doc.get("m", fan.first)
    m2 = doc.get("m2", m + 1)
    if not fan.first <= m < m2:
        raise DomainError("need first <= m < m2")
    return J.object_to_json(fan.cone(m, m2))


def _completed(doc, key, t):
    x = J.arc_from_json(J.need(doc, key))
    _check_arcs(t.n, x)
    return x


def cmd_complete_member(doc, args):
    t = _tstruct(doc)
    block = completion_member(_completed(doc, "arc", t), t)
    return {"block": None if block is None else list(block)}


def cmd_complete_hom(doc, args):
    t = _tstruct(doc)
    x, y = _completed(doc, "x", t), _completed(doc, "y", t)
    bx, by = completion_member(x, t), completion_member(y, t)
    if bx is None or by is None:
        raise DomainError("both arcs must lie in the completion")
    return {"dim": hom_completed_dim(x, y) if bx == by else 0}


def cmd_complete_compose(doc, args):
    t = _tstruct(doc)
    x, y, z = (_completed(doc, k, t) for k in ("x", "y", "z"))
    if hom_completed_dim(x, y) == 0 or hom_completed_dim(y, z) == 0:
        raise DomainError("both maps must be nonzero")
    return {"nonzero": compose_completed_nonzero(x, y, z)}


def cmd_complete_cone(doc, args):
    t = _tstruct(doc)
    x, y = _completed(doc, "x", t), _completed(doc, "y", t)
    return J.object_to_json(cone_completed(x, y))


def cmd_complete_fan(doc, args):
    n = _n(doc, args, _tstruct(doc) if "t" in doc else None)
    x = J.arc_from_json(J.need(doc, "arc"))
    _check_arcs(n, x)
    return J.fan_to_json(realize_as_fan(x, n))


def _scene(doc, args):
    n = _n(doc, args)
    window = doc.get("window", args.window)
    layers = []
    for layer in J.need(doc, "layers"):
        style = J.need(layer, "style")
        if style == "arcs":
            arcs = [J.arc_from_json(a) for a in J.need(layer, "arcs")]
            _check_arcs(n, *arcs)
            layers.append(("arcs", tuple(arcs)))
        elif style in ("aisle", "coaisle"):
            t = _tstruct(layer)
            make = aisle_system if style == "aisle" else coaisle_system
            layers.append(("region", make(t, layer.get("shift", 0))))
        elif style == "region":
            layers.append(("region", J.system_from_json(J.need(layer, "system"))))
        elif style == "fan":
            layers.append(("fan", J.fan_from_json(J.need(layer, "fan"))))
        elif style == "completion":
            layers.append(("completion", _tstruct(layer)))
        else:
            raise DomainError(f"unknown layer style {style!r}")
    return Scene(n, window, tuple(layers))


def cmd_render(doc, args):
    return render_svg(_scene(doc, args))


COMMANDS = {
    ("hom",): cmd_hom,
    ("compose",): cmd_compose,
    ("cone",): cmd_cone,
    ("suspend",): cmd_suspend,
    ("tstruct", "check"): cmd_tstruct_check,
    ("tstruct", "kreweras"): cmd_tstruct_kreweras,
    ("tstruct", "member"): cmd_tstruct_member,
    ("tstruct", "largest-aisle"): cmd_tstruct_largest,
    ("tstruct", "equiv"): cmd_tstruct_equiv,
    ("metric", "length"): cmd_metric_length,
    ("metric", "ball"): cmd_metric_ball,
    ("fan", "cauchy"): cmd_fan_cauchy,
    ("fan", "support"): cmd_fan_support,
    ("fan", "colimit"): cmd_fan_colimit,
    ("fan", "cone"): cmd_fan_cone,
    ("complete", "member"): cmd_complete_member,
    ("complete", "hom"): cmd_complete_hom,
    ("complete", "compose"): cmd_complete_compose,
    ("complete", "cone"): cmd_complete_cone,
    ("complete", "fan"): cmd_complete_fan,
    ("render",): cmd_render,
}


def _common(p):
    p.add_argument("input", nargs="?", default="-", help="JSON input file (default: stdin)")
    p.add_argument("--n", type=int, default=None, help="number of accumulation points")
    p.add_argument("--window", type=int, default=8, help="index window W (default 8)")
    p.add_argument("--tmax", type=int, default=5, help="radius search bound T (default 5)")
    p.add_argument("--out", default=None, help="write output here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="arcs-completion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    groups = {}
    for key in COMMANDS:
        if len(key) == 1:
            p = sub.add_parser(key[0])
            _common(p)
            p.set_defaults(key=key)
        else:
            if key[0] not in groups:
                g = sub.add_parser(key[0])
                groups[key[0]] = g.add_subparsers(dest="action", required=True)
            p = groups[key[0]].add_parser(key[1])
            _common(p)
            p.set_defaults(key=key)
    return parser


def _emit(text, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _load(args.input)
    except json.JSONDecodeError as exc:
        sys.stdout.write(J.dumps({"error": {"type": "malformed_json", "message": str(exc)}}))
        return 1
    except OSError as exc:
        sys.stdout.write(J.dumps({"error": {"type": "io", "message": str(exc)}}))
        return 1
    try:
        if not isinstance(doc, dict):
            raise J.FormatError("top-level JSON value must be an object")
        result = COMMANDS[args.key](doc, args)
    except J.FormatError as exc:
        sys.stdout.write(J.dumps({"error": {"type": "format", "message": str(exc)}}))
        return 1
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        sys.stdout.write(J.dumps({"error": {"type": "domain", "message": str(exc)}}))
        return 1
    _emit(result if isinstance(result, str) else J.dumps(result), args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
