import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcs_completion import jsonio as J
from arcs_completion.category import Arc, FormalObject, canonical, window_arcs
from arcs_completion.cyclic import Interval, acc, marked
from arcs_completion.sequences import ADV, CONST, EndpointTrack, FanSequence, ThreadSequence
from arcs_completion.tstructure import aisle_system, coaisle_system, decorated_classes

from example_data import F1, F3, P, T

ARCS = window_arcs(3, 4) + [Arc(acc(1), marked(2, 0)), Arc(acc(1), acc(3))]
CLASSES = decorated_classes(3, points=(-2, 0, 5)) + [T]

points = st.one_of(
    st.builds(acc, st.integers(1, 10)),
    st.builds(marked, st.integers(1, 10), st.integers(-10**6, 10**6)),
)


def round_trip(value, enc, dec):
    text = J.dumps(enc(value))
    assert dec(json.loads(text)) == value
    return text


@given(points)
def test_point_round_trip(p):
    round_trip(p, J.point_to_json, J.point_from_json)


@given(points, points, st.booleans(), st.booleans(), st.booleans())
def test_interval_round_trip(lo, hi, a, b, c):
    round_trip(Interval(lo, hi, a, b, c), J.interval_to_json, J.interval_from_json)


@given(st.sampled_from(ARCS))
def test_arc_round_trip(x):
    round_trip(x, J.arc_to_json, J.arc_from_json)


@given(st.lists(st.sampled_from(ARCS), max_size=4))
def test_object_round_trip(xs):
    round_trip(FormalObject(tuple(xs)), J.object_to_json, J.object_from_json)


def test_bare_arc_reads_as_object():
    x = ARCS[0]
    assert J.object_from_json(J.arc_to_json(x)) == FormalObject.of(x)


@given(st.sampled_from(ARCS), st.sampled_from(ARCS), st.fractions(min_value=-5, max_value=5))
def test_morphism_round_trip(x, y, q):
    round_trip(canonical(x, y, q), J.morphism_to_json, J.morphism_from_json)


@given(st.fractions())
def test_scalar_round_trip(q):
    assert J.scalar_from_json(J.scalar_to_json(q)) == q


@given(st.sampled_from(CLASSES))
def test_tstruct_round_trip(t):
    round_trip(t, J.tstruct_to_json, J.tstruct_from_json)
    round_trip(t.partition, J.partition_to_json, J.partition_from_json)


@given(st.sampled_from(CLASSES), st.integers(-3, 3))
def test_system_round_trip(t, p):
    round_trip(aisle_system(t, p), J.system_to_json, J.system_from_json)
    round_trip(coaisle_system(t, p), J.system_to_json, J.system_from_json)


@given(
    st.builds(marked, st.integers(1, 3), st.integers(-5, 5)),
    st.sampled_from([CONST, ADV]),
    st.builds(marked, st.integers(1, 3), st.integers(-5, 5)),
    st.sampled_from([CONST, ADV]),
    st.integers(1, 20),
)
def test_thread_and_fan_round_trip(a, ma, b, mb, offset):
    try:
        th = ThreadSequence(EndpointTrack(a, ma), EndpointTrack(b, mb), offset)
    except ValueError:
        return
    round_trip(th, J.thread_to_json, J.thread_from_json)
    fan = FanSequence((th, F1))
    round_trip(fan, J.fan_to_json, J.fan_from_json)


def test_bare_thread_reads_as_fan():
    assert J.fan_from_json(J.thread_to_json(F3)) == FanSequence((F3,))


def test_canonical_text():
    text = J.dumps({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert J.dumps(J.partition_to_json(P)) == J.dumps(J.partition_to_json(P))


@pytest.mark.parametrize(
    "decoder,doc",
    [
        (J.point_from_json, {"kind": "marked", "segment": 1}),
        (J.point_from_json, {"kind": "star", "segment": 1}),
        (J.point_from_json, {"kind": "acc", "segment": "one"}),
        (J.point_from_json, {"kind": "acc", "segment": True}),
        (J.point_from_json, [1, 2]),
        (J.arc_from_json, {"a": {"kind": "marked", "segment": 1, "index": 0}, "b": {"kind": "marked", "segment": 1, "index": 1}}),
        (J.scalar_from_json, "1/0"),
        (J.scalar_from_json, True),
        (J.scalar_from_json, "half"),
        (J.partition_from_json, {"n": 4, "blocks": [[1, 3], [2, 4]]}),
        (J.partition_from_json, {"n": 4, "blocks": [1, 2]}),
        (J.decoration_from_json, {"kind": "middle"}),
        (J.track_from_json, {"start": {"kind": "acc", "segment": 1}, "mode": "adv"}),
        (J.thread_from_json, {"t0": {"start": {"kind": "marked", "segment": 1, "index": 0}, "mode": "const"},
                              "t1": {"start": {"kind": "marked", "segment": 1, "index": 1}, "mode": "const"}}),
        (
            J.morphism_from_json,
            {
                "src": {"a": {"kind": "marked", "segment": 1, "index": 0}, "b": {"kind": "marked", "segment": 1, "index": 3}},
                "tgt": {"a": {"kind": "marked", "segment": 1, "index": 5}, "b": {"kind": "marked", "segment": 1, "index": 9}},
                "scalar": "1/1",
            },
        ),
        (J.tstruct_from_json, {"partition": {"n": 2, "blocks": [[1], [2]]}, "decoration": [{"kind": "left"}]}),
    ],
)
def test_malformed_documents(decoder, doc):
    with pytest.raises(J.FormatError):
        decoder(doc)


def test_scalar_forms():
    assert J.scalar_from_json("3/6") == Fraction(1, 2)
    assert J.scalar_from_json(2) == 2
    assert J.scalar_to_json(Fraction(-2, 4)) == "-1/2"
