"""The ten-point worked example, shared by several test modules.

The diagrams carry no numeric coordinates, so concrete indices are chosen to match
every stated cyclic relation.
"""
from arcs_completion.category import Arc
from arcs_completion.cyclic import acc, marked
from arcs_completion.sequences import ADV, CONST, EndpointTrack, ThreadSequence
from arcs_completion.tstructure import AT_LEFT, AT_RIGHT, DecoratedNC, NCPartition, in_segment

N = 10
P = NCPartition(N, ((1,), (2, 3, 9), (4,), (5, 6), (7,), (8,), (10,)))
P_COMPLEMENT = NCPartition(N, ((1, 9, 10), (2,), (3, 4, 6, 7, 8), (5,)))

# x = (x1, a3, x3, a4, a6, x6, a7, a8, x9, a10)
T = DecoratedNC(
    P,
    (
        in_segment(1),
        AT_RIGHT,
        in_segment(3),
        AT_LEFT,
        AT_RIGHT,
        in_segment(6),
        AT_LEFT,
        AT_LEFT,
        in_segment(9),
        AT_LEFT,
    ),
)

# right non-degenerate variant: right ends at 2 and 5, marked points elsewhere
T_TILDE = DecoratedNC(
    P,
    tuple(AT_RIGHT if i in (2, 5) else in_segment(i) for i in range(1, N + 1)),
)


def const(i, k):
    return EndpointTrack(marked(i, k), CONST)


def adv(i, k):
    return EndpointTrack(marked(i, k), ADV)


# colimits: F1 -> {a2, a9}, F2 -> {z2, a3}, F3 -> {z3, a6}, F4 -> {z4, z4'}
Z2 = marked(4, 0)
Z3 = marked(6, 0)
Z4, Z4P = marked(4, 1), marked(4, 6)
F1 = ThreadSequence(adv(1, 0), adv(8, 0))
F2 = ThreadSequence(EndpointTrack(Z2, CONST), adv(2, 0))
F3 = ThreadSequence(EndpointTrack(Z3, CONST), adv(5, 0))
F4 = ThreadSequence(EndpointTrack(Z4, CONST), EndpointTrack(Z4P, CONST))
E = ThreadSequence(adv(1, 0), adv(1, 5))

# {z2^(-2), z4^(2)}: in every shift of the coaisle, crosses the colimits of F2 and F4
WITNESS = Arc(marked(4, -2), marked(4, 3))

# morphisms among completed objects: Z = {z, z'}, V = {a2, v}, W = {a2, a9}
SMALL_Z = marked(2, 0)
SMALL_ZP = marked(9, 0)
SMALL_V = marked(3, 0)
OBJ_Z = Arc(SMALL_Z, SMALL_ZP)
OBJ_V = Arc(acc(2), SMALL_V)
OBJ_W = Arc(acc(2), acc(9))
