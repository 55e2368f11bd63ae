"""Discrete cluster categories of type A with N accumulation points, their
t-structures, metrics from them, and the completions those metrics give."""

from .category import (
    Arc,
    CanonicalMorphism,
    FormalObject,
    canonical,
    compose,
    cone,
    crosses,
    hom_dim,
    suspend,
)
from .cyclic import BoundaryPoint, Interval, IntervalSystem, acc, marked
from .tstructure import AT_LEFT, AT_RIGHT, DecoratedNC, NCPartition, in_segment, kreweras

__version__ = "0.1.0"
