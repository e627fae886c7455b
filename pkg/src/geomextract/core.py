"""Exact geometric primitives shared by every other module.

All coordinates and weights are `fractions.Fraction` values; every predicate
is an exact rational comparison, so there is no tolerance anywhere. All
object classes are closed sets (endpoints and apexes included), which makes
touching objects intersect.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

Point = tuple  # tuple of Fraction, length 1, 2 or 3


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class GeomExtractError(Exception):
    """Base class for all package-specific errors."""


class ParseError(GeomExtractError, ValueError):
    """Malformed instance or coloring document."""


class ClassMismatchError(GeomExtractError, ValueError):
    """Object, point or instance used with the wrong object class."""


class SizeCapError(GeomExtractError, RuntimeError):
    """Instance exceeds the size cap of an exact (exponential) procedure."""


class AlgorithmInvariantError(GeomExtractError, RuntimeError):
    """An invariant the algorithm's correctness argument relies on failed.

    Never swallowed: carrying the witness makes the failure reportable.
    """

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class ImproperColoringError(GeomExtractError, ValueError):
    """A coloring supplied from outside turned out not to be proper."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class NoFourColoringError(GeomExtractError, RuntimeError):
    """Exhaustive search found no proper 4-coloring; carries the objects."""

    def __init__(self, message: str, objects: Any = None):
        super().__init__(message)
        self.objects = objects


class DepthPreconditionError(GeomExtractError, ValueError):
    """A target point is not covered at least twice."""

    def __init__(self, message: str, point: Any = None):
        super().__init__(message)
        self.point = point


class UncoverablePointError(GeomExtractError, ValueError):
    """A target point is covered by no object at all."""

    def __init__(self, message: str, point: Any = None):
        super().__init__(message)
        self.point = point


class UnboundedExtractionError(GeomExtractError, RuntimeError):
    """The minimum cover takes all weight, so no extraction factor exists."""


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Parse an exact rational from an int, a Fraction, or a "p/q" string.

    Floats are rejected: accepting them would silently break the exactness
    contract.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value.strip()):
            raise ParseError(f"not a rational: {value!r}")
        return Fraction(value.strip())
    raise ParseError(f"not a rational: {value!r}")


def rational_repr(value: Fraction) -> Union[int, str]:
    """Canonical document form: plain int when integral, else "p/q"."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# Object classes
# ---------------------------------------------------------------------------

class ObjectClass(Enum):
    INTERVALS = "intervals"
    SEGMENTS = "segments"
    RAYS = "rays"
    OCTANTS = "octants"

    @property
    def dimension(self) -> int:
        return {"intervals": 1, "segments": 2, "rays": 2, "octants": 3}[self.value]


class Axis(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class Interval:
    """Closed interval [a, b] on the line, a < b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError(f"degenerate interval: [{self.a}, {self.b}]")


@dataclass(frozen=True)
class Segment:
    """Closed axis-parallel segment.

    `line` is the shared y for horizontal segments and the shared x for
    vertical ones; [lo, hi] is the extent along the other axis, lo < hi.
    """

    axis: Axis
    line: Fraction
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"degenerate segment: [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Ray:
    """Closed axis-parallel ray.

    Orientation 1: along +x, 2: along -x, 3: along +y, 4: along -y,
    always starting at (and including) the apex.
    """

    orientation: int
    apex: tuple

    def __post_init__(self):
        if self.orientation not in (1, 2, 3, 4):
            raise ValueError(f"bad ray orientation: {self.orientation}")
        if len(self.apex) != 2:
            raise ValueError("ray apex must be a 2D point")


@dataclass(frozen=True)
class Octant:
    """The closed region {x >= a, y >= b, z >= c} toward (+inf,+inf,+inf)."""

    apex: tuple

    def __post_init__(self):
        if len(self.apex) != 3:
            raise ValueError("octant apex must be a 3D point")


@dataclass(frozen=True)
class PlaneTriangle:
    """Projection of an octant: {u >= a, v >= b, u + v <= s} in the plane.

    Using (u, v) = (x, y) with z eliminated keeps all coordinates rational;
    the triangles are homothets with identical orientation. Nonempty when
    a + b <= s (a single point when equal).
    """

    a: Fraction
    b: Fraction
    s: Fraction

    def __post_init__(self):
        if self.a + self.b > self.s:
            raise ValueError("empty plane triangle")


GeomObject = Union[Interval, Segment, Ray, Octant]

_CLASS_OF_TYPE = {
    Interval: ObjectClass.INTERVALS,
    Segment: ObjectClass.SEGMENTS,
    Ray: ObjectClass.RAYS,
    Octant: ObjectClass.OCTANTS,
}


def class_of(obj: GeomObject) -> ObjectClass:
    try:
        return _CLASS_OF_TYPE[type(obj)]
    except KeyError:
        raise ClassMismatchError(f"not a geometric object: {obj!r}") from None


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------

def contains(obj: GeomObject, p: Point) -> bool:
    """Exact closed-set membership of point p in obj."""
    cls = class_of(obj)
    if len(p) != cls.dimension:
        raise ClassMismatchError(
            f"{cls.value} expect {cls.dimension}D points, got {len(p)}D"
        )
    if isinstance(obj, Interval):
        return obj.a <= p[0] <= obj.b
    if isinstance(obj, Segment):
        x, y = p
        if obj.axis is Axis.HORIZONTAL:
            return y == obj.line and obj.lo <= x <= obj.hi
        return x == obj.line and obj.lo <= y <= obj.hi
    if isinstance(obj, Ray):
        x, y = p
        ax, ay = obj.apex
        if obj.orientation == 1:
            return y == ay and x >= ax
        if obj.orientation == 2:
            return y == ay and x <= ax
        if obj.orientation == 3:
            return x == ax and y >= ay
        return x == ax and y <= ay
    a, b, c = obj.apex
    return p[0] >= a and p[1] >= b and p[2] >= c


def triangle_contains(t: PlaneTriangle, u: Fraction, v: Fraction) -> bool:
    return u >= t.a and v >= t.b and u + v <= t.s


# ---------------------------------------------------------------------------
# Instances and colorings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    """A list of same-class objects, positive weights, and target points T."""

    cls: ObjectClass
    objects: tuple
    weights: tuple
    points: tuple
    meta: Any = field(default=None, compare=False)

    def __post_init__(self):
        for obj in self.objects:
            if class_of(obj) is not self.cls:
                raise ClassMismatchError(
                    f"object {obj!r} does not belong to class {self.cls.value}"
                )
        if len(self.weights) != len(self.objects):
            raise ValueError("weights must align with objects")
        for w in self.weights:
            if not isinstance(w, Fraction) or w <= 0:
                raise ValueError(f"weights must be positive rationals, got {w!r}")
        for p in self.points:
            if len(p) != self.cls.dimension:
                raise ClassMismatchError(
                    f"point {p!r} has wrong dimension for {self.cls.value}"
                )

    @property
    def m(self) -> int:
        return len(self.objects)

    def indices(self) -> range:
        return range(len(self.objects))


def make_instance(
    cls: ObjectClass,
    objects: Sequence[GeomObject],
    weights: Sequence[Fraction] | None = None,
    points: Sequence[Point] = (),
    meta: Any = None,
) -> Instance:
    """Build an Instance; weights default to 1 per object."""
    objs = tuple(objects)
    if weights is None:
        ws = tuple(Fraction(1) for _ in objs)
    else:
        ws = tuple(weights)
    return Instance(cls, objs, ws, tuple(tuple(p) for p in points), meta)


@dataclass(frozen=True)
class Coloring:
    """Total color assignment, colors[i] in {1..kappa}."""

    colors: tuple
    kappa: int

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be positive")
        for c in self.colors:
            if not 1 <= c <= self.kappa:
                raise ValueError(f"color {c} outside 1..{self.kappa}")

    def color_of(self, index: int) -> int:
        return self.colors[index]

    def color_classes(self) -> dict:
        """Map color -> sorted list of indices with that color."""
        classes: dict = {c: [] for c in range(1, self.kappa + 1)}
        for i, c in enumerate(self.colors):
            classes[c].append(i)
        return classes

    def used_colors(self) -> set:
        return set(self.colors)


# ---------------------------------------------------------------------------
# Depth and weight
# ---------------------------------------------------------------------------

def depth(instance: Instance, p: Point) -> tuple:
    """Return (|o(p)|, o(p)): how many and which objects contain p."""
    if len(p) != instance.cls.dimension:
        raise ClassMismatchError(
            f"point {p!r} has wrong dimension for {instance.cls.value}"
        )
    covering = frozenset(
        i for i, obj in enumerate(instance.objects) if contains(obj, p)
    )
    return len(covering), covering


def total_weight(instance: Instance, subset: Iterable[int]) -> Fraction:
    """Exact sum of weights over subset; empty subset sums to 0."""
    total = Fraction(0)
    for i in subset:
        if not 0 <= i < len(instance.objects):
            raise IndexError(f"unknown object index {i}")
        total += instance.weights[i]
    return total
