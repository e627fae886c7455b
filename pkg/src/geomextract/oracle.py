"""Independent brute-force ground truth for induced hypergraphs.

The hypergraph of a set of objects has one hyperedge per arrangement cell:
the set of objects covering that cell. For the classes handled here every
cell boundary is axis-parallel (or one of three fixed directions for plane
triangles), so the covering combinatorics is constant between consecutive
"event" coordinates. Candidate points at all events plus midpoints between
consecutive events therefore witness every cell. That claim is not assumed:
it is tested against dumb dense sampling (see enumerate_hyperedges_dense),
and every returned witness is re-checked with core.depth.

Membership of every supported object is a conjunction of per-axis
conditions, so the grid evaluation factors into per-axis bitmasks whose
intersection at a grid point is exactly the covering set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import core
from .core import (
    Axis,
    Coloring,
    Instance,
    Interval,
    ObjectClass,
    PlaneTriangle,
    Ray,
    Segment,
    SizeCapError,
    triangle_contains,
)

DEFAULT_SIZE_CAP = 60


@dataclass(frozen=True)
class HyperedgeSet:
    """Deduplicated covering sets of size >= 2, one witness point each."""

    edges: dict  # frozenset[int] -> witness point tuple

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda e: (len(e), sorted(e)))

    def pair_edges(self) -> list:
        return [e for e in self.sorted_edges() if len(e) == 2]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ProperVerdict:
    proper: bool
    edge: Optional[frozenset] = None
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class CoverVerdict:
    covered: bool
    point: Optional[tuple] = None
    point_index: Optional[int] = None


# ---------------------------------------------------------------------------
# Candidate coordinates
# ---------------------------------------------------------------------------

def _with_midpoints(values: Iterable[Fraction]) -> list:
    vals = sorted(set(values))
    out = list(vals)
    for a, b in zip(vals, vals[1:]):
        out.append(Fraction(a + b, 2))
    return sorted(out)


def _segment_events(objects: Sequence) -> tuple:
    xs, ys = set(), set()
    for s in objects:
        if s.axis is Axis.HORIZONTAL:
            xs.update((s.lo, s.hi))
            ys.add(s.line)
        else:
            xs.add(s.line)
            ys.update((s.lo, s.hi))
    return xs, ys


def _ray_events(objects: Sequence) -> tuple:
    xs = {r.apex[0] for r in objects}
    ys = {r.apex[1] for r in objects}
    # Sentinels strictly beyond every apex: past them no membership changes,
    # so one representative on each side witnesses the unbounded cells.
    xs.update((min(xs) - 1, max(xs) + 1))
    ys.update((min(ys) - 1, max(ys) + 1))
    return xs, ys


# ---------------------------------------------------------------------------
# Per-axis condition masks
# ---------------------------------------------------------------------------

def _axis_masks_2d(objects: Sequence, xcands: list, ycands: list) -> tuple:
    xmask = [0] * len(xcands)
    ymask = [0] * len(ycands)
    for i, obj in enumerate(objects):
        bit = 1 << i
        if isinstance(obj, Segment):
            if obj.axis is Axis.HORIZONTAL:
                xcond = lambda x, o=obj: o.lo <= x <= o.hi
                ycond = lambda y, o=obj: y == o.line
            else:
                xcond = lambda x, o=obj: x == o.line
                ycond = lambda y, o=obj: o.lo <= y <= o.hi
        else:
            ax, ay = obj.apex
            if obj.orientation == 1:
                xcond = lambda x, v=ax: x >= v
                ycond = lambda y, v=ay: y == v
            elif obj.orientation == 2:
                xcond = lambda x, v=ax: x <= v
                ycond = lambda y, v=ay: y == v
            elif obj.orientation == 3:
                xcond = lambda x, v=ax: x == v
                ycond = lambda y, v=ay: y >= v
            else:
                xcond = lambda x, v=ax: x == v
                ycond = lambda y, v=ay: y <= v
        for k, x in enumerate(xcands):
            if xcond(x):
                xmask[k] |= bit
        for k, y in enumerate(ycands):
            if ycond(y):
                ymask[k] |= bit
    return xmask, ymask


def _mask_members(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


# ---------------------------------------------------------------------------
# Enumeration per class
# ---------------------------------------------------------------------------

def _edges_intervals(objects: Sequence) -> dict:
    cands = _with_midpoints(v for o in objects for v in (o.a, o.b))
    edges: dict = {}
    for x in cands:
        cov = frozenset(i for i, o in enumerate(objects) if o.a <= x <= o.b)
        if len(cov) >= 2 and cov not in edges:
            edges[cov] = (x,)
    return edges


def _edges_2d(objects: Sequence) -> dict:
    if isinstance(objects[0], Ray):
        xs, ys = _ray_events(objects)
    else:
        xs, ys = _segment_events(objects)
    xcands = _with_midpoints(xs)
    ycands = _with_midpoints(ys)
    xmask, ymask = _axis_masks_2d(objects, xcands, ycands)
    edges: dict = {}
    seen = {}
    for kx, mx in enumerate(xmask):
        if not mx:
            continue
        for ky, my in enumerate(ymask):
            m = mx & my
            if m and m not in seen:
                seen[m] = True
                if m.bit_count() >= 2:
                    edges[_mask_members(m)] = (xcands[kx], ycands[ky])
    return edges


def _edges_octants(objects: Sequence) -> dict:
    axes_cands = []
    for d in range(3):
        vals = sorted({o.apex[d] for o in objects})
        cands = _with_midpoints(vals)
        cands.append(vals[-1] + 1)
        axes_cands.append(cands)
    masks = []
    for d in range(3):
        col = []
        for v in axes_cands[d]:
            m = 0
            for i, o in enumerate(objects):
                if o.apex[d] <= v:
                    m |= 1 << i
            col.append(m)
        masks.append(col)
    edges: dict = {}
    seen = {}
    xs, ys, zs = axes_cands
    for kx, mx in enumerate(masks[0]):
        if not mx:
            continue
        for ky, my in enumerate(masks[1]):
            mxy = mx & my
            if not mxy:
                continue
            for kz, mz in enumerate(masks[2]):
                m = mxy & mz
                if m and m not in seen:
                    seen[m] = True
                    if m.bit_count() >= 2:
                        edges[_mask_members(m)] = (xs[kx], ys[ky], zs[kz])
    return edges


def enumerate_triangle_hyperedges(triangles: Sequence[PlaneTriangle]) -> HyperedgeSet:
    """Hyperedges of a plane-triangle arrangement via horizontal slices.

    Slice combinatorics changes only at v = b_i (bottom edges) and
    v = s_j - a_i (a left edge meeting a hypotenuse); between consecutive
    critical values the 1D interval order is constant, so slicing at the
    critical values and their midpoints sees every cell. Each slice at
    height v is a family of closed 1D intervals [a_i, s_i - v].
    """
    crit = set()
    for t in triangles:
        crit.add(t.b)
        for t2 in triangles:
            crit.add(t.s - t2.a)
    vcands = _with_midpoints(crit)
    edges: dict = {}
    for v in vcands:
        active = [
            (i, t.a, t.s - v)
            for i, t in enumerate(triangles)
            if t.b <= v and t.a <= t.s - v
        ]
        if not active:
            continue
        ucands = _with_midpoints(u for _, lo, hi in active for u in (lo, hi))
        for u in ucands:
            cov = frozenset(i for i, lo, hi in active if lo <= u <= hi)
            if len(cov) >= 2 and cov not in edges:
                edges[cov] = (u, v)
    es = HyperedgeSet(edges)
    for edge, (u, v) in edges.items():
        got = frozenset(
            i for i, t in enumerate(triangles) if triangle_contains(t, u, v)
        )
        assert got == edge, "triangle slice witness disagrees with membership"
    return es


def enumerate_hyperedges(
    subject: Union[Instance, Sequence[PlaneTriangle]],
    size_cap: int = DEFAULT_SIZE_CAP,
) -> HyperedgeSet:
    """All covering sets of size >= 2 realized by some point, with witnesses.

    Accepts an Instance of any object class, or a list of PlaneTriangle
    (used internally by the octant pipeline).
    """
    if not isinstance(subject, Instance):
        triangles = list(subject)
        if len(triangles) > size_cap:
            raise SizeCapError(f"{len(triangles)} triangles exceed cap {size_cap}")
        return enumerate_triangle_hyperedges(triangles)

    instance = subject
    if instance.m > size_cap:
        raise SizeCapError(f"{instance.m} objects exceed cap {size_cap}")
    if instance.m == 0:
        return HyperedgeSet({})
    if instance.cls is ObjectClass.INTERVALS:
        edges = _edges_intervals(instance.objects)
    elif instance.cls is ObjectClass.OCTANTS:
        edges = _edges_octants(instance.objects)
    else:
        edges = _edges_2d(instance.objects)
    # Depth consistency: each witness realizes exactly its edge.
    for edge, witness in edges.items():
        n, cov = core.depth(instance, witness)
        assert cov == edge, "oracle witness disagrees with core.depth"
    return HyperedgeSet(edges)


# ---------------------------------------------------------------------------
# Dense sampling (independent completeness baseline)
# ---------------------------------------------------------------------------

def _defining_values(instance: Instance) -> list:
    """Per-axis coordinates appearing in any object definition."""
    dim = instance.cls.dimension
    vals = [set() for _ in range(dim)]
    for obj in instance.objects:
        if isinstance(obj, Interval):
            vals[0].update((obj.a, obj.b))
        elif isinstance(obj, Segment):
            if obj.axis is Axis.HORIZONTAL:
                vals[0].update((obj.lo, obj.hi))
                vals[1].add(obj.line)
            else:
                vals[0].add(obj.line)
                vals[1].update((obj.lo, obj.hi))
        elif isinstance(obj, Ray):
            vals[0].add(obj.apex[0])
            vals[1].add(obj.apex[1])
        else:
            for d in range(3):
                vals[d].add(obj.apex[d])
    return vals


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    import math

    return Fraction(
        math.gcd(a.numerator * b.denominator, b.numerator * a.denominator),
        a.denominator * b.denominator,
    )


def enumerate_hyperedges_dense(
    instance: Instance, max_points: int = 2_000_000
) -> HyperedgeSet:
    """Hyperedges by dense uniform sampling with the naive depth loop.

    Samples each axis on a uniform lattice of step half the gcd of all
    event differences (so every defining coordinate lies on the lattice and
    every open gap of width >= gcd contains a lattice point), extended one
    unit beyond the extremes. Deliberately shares nothing with the
    event-grid enumerator beyond core.depth.
    """
    from functools import reduce

    if instance.m == 0:
        return HyperedgeSet({})
    axes = []
    count = 1
    for vals in _defining_values(instance):
        svals = sorted(vals)
        gaps = [b - a for a, b in zip(svals, svals[1:])]
        step = reduce(_fraction_gcd, gaps) / 2 if gaps else Fraction(1, 2)
        below = -((-1) // step)  # ceil(1 / step) lattice steps past each end
        lo = svals[0] - below * step
        hi = svals[-1] + below * step
        samples = []
        x = lo
        while x <= hi:
            samples.append(x)
            x += step
        axes.append(samples)
        count *= len(samples)
        if count > max_points:
            raise SizeCapError(f"dense sampling would need > {max_points} points")

    edges: dict = {}
    if instance.cls.dimension == 1:
        grid = [(x,) for x in axes[0]]
    elif instance.cls.dimension == 2:
        grid = [(x, y) for x in axes[0] for y in axes[1]]
    else:
        grid = [(x, y, z) for x in axes[0] for y in axes[1] for z in axes[2]]
    for p in grid:
        n, cov = core.depth(instance, p)
        if n >= 2 and cov not in edges:
            edges[cov] = p
    return HyperedgeSet(edges)


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

def check_proper(
    instance: Instance, coloring: Coloring, size_cap: int = DEFAULT_SIZE_CAP
) -> ProperVerdict:
    """Proper iff every enumerated hyperedge sees at least two colors."""
    if len(coloring.colors) != instance.m:
        raise ValueError("coloring is not total over the instance")
    hes = enumerate_hyperedges(instance, size_cap=size_cap)
    for edge in hes.sorted_edges():
        if len({coloring.colors[i] for i in edge}) == 1:
            return ProperVerdict(False, edge, hes.edges[edge])
    return ProperVerdict(True)


def check_cover(instance: Instance, subset: Iterable[int]) -> CoverVerdict:
    """True iff every point of T lies in some object of the subset."""
    chosen = sorted(set(subset))
    for i in chosen:
        if not 0 <= i < instance.m:
            raise IndexError(f"unknown object index {i}")
    objs = [instance.objects[i] for i in chosen]
    for k, p in enumerate(instance.points):
        if not any(core.contains(o, p) for o in objs):
            return CoverVerdict(False, p, k)
    return CoverVerdict(True)
