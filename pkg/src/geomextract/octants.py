"""Proper 4-coloring of octants toward (+inf,+inf,+inf).

Pipeline: discard dominated octants (an octant dominates another when it
contains it, i.e. its apex is coordinatewise smaller), project the
nondominated ones onto the plane x+y+z = c_max as homothetic right
triangles, color, and give each dominated octant a color different from its
chosen dominator.

The projected triangles intersect pairwise by the choice of c_max, but a
point can be covered by exactly two octants somewhere off that plane while
their triangles' common region is hidden under other triangles on it. A
coloring proper merely for the triangle arrangement can therefore leave such
an off-plane cell monochromatic (random antichains exhibit this). The
coloring search is hence constrained by the full arrangement hypergraph of
the nondominated octants, of which the triangle hypergraph is a subset; the
returned coloring is finally verified proper on the whole instance and the
module errors rather than return anything unverified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .core import (
    AlgorithmInvariantError,
    ClassMismatchError,
    Coloring,
    Instance,
    NoFourColoringError,
    ObjectClass,
    Octant,
    PlaneTriangle,
    SizeCapError,
)
from . import oracle

DEFAULT_SIZE_CAP = 40


@dataclass(frozen=True)
class DominationDAG:
    """Nondominated indices plus a chosen nondominated dominator for the rest."""

    nondominated: tuple
    dominator_of: dict  # dominated index -> nondominated dominator index


def _dominates(oi: Octant, oj: Octant, i: int, j: int) -> bool:
    """O_i contains O_j; duplicate apexes resolve to the lower index."""
    ai, bi, ci = oi.apex
    aj, bj, cj = oj.apex
    if not (ai <= aj and bi <= bj and ci <= cj):
        return False
    return oi.apex != oj.apex or i < j


def compute_domination(octants: Sequence[Octant]) -> DominationDAG:
    """Quadratic pairwise comparison; dominator_of picks the lowest index."""
    if not octants:
        raise ValueError("no octants")
    n = len(octants)
    nondominated = [
        j
        for j in range(n)
        if not any(_dominates(octants[i], octants[j], i, j) for i in range(n) if i != j)
    ]
    nd_set = set(nondominated)
    dominator_of: Dict[int, int] = {}
    for j in range(n):
        if j in nd_set:
            continue
        dominator_of[j] = min(
            i for i in nondominated if _dominates(octants[i], octants[j], i, j)
        )
    return DominationDAG(tuple(nondominated), dominator_of)


def compute_cmax(octants: Sequence[Octant]) -> Fraction:
    """Largest pairwise c_ij = max(a_i,a_j) + max(b_i,b_j) + max(c_i,c_j).

    A single octant degenerates to a+b+c+1 so its triangle has full
    dimension.
    """
    if not octants:
        raise ValueError("no octants")
    if len(octants) == 1:
        a, b, c = octants[0].apex
        return a + b + c + 1
    best = None
    for i in range(len(octants)):
        ai, bi, ci = octants[i].apex
        for j in range(i + 1, len(octants)):
            aj, bj, cj = octants[j].apex
            v = max(ai, aj) + max(bi, bj) + max(ci, cj)
            best = v if best is None else max(best, v)
    return best


def project(octants: Sequence[Octant], c_max: Fraction) -> List[PlaneTriangle]:
    """Triangles {u >= a_i, v >= b_i, u+v <= c_max - c_i} of a nondominated set.

    Asserts the two facts the construction guarantees: every pair of
    triangles intersects (c_ij <= c_max) and none contains another
    (nondominance).
    """
    triangles = []
    for o in octants:
        a, b, c = o.apex
        if a + b + c > c_max:
            raise AlgorithmInvariantError(
                "octant apex above the projection plane", witness=o
            )
        triangles.append(PlaneTriangle(a, b, c_max - c))
    for i in range(len(triangles)):
        ti = triangles[i]
        for j in range(i + 1, len(triangles)):
            tj = triangles[j]
            assert max(ti.a, tj.a) + max(ti.b, tj.b) <= min(ti.s, tj.s), (
                "projected triangles fail to intersect pairwise"
            )
            for t1, t2 in ((ti, tj), (tj, ti)):
                assert not (
                    t1.a >= t2.a and t1.b >= t2.b and t1.s <= t2.s
                ), "a projected triangle contains another"
    return triangles


# ---------------------------------------------------------------------------
# Coloring search: greedy on the pair graph, exact backtracking fallback
# ---------------------------------------------------------------------------

def _degeneracy_order(n: int, adjacency: List[set]) -> List[int]:
    """Repeatedly remove a minimum-degree vertex; ties to the lowest index."""
    degree = [len(adjacency[v]) for v in range(n)]
    alive = set(range(n))
    removed = []
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        alive.remove(v)
        removed.append(v)
        for u in adjacency[v]:
            if u in alive:
                degree[u] -= 1
    return removed


def _proper_on(edges: Iterable[frozenset], colors: List[int]) -> bool:
    return all(len({colors[i] for i in e}) >= 2 for e in edges)


def _search_coloring(
    n: int, edges: List[frozenset], max_colors: int = 4
) -> Optional[List[int]]:
    """A coloring with <= max_colors making every edge non-monochromatic.

    Greedy coloring along a degeneracy order of the size-2 edge graph first;
    if that leaves a monochromatic edge or spills over max_colors, exact
    backtracking over all colorings pruned by the size-2 edges and checked
    against every edge.
    """
    if n == 0:
        return []
    adjacency: List[set] = [set() for _ in range(n)]
    for e in edges:
        if len(e) == 2:
            a, b = sorted(e)
            adjacency[a].add(b)
            adjacency[b].add(a)

    order = _degeneracy_order(n, adjacency)
    colors = [0] * n
    for v in reversed(order):
        taken = {colors[u] for u in adjacency[v] if colors[u]}
        c = next(c for c in range(1, n + 2) if c not in taken)
        colors[v] = c
    if max(colors) <= max_colors and _proper_on(edges, colors):
        return colors

    # Exact fallback. Edges fully colored by a prefix of the order are
    # checked as soon as their last vertex is placed.
    pos = {v: k for k, v in enumerate(reversed(order))}
    sequence = list(reversed(order))
    edge_tuples = [tuple(e) for e in edges]
    by_last: List[List[tuple]] = [[] for _ in range(n)]
    for e in edge_tuples:
        by_last[max(pos[v] for v in e)].append(e)
    colors = [0] * n

    def feasible(k: int) -> bool:
        for e in by_last[k]:
            if len({colors[v] for v in e}) == 1:
                return False
        return True

    def rec(k: int, used: int) -> bool:
        if k == n:
            return True
        v = sequence[k]
        for c in range(1, min(max_colors, used + 1) + 1):
            if len(adjacency[v]) and any(
                colors[u] == c for u in adjacency[v]
            ):
                # two-vertex edges are monochromatic exactly on equality
                continue
            colors[v] = c
            if feasible(k) and rec(k + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    if rec(0, 0):
        return colors
    return None


def color_triangles(
    triangles: Sequence[PlaneTriangle],
    extra_edges: Iterable[frozenset] = (),
    size_cap: int = DEFAULT_SIZE_CAP,
) -> Coloring:
    """Coloring with <= 4 colors proper on the triangle hypergraph.

    extra_edges adds hyperedges (index sets) the coloring must also keep
    non-monochromatic; the octant pipeline passes the off-plane cells here.
    Exhausted search raises NoFourColoringError carrying the triangles: that
    would be a reportable counterexample, not an instance to mis-color.
    """
    triangles = list(triangles)
    if len(triangles) > size_cap:
        raise SizeCapError(f"{len(triangles)} triangles exceed cap {size_cap}")
    if not triangles:
        return Coloring((), 4)
    tri_edges = oracle.enumerate_triangle_hyperedges(triangles).edge_set
    edges = sorted(tri_edges | set(extra_edges), key=lambda e: (len(e), sorted(e)))
    colors = _search_coloring(len(triangles), edges, max_colors=4)
    if colors is None:
        raise NoFourColoringError(
            "no proper 4-coloring found by exhaustive search", objects=triangles
        )
    return Coloring(tuple(colors), 4)


def color_octants(instance: Instance, size_cap: int = DEFAULT_SIZE_CAP) -> Coloring:
    """Proper 4-coloring of an octant instance, oracle-verified before return."""
    if instance.cls is not ObjectClass.OCTANTS:
        raise ClassMismatchError(f"expected octants, got {instance.cls.value}")
    if instance.m > size_cap:
        raise SizeCapError(f"{instance.m} octants exceed cap {size_cap}")
    if instance.m == 0:
        return Coloring((), 4)

    dag = compute_domination(instance.objects)
    kept = [instance.objects[i] for i in dag.nondominated]
    c_max = compute_cmax(kept)
    triangles = project(kept, c_max)

    sub = Instance(
        ObjectClass.OCTANTS,
        tuple(kept),
        tuple(instance.weights[i] for i in dag.nondominated),
        (),
    )
    cell_edges = oracle.enumerate_hyperedges(sub, size_cap=size_cap).edge_set
    sub_coloring = color_triangles(triangles, extra_edges=cell_edges)

    colors = [0] * instance.m
    for local, original in enumerate(dag.nondominated):
        colors[original] = sub_coloring.colors[local]
    for dominated, dominator in sorted(dag.dominator_of.items()):
        colors[dominated] = next(
            c for c in range(1, 5) if c != colors[dominator]
        )

    coloring = Coloring(tuple(colors), 4)
    verdict = oracle.check_proper(instance, coloring, size_cap=size_cap)
    if not verdict.proper:
        raise AlgorithmInvariantError(
            "octant coloring failed final properness verification",
            witness=verdict.witness,
        )
    return coloring
