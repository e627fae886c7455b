"""Turning proper colorings into covers, and exact ground-truth optima.

extract() drops the heaviest color class: whenever every target point is
covered at least twice and the coloring is proper, the remaining objects
still cover everything and the removed weight is at least W/kappa (the
maximum class is at least the mean). The cover is verified before anything
is returned.

The exact routines are desk-scale solvers used as oracles for the tightness
instances: minimum-weight cover of the target points, the exact extraction
number W / (W - mincover) it induces, and the exact proper chromatic number
of the induced hypergraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

from . import core, oracle
from .core import (
    AlgorithmInvariantError,
    Coloring,
    DepthPreconditionError,
    ImproperColoringError,
    Instance,
    SizeCapError,
    UnboundedExtractionError,
    UncoverablePointError,
    total_weight,
)
from .octants import _search_coloring

DEFAULT_COVER_CAP = 40
DEFAULT_CHROMATIC_CAP = 20


@dataclass(frozen=True)
class ExtractionResult:
    sol: frozenset  # the cover
    extracted: frozenset  # the removed color class
    extracted_weight: Fraction
    ratio: Fraction  # W(all) / extracted_weight
    kappa: int


def extract(instance: Instance, coloring: Coloring) -> ExtractionResult:
    """Remove the heaviest color class; verify the rest still covers T."""
    if instance.m == 0:
        raise ValueError("cannot extract from an empty instance")
    if len(coloring.colors) != instance.m:
        raise ValueError("coloring is not total over the instance")
    for p in instance.points:
        n, _ = core.depth(instance, p)
        if n < 2:
            raise DepthPreconditionError(
                f"target point {p} has depth {n} < 2", point=p
            )

    class_weight: Dict[int, Fraction] = {
        c: Fraction(0) for c in range(1, coloring.kappa + 1)
    }
    for i, c in enumerate(coloring.colors):
        class_weight[c] += instance.weights[i]
    best_color = max(
        class_weight, key=lambda c: (class_weight[c], -c)
    )

    extracted = frozenset(
        i for i, c in enumerate(coloring.colors) if c == best_color
    )
    sol = frozenset(instance.indices()) - extracted
    verdict = oracle.check_cover(instance, sol)
    if not verdict.covered:
        raise ImproperColoringError(
            f"residual objects miss target point {verdict.point}; "
            "the supplied coloring is not proper",
            witness=verdict.point,
        )
    w_all = total_weight(instance, instance.indices())
    w_extracted = class_weight[best_color]
    if w_extracted * coloring.kappa < w_all:
        raise AlgorithmInvariantError(
            "heaviest color class below W/kappa"
        )
    return ExtractionResult(
        sol, extracted, w_extracted, w_all / w_extracted, coloring.kappa
    )


# ---------------------------------------------------------------------------
# Exact minimum-weight cover
# ---------------------------------------------------------------------------

def _coverer_sets(instance: Instance) -> List[frozenset]:
    sets = []
    for p in instance.points:
        n, cov = core.depth(instance, p)
        if n == 0:
            raise UncoverablePointError(
                f"target point {p} is covered by no object", point=p
            )
        sets.append(cov)
    return sets


def _min_weight_vertex_cover(
    edges: Sequence[Tuple[int, int]], weights: Sequence[Fraction]
) -> FrozenSet[int]:
    """Exact minimum-weight vertex cover, branch and bound per component."""
    adjacency: Dict[int, set] = {}
    for u, v in edges:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)

    # connected components of the conflict graph
    components = []
    seen: set = set()
    for start in sorted(adjacency):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adjacency[v] - comp)
        seen |= comp
        components.append(comp)

    def matching_bound(uncovered: frozenset) -> Fraction:
        used: set = set()
        bound = Fraction(0)
        for u, v in sorted(uncovered):
            if u not in used and v not in used:
                used.update((u, v))
                bound += min(weights[u], weights[v])
        return bound

    def greedy(uncovered: frozenset) -> set:
        cover: set = set()
        remaining = set(uncovered)
        while remaining:
            degree: Dict[int, int] = {}
            for u, v in remaining:
                degree[u] = degree.get(u, 0) + 1
                degree[v] = degree.get(v, 0) + 1
            pick = min(degree, key=lambda x: (weights[x] / degree[x], x))
            cover.add(pick)
            remaining = {e for e in remaining if pick not in e}
        return cover

    cover_total: set = set()
    for comp in components:
        comp_edges = frozenset(
            (min(u, v), max(u, v)) for u, v in edges if u in comp
        )
        init = greedy(comp_edges)
        best = [sum((weights[v] for v in init), Fraction(0)), set(init)]

        def rec(uncovered: frozenset, cur_w: Fraction, chosen: set) -> None:
            if not uncovered:
                if cur_w < best[0]:
                    best[0], best[1] = cur_w, set(chosen)
                return
            if cur_w + matching_bound(uncovered) >= best[0]:
                return
            u, v = min(uncovered)
            # u in the cover
            rec(
                frozenset(e for e in uncovered if u not in e),
                cur_w + weights[u],
                chosen | {u},
            )
            # u excluded: every uncovered neighbor of u must enter
            forced = {b if a == u else a for a, b in uncovered if u in (a, b)}
            rec(
                frozenset(
                    e for e in uncovered if not (set(e) & forced)
                ),
                cur_w + sum((weights[x] for x in forced), Fraction(0)),
                chosen | forced,
            )

        rec(comp_edges, Fraction(0), set())
        cover_total |= best[1]
    return frozenset(cover_total)


def _min_weight_set_cover(
    point_sets: Sequence[frozenset], weights: Sequence[Fraction]
) -> FrozenSet[int]:
    """Exact minimum-weight set cover by branching on a hardest point.

    States are memoized by their uncovered point set: a path arriving no
    cheaper than a previous visit is pruned.
    """
    # Covering a point with a subset coverer-set also covers every point
    # whose coverer-set is a superset; keep only minimal ones.
    minimal: List[frozenset] = []
    for s in sorted(set(point_sets), key=lambda s: (len(s), sorted(s))):
        if not any(t <= s for t in minimal):
            minimal.append(s)
    if not minimal:
        return frozenset()

    object_covers: Dict[int, List[int]] = {}
    for k, s in enumerate(minimal):
        for i in s:
            object_covers.setdefault(i, []).append(k)

    def greedy() -> set:
        chosen: set = set()
        uncovered = set(range(len(minimal)))
        while uncovered:
            useful = [
                i for i in object_covers if set(object_covers[i]) & uncovered
            ]
            pick = min(
                useful,
                key=lambda i: (
                    weights[i] / len(set(object_covers[i]) & uncovered),
                    i,
                ),
            )
            chosen.add(pick)
            uncovered -= set(object_covers[pick])
        return chosen

    init = greedy()
    best = [sum((weights[i] for i in init), Fraction(0)), set(init)]
    visited: Dict[frozenset, Fraction] = {}

    def rec(uncovered: frozenset, cur_w: Fraction, chosen: set) -> None:
        if not uncovered:
            if cur_w < best[0]:
                best[0], best[1] = cur_w, set(chosen)
            return
        if cur_w >= best[0]:
            return
        prev = visited.get(uncovered)
        if prev is not None and prev <= cur_w:
            return
        visited[uncovered] = cur_w
        point = min(uncovered, key=lambda k: (len(minimal[k]), k))
        for i in sorted(minimal[point], key=lambda i: (weights[i], i)):
            rec(
                frozenset(k for k in uncovered if i not in minimal[k]),
                cur_w + weights[i],
                chosen | {i},
            )

    rec(frozenset(range(len(minimal))), Fraction(0), set())
    return frozenset(best[1])


def exact_min_cover(
    instance: Instance, size_cap: int = DEFAULT_COVER_CAP
) -> Tuple[FrozenSet[int], Fraction]:
    """Minimum-weight subset of objects covering every target point."""
    if instance.m > size_cap:
        raise SizeCapError(f"{instance.m} objects exceed cap {size_cap}")
    sets = _coverer_sets(instance)
    if all(len(s) == 2 for s in sets):
        edges = sorted({tuple(sorted(s)) for s in sets})
        cover = _min_weight_vertex_cover(edges, instance.weights)
    else:
        cover = _min_weight_set_cover(sets, instance.weights)
    return cover, total_weight(instance, cover)


def exact_extraction_number(
    instance: Instance, size_cap: int = DEFAULT_COVER_CAP
) -> Fraction:
    """Smallest alpha achievable on the instance: W / (W - mincover)."""
    if instance.m == 0:
        raise ValueError("empty instance has no extraction number")
    w_all = total_weight(instance, instance.indices())
    _, w_cover = exact_min_cover(instance, size_cap=size_cap)
    if w_cover == w_all:
        raise UnboundedExtractionError(
            "every cover takes all weight; extraction number is unbounded"
        )
    return w_all / (w_all - w_cover)


def exact_chromatic(
    instance: Instance, size_cap: int = DEFAULT_CHROMATIC_CAP
) -> int:
    """Minimum kappa admitting a proper coloring of the induced hypergraph."""
    if instance.m > size_cap:
        raise SizeCapError(f"{instance.m} objects exceed cap {size_cap}")
    if instance.m == 0:
        return 1
    edges = sorted(
        oracle.enumerate_hyperedges(instance).edge_set,
        key=lambda e: (len(e), sorted(e)),
    )
    if not edges:
        return 1
    for k in range(2, instance.m + 1):
        if _search_coloring(instance.m, edges, max_colors=k) is not None:
            return k
    raise AlgorithmInvariantError("hypergraph not colorable with m colors")
