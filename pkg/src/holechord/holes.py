"""Hole enumeration and the predicates built on it.

A *hole* is an induced cycle of length at least 4.  Everything downstream
(chordalization, the non-chordality index, the bound ledger) is driven by
four questions about a graph's hole structure:

* which holes exist (``enumerate_holes``),
* whether a vertex set meets every hole (``is_hole_cover``),
* whether holes through a vertex stay edge-separated from holes avoiding
  it (``vertex_satisfies_nc`` / ``set_satisfies_nc``),
* how the holes clump together (``hole_components``, ``min_hole_cover``).

Holes are stored canonically: the cycle is rotated so it starts at its
minimum vertex and reflected so the second entry is the smaller of that
vertex's two cycle-neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, edge

Hole = tuple[int, ...]

DEFAULT_MAX_HOLES = 10**6


class IncompleteHoleSetError(GraphError):
    """A predicate was asked about a truncated hole enumeration.

    A missed hole can flip every predicate in this module, so cover and NC
    questions refuse to answer unless enumeration ran to completion.
    """


def canonical_cycle(cycle: Sequence[int]) -> Hole:
    """Rotate/reflect a cycle to its canonical tuple."""
    k = len(cycle)
    i = min(range(k), key=lambda j: cycle[j])
    forward = tuple(cycle[(i + j) % k] for j in range(k))
    backward = tuple(cycle[(i - j) % k] for j in range(k))
    return forward if forward[1] <= backward[1] else backward


def hole_edges(hole: Hole) -> frozenset[Edge]:
    k = len(hole)
    return frozenset(edge(hole[i], hole[(i + 1) % k]) for i in range(k))


def is_hole_of(g: Graph, cycle: Sequence[int]) -> bool:
    """Definition check: chordless cycle of length >= 4 in ``g``."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


@dataclass(frozen=True)
class HoleSet:
    """All holes of a host graph, plus per-vertex and per-edge indexes.

    ``complete`` is False only when an enumeration limit fired, in which
    case every predicate below refuses to run.
    """

    order: int
    holes: tuple[Hole, ...]
    complete: bool

    @cached_property
    def by_vertex(self) -> dict[int, tuple[Hole, ...]]:
        idx: dict[int, list[Hole]] = {}
        for h in self.holes:
            for v in h:
                idx.setdefault(v, []).append(h)
        return {v: tuple(hs) for v, hs in idx.items()}

    @cached_property
    def edge_sets(self) -> dict[Hole, frozenset[Edge]]:
        return {h: hole_edges(h) for h in self.holes}

    @cached_property
    def omega_region(self) -> tuple[int, ...]:
        """Union of all hole vertex sets, ascending."""
        return tuple(sorted({v for h in self.holes for v in h}))

    def require_complete(self) -> None:
        if not self.complete:
            raise IncompleteHoleSetError(
                "hole enumeration was truncated; rerun with higher limits")

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.order):
            raise GraphError(f"unknown vertex {v}")


def enumerate_holes(g: Graph, max_hole_count: int = DEFAULT_MAX_HOLES,
                    max_hole_length: int | None = None) -> HoleSet:
    """List every hole of ``g`` up to the given limits.

    The search grows induced paths anchored at the minimum vertex of the
    candidate hole.  A path ``a, v1, .., vk`` only ever contains vertices
    larger than the anchor ``a`` (so each hole is found at its minimum
    vertex), each extension must avoid the interior ``v1 .. v_{k-1}``, and
    a vertex adjacent to the anchor closes the cycle and is never extended
    past (anything beyond it would see the closing chord).  Reflections are
    suppressed by requiring ``v1 <`` the closing vertex.  Every emitted
    cycle is therefore chordless and emitted exactly once.

    ``complete`` is False only when a limit demonstrably suppressed a hole:
    either hole number ``max_hole_count + 1`` was found, or a closure or
    extension ran past ``max_hole_length``.
    """
    if max_hole_count <= 0:
        raise GraphError("max_hole_count must be positive")
    cap = g.order if max_hole_length is None else max_hole_length
    if cap <= 0:
        raise GraphError("max_hole_length must be positive")

    holes: list[Hole] = []
    truncated = False
    adj = g.adjsets

    def extend(anchor: int, path: list[int], on_path: set[int]) -> bool:
        nonlocal truncated
        last = path[-1]
        interior = path[1:-1]
        first_step = len(path) == 1
        for w in adj[last]:
            if w <= anchor or w in on_path:
                continue
            if any(w in adj[p] for p in interior):
                continue
            if not first_step and w in adj[anchor]:
                # closes a cycle through the anchor; never extend past such
                # a vertex (the closing edge would be a chord further on)
                if len(path) >= 3 and path[1] < w:
                    if len(path) + 1 > cap:
                        truncated = True  # a longer hole exists beyond the cap
                        continue
                    if len(holes) >= max_hole_count:
                        truncated = True
                        return False
                    holes.append(tuple(path) + (w,))
                continue
            if len(path) + 2 > cap:
                # even an immediate closure after extending would be too long;
                # a hole might exist down this branch, so completeness is off
                # (vacuous when the cap already admits spanning cycles)
                if cap < g.order:
                    truncated = True
                continue
            path.append(w)
            on_path.add(w)
            ok = extend(anchor, path, on_path)
            on_path.discard(w)
            path.pop()
            if not ok:
                return False
        return True

    for a in range(g.order):
        if not extend(a, [a], {a}):
            break

    return HoleSet(g.order, tuple(sorted(set(holes))), complete=not truncated)


def holes_through(hs: HoleSet, u: int) -> tuple[Hole, ...]:
    """The holes containing ``u``."""
    hs.require_complete()
    hs._check_vertex(u)
    return hs.by_vertex.get(u, ())


def is_hole_cover(hs: HoleSet, cover: Iterable[int]) -> bool:
    """True iff every hole contains at least one vertex of ``cover``.

    On a chordal host every nonempty vertex set is a hole cover.
    """
    hs.require_complete()
    cs = set(cover)
    if not cs:
        raise GraphError("hole cover must be nonempty")
    for v in cs:
        hs._check_vertex(v)
    return all(cs.intersection(h) for h in hs.holes)


@dataclass(frozen=True)
class NcWitness:
    """Two holes sharing a pair of edges at a common endpoint."""

    hole_in: Hole       # contains the tested vertex (or a cover member)
    hole_out: Hole      # avoids it
    shared: tuple[Edge, Edge]

    def __str__(self) -> str:
        e1, e2 = self.shared
        return (f"holes {self.hole_in} and {self.hole_out} share consecutive "
                f"edges {e1} and {e2}")


@dataclass(frozen=True)
class NcVertexResult:
    ok: bool
    witness: NcWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def _consecutive_shared_pair(e1s: frozenset[Edge], e2s: frozenset[Edge]
                             ) -> tuple[Edge, Edge] | None:
    shared = sorted(e1s & e2s)
    if len(shared) < 2:
        return None
    # two shared hole-edges meeting at a vertex are consecutive on both holes
    for i, e in enumerate(shared):
        for f in shared[i + 1:]:
            if set(e) & set(f):
                return (e, f)
    return None


def vertex_satisfies_nc(hs: HoleSet, u: int) -> NcVertexResult:
    """Non-consecutive check for one vertex.

    Fails iff some hole through ``u`` and some hole avoiding ``u`` share two
    edges with a common endpoint; the witness names the pair.
    """
    hs.require_complete()
    hs._check_vertex(u)
    through = hs.by_vertex.get(u, ())
    if not through:
        return NcVertexResult(True)
    through_set = set(through)
    for h1 in through:
        e1s = hs.edge_sets[h1]
        for h2 in hs.holes:
            if h2 in through_set:
                continue
            pair = _consecutive_shared_pair(e1s, hs.edge_sets[h2])
            if pair is not None:
                return NcVertexResult(False, NcWitness(h1, h2, pair))
    return NcVertexResult(True)


@dataclass(frozen=True)
class NcSetResult:
    ok: bool
    failing_vertex: int | None = None
    witness: NcWitness | None = None
    crowded_hole: Hole | None = None
    members_on_hole: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "NC property holds"
        if self.failing_vertex is not None:
            return f"vertex {self.failing_vertex} fails: {self.witness}"
        return (f"hole {self.crowded_hole} contains "
                f"{len(self.members_on_hole)} cover vertices "
                f"{self.members_on_hole}")


def set_satisfies_nc(hs: HoleSet, cover: Iterable[int]) -> NcSetResult:
    """Set-level non-consecutive check.

    Every member must pass ``vertex_satisfies_nc`` and no hole may contain
    two members.
    """
    hs.require_complete()
    cs = sorted(set(cover))
    if not cs:
        raise GraphError("vertex set must be nonempty")
    for h in hs.holes:
        on = tuple(v for v in h if v in set(cs))
        if len(on) >= 2:
            return NcSetResult(False, crowded_hole=h, members_on_hole=tuple(sorted(on)))
    for v in cs:
        r = vertex_satisfies_nc(hs, v)
        if not r.ok:
            return NcSetResult(False, failing_vertex=v, witness=r.witness)
    return NcSetResult(True)


@dataclass(frozen=True)
class HoleComponents:
    """Partition of the hole region into classes of intersecting holes."""

    omega_region: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {"omega": list(self.omega_region),
                "classes": [list(c) for c in self.classes]}


def hole_components(hs: HoleSet) -> HoleComponents:
    """Classes of the relation "on a common hole, transitively".

    Two vertices are related when a chain of holes, each sharing a vertex
    with the next, links them.  Computed by union-find over the holes.
    """
    hs.require_complete()
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for h in hs.holes:
        for v in h:
            parent.setdefault(v, v)
        for v in h[1:]:
            union(h[0], v)
    groups: dict[int, list[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    classes = tuple(sorted((tuple(sorted(g)) for g in groups.values()),
                           key=lambda c: c[0]))
    return HoleComponents(hs.omega_region, classes)


@dataclass(frozen=True)
class MinCoverResult:
    cover: frozenset[int]
    optimal: bool
    nodes: int


def min_hole_cover(hs: HoleSet, budget: int | None = None) -> MinCoverResult:
    """Minimum-cardinality transversal of the hole set.

    Branch and bound over the hitting-set formulation, branching on the
    vertices of a hole with the fewest remaining choices.  Candidates are
    implicitly restricted to the hole region (vertices off holes hit
    nothing).  With an exhausted budget the best cover found so far is
    returned with ``optimal=False``.
    """
    hs.require_complete()
    holes = sorted(hs.holes, key=len)
    if not holes:
        return MinCoverResult(frozenset(), True, 0)
    limit = budget if budget is not None else 10**9

    # greedy warm start: repeatedly take the vertex on most uncovered holes
    uncovered = list(holes)
    greedy: set[int] = set()
    while uncovered:
        counts: dict[int, int] = {}
        for h in uncovered:
            for v in h:
                counts[v] = counts.get(v, 0) + 1
        best_v = min(counts, key=lambda v: (-counts[v], v))
        greedy.add(best_v)
        uncovered = [h for h in uncovered if best_v not in h]

    best: set[int] = set(greedy)
    nodes = 0
    exhausted = False

    def search(chosen: set[int], remaining: list[Hole]) -> None:
        nonlocal best, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > limit:
            exhausted = True
            return
        if not remaining:
            if len(chosen) < len(best):
                best = set(chosen)
            return
        if len(chosen) + 1 >= len(best):
            return
        pivot = min(remaining, key=len)
        for v in pivot:
            chosen.add(v)
            search(chosen, [h for h in remaining if v not in h])
            chosen.discard(v)
            if exhausted:
                return

    search(set(), holes)
    return MinCoverResult(frozenset(best), not exhausted, nodes)
