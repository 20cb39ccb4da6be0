"""Local chordalization, staged chordalization chains, and minimality.

Locally chordalizing by a vertex ``u`` joins ``u`` to every vertex it can
see around each hole through it.  When the holes through ``u`` share no
consecutive edge pair with the holes avoiding it, this destroys every hole
through ``u`` and creates none, so processing a whole cover of
edge-separated vertices yields a chordal graph that does not depend on the
processing order (``hat``).

A cover that fails the set condition can still be *staged*: delete the
cover, then restore it part by part, chordalizing each part in its stage
graph (``run_chain``).  The final graph of any valid chain is a minimal
chordal completion.

Stage graphs keep the full vertex range of the original graph; vertices
that a stage has not yet restored are simply isolated, which leaves every
hole- and chordality-question unchanged and makes graphs from different
stages directly comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, GraphError, edge, serialize
from .holes import (Hole, HoleSet, NcSetResult, enumerate_holes,
                    set_satisfies_nc)
from .oracles import is_chordal_with_peo, maximal_cliques

HatCache = dict[tuple, tuple[Graph, frozenset[Edge]]]


class NotAHoleCoverError(GraphError):
    """The given set misses at least one hole."""

    def __init__(self, missed: Hole):
        super().__init__(f"not a hole cover: hole {missed} is missed")
        self.missed = missed


class NCViolationError(GraphError):
    """The cover fails the non-consecutive condition."""

    def __init__(self, diagnostics: NcSetResult):
        super().__init__(f"NC violation: {diagnostics.describe()}")
        self.diagnostics = diagnostics


class ChainValidationError(GraphError):
    """A chain stage failed; carries the 1-based failing stage index."""

    def __init__(self, stage: int, reason: str):
        super().__init__(f"stage {stage}: {reason}")
        self.stage = stage
        self.reason = reason


def locally_chordalize(g: Graph, u: int, hole_set: HoleSet | None = None
                       ) -> tuple[Graph, frozenset[Edge]]:
    """Join ``u`` to every vertex nonadjacent to it on each hole through it.

    Returns the new graph and exactly the added edges.  A vertex on no hole
    returns the graph unchanged.  Every hole through ``u`` is destroyed;
    when ``u`` additionally satisfies the non-consecutive condition, no new
    hole appears anywhere (in particular none through ``u``).
    """
    g._check_vertex(u)
    hs = hole_set if hole_set is not None else enumerate_holes(g)
    hs.require_complete()
    added = set()
    for h in hs.by_vertex.get(u, ()):
        for v in h:
            if v != u and not g.has_edge(u, v):
                added.add(edge(u, v))
    if not added:
        return g, frozenset()
    return g.add_edges(added), frozenset(added)


def hat(g: Graph, cover: Iterable[int], order: Sequence[int] | None = None,
        hole_set: HoleSet | None = None,
        _cache: HatCache | None = None) -> tuple[Graph, frozenset[Edge]]:
    """The chordal graph from chordalizing by every vertex of an NC cover.

    ``cover`` must meet every hole and satisfy the set-level
    non-consecutive condition (otherwise ``NotAHoleCoverError`` /
    ``NCViolationError``).  Vertices are processed in ascending id order
    unless ``order`` overrides it; order-independence makes this a mere
    determinism convention.  Holes are re-enumerated on the current graph
    at each step.
    """
    cs = sorted(set(cover))
    if not cs:
        raise GraphError("cover must be nonempty")
    for v in cs:
        g._check_vertex(v)
    seq = list(order) if order is not None else cs
    if sorted(seq) != cs:
        raise GraphError("order must be a permutation of the cover")

    key = (g.adj, tuple(seq)) if _cache is not None else None
    if _cache is not None and key in _cache:
        return _cache[key]

    hs = hole_set if hole_set is not None else enumerate_holes(g)
    hs.require_complete()
    missed = next((h for h in hs.holes if not set(h) & set(cs)), None)
    if missed is not None:
        raise NotAHoleCoverError(missed)
    nc = set_satisfies_nc(hs, cs)
    if not nc.ok:
        raise NCViolationError(nc)

    current = g
    added: set[Edge] = set()
    for v in seq:
        current, new = locally_chordalize(current, v)
        added |= new
    peo = is_chordal_with_peo(current)
    assert peo.perfect, f"chordalizing an NC cover left a hole: {peo.hole}"
    result = (current, frozenset(added))
    if _cache is not None:
        _cache[key] = result
    return result


@dataclass(frozen=True)
class ChordalizationPartition:
    """An ordered partition (C_1, .., C_k) of a hole cover."""

    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.parts:
            raise GraphError("partition needs at least one part")
        seen: set[int] = set()
        for p in self.parts:
            if not p:
                raise GraphError("partition parts must be nonempty")
            if seen & p:
                raise GraphError(f"parts overlap on {sorted(seen & p)}")
            seen |= p

    @classmethod
    def of(cls, *parts: Iterable[int]) -> "ChordalizationPartition":
        return cls(tuple(frozenset(p) for p in parts))

    @property
    def cover(self) -> frozenset[int]:
        return frozenset().union(*self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def to_json_list(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


@dataclass(frozen=True)
class ChainStage:
    part: frozenset[int]
    graph: Graph        # G_i: previous star plus this part restored
    chordalized: Graph  # G_i^* = hat(G_i, part)
    added: frozenset[Edge]


@dataclass(frozen=True)
class ChainTrace:
    """Full record of a chordalization chain."""

    original: Graph
    partition: ChordalizationPartition
    base: Graph  # G_0 = G - cover (cover vertices isolated, ids kept)
    stages: tuple[ChainStage, ...]

    @property
    def final(self) -> Graph:
        return self.stages[-1].chordalized if self.stages else self.base

    @property
    def fill(self) -> frozenset[Edge]:
        out: frozenset[Edge] = frozenset()
        for s in self.stages:
            out |= s.added
        return out

    def to_json_dict(self) -> dict:
        return {
            "n": self.original.order,
            "partition": self.partition.to_json_list(),
            "base": serialize(self.base),
            "stages": [
                {"part": sorted(s.part),
                 "graph": serialize(s.graph),
                 "chordalized": serialize(s.chordalized),
                 "added": [list(e) for e in sorted(s.added)]}
                for s in self.stages
            ],
            "final": serialize(self.final),
            "fill": [list(e) for e in sorted(self.fill)],
        }


@dataclass(frozen=True)
class PartitionValidation:
    ok: bool
    failing_stage: int | None = None  # 1-based
    reason: str | None = None
    nc: NcSetResult | None = None

    def __bool__(self) -> bool:
        return self.ok


def _run(g: Graph, partition: ChordalizationPartition,
         _cache: HatCache | None = None) -> tuple[ChainTrace | None, PartitionValidation]:
    hs = enumerate_holes(g)
    missed = next((h for h in hs.holes if not set(h) & partition.cover), None)
    if missed is not None:
        raise NotAHoleCoverError(missed)

    base = g.isolate_vertices(partition.cover)
    assert is_chordal_with_peo(base).perfect, "deleting a hole cover left a hole"

    stages: list[ChainStage] = []
    star = base
    k = partition.k
    for i, part in enumerate(partition.parts, start=1):
        later: set[int] = set().union(*partition.parts[i:]) if i < k else set()
        present = [v for v in range(g.order) if v not in later]
        stage = Graph.from_edges(
            g.order, set(star.edges()) | g.edges_among(present), g.labels)
        stage_holes = enumerate_holes(stage)
        missed = next((h for h in stage_holes.holes if not set(h) & part), None)
        if missed is not None:
            return None, PartitionValidation(
                False, i, f"part {sorted(part)} misses hole {missed} "
                          f"of stage graph {i}")
        nc = set_satisfies_nc(stage_holes, part)
        if not nc.ok:
            return None, PartitionValidation(
                False, i, f"part {sorted(part)} violates the NC condition "
                          f"in stage graph {i}: {nc.describe()}", nc=nc)
        star, added = hat(stage, part, hole_set=stage_holes, _cache=_cache)
        stages.append(ChainStage(part, stage, star, added))

    trace = ChainTrace(g, partition, base, tuple(stages))
    final = trace.final
    assert set(g.edges()) <= set(final.edges()), "final graph lost edges"
    assert is_chordal_with_peo(final).perfect, "final graph is not chordal"
    omega = hs.omega_region
    assert all(u in omega and v in omega for u, v in trace.fill), \
        "a fill edge left the hole region"
    return trace, PartitionValidation(True)


def validate_partition(g: Graph, partition: ChordalizationPartition,
                       _cache: HatCache | None = None) -> PartitionValidation:
    """Simulate the chain; True iff every part covers its stage graph's
    holes under the NC condition.  Chordality of each stage's result is
    asserted, not assumed.  Raises ``NotAHoleCoverError`` when the union of
    parts is not a hole cover of ``g`` (pre-stage check)."""
    _, verdict = _run(g, partition, _cache=_cache)
    return verdict


def run_chain(g: Graph, partition: ChordalizationPartition,
              _cache: HatCache | None = None) -> ChainTrace:
    """Execute a chain; raises ``ChainValidationError`` on an invalid stage."""
    trace, verdict = _run(g, partition, _cache=_cache)
    if trace is None:
        raise ChainValidationError(verdict.failing_stage or 0, verdict.reason or "")
    return trace


def is_minimal_completion(g: Graph, gstar: Graph) -> tuple[bool, Edge | None]:
    """Is ``gstar`` a minimal chordal completion of ``g``?

    Standard single-edge criterion: a triangulation is minimal iff removing
    any one added edge reintroduces a hole.  Returns a removable edge as
    witness when not minimal.
    """
    if g.order != gstar.order:
        raise GraphError("graphs have different orders")
    ge, se = set(g.edges()), set(gstar.edges())
    if not ge <= se:
        raise GraphError("second graph is not a spanning supergraph")
    if not is_chordal_with_peo(gstar).perfect:
        raise GraphError("second graph is not chordal")
    for e in sorted(se - ge):
        reduced = Graph.from_edges(gstar.order, se - {e}, gstar.labels)
        if is_chordal_with_peo(reduced).perfect:
            return False, e
    return True, None


def clique_growth_condition(g: Graph, cover: Iterable[int],
                            hole_set: HoleSet | None = None) -> bool:
    """Does some cover vertex see a whole maximum clique?

    True iff for some ``u`` in the cover, the union of the holes through
    ``u`` and of ``u``'s neighborhood (minus ``u``) contains a maximum
    clique.  Exactly characterizes when chordalizing the cover raises the
    clique number by one.
    """
    hs = hole_set if hole_set is not None else enumerate_holes(g)
    hs.require_complete()
    cliques = maximal_cliques(g)
    if not cliques:
        return False
    omega = max(len(c) for c in cliques)
    maximum = [set(c) for c in cliques if len(c) == omega]
    for u in sorted(set(cover)):
        region = {v for h in hs.by_vertex.get(u, ()) for v in h}
        region |= set(g.adj[u])
        region.discard(u)
        if any(k <= region for k in maximum):
            return True
    return False
