"""The non-chordality index and the assembled bound ledger.

The index of a graph is the least number of stages in a valid
chordalization chain over all hole covers; 0 iff chordal.  The exact
search works per hole component (the index of a graph is the maximum over
its components), deepens iteratively on the stage count k, and is capped
by the minimum hole cover size, whose singleton-stage chain is always
valid.  ``bound_report`` packages the index with the coloring oracles into
one pass/fail ledger.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .chordalize import (ChordalizationPartition, HatCache, run_chain,
                         validate_partition)
from .graph import Graph, induced_subgraph
from .holes import (HoleSet, enumerate_holes, hole_components, min_hole_cover,
                    vertex_satisfies_nc)
from . import oracles
from .oracles import (OracleLimitError, chromatic_number, clique_number,
                      contains_join_subgraph, degeneracy, dp_chromatic_tiny,
                      independence_number)

DEFAULT_BUDGET = 200_000


class _BudgetUp(Exception):
    pass


@dataclass
class _Budget:
    limit: int
    used: int = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise _BudgetUp()


@dataclass(frozen=True)
class IndexResult:
    """Index value (or upper bound) with its witness partition.

    ``exact`` certifies that no smaller stage count admits a valid
    partition; the witness always validates.  ``value == 0`` iff the input
    is chordal (then there is no witness).
    """

    value: int
    exact: bool
    witness: ChordalizationPartition | None
    nodes: int = 0
    budget_exhausted: bool = False

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "witness": self.witness.to_json_list() if self.witness else None,
            "search_nodes": self.nodes,
            "budget_exhausted": self.budget_exhausted,
        }


def _nc_transversal(hs: HoleSet, budget: _Budget) -> frozenset[int] | None:
    """A cover hitting every hole exactly once, among NC vertices.

    Such a set is precisely a one-stage witness, so this decides index <= 1
    for a non-chordal graph.  Complete search: any valid one-stage cover
    shrinks to one inside the hole region consisting of NC vertices.
    """
    pool = {v for v in hs.omega_region if vertex_satisfies_nc(hs, v).ok}
    holes = hs.holes
    by_vertex = hs.by_vertex

    def candidates(h, covered):
        return [v for v in h
                if v in pool and not any(x in covered for x in by_vertex[v])]

    def search(covered: frozenset, chosen: frozenset) -> frozenset | None:
        budget.tick()
        uncovered = [h for h in holes if h not in covered]
        if not uncovered:
            return chosen
        pivot = min(uncovered, key=lambda h: len(candidates(h, covered)))
        for v in candidates(pivot, covered):
            got = search(covered | set(by_vertex[v]), chosen | {v})
            if got is not None:
                return got
        return None

    return search(frozenset(), frozenset())


def _ordered_partitions(cover: tuple[int, ...], k: int):
    """All surjections cover -> parts, in lexicographic assignment order."""
    for assign in itertools.product(range(k), repeat=len(cover)):
        if len(set(assign)) != k:
            continue
        parts = [[] for _ in range(k)]
        for v, p in zip(cover, assign):
            parts[p].append(v)
        yield ChordalizationPartition.of(*parts)


def _singleton_partition(cover: Iterable[int]) -> ChordalizationPartition:
    return ChordalizationPartition.of(*[[v] for v in sorted(cover)])


def _component_index(g: Graph, budget: _Budget, cache: HatCache
                     ) -> tuple[int, ChordalizationPartition | None, bool]:
    """(value, witness, exact) for one hole component (or any small graph)."""
    hs = enumerate_holes(g)
    if not hs.holes:
        return 0, None, True

    try:
        one = _nc_transversal(hs, budget)
    except _BudgetUp:
        cover = min_hole_cover(hs, 0).cover  # greedy warm start only
        return len(cover), _singleton_partition(cover), False
    if one is not None:
        return 1, ChordalizationPartition.of(one), True

    mc = min_hole_cover(hs, max(0, budget.limit - budget.used))
    budget.used += mc.nodes
    fallback = _singleton_partition(mc.cover)
    if not mc.optimal:
        return len(mc.cover), fallback, False

    cap = len(mc.cover)
    omega = hs.omega_region
    hole_sets = [set(h) for h in hs.holes]
    try:
        for k in range(2, cap):
            for size in range(max(k, cap), len(omega) + 1):
                for cand in itertools.combinations(omega, size):
                    budget.tick()
                    cs = set(cand)
                    if not all(cs & h for h in hole_sets):
                        continue
                    for partition in _ordered_partitions(cand, k):
                        budget.tick(4)
                        if validate_partition(g, partition, _cache=cache).ok:
                            return k, partition, True
    except _BudgetUp:
        return cap, fallback, False
    # k == cap: singleton stages over a minimum cover always validate
    assert validate_partition(g, fallback, _cache=cache).ok, \
        "singleton-stage chain failed to validate"
    return cap, fallback, True


def exact_index(g: Graph, budget: int | None = None) -> IndexResult:
    """Exact non-chordality index at desk scale.

    Decomposes into hole components, solves each by iterative deepening on
    the stage count and recomposes the per-component witnesses into one
    partition (stage j = union of the components' stage-j parts).  With an
    exhausted budget the result degrades to a valid upper bound
    (``exact=False``).

    The witness is deterministic: first by stage count, then by cover
    size, then by the enumeration order of covers (lexicographic) and of
    part assignments.
    """
    hs = enumerate_holes(g)
    hs.require_complete()
    if not hs.holes:
        return IndexResult(0, True, None)
    comps = hole_components(hs)
    b = _Budget(budget if budget is not None else DEFAULT_BUDGET)
    cache: HatCache = {}

    per_class: list[tuple[int, ChordalizationPartition | None, bool, dict[int, int]]] = []
    for cls in comps.classes:
        sub, remap = induced_subgraph(g, cls)
        value, witness, exact = _component_index(sub, b, {})
        back = {new: old for old, new in remap.items()}
        per_class.append((value, witness, exact, back))

    total = max(v for v, *_ in per_class)
    merged: list[set[int]] = [set() for _ in range(total)]
    for value, witness, _, back in per_class:
        if witness is None:
            continue
        for j, part in enumerate(witness.parts):
            merged[j] |= {back[v] for v in part}
    partition = ChordalizationPartition.of(*[p for p in merged if p])
    assert partition.k == total
    assert validate_partition(g, partition, _cache=cache).ok, \
        "recomposed witness failed to validate"
    exact = all(e for _, _, e, _ in per_class)
    return IndexResult(total, exact, partition, nodes=b.used,
                       budget_exhausted=not exact and b.used >= b.limit)


def greedy_index_upper_bound(g: Graph) -> IndexResult:
    """Cheap valid upper bound: stage parts grown greedily, per component.

    Within a component, parts accrete vertices of a minimum cover in order
    of descending hole-coverage (ties by id); a vertex joins the pending
    part while the part still satisfies the set-level NC condition in its
    own stage graph.  If the grown part fails to cover its stage graph's
    holes, the stage falls back to a singleton, which always validates.
    """
    hs = enumerate_holes(g)
    hs.require_complete()
    if not hs.holes:
        return IndexResult(0, False, None)
    comps = hole_components(hs)
    per_class: list[tuple[list[frozenset[int]], dict[int, int]]] = []
    for cls in comps.classes:
        sub, remap = induced_subgraph(g, cls)
        parts = _component_greedy(sub)
        back = {new: old for old, new in remap.items()}
        per_class.append((parts, back))
    total = max(len(p) for p, _ in per_class)
    merged: list[set[int]] = [set() for _ in range(total)]
    for parts, back in per_class:
        for j, part in enumerate(parts):
            merged[j] |= {back[v] for v in part}
    partition = ChordalizationPartition.of(*[p for p in merged if p])
    assert validate_partition(g, partition).ok, \
        "greedy witness failed to validate"
    return IndexResult(partition.k, False, partition)


def _component_greedy(g: Graph) -> list[frozenset[int]]:
    from .chordalize import hat
    from .holes import set_satisfies_nc

    hs = enumerate_holes(g)
    coverage = {v: len(hs.by_vertex.get(v, ())) for v in range(g.order)}
    remaining = sorted(min_hole_cover(hs).cover)
    star = g.isolate_vertices(remaining)
    parts: list[frozenset[int]] = []
    while remaining:
        everything = Graph.from_edges(
            g.order, set(star.edges()) | set(g.edges()), g.labels)
        order = sorted(remaining, key=lambda v: (-coverage[v], v))
        part: list[int] = []
        for v in order:
            cand = part + [v]
            stage = everything.isolate_vertices(set(remaining) - set(cand))
            if set_satisfies_nc(enumerate_holes(stage), cand).ok:
                part = cand
        stage = everything.isolate_vertices(set(remaining) - set(part))
        stage_holes = enumerate_holes(stage)
        if not part or not all(set(h) & set(part) for h in stage_holes.holes):
            part = [order[0]]  # singleton stages always validate
            stage = everything.isolate_vertices(set(remaining) - set(part))
            stage_holes = enumerate_holes(stage)
        star, _ = hat(stage, part, hole_set=stage_holes)
        parts.append(frozenset(part))
        remaining = [v for v in remaining if v not in part]
    return parts


# -- the assembled report -----------------------------------------------------


@dataclass(frozen=True)
class ReportOptions:
    budget: int | None = None
    chi_limit: int = oracles.CHI_DEFAULT_LIMIT
    want_beta: bool = False
    join_mn: tuple[int, int] | None = None
    dp_tiny: bool = False
    greedy_only: bool = False


@dataclass(frozen=True)
class LedgerRow:
    name: str
    lhs: int | None
    rel: str
    rhs: int | None
    status: str  # pass | fail | indeterminate
    note: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rel": self.rel,
                "rhs": self.rhs, "status": self.status, "note": self.note}


@dataclass(frozen=True)
class AnalysisReport:
    """Bound ledger for one graph; every PASS row restates its numbers."""

    order: int
    edge_count: int
    omega: int
    index: IndexResult
    omega_star: int | None
    chromatic: int | None
    degeneracy: int
    alpha: int | None
    beta: int | None
    dp_tiny_value: int | None
    omega_region_clique: int | None
    join_subgraph_found: bool | None
    ledger: tuple[LedgerRow, ...]
    not_computed: Mapping = field(default_factory=dict)

    @property
    def list_bound(self) -> int:
        return self.omega + self.index.value

    @property
    def dp_bound(self) -> int:
        return self.omega + self.index.value

    def all_pass(self) -> bool:
        return all(r.status != "fail" for r in self.ledger)

    def to_json_dict(self) -> dict:
        return {
            "n": self.order,
            "m": self.edge_count,
            "omega": self.omega,
            "index": self.index.to_json_dict(),
            "omega_star": self.omega_star,
            "chromatic": self.chromatic,
            "degeneracy": self.degeneracy,
            "alpha": self.alpha,
            "beta": self.beta,
            "list_bound": self.list_bound,
            "dp_bound": self.dp_bound,
            "dp_tiny": self.dp_tiny_value,
            "omega_region_clique": self.omega_region_clique,
            "join_subgraph_found": self.join_subgraph_found,
            "not_computed": dict(self.not_computed),
            "ledger": [r.to_json_dict() for r in self.ledger],
        }


def bound_report(g: Graph, options: ReportOptions | None = None) -> AnalysisReport:
    """Compute the clique/index/coloring numbers and check every inequality.

    Fields that exceed their oracle's limit are reported as not computed;
    ledger rows only ever reference computed fields.
    """
    opt = options or ReportOptions()
    ledger: list[LedgerRow] = []
    not_computed: dict[str, str] = {}

    omega = clique_number(g)
    if opt.greedy_only:
        index = greedy_index_upper_bound(g)
    else:
        index = exact_index(g, budget=opt.budget)

    chordal = index.value == 0
    if chordal:
        omega_star = omega
    else:
        trace = run_chain(g, index.witness)
        omega_star = clique_number(trace.final)

    def row(name: str, lhs: int, rel: str, rhs: int, note: str = "") -> None:
        holds = {"<=": lhs <= rhs, "<": lhs < rhs, "==": lhs == rhs}[rel]
        ledger.append(LedgerRow(name, lhs, rel, rhs,
                                "pass" if holds else "fail", note))

    row("omega_star_le_omega_plus_index", omega_star, "<=",
        omega + index.value, "clique growth over the witness chain")

    chromatic = None
    if g.order <= opt.chi_limit:
        chromatic = chromatic_number(g, limit=opt.chi_limit)
        row("chi_le_omega_star", chromatic, "<=", omega_star,
            "coloring through the completion")
        row("chi_le_omega_plus_index", chromatic, "<=", omega + index.value)
        if chordal:
            row("chordal_chi_equals_omega", chromatic, "==", omega)
    else:
        not_computed["chromatic"] = (
            f"order {g.order} exceeds the exact-coloring limit {opt.chi_limit}")

    degen, _ = degeneracy(g)
    if chromatic is not None:
        row("chi_le_degeneracy_plus_one", chromatic, "<=", degen + 1)

    alpha = beta = None
    if opt.want_beta:
        if g.order <= oracles.ALPHA_DEFAULT_LIMIT:
            alpha = independence_number(g)
            beta = g.order - alpha
            row("degeneracy_le_beta", degen, "<=", beta)
            if chromatic is not None:
                row("chi_le_beta_plus_one", chromatic, "<=", beta + 1)
        else:
            not_computed["beta"] = (
                f"order {g.order} exceeds the exact cover-number limit "
                f"{oracles.ALPHA_DEFAULT_LIMIT}")

    dp_tiny_value = None
    if opt.dp_tiny:
        if g.order > oracles.DP_TINY_ORDER:
            not_computed["dp_tiny"] = (
                f"order {g.order} exceeds {oracles.DP_TINY_ORDER}")
        else:
            try:
                dp_tiny_value = dp_chromatic_tiny(g)
            except OracleLimitError as exc:
                not_computed["dp_tiny"] = str(exc)
            if dp_tiny_value is not None:
                row("dp_le_omega_plus_index", dp_tiny_value, "<=",
                    omega + index.value, "correspondence bound, tiny oracle")
                if chromatic is not None:
                    row("chi_le_dp", chromatic, "<=", dp_tiny_value)
                if beta is not None:
                    row("dp_le_beta_plus_one", dp_tiny_value, "<=", beta + 1)

    omega_region_clique = None
    join_found = None
    if opt.join_mn is not None:
        m, n = opt.join_mn
        join_found = contains_join_subgraph(g, m, n)[0]
        hs = enumerate_holes(g)
        if hs.omega_region:
            region, _ = induced_subgraph(g, hs.omega_region)
            omega_region_clique = clique_number(region)
        else:
            omega_region_clique = 0
        if not join_found and omega_region_clique + index.value <= m and not chordal:
            row("join_free_completion_bound", omega_star, "<", m + n,
                f"no I_{m} v K_{n} subgraph and region clique {omega_region_clique} "
                f"+ index {index.value} <= {m}")
        else:
            ledger.append(LedgerRow(
                "join_free_completion_bound", None, "<", m + n, "indeterminate",
                "hypothesis not met; no conclusion"))

    return AnalysisReport(
        order=g.order, edge_count=g.edge_count, omega=omega, index=index,
        omega_star=omega_star, chromatic=chromatic, degeneracy=degen,
        alpha=alpha, beta=beta, dp_tiny_value=dp_tiny_value,
        omega_region_clique=omega_region_clique, join_subgraph_found=join_found,
        ledger=tuple(ledger), not_computed=not_computed)
