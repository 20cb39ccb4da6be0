"""Brute-force-verifiable oracles for the quantities the bound ledger cites.

Everything here is exact and desk-scale: chordality with a perfect
elimination ordering or a concrete hole as certificate, clique numbers,
chromatic number by backtracking, list- and correspondence-coloring
satisfiability, degeneracy and cover numbers, join-subgraph and
clique-minor detection, and certification of edge-disjoint k-clique
unions.  These routines deliberately share no code with the hole
enumerator so the two can check each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, GraphError, edge


class NotChordalError(GraphError):
    """A chordal-only routine was given a graph with a hole."""


class OracleLimitError(GraphError):
    """Input exceeds the documented desk-scale limit of an exact search."""


# -- chordality -------------------------------------------------------------


@dataclass(frozen=True)
class EliminationOrdering:
    """Vertex order from maximum cardinality search.

    ``perfect`` means every vertex's later neighbors form a clique, which
    holds iff the graph is chordal.  When it fails, ``hole`` is a concrete
    chordless cycle of length >= 4.
    """

    order: tuple[int, ...]
    perfect: bool
    hole: tuple[int, ...] | None = None


def _mcs_order(g: Graph) -> list[int]:
    # maximum cardinality search; ties broken by smallest id
    weight = [0] * g.order
    numbered: list[int] = []
    remaining = set(range(g.order))
    while remaining:
        z = min(remaining, key=lambda v: (-weight[v], v))
        remaining.discard(z)
        numbered.append(z)
        for y in g.adj[z]:
            if y in remaining:
                weight[y] += 1
    numbered.reverse()  # elimination order: visit order reversed
    return numbered


def _find_hole_certificate(g: Graph) -> tuple[int, ...]:
    # For some vertex v with nonadjacent neighbors x, y, a shortest x-y path
    # avoiding N[v] \ {x, y} closes a chordless cycle through v.  On any
    # non-chordal graph a hole vertex with its two cycle neighbors is such a
    # triple, so the scan always succeeds.
    for v in range(g.order):
        nbrs = g.adj[v]
        closed = set(nbrs) | {v}
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if g.has_edge(x, y):
                    continue
                banned = closed - {x, y}
                path = _shortest_path_avoiding(g, x, y, banned)
                if path is not None and len(path) >= 3:
                    return (v, *path)
    raise AssertionError("no hole found in a graph that failed the PEO check")


def _shortest_path_avoiding(g: Graph, src: int, dst: int,
                            banned: set[int]) -> list[int] | None:
    prev: dict[int, int | None] = {src: None}
    frontier = [src]
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            for w in g.adj[u]:
                if w in banned or w in prev:
                    continue
                prev[w] = u
                if w == dst:
                    path = [w]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def is_chordal_with_peo(g: Graph) -> EliminationOrdering:
    """Chordality check via MCS; returns a PEO or a hole witness."""
    order = _mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.adj[v] if pos[u] > pos[v]]
        for i, x in enumerate(later):
            for y in later[i + 1:]:
                if not g.has_edge(x, y):
                    return EliminationOrdering(tuple(order), False,
                                               _find_hole_certificate(g))
    return EliminationOrdering(tuple(order), True)


def is_chordal(g: Graph) -> bool:
    return is_chordal_with_peo(g).perfect


def chordal_clique_and_coloring(g: Graph) -> tuple[int, list[int]]:
    """Clique number and an optimal proper coloring of a chordal graph.

    The clique number is one plus the largest later-neighborhood along the
    PEO; coloring greedily against the reversed order uses exactly that
    many colors (on a nonempty graph).
    """
    peo = is_chordal_with_peo(g)
    if not peo.perfect:
        raise NotChordalError(f"graph has a hole: {peo.hole}")
    pos = {v: i for i, v in enumerate(peo.order)}
    omega = 1 if g.order else 0
    for v in peo.order:
        omega = max(omega, 1 + sum(1 for u in g.adj[v] if pos[u] > pos[v]))
    coloring = [-1] * g.order
    for v in reversed(peo.order):
        used = {coloring[u] for u in g.adj[v] if coloring[u] >= 0}
        c = 0
        while c in used:
            c += 1
        coloring[v] = c
    return omega, coloring


# -- cliques ----------------------------------------------------------------


def maximum_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, by branch and bound with a greedy coloring bound."""
    if g.order == 0:
        return ()
    best: list[int] = [min(range(g.order), key=g.degree)]

    def greedy_color_bound(cands: list[int]) -> list[tuple[int, int]]:
        # returns (vertex, color) pairs; max color + 1 bounds the clique size
        colored: list[tuple[int, int]] = []
        color_classes: list[set[int]] = []
        for v in cands:
            for c, cls in enumerate(color_classes):
                if not any(g.has_edge(v, u) for u in cls):
                    cls.add(v)
                    colored.append((v, c))
                    break
            else:
                color_classes.append({v})
                colored.append((v, len(color_classes) - 1))
        return colored

    def expand(current: list[int], cands: list[int]) -> None:
        nonlocal best
        colored = greedy_color_bound(cands)
        colored.sort(key=lambda t: t[1])
        for i in range(len(colored) - 1, -1, -1):
            v, c = colored[i]
            if len(current) + c + 1 <= len(best):
                return  # every remaining candidate has color <= c
            current.append(v)
            new_cands = [u for u, _ in colored[:i] if g.has_edge(u, v)]
            if not new_cands:
                if len(current) > len(best):
                    best = list(current)
            else:
                expand(current, new_cands)
            current.pop()

    expand([], sorted(range(g.order), key=lambda v: -g.degree(v)))
    return tuple(sorted(best))


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting)."""
    out: list[tuple[int, ...]] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: len(g.adjsets[v] & p))
        for v in sorted(p - g.adjsets[pivot]):
            bk(r | {v}, p & g.adjsets[v], x & g.adjsets[v])
            p.discard(v)
            x.add(v)

    if g.order:
        bk(set(), set(range(g.order)), set())
    return sorted(out)


def is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vl = sorted(set(vs))
    return all(g.has_edge(u, v) for i, u in enumerate(vl) for v in vl[i + 1:])


# -- chromatic number -------------------------------------------------------

CHI_DEFAULT_LIMIT = 12


def _k_colorable(g: Graph, k: int, seed_clique: Sequence[int]) -> list[int] | None:
    if k <= 0:
        return None if g.order else []
    coloring = [-1] * g.order
    for c, v in enumerate(seed_clique[:k]):
        coloring[v] = c
    order = sorted((v for v in range(g.order) if coloring[v] < 0),
                   key=lambda v: -g.degree(v))

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = {coloring[u] for u in g.adj[v] if coloring[u] >= 0}
        # allowing at most one brand-new color kills color-permutation symmetry
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            coloring[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            coloring[v] = -1
        return False

    if assign(0, min(k, len(seed_clique))):
        return coloring
    return None


def chromatic_number(g: Graph, cap: int | None = None,
                     limit: int = CHI_DEFAULT_LIMIT) -> int:
    """Exact chromatic number by backtracking, seeded with a maximum clique.

    Refuses graphs larger than ``limit`` unless an explicit ``cap`` on the
    search is supplied by the caller.
    """
    if g.order == 0:
        return 0
    if g.order > limit and cap is None:
        raise OracleLimitError(
            f"order {g.order} exceeds the exact-coloring limit {limit}")
    q = maximum_clique(g)
    hi = cap if cap is not None else g.order
    for k in range(len(q), hi + 1):
        if _k_colorable(g, k, q) is not None:
            return k
    raise OracleLimitError(f"no coloring with at most {hi} colors found")


def proper_coloring(g: Graph, k: int) -> list[int] | None:
    """A proper k-coloring, or None."""
    return _k_colorable(g, k, maximum_clique(g))


# -- list coloring ----------------------------------------------------------


@dataclass(frozen=True)
class ListAssignment:
    """Finite color lists per vertex; all lists must be nonempty."""

    lists: tuple[tuple[int, ...], ...]

    @classmethod
    def from_mapping(cls, g: Graph, m: Mapping[int, Iterable[int]]) -> "ListAssignment":
        rows = []
        for v in range(g.order):
            if v not in m or not tuple(m[v]):
                raise GraphError(f"missing or empty color list for vertex {v}")
            rows.append(tuple(sorted(set(m[v]))))
        return cls(tuple(rows))

    @classmethod
    def uniform(cls, g: Graph, k: int) -> "ListAssignment":
        if k <= 0:
            raise GraphError("uniform lists need k >= 1")
        return cls(tuple(tuple(range(k)) for _ in range(g.order)))

    @classmethod
    def from_json_dict(cls, g: Graph, obj: Mapping) -> "ListAssignment":
        if "lists" not in obj:
            raise GraphError("list assignment JSON needs a 'lists' object")
        return cls.from_mapping(g, {int(k): v for k, v in obj["lists"].items()})


def list_colorable(g: Graph, assignment: ListAssignment
                   ) -> tuple[bool, list[int] | None]:
    """Decide existence of a proper coloring drawing from per-vertex lists."""
    if len(assignment.lists) != g.order:
        raise GraphError("list assignment does not match graph order")
    order = sorted(range(g.order), key=lambda v: (len(assignment.lists[v]), -g.degree(v)))
    coloring: dict[int, int] = {}

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {coloring[u] for u in g.adj[v] if u in coloring}
        for c in assignment.lists[v]:
            if c in taken:
                continue
            coloring[v] = c
            if assign(i + 1):
                return True
            del coloring[v]
        return False

    if assign(0):
        return True, [coloring[v] for v in range(g.order)]
    return False, None


# -- correspondence (DP) coloring --------------------------------------------


@dataclass(frozen=True)
class Correspondence:
    """Per-edge partial matchings between the endpoints' k color sets.

    A choice ``f`` defeats the cover when no edge's pair ``(f(u), f(v))``
    is matched.  Matchings must be injective in both coordinates.
    """

    k: int
    matchings: Mapping[Edge, frozenset[tuple[int, int]]] = field(default_factory=dict)

    def validate(self, g: Graph) -> None:
        if self.k <= 0:
            raise GraphError("cover needs k >= 1")
        for (u, v), pairs in self.matchings.items():
            if not g.has_edge(u, v):
                raise GraphError(f"cover names a non-edge ({u}, {v})")
            if (u, v) != edge(u, v):
                raise GraphError(f"cover edge ({u}, {v}) not normalized")
            lefts = [a for a, _ in pairs]
            rights = [b for _, b in pairs]
            if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
                raise GraphError(f"matching on ({u}, {v}) is not injective")
            for a, b in pairs:
                if not (0 <= a < self.k and 0 <= b < self.k):
                    raise GraphError(f"color out of range in matching on ({u}, {v})")

    def forbidden(self, u: int, v: int) -> frozenset[tuple[int, int]]:
        """Matched pairs oriented as (color of u, color of v)."""
        e = edge(u, v)
        pairs = self.matchings.get(e, frozenset())
        if (u, v) == e:
            return pairs
        return frozenset((b, a) for a, b in pairs)

    @classmethod
    def identity(cls, g: Graph, k: int) -> "Correspondence":
        pairs = frozenset((c, c) for c in range(k))
        return cls(k, {e: pairs for e in g.edges()})

    @classmethod
    def from_json_dict(cls, g: Graph, obj: Mapping) -> "Correspondence":
        if "k" not in obj or "edges" not in obj:
            raise GraphError("correspondence JSON needs 'k' and 'edges'")
        matchings = {}
        for key, pairs in obj["edges"].items():
            try:
                a, b = (int(t) for t in key.split("-"))
            except ValueError:
                raise GraphError(f"bad edge key {key!r}; expected 'u-v'") from None
            matchings[edge(a, b)] = frozenset(
                (int(p[0]), int(p[1])) for p in pairs) if a < b else frozenset(
                (int(p[1]), int(p[0])) for p in pairs)
        cover = cls(int(obj["k"]), matchings)
        cover.validate(g)
        return cover


def dp_colorable(g: Graph, cover: Correspondence) -> tuple[bool, list[int] | None]:
    """Decide whether some color choice avoids every matched pair."""
    cover.validate(g)
    k = cover.k
    coloring: dict[int, int] = {}
    order = sorted(range(g.order), key=lambda v: -g.degree(v))
    forb = {(u, v): cover.forbidden(u, v)
            for u in range(g.order) for v in g.adj[u]}

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        colored_nbrs = [u for u in g.adj[v] if u in coloring]
        for c in range(k):
            if any((coloring[u], c) in forb[(u, v)] for u in colored_nbrs):
                continue
            coloring[v] = c
            if assign(i + 1):
                return True
            del coloring[v]
        return False

    if assign(0):
        return True, [coloring[v] for v in range(g.order)]
    return False, None


DP_TINY_ORDER = 6
DP_TINY_KMAX = 3


def _spanning_forest(g: Graph) -> tuple[set[Edge], int]:
    seen: set[int] = set()
    tree: set[Edge] = set()
    comps = 0
    for root in range(g.order):
        if root in seen:
            continue
        comps += 1
        seen.add(root)
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    tree.add(edge(u, w))
                    stack.append(w)
    return tree, comps


def dp_chromatic_tiny(g: Graph, k_max: int = DP_TINY_KMAX) -> int:
    """Exact correspondence chromatic number for tiny graphs.

    Enumerates full-matching covers only: enlarging a partial matching can
    only remove color choices, so the hardest covers use perfect matchings
    and restricting to them preserves the maximum.  Relabeling colors at a
    vertex is a satisfiability-preserving change of every incident
    matching, so the matchings on a spanning forest may be fixed to the
    identity; only the ``m - n + c`` off-forest edges are enumerated,
    identity first so non-k-colorable graphs fail fast.
    """
    if g.order > DP_TINY_ORDER:
        raise OracleLimitError(f"order {g.order} exceeds {DP_TINY_ORDER}")
    if k_max > DP_TINY_KMAX:
        raise OracleLimitError(f"k_max {k_max} exceeds {DP_TINY_KMAX}")
    if g.order == 0:
        return 0
    tree, _ = _spanning_forest(g)
    free = [e for e in g.edges() if e not in tree]
    for k in range(1, k_max + 1):
        identity = frozenset((c, c) for c in range(k))
        perms = sorted(itertools.permutations(range(k)))
        bad_cover_found = False
        for choice in itertools.product(perms, repeat=len(free)):
            matchings = {e: identity for e in tree}
            for e, perm in zip(free, choice):
                matchings[e] = frozenset((c, perm[c]) for c in range(k))
            ok, _ = dp_colorable(g, Correspondence(k, matchings))
            if not ok:
                bad_cover_found = True
                break
        if not bad_cover_found:
            return k
    raise OracleLimitError(
        f"correspondence chromatic number exceeds k_max={k_max}")


# -- degeneracy, independence, vertex cover ----------------------------------

ALPHA_DEFAULT_LIMIT = 20


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and a peeling order by repeated minimum degree."""
    remaining = set(range(g.order))
    deg = {v: g.degree(v) for v in remaining}
    order: list[int] = []
    d = 0
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        order.append(v)
        remaining.discard(v)
        for u in g.adj[v]:
            if u in remaining:
                deg[u] -= 1
    return d, order


def independence_number(g: Graph, limit: int = ALPHA_DEFAULT_LIMIT) -> int:
    """Exact maximum independent set size (complement clique search)."""
    if g.order > limit:
        raise OracleLimitError(
            f"order {g.order} exceeds the exact independence limit {limit}")
    comp_edges = [(u, v) for u in range(g.order) for v in range(u + 1, g.order)
                  if not g.has_edge(u, v)]
    comp = Graph.from_edges(g.order, comp_edges)
    return len(maximum_clique(comp))


def degeneracy_and_cover_numbers(g: Graph, want_beta: bool = False,
                                 limit: int = ALPHA_DEFAULT_LIMIT
                                 ) -> tuple[int, int | None, int | None]:
    """(degeneracy, alpha, beta); alpha/beta only on request and at desk scale."""
    d, _ = degeneracy(g)
    if not want_beta:
        return d, None, None
    alpha = independence_number(g, limit=limit)
    beta = g.order - alpha
    assert d <= beta, "degeneracy exceeded the vertex cover number"
    return d, alpha, beta


# -- join subgraphs and clique minors ----------------------------------------


def contains_join_subgraph(g: Graph, m: int, n: int
                           ) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Does g contain the join of m independent-side vertices with an n-clique?

    Only the join edges and the clique edges are required (subgraph, not
    induced), so the test is: an n-clique B whose common neighborhood
    outside B has at least m vertices.  Clique candidates must have degree
    at least m + n - 1.
    """
    if m < n or n < 1:
        raise GraphError("need m >= n >= 1")
    cands = [v for v in range(g.order) if g.degree(v) >= m + n - 1]

    def extend(clique: list[int], common: set[int], start: int) -> tuple | None:
        if len(clique) == n:
            rest = sorted(common - set(clique))
            if len(rest) >= m:
                return tuple(rest[:m]), tuple(clique)
            return None
        for i in range(start, len(cands)):
            v = cands[i]
            if all(g.has_edge(v, u) for u in clique):
                new_common = common & g.adjsets[v]
                if len(new_common - set(clique) - {v}) >= m:
                    got = extend(clique + [v], new_common, i + 1)
                    if got:
                        return got
        return None

    got = extend([], set(range(g.order)), 0)
    return (True, got) if got else (False, None)


MINOR_DEFAULT_LIMIT = 12


@dataclass(frozen=True)
class CliqueMinorResult:
    """Three-valued: found is None when the budget ran out."""

    found: bool | None
    branch_sets: tuple[tuple[int, ...], ...] | None
    nodes: int


def has_clique_minor(g: Graph, t: int, budget: int = 10**6,
                     limit: int = MINOR_DEFAULT_LIMIT) -> CliqueMinorResult:
    """Search for t disjoint connected branch sets, pairwise joined by edges.

    Branch sets are built one at a time as connected subsets; each later
    set must already touch every earlier one.  Symmetry is broken by
    requiring the sets' minimum vertices to increase.
    """
    if g.order > limit:
        raise OracleLimitError(f"order {g.order} exceeds the minor-search limit {limit}")
    if t <= 0:
        raise GraphError("t must be positive")
    if t == 1:
        return CliqueMinorResult(g.order >= 1, ((0,),) if g.order else None, 0)
    nodes = 0

    def connected_supersets(base: set[int], avoid: set[int], need_touch: list[set[int]]):
        """Yield connected sets growing base, each touching all of need_touch."""
        touched = [any(u in g.adjsets[b] for b in base for u in s) for s in need_touch]
        if all(touched):
            yield set(base)
        frontier = sorted({w for b in base for w in g.adj[b]} - base - avoid)
        for i, w in enumerate(frontier):
            # fix an order to avoid emitting the same set twice
            yield from connected_supersets(base | {w},
                                           avoid | set(frontier[:i]), need_touch)

    def place(sets: list[set[int]], used: set[int], min_prev: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetUp()
        if len(sets) == t:
            return True
        for seed in range(min_prev + 1, g.order):
            if seed in used:
                continue
            for cand in connected_supersets({seed}, used | set(range(seed)), sets):
                sets.append(cand)
                if place(sets, used | cand, seed):
                    return True
                sets.pop()
        return False

    found: list[set[int]] = []
    try:
        ok = place(found, set(), -1)
    except _BudgetUp:
        return CliqueMinorResult(None, None, nodes)
    if ok:
        return CliqueMinorResult(True, tuple(tuple(sorted(s)) for s in found), nodes)
    return CliqueMinorResult(False, None, nodes)


class _BudgetUp(Exception):
    pass


# -- edge-disjoint clique-union certification ---------------------------------


@dataclass(frozen=True)
class EflCertificate:
    """Verification record for a union of k edge-disjoint k-cliques."""

    status: str  # pass | fail
    k: int
    omega: int | None = None
    simplicial: tuple[int, ...] = ()
    chi: int | None = None
    coloring: tuple[int, ...] | None = None
    reason: str | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"status": self.status, "k": self.k}
        if self.reason:
            out["reason"] = self.reason
        if self.omega is not None:
            out["omega"] = self.omega
        if self.simplicial:
            out["simplicial"] = list(self.simplicial)
        if self.chi is not None:
            out["chi"] = self.chi
        if self.coloring is not None:
            out["coloring"] = list(self.coloring)
        return out


def check_efl_instance(g: Graph, cliques: Sequence[Iterable[int]]) -> EflCertificate:
    """Certify a decomposition into k edge-disjoint k-cliques.

    Validates the decomposition (sizes, cliqueness, edge-disjointness,
    edge-union coverage), reports the clique number (= k) and one
    simplicial vertex per clique.  When the one-stage chordalization search
    succeeds (non-chordality index at most 1), the chromatic number k is
    certified constructively: remove the k simplicial vertices, chordalize
    the rest through its cover, color the chordal completion along its
    elimination ordering and extend greedily to the removed vertices.
    """
    k = len(cliques)
    sets = [tuple(sorted(set(c))) for c in cliques]
    for c in sets:
        if len(c) != k:
            return EflCertificate("fail", k,
                                  reason=f"clique {c} has size {len(c)}, expected {k}")
        if not is_clique(g, c):
            return EflCertificate("fail", k, reason=f"{c} is not a clique")
    covered: set[Edge] = set()
    for c in sets:
        for i, u in enumerate(c):
            for v in c[i + 1:]:
                e = edge(u, v)
                if e in covered:
                    return EflCertificate(
                        "fail", k, reason=f"edge {e} covered by two cliques")
                covered.add(e)
    missing = set(g.edges()) - covered
    if missing:
        return EflCertificate("fail", k,
                              reason=f"edges not covered: {sorted(missing)[:5]}")
    touched = {v for c in sets for v in c}
    if touched != set(range(g.order)):
        return EflCertificate("fail", k,
                              reason="vertices outside every clique present")
    omega = clique_number(g)
    if omega != k:
        return EflCertificate("fail", k, omega=omega,
                              reason=f"clique number is {omega}, expected {k}")
    simplicial = []
    for c in sets:
        s = next((v for v in c if is_clique(g, g.adj[v])), None)
        if s is None:
            return EflCertificate("fail", k, omega=omega,
                                  reason=f"clique {c} has no simplicial vertex")
        simplicial.append(s)
    chi, coloring = _efl_coloring(g, k, simplicial)
    if chi is None:
        return EflCertificate("pass", k, omega=omega,
                              simplicial=tuple(simplicial),
                              reason="one-stage search failed; "
                                     "chromatic certification skipped")
    return EflCertificate("pass", k, omega=omega, simplicial=tuple(simplicial),
                          chi=chi, coloring=tuple(coloring))


def _efl_coloring(g: Graph, k: int, simplicial: Sequence[int]
                  ) -> tuple[int | None, list[int] | None]:
    # lazy imports: the pipeline rides on the chordalization engine, which
    # itself imports this module
    from .chordalize import hat
    from .graph import induced_subgraph
    from .index import exact_index

    if exact_index(g).value > 1:
        return None, None
    removed = sorted(set(simplicial))
    keep = [v for v in range(g.order) if v not in removed]
    coloring = [-1] * g.order
    if keep:
        sub, remap = induced_subgraph(g, keep)
        idx = exact_index(sub)
        assert idx.value <= 1, "simplicial removal broke the one-stage bound"
        completed = sub
        if idx.value == 1 and idx.witness is not None:
            completed, _ = hat(sub, idx.witness.parts[0])
        om, sub_coloring = chordal_clique_and_coloring(completed)
        assert om <= k, "completion clique number exceeded k"
        back = {new: old for old, new in remap.items()}
        for new_id, c in enumerate(sub_coloring):
            coloring[back[new_id]] = c
    for v in removed:
        used = {coloring[u] for u in g.adj[v] if coloring[u] >= 0}
        c = 0
        while c in used:
            c += 1
        assert c < k, "simplicial vertex had no free color"
        coloring[v] = c
    assert all(coloring[u] != coloring[v] for u, v in g.edges()), \
        "certified coloring is not proper"
    assert max(coloring, default=-1) < k
    return k, coloring
