"""Immutable simple-graph value type with parsing, editing and serialization.

Vertices are dense integers 0..order-1; string labels exist only for I/O.
All operations return new graphs, so structural equality between graphs
produced along different code paths is meaningful and cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]

FORMATS = ("edgelist", "json", "dot")


class GraphError(ValueError):
    """Invalid graph construction or edit."""


class ParseError(GraphError):
    """Malformed graph input.

    ``code`` is one of ``syntax``, ``self-loop``, ``duplicate-edge``,
    ``id-range``; ``line``/``column`` are 1-based where known.
    """

    def __init__(self, message: str, code: str, line: int | None = None,
                 column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column else "") + ")"
        super().__init__(f"{message}{where}")
        self.code = code
        self.line = line
        self.column = column


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered pair to (min, max)."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph on vertices 0..order-1.

    ``adj`` holds one sorted tuple of neighbor ids per vertex.  Labels do
    not participate in equality: two graphs are equal iff they have equal
    order and adjacency.
    """

    order: int
    adj: tuple[tuple[int, ...], ...]
    labels: Mapping[int, str] | None = field(default=None)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Edge],
                   labels: Mapping[int, str] | None = None) -> "Graph":
        if order < 0:
            raise GraphError("order must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels:
            for k in labels:
                if not (0 <= int(k) < order):
                    raise GraphError(f"label for unknown vertex {k}")
            labels = {int(k): str(s) for k, s in labels.items()}
        return cls(order, tuple(tuple(sorted(s)) for s in nbrs), labels or None)

    # -- basic queries ----------------------------------------------------

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> tuple[Edge, ...]:
        """All edges as (min, max) pairs in lexicographic order."""
        return tuple((u, v) for u in range(self.order) for v in self.adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.order)

    def label(self, v: int) -> str | None:
        return self.labels.get(v) if self.labels else None

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.order):
            raise GraphError(f"unknown vertex {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"

    # -- derived graphs ---------------------------------------------------

    def add_edges(self, new: Iterable[Edge]) -> "Graph":
        """New graph with ``new`` added (duplicates with existing edges allowed)."""
        return Graph.from_edges(self.order, list(self.edges()) + [edge(u, v) for u, v in new],
                                self.labels)

    def edges_among(self, keep: Iterable[int]) -> frozenset[Edge]:
        ks = set(keep)
        return frozenset((u, v) for u, v in self.edges() if u in ks and v in ks)

    def isolate_vertices(self, drop: Iterable[int]) -> "Graph":
        """Same vertex range, but every edge touching ``drop`` removed.

        Stage graphs of chordalization chains keep the full id range so that
        graphs from different stages compare directly; a vertex outside the
        stage is simply isolated.
        """
        ds = set(drop)
        for v in ds:
            self._check_vertex(v)
        keep = [v for v in range(self.order) if v not in ds]
        return Graph.from_edges(self.order, self.edges_among(keep), self.labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``vertices`` plus the old-id -> new-id map."""
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("induced subgraph on empty vertex set")
    for v in vs:
        g._check_vertex(v)
    remap = {old: new for new, old in enumerate(vs)}
    edges = [(remap[u], remap[v]) for u, v in g.edges() if u in remap and v in remap]
    labels = None
    if g.labels:
        labels = {remap[v]: s for v, s in g.labels.items() if v in remap} or None
    return Graph.from_edges(len(vs), edges, labels), remap


def apply_edits(g: Graph, add: Iterable[Edge] = (),
                delete_vertices: Iterable[int] = ()) -> Graph:
    """Functionally add edges and/or delete vertices (deletions renumber ids).

    Added edges must join existing, distinct, currently nonadjacent vertices
    and must not touch a deleted vertex.
    """
    adds = [edge(u, v) for u, v in add]
    dels = set(delete_vertices)
    for v in dels:
        g._check_vertex(v)
    for u, v in adds:
        g._check_vertex(u)
        g._check_vertex(v)
        if g.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        if u in dels or v in dels:
            raise GraphError(f"added edge ({u}, {v}) touches a deleted vertex")
    extended = g.add_edges(adds)
    if not dels:
        return extended
    keep = [v for v in range(g.order) if v not in dels]
    sub, _ = induced_subgraph(extended, keep)
    return sub


# -- parsing ---------------------------------------------------------------


def parse_edge_list(text: str | bytes, fmt: str = "edgelist") -> Graph:
    """Parse a graph from ``edgelist`` or ``json`` text."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "json":
        return _parse_json(text)
    if fmt == "dot":
        raise ParseError("dot format is export-only", code="syntax")
    raise ParseError(f"unknown format {fmt!r}", code="syntax")


def _parse_edgelist(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}",
                             code="syntax", line=lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            col = 1 + len(raw) - len(raw.lstrip())
            raise ParseError(f"non-integer token in {line!r}",
                             code="syntax", line=lineno, column=col) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be nonnegative",
                                 code="syntax", line=lineno)
            header = (a, b)
            continue
        _collect_edge(a, b, header[0], edges, seen, lineno)
    if header is None:
        raise ParseError("missing 'n m' header", code="syntax", line=1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}",
                         code="syntax", line=1)
    return Graph.from_edges(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", code="syntax",
                         line=exc.lineno, column=exc.colno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("JSON graph needs 'n' and 'edges'", code="syntax")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a nonnegative integer", code="syntax")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for pair in obj["edges"]:
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(x, int) for x in pair)):
            raise ParseError(f"bad edge entry {pair!r}", code="syntax")
        _collect_edge(pair[0], pair[1], n, edges, seen, None)
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, dict):
            raise ParseError("'labels' must be an object", code="syntax")
        try:
            labels = {int(k): str(v) for k, v in labels.items()}
        except ValueError:
            raise ParseError("label keys must be integer ids", code="syntax") from None
        for k in labels:
            if not 0 <= k < n:
                raise ParseError(f"label for out-of-range id {k}", code="id-range")
    return Graph.from_edges(n, edges, labels)


def _collect_edge(a: int, b: int, n: int, edges: list[Edge],
                  seen: set[Edge], lineno: int | None) -> None:
    if a == b:
        raise ParseError(f"self-loop at vertex {a}", code="self-loop", line=lineno)
    if not (0 <= a < n and 0 <= b < n):
        raise ParseError(f"vertex id out of range in ({a}, {b}); order is {n}",
                         code="id-range", line=lineno)
    e = edge(a, b)
    if e in seen:
        raise ParseError(f"duplicate edge ({a}, {b})", code="duplicate-edge",
                         line=lineno)
    seen.add(e)
    edges.append(e)


# -- serialization ----------------------------------------------------------


def serialize(g: Graph, fmt: str = "edgelist") -> str:
    """Canonical text form; ``parse_edge_list`` round-trips edgelist and json."""
    if fmt == "edgelist":
        lines = [f"{g.order} {g.edge_count}"]
        lines += [f"{u} {v}" for u, v in g.edges()]
        return "\n".join(lines)
    if fmt == "json":
        obj: dict = {"n": g.order, "edges": [list(e) for e in g.edges()]}
        if g.labels:
            obj["labels"] = {str(k): g.labels[k] for k in sorted(g.labels)}
        return json.dumps(obj, separators=(",", ":"))
    if fmt == "dot":
        return _to_dot(g)
    raise GraphError(f"unknown format {fmt!r}")


def _dot_name(g: Graph, v: int) -> str:
    s = g.label(v)
    if s and s.isidentifier():
        return s
    return f"v{v}"


def _to_dot(g: Graph) -> str:
    lines = ["graph {"]
    touched = set()
    for u, v in g.edges():
        lines.append(f"  {_dot_name(g, u)} -- {_dot_name(g, v)};")
        touched.update((u, v))
    for v in range(g.order):
        if v not in touched:
            lines.append(f"  {_dot_name(g, v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_pairs(n: int) -> Iterator[Edge]:
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)
