"""Progressive graphs: acyclic multigraphs with a boundary of leaves.

Edges carry their own identity, so parallel edges between the same pair of
vertices are distinct.  Graphs are immutable once built; every transform
returns a new graph.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    BoundaryNotLeaf,
    CycleDetected,
    DanglingEndpoint,
    DuplicateId,
    SelfLoop,
    UnknownEdge,
    UnknownVertex,
)

VertexId = str
EdgeId = str


class Endpoints(NamedTuple):
    source: VertexId
    target: VertexId


class IncidenceView(NamedTuple):
    in_edges: tuple[EdgeId, ...]
    out_edges: tuple[EdgeId, ...]
    all_edges: tuple[EdgeId, ...]


@dataclass(frozen=True, eq=False)
class ProgressiveGraph:
    """A validated progressive graph.

    Use :func:`build_graph` to construct one from plain lists.
    """

    vertices: tuple[VertexId, ...]
    edges: Mapping[EdgeId, Endpoints]
    boundary: frozenset[VertexId] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _validate(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProgressiveGraph):
            return NotImplemented
        return (
            set(self.vertices) == set(other.vertices)
            and dict(self.edges) == dict(other.edges)
            and self.boundary == other.boundary
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"ProgressiveGraph(|V|={len(self.vertices)}, |E|={len(self.edges)}, "
            f"|boundary|={len(self.boundary)})"
        )

    # -- cached structure -------------------------------------------------

    @cached_property
    def _in(self) -> dict[VertexId, tuple[EdgeId, ...]]:
        acc: dict[VertexId, list[EdgeId]] = {v: [] for v in self.vertices}
        for e, (_, t) in self.edges.items():
            acc[t].append(e)
        return {v: tuple(sorted(es)) for v, es in acc.items()}

    @cached_property
    def _out(self) -> dict[VertexId, tuple[EdgeId, ...]]:
        acc: dict[VertexId, list[EdgeId]] = {v: [] for v in self.vertices}
        for e, (s, _) in self.edges.items():
            acc[s].append(e)
        return {v: tuple(sorted(es)) for v, es in acc.items()}

    @cached_property
    def _descendants(self) -> dict[VertexId, frozenset[VertexId]]:
        # reflexive-transitive closure of the vertex successor relation
        succ: dict[VertexId, set[VertexId]] = {v: set() for v in self.vertices}
        for s, t in self.edges.values():
            succ[s].add(t)
        order = list(graphlib.TopologicalSorter({v: succ[v] for v in self.vertices}).static_order())
        reach: dict[VertexId, frozenset[VertexId]] = {}
        # static_order lists successors before predecessors here
        for v in order:
            acc = {v}
            for w in succ[v]:
                acc |= reach[w]
            reach[v] = frozenset(acc)
        return reach

    @cached_property
    def _edge_successors(self) -> dict[EdgeId, tuple[EdgeId, ...]]:
        # e -> edges strictly reachable from e, sorted by id
        return {
            e: tuple(sorted(f for f, (s, _) in self.edges.items() if s in self._descendants[t]))
            for e, (_, t) in self.edges.items()
        }

    # -- convenience accessors ---------------------------------------------

    def source(self, e: EdgeId) -> VertexId:
        return self._endpoints(e).source

    def target(self, e: EdgeId) -> VertexId:
        return self._endpoints(e).target

    def in_edges(self, v: VertexId) -> tuple[EdgeId, ...]:
        try:
            return self._in[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}", (v,)) from None

    def out_edges(self, v: VertexId) -> tuple[EdgeId, ...]:
        try:
            return self._out[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}", (v,)) from None

    def degree(self, v: VertexId) -> int:
        return len(self.in_edges(v)) + len(self.out_edges(v))

    @property
    def inner_vertices(self) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if v not in self.boundary)

    @property
    def input_vertices(self) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if v in self.boundary and self._out[v])

    @property
    def output_vertices(self) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if v in self.boundary and self._in[v])

    def _endpoints(self, e: EdgeId) -> Endpoints:
        try:
            return self.edges[e]
        except KeyError:
            raise UnknownEdge(f"unknown edge {e!r}", (e,)) from None


def _validate(g: ProgressiveGraph) -> None:
    seen: set[str] = set()
    for v in g.vertices:
        if not v:
            raise DuplicateId("vertex ids must be nonempty", (v,))
        if v in seen:
            raise DuplicateId(f"duplicate vertex id {v!r}", (v,))
        seen.add(v)
    for e, (s, t) in g.edges.items():
        if not e:
            raise DuplicateId("edge ids must be nonempty", (e,))
        if e in seen:
            raise DuplicateId(f"edge id {e!r} clashes with a vertex id", (e,))
        for end in (s, t):
            if end not in seen:
                raise DanglingEndpoint(f"edge {e!r} references unknown vertex {end!r}", (e, end))
        if s == t:
            raise SelfLoop(f"edge {e!r} is a self-loop at {s!r}", (e, s))
    for b in sorted(g.boundary):
        if b not in seen:
            raise DanglingEndpoint(f"boundary vertex {b!r} is not a vertex", (b,))

    succ: dict[VertexId, list[VertexId]] = {v: [] for v in g.vertices}
    degree = dict.fromkeys(g.vertices, 0)
    for s, t in g.edges.values():
        succ[s].append(t)
        degree[s] += 1
        degree[t] += 1
    try:
        graphlib.TopologicalSorter(succ).prepare()
    except graphlib.CycleError as exc:
        cycle = tuple(reversed(exc.args[1]))
        raise CycleDetected(f"directed cycle through {' -> '.join(cycle)}", cycle) from None

    for b in sorted(g.boundary):
        if degree[b] != 1:
            raise BoundaryNotLeaf(f"boundary vertex {b!r} has degree {degree[b]}, expected 1", (b,))


def build_graph(
    vertices: Iterable[VertexId],
    edges: Iterable[tuple[EdgeId, VertexId, VertexId]],
    boundary: Iterable[VertexId] = (),
) -> ProgressiveGraph:
    """Build and validate a progressive graph.

    >>> g = build_graph("abvc", [("e1", "a", "v"), ("e2", "b", "v"), ("e3", "v", "c")], "abc")
    >>> incidence(g, "v").in_edges
    ('e1', 'e2')
    """
    edge_map: dict[EdgeId, Endpoints] = {}
    for e, s, t in edges:
        if e in edge_map:
            raise DuplicateId(f"duplicate edge id {e!r}", (e,))
        edge_map[e] = Endpoints(s, t)
    return ProgressiveGraph(tuple(vertices), edge_map, frozenset(boundary))


def incidence(g: ProgressiveGraph, v: VertexId) -> IncidenceView:
    ins, outs = g.in_edges(v), g.out_edges(v)
    return IncidenceView(ins, outs, tuple(sorted(ins + outs)))


def is_processive(g: ProgressiveGraph, v: VertexId) -> bool:
    return bool(g.in_edges(v)) and bool(g.out_edges(v))


def edge_reachable(g: ProgressiveGraph, e1: EdgeId, e2: EdgeId) -> bool:
    """True iff some directed path starts with ``e1`` and ends with ``e2``.

    An edge reaches itself (the one-edge path).
    """
    _, t1 = g._endpoints(e1)
    s2, _ = g._endpoints(e2)
    return e1 == e2 or s2 in g._descendants[t1]


def domain_codomain(g: ProgressiveGraph) -> tuple[frozenset[EdgeId], frozenset[EdgeId]]:
    """Input edges (source on the boundary) and output edges (target on the boundary)."""
    inputs = frozenset(e for e, (s, _) in g.edges.items() if s in g.boundary)
    outputs = frozenset(e for e, (_, t) in g.edges.items() if t in g.boundary)
    return inputs, outputs


def virtualize_isolated(g: ProgressiveGraph) -> ProgressiveGraph:
    """Replace each isolated vertex ``u`` by an inner edge ``u.e: u.s -> u.t``."""
    isolated = [v for v in g.vertices if not g.in_edges(v) and not g.out_edges(v)]
    if not isolated:
        return g
    vertices: list[VertexId] = []
    edges = [(e, s, t) for e, (s, t) in g.edges.items()]
    for v in g.vertices:
        if v in isolated:
            vertices += [f"{v}.s", f"{v}.t"]
            edges.append((f"{v}.e", f"{v}.s", f"{v}.t"))
        else:
            vertices.append(v)
    return build_graph(vertices, edges, g.boundary)
