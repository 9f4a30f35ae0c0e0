"""Sequential composition of admissible UPO-graphs.

``compose(A, B)`` stacks ``B`` below ``A``: the k-th output edge of ``A``
(in A's order) is fused with the k-th input edge of ``B`` (in B's order).
The fused edge keeps the id of A's output edge.  The composed order is the
shuffle

    P0 < Q1 < {e1} < P1 < Q2 < {e2} < ... < Qn < {en} < Pn < Q(n+1)

where the ``Q`` blocks cut A's order at its output edges and the ``P``
blocks cut B's order at its input edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Mapping, Sequence, Union

from .axioms import check_admissible, check_Q
from .errors import ArityMismatch, ComposeError, IdCollision, NotAdmissibleUpo, WireFusionCollision
from .graph import EdgeId, Endpoints, ProgressiveGraph, domain_codomain
from .order import EdgeOrder, partition_by_markers


@dataclass(frozen=True)
class Origin:
    """Where an edge of a composite came from.

    ``kind`` is ``"G1"`` (upper factor), ``"G2"`` (lower factor) or
    ``"FUSED"``; fused edges record both retired ids and their 1-based
    position ``index`` among the glued pairs.
    """

    kind: Literal["G1", "G2", "FUSED"]
    g1_edge: EdgeId | None = None
    g2_edge: EdgeId | None = None
    index: int | None = None


@dataclass(frozen=True)
class ComposedGraph:
    graph: ProgressiveGraph
    order: EdgeOrder
    provenance: Mapping[EdgeId, Origin]

    def __iter__(self) -> Iterator:
        # lets a composite stand in for a (graph, order) pair
        yield self.graph
        yield self.order


UpoGraph = Union[tuple[ProgressiveGraph, EdgeOrder], ComposedGraph]


def sorted_boundary_edges(g: ProgressiveGraph, order: EdgeOrder) -> tuple[tuple[EdgeId, ...], tuple[EdgeId, ...]]:
    """Input and output edges, each listed in ``order``."""
    inputs, outputs = domain_codomain(g)
    return (
        tuple(e for e in order if e in inputs),
        tuple(e for e in order if e in outputs),
    )


def _require_admissible(g: ProgressiveGraph, order: EdgeOrder, side: str) -> None:
    report = check_Q(g, order) + check_admissible(g, order)
    if not report.passed:
        raise NotAdmissibleUpo(f"{side} is not an admissible UPO-graph: {report.diagnostics[0]}", side, report)


def compose(upper: UpoGraph, lower: UpoGraph, *, check: bool = True) -> ComposedGraph:
    """Glue ``lower`` underneath ``upper`` and shuffle their orders.

    With ``check=False`` the admissibility of both factors is assumed, not
    verified.
    """
    g1, ord1 = upper
    g2, ord2 = lower
    if check:
        _require_admissible(g1, ord1, "G1")
        _require_admissible(g2, ord2, "G2")

    _, outs = sorted_boundary_edges(g1, ord1)
    ins, _ = sorted_boundary_edges(g2, ord2)
    if len(outs) != len(ins):
        raise ArityMismatch(f"G1 has {len(outs)} output edges but G2 has {len(ins)} input edges")

    dropped1 = {g1.target(o) for o in outs}
    dropped2 = {g2.source(i) for i in ins}
    kept1 = [v for v in g1.vertices if v not in dropped1]
    kept2 = [v for v in g2.vertices if v not in dropped2]
    fused_away = set(ins)
    names1 = set(kept1) | set(g1.edges)
    names2 = set(kept2) | (set(g2.edges) - fused_away)
    clash = names1 & names2
    if clash:
        raise IdCollision(f"G1 and G2 share ids {sorted(clash)}; rename one side before composing")

    edges: dict[EdgeId, Endpoints] = {}
    provenance: dict[EdgeId, Origin] = {}
    out_index = {o: k for k, o in enumerate(outs, start=1)}
    for e, ends in g1.edges.items():
        if e in out_index:
            k = out_index[e]
            i = ins[k - 1]
            ends = Endpoints(ends.source, g2.target(i))
            if ends.source in dropped1 or ends.target in dropped2:
                raise WireFusionCollision(f"fusing {e} with {i} leaves no surviving endpoint")
            provenance[e] = Origin("FUSED", e, i, k)
        else:
            provenance[e] = Origin("G1", e)
        edges[e] = ends
    for e, ends in g2.edges.items():
        if e not in fused_away:
            edges[e] = ends
            provenance[e] = Origin("G2", None, e)

    boundary = (g1.boundary - dropped1) | (g2.boundary - dropped2)
    graph = ProgressiveGraph(tuple(kept1 + kept2), edges, frozenset(boundary))

    q = partition_by_markers(ord1, outs)
    p = partition_by_markers(ord2, ins)
    n = len(outs)
    seq: list[EdgeId] = list(p["B0"])
    for k in range(1, n + 1):
        seq += q[f"B{k - 1}"]
        seq.append(outs[k - 1])
        seq += p[f"B{k}"]
    seq += q[f"B{n}"]
    return ComposedGraph(graph, EdgeOrder(tuple(seq)), provenance)


def compose_many(stages: Sequence[UpoGraph], *, check: bool = True) -> ComposedGraph:
    """Left fold of :func:`compose` over ``stages``, top stage first.

    A :class:`ComposeError` raised while adding stage ``k`` carries
    ``stage = k``.  Provenance in the result refers to the last fold step.
    """
    if not stages:
        raise ValueError("compose_many needs at least one stage")
    g, order = stages[0]
    acc = ComposedGraph(g, order, {e: Origin("G1", e) for e in g.edges})
    for k, stage in enumerate(stages[1:], start=1):
        try:
            acc = compose(acc, stage, check=check)
        except ComposeError as exc:
            exc.stage = k
            raise
    return acc
