"""Checkers for upward planar orders and admissibility.

Two equivalent axiom systems are checked by separate code paths:

* ``check_U`` -- linear extension (U1), the in/out hull split at every
  vertex (U2) and hull nesting between vertices (U3);
* ``check_Q`` -- linear extension (Q1) and the triple-wise nesting
  condition (Q2).

Every checker collects all violations (up to :data:`MAX_DIAGNOSTICS`) rather
than stopping at the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .errors import DomainMismatch
from .graph import EdgeId, ProgressiveGraph, domain_codomain
from .order import EdgeOrder

MAX_DIAGNOSTICS = 1000

Axiom = Literal["U1", "U2", "U3", "Q1", "Q2", "ADM"]


@dataclass(frozen=True)
class Diagnostic:
    axiom: Axiom
    witness: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message}"


@dataclass(frozen=True)
class CheckReport:
    diagnostics: tuple[Diagnostic, ...] = ()
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.diagnostics

    def __bool__(self) -> bool:
        return self.passed

    def axioms(self) -> set[str]:
        """Names of the axioms with at least one violation."""
        return {d.axiom for d in self.diagnostics}

    def __add__(self, other: CheckReport) -> CheckReport:
        merged = self.diagnostics + other.diagnostics
        return CheckReport(
            merged[:MAX_DIAGNOSTICS],
            self.truncated or other.truncated or len(merged) > MAX_DIAGNOSTICS,
        )


class _Collector:
    def __init__(self) -> None:
        self.items: list[Diagnostic] = []
        self.truncated = False

    @property
    def full(self) -> bool:
        return self.truncated

    def add(self, axiom: Axiom, witness: tuple[str, ...], message: str) -> None:
        if len(self.items) >= MAX_DIAGNOSTICS:
            self.truncated = True
            return
        self.items.append(Diagnostic(axiom, witness, message))

    def report(self) -> CheckReport:
        return CheckReport(tuple(self.items), self.truncated)


def _ranks(g: ProgressiveGraph, order: EdgeOrder) -> dict[EdgeId, int]:
    if len(order) != len(g.edges) or order.domain != set(g.edges):
        extra = sorted(order.domain - set(g.edges))
        missing = sorted(set(g.edges) - order.domain)
        raise DomainMismatch(f"order does not cover the edge set (missing {missing}, extra {extra})")
    return order.ranks


def _span(ranks: dict[EdgeId, int], edges: Iterable[EdgeId]) -> tuple[int, int] | None:
    rs = [ranks[e] for e in edges]
    return (min(rs), max(rs)) if rs else None


def _linear_extension(g: ProgressiveGraph, r: dict[EdgeId, int], axiom: Axiom, out: _Collector) -> None:
    for e1 in sorted(g.edges):
        for e2 in g._edge_successors[e1]:
            if r[e1] > r[e2]:
                out.add(
                    axiom,
                    (e1, e2),
                    f"{e1} -> {e2} is a directed path but {e1} is ranked {r[e1]} after {e2} at {r[e2]}",
                )
                if out.full:
                    return


# ---------------------------------------------------------------------------
# U1-U3


def check_U(g: ProgressiveGraph, order: EdgeOrder) -> CheckReport:
    r = _ranks(g, order)
    out = _Collector()
    _linear_extension(g, r, "U1", out)

    for v in g.vertices:
        ins, outs = g.in_edges(v), g.out_edges(v)
        if not ins or not outs:
            continue
        hi_in, hi_out = _span(r, ins), _span(r, outs)
        all_span = _span(r, ins + outs)
        in_set = set(range(hi_in[0], hi_in[1] + 1))
        out_set = set(range(hi_out[0], hi_out[1] + 1))
        whole = set(range(all_span[0], all_span[1] + 1))
        if in_set & out_set or whole != in_set | out_set:
            out.add(
                "U2",
                (v,),
                f"at {v}: hull(I) = [{hi_in[0]}, {hi_in[1]}], hull(O) = [{hi_out[0]}, {hi_out[1]}] "
                f"do not split hull(E) = [{all_span[0]}, {all_span[1]}]",
            )

    for kind, inc in (("I", g.in_edges), ("O", g.out_edges)):
        spans = {v: _span(r, inc(v)) for v in g.vertices}
        for v2, s2 in spans.items():
            if s2 is None:
                continue
            lo, hi = s2
            for v1, s1 in spans.items():
                if v1 == v2 or s1 is None:
                    continue
                if any(lo <= r[e] <= hi for e in inc(v1)) and not (lo <= s1[0] and s1[1] <= hi):
                    out.add(
                        "U3",
                        (v1, v2),
                        f"{kind}({v1}) meets hull({kind}({v2})) = [{lo}, {hi}] "
                        f"but hull({kind}({v1})) = [{s1[0]}, {s1[1]}] is not inside it",
                    )
    return out.report()


# ---------------------------------------------------------------------------
# Q1-Q2


def check_Q(g: ProgressiveGraph, order: EdgeOrder) -> CheckReport:
    r = _ranks(g, order)
    seq = order.sequence
    out = _Collector()
    _linear_extension(g, r, "Q1", out)

    def inside(edges: tuple[EdgeId, ...], span: tuple[int, int]) -> bool:
        return all(span[0] <= r[x] <= span[1] for x in edges)

    for v in g.vertices:
        ins, outs = g.in_edges(v), g.out_edges(v)
        in_span, out_span = _span(r, ins), _span(r, outs)
        in_set = set(ins)
        incident = sorted(set(ins) | set(outs), key=r.__getitem__)
        for i, e1 in enumerate(incident):
            for e2 in incident[i + 1 :]:
                case_in = e1 in in_set and e2 in in_set
                case_out = e1 not in in_set and e2 not in in_set
                case_through = e1 in in_set and e2 not in in_set
                if not (case_in or case_out or case_through):
                    continue
                for e in seq[r[e1] : r[e2] - 1]:
                    s, t = g.edges[e]
                    ok_in = in_span is not None and inside(g.in_edges(t), in_span)
                    ok_out = out_span is not None and inside(g.out_edges(s), out_span)
                    if case_in:
                        ok, need = ok_in, f"I({t}) inside hull(I({v}))"
                    elif case_out:
                        ok, need = ok_out, f"O({s}) inside hull(O({v}))"
                    else:
                        ok = ok_in or ok_out
                        need = f"I({t}) inside hull(I({v})) or O({s}) inside hull(O({v}))"
                    if not ok:
                        out.add("Q2", (e1, e, e2), f"{e1} < {e} < {e2} adjacent at {v} requires {need}")
                        if out.full:
                            return out.report()
    return out.report()


# ---------------------------------------------------------------------------
# admissibility


def check_admissible(g: ProgressiveGraph, order: EdgeOrder) -> CheckReport:
    """Boundary condition: no inner vertex's in-hull holds an output edge of
    the graph, and no out-hull holds an input edge."""
    r = _ranks(g, order)
    inputs, outputs = domain_codomain(g)
    out = _Collector()
    for v in g.inner_vertices:
        span = _span(r, g.out_edges(v))
        if span:
            for e in sorted(inputs, key=r.__getitem__):
                if span[0] <= r[e] <= span[1]:
                    out.add("ADM", (v, e), f"input edge {e} lies in hull(O({v})) = [{span[0]}, {span[1]}]")
        span = _span(r, g.in_edges(v))
        if span:
            for e in sorted(outputs, key=r.__getitem__):
                if span[0] <= r[e] <= span[1]:
                    out.add("ADM", (v, e), f"output edge {e} lies in hull(I({v})) = [{span[0]}, {span[1]}]")
    return out.report()


def check(g: ProgressiveGraph, order: EdgeOrder, definition: str = "q") -> CheckReport:
    """UPO axioms under ``definition`` (``"u"`` or ``"q"``)."""
    if definition.lower() == "u":
        return check_U(g, order)
    if definition.lower() == "q":
        return check_Q(g, order)
    raise ValueError(f"definition must be 'u' or 'q', got {definition!r}")


def is_admissible_upo(g: ProgressiveGraph, order: EdgeOrder, definition: str = "q") -> bool:
    return check(g, order, definition).passed and check_admissible(g, order).passed
