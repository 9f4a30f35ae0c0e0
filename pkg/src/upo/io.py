"""Text formats: UPG graphs, layer stacks, DOT export.

UPG is line oriented, one directive per line, ``#`` starts a comment::

    upg 1
    vertex a boundary
    vertex v
    edge e1 a v
    order e1 ...

Several ``order`` lines concatenate.  The layer format is::

    layers 1
    layer
      wire
      node 2 1 [label]
"""

from __future__ import annotations

import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import GraphError, InvalidCell, OrderDomainMismatch, UpgSyntaxError, ValidationError
from .graph import ProgressiveGraph, build_graph
from .layers import Cell, LayerSpec, LayerStack, WIRE, node
from .order import EdgeOrder


@dataclass(frozen=True)
class UpgDocument:
    graph: ProgressiveGraph
    order: EdgeOrder | None = None
    source_span: Mapping[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.order is not None and self.order.domain != set(self.graph.edges):
            raise OrderDomainMismatch("order does not list exactly the edges of the graph")


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        words = line.split()
        if words:
            yield lineno, raw, words


def parse_upg(text: str) -> UpgDocument:
    vertices: list[str] = []
    boundary: list[str] = []
    edges: list[tuple[str, str, str]] = []
    order: list[str] | None = None
    spans: dict[str, int] = {}
    seen_header = False
    order_line = None

    for lineno, _, words in _tokens(text):
        head, args = words[0], words[1:]
        if not seen_header:
            if words != ["upg", "1"]:
                raise UpgSyntaxError("expected header 'upg 1'", lineno)
            seen_header = True
            continue
        if head == "vertex":
            if len(args) == 1 or (len(args) == 2 and args[1] == "boundary"):
                vertices.append(args[0])
                if len(args) == 2:
                    boundary.append(args[0])
                spans.setdefault(args[0], lineno)
            else:
                raise UpgSyntaxError("usage: vertex NAME [boundary]", lineno)
        elif head == "edge":
            if len(args) != 3:
                raise UpgSyntaxError("usage: edge NAME SOURCE TARGET", lineno)
            edges.append((args[0], args[1], args[2]))
            spans.setdefault(args[0], lineno)
        elif head == "order":
            order = (order or []) + args
            order_line = order_line or lineno
            if len(set(order)) != len(order):
                dup = next(e for i, e in enumerate(order) if e in order[:i])
                raise UpgSyntaxError(f"edge {dup!r} listed twice in order", lineno)
        else:
            raise UpgSyntaxError(f"unknown directive {head!r}", lineno)
    if not seen_header:
        raise UpgSyntaxError("missing header 'upg 1'", 1)

    try:
        graph = build_graph(vertices, edges, boundary)
    except GraphError as exc:
        line = next((spans[w] for w in exc.witness if w in spans), None)
        raise ValidationError(str(exc), line) from exc
    if order is None:
        return UpgDocument(graph, None, spans)
    if set(order) != set(graph.edges):
        missing = sorted(set(graph.edges) - set(order))
        extra = sorted(set(order) - set(graph.edges))
        raise OrderDomainMismatch(f"order misses {missing} and has unknown {extra}", order_line)
    return UpgDocument(graph, EdgeOrder(tuple(order)), spans)


def serialize_upg(doc: UpgDocument) -> str:
    g = doc.graph
    lines = ["upg 1"]
    for v in sorted(g.vertices):
        lines.append(f"vertex {v} boundary" if v in g.boundary else f"vertex {v}")
    for e in sorted(g.edges):
        s, t = g.edges[e]
        lines.append(f"edge {e} {s} {t}")
    if doc.order is not None:
        lines.append(" ".join(("order",) + doc.order.sequence))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# layer stacks


def parse_layers(text: str) -> LayerStack:
    layers: list[list[Cell]] = []
    seen_header = False
    for lineno, _, words in _tokens(text):
        if not seen_header:
            if words != ["layers", "1"]:
                raise UpgSyntaxError("expected header 'layers 1'", lineno)
            seen_header = True
            continue
        head = words[0]
        if head == "layer" and len(words) == 1:
            layers.append([])
            continue
        if head not in ("wire", "node"):
            raise UpgSyntaxError(f"unknown directive {head!r}", lineno)
        if not layers:
            raise UpgSyntaxError(f"{head!r} before the first 'layer'", lineno)
        if head == "wire":
            if len(words) != 1:
                raise UpgSyntaxError("usage: wire", lineno)
            layers[-1].append(WIRE)
            continue
        if len(words) not in (3, 4):
            raise UpgSyntaxError("usage: node P Q [LABEL]", lineno)
        try:
            p, q = int(words[1]), int(words[2])
            layers[-1].append(node(p, q, words[3] if len(words) == 4 else None))
        except ValueError as exc:
            msg = str(exc) if isinstance(exc, InvalidCell) else "node arities must be integers"
            raise UpgSyntaxError(msg, lineno) from exc
    if not seen_header:
        raise UpgSyntaxError("missing header 'layers 1'", 1)
    return LayerStack([LayerSpec(cells) for cells in layers])


def serialize_layers(stack: LayerStack) -> str:
    lines = ["layers 1"]
    for layer in stack.layers:
        lines.append("layer")
        for c in layer.cells:
            if c.kind == "wire":
                lines.append("  wire")
            else:
                label = f" {c.label}" if c.label else ""
                lines.append(f"  node {c.inputs} {c.outputs}{label}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# DOT


def _q(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(doc: UpgDocument) -> str:
    """Graphviz digraph for eyeballing a UPO-graph.

    Edges are emitted in rank order with ``ordering=out``, which nudges dot
    toward the left-to-right reading of the order; the layout itself is
    dot's and carries no planarity guarantee.
    """
    g, order = doc.graph, doc.order
    edge_seq = list(order) if order is not None else sorted(g.edges)
    out = [
        "digraph upg {",
        "  rankdir=TB;",
        "  ordering=out;",
        '  node [shape=circle, fontsize=10];',
    ]
    for v in sorted(g.vertices):
        if v in g.boundary:
            out.append(f"  {_q(v)} [shape=point, xlabel={_q(v)}];")
        else:
            out.append(f"  {_q(v)} [shape=circle, label={_q(v)}];")
    inputs = sorted(v for v in g.input_vertices)
    outputs = sorted(v for v in g.output_vertices)
    if inputs:
        out.append("  { rank=source; " + " ".join(_q(v) + ";" for v in inputs) + " }")
    if outputs:
        out.append("  { rank=sink; " + " ".join(_q(v) + ";" for v in outputs) + " }")
    for e in edge_seq:
        s, t = g.edges[e]
        attrs = [f"id={_q(e)}"]
        if order is not None:
            attrs.append(f'label="{order.rank(e)}"')
        attrs.append(f"tooltip={_q(e)}")
        out.append(f"  {_q(s)} -> {_q(t)} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# files


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def write_text(path: str, text: str) -> None:
    """Write ``text`` to ``path`` atomically; ``-`` means stdout."""
    if path == "-":
        sys.stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
