"""Elementary layers and the layer-stack pipeline.

A layer is a single row of cells read left to right.  A ``WIRE`` passes one
edge straight through; a ``NODE(p, q)`` is one inner vertex with ``p``
incoming and ``q`` outgoing edges, each attached to its own boundary leaf.
Stacking layers top to bottom and composing them yields the order of the
whole drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .compose import ComposedGraph, compose_many
from .errors import InvalidCell, WidthMismatch
from .graph import EdgeId, ProgressiveGraph, build_graph
from .order import EdgeOrder


@dataclass(frozen=True)
class Cell:
    kind: str  # "wire" | "node"
    inputs: int = 1
    outputs: int = 1
    label: str | None = None

    def __post_init__(self) -> None:
        if self.kind == "wire":
            if (self.inputs, self.outputs) != (1, 1):
                raise InvalidCell("a wire has exactly one input and one output")
        elif self.kind == "node":
            if self.inputs < 0 or self.outputs < 0 or self.inputs + self.outputs < 1:
                raise InvalidCell(f"node arity ({self.inputs}, {self.outputs}) must be nonnegative with p + q >= 1")
        else:
            raise InvalidCell(f"unknown cell kind {self.kind!r}")


WIRE = Cell("wire")


def node(p: int, q: int, label: str | None = None) -> Cell:
    return Cell("node", p, q, label)


@dataclass(frozen=True)
class LayerSpec:
    cells: tuple[Cell, ...] = ()

    def __init__(self, cells: Sequence[Cell] = ()):
        object.__setattr__(self, "cells", tuple(cells))


@dataclass(frozen=True)
class LayerStack:
    layers: tuple[LayerSpec, ...] = ()

    def __init__(self, layers: Sequence[LayerSpec | Sequence[Cell]] = ()):
        object.__setattr__(
            self, "layers", tuple(x if isinstance(x, LayerSpec) else LayerSpec(x) for x in layers)
        )


def widths(layer: LayerSpec | Sequence[Cell]) -> tuple[int, int]:
    """(top, bottom) width: how many edges cross the layer's upper and lower cut."""
    cells = layer.cells if isinstance(layer, LayerSpec) else layer
    return sum(c.inputs for c in cells), sum(c.outputs for c in cells)


def layer_to_upo(layer: LayerSpec | Sequence[Cell], prefix: str = "L0") -> tuple[ProgressiveGraph, EdgeOrder]:
    """Build an elementary layer and its canonical order.

    Cells are scanned left to right; a node contributes its inputs left to
    right and then its outputs left to right.  Ids are
    ``{prefix}.c{j}`` for node vertices, ``{prefix}.c{j}.t{i}`` /
    ``.b{i}`` for top and bottom leaves, ``.i{i}`` / ``.o{i}`` for node
    edges and ``.w`` for a wire (all indices 1-based).
    """
    cells = layer.cells if isinstance(layer, LayerSpec) else tuple(layer)
    vertices: list[str] = []
    edges: list[tuple[EdgeId, str, str]] = []
    boundary: list[str] = []
    for j, cell in enumerate(cells, start=1):
        if not isinstance(cell, Cell):
            raise InvalidCell(f"cell {j} is not a Cell: {cell!r}")
        base = f"{prefix}.c{j}"
        if cell.kind == "wire":
            top, bottom = f"{base}.t1", f"{base}.b1"
            vertices += [top, bottom]
            boundary += [top, bottom]
            edges.append((f"{base}.w", top, bottom))
            continue
        vertices.append(base)
        for i in range(1, cell.inputs + 1):
            vertices.append(f"{base}.t{i}")
            boundary.append(f"{base}.t{i}")
            edges.append((f"{base}.i{i}", f"{base}.t{i}", base))
        for i in range(1, cell.outputs + 1):
            vertices.append(f"{base}.b{i}")
            boundary.append(f"{base}.b{i}")
            edges.append((f"{base}.o{i}", base, f"{base}.b{i}"))
    g = build_graph(vertices, edges, boundary)
    return g, EdgeOrder(tuple(e for e, _, _ in edges))


def pipeline(
    stack: LayerStack | Sequence[LayerSpec | Sequence[Cell]],
    *,
    namespace: str = "",
    check: bool = True,
) -> ComposedGraph:
    """Compose a top-to-bottom stack of layers into one UPO-graph.

    Layer ``k`` is built with prefix ``{namespace}L{k}`` (0-based), so two
    pipelines with different namespaces can be composed with each other.
    """
    if not isinstance(stack, LayerStack):
        stack = LayerStack(stack)
    if not stack.layers:
        raise ValueError("empty layer stack")
    for k in range(1, len(stack.layers)):
        below = widths(stack.layers[k - 1])[1]
        above = widths(stack.layers[k])[0]
        if below != above:
            raise WidthMismatch(
                f"layer {k - 1} has bottom width {below} but layer {k} has top width {above}", k
            )
    stages = [layer_to_upo(layer, f"{namespace}L{k}") for k, layer in enumerate(stack.layers)]
    return compose_many(stages, check=check)
