"""Upward planar orders on progressive graphs.

Check the axioms of an edge order, compose admissible UPO-graphs by the
shuffle rule, and compute the order of a whole drawing from a stack of
elementary layers.
"""

from .axioms import CheckReport, Diagnostic, check_admissible, check_Q, check_U, is_admissible_upo
from .compose import ComposedGraph, Origin, compose, compose_many
from .graph import (
    ProgressiveGraph,
    build_graph,
    domain_codomain,
    edge_reachable,
    incidence,
    is_processive,
    virtualize_isolated,
)
from .io import UpgDocument, export_dot, parse_layers, parse_upg, serialize_layers, serialize_upg
from .layers import WIRE, Cell, LayerSpec, LayerStack, layer_to_upo, node, pipeline, widths
from .oracle import EnumerationResult, definitions_agree, enumerate_upos
from .order import EdgeOrder, Interval, IntervalPartition, Side, closures, concat, hull, partition_by_markers, restrict

__all__ = [
    "CheckReport",
    "Cell",
    "ComposedGraph",
    "Diagnostic",
    "EdgeOrder",
    "EnumerationResult",
    "Interval",
    "IntervalPartition",
    "LayerSpec",
    "LayerStack",
    "Origin",
    "ProgressiveGraph",
    "Side",
    "UpgDocument",
    "WIRE",
    "build_graph",
    "check_Q",
    "check_U",
    "check_admissible",
    "closures",
    "compose",
    "compose_many",
    "concat",
    "definitions_agree",
    "domain_codomain",
    "edge_reachable",
    "enumerate_upos",
    "export_dot",
    "hull",
    "incidence",
    "is_admissible_upo",
    "is_processive",
    "layer_to_upo",
    "node",
    "parse_layers",
    "parse_upg",
    "partition_by_markers",
    "pipeline",
    "restrict",
    "serialize_layers",
    "serialize_upg",
    "virtualize_isolated",
    "widths",
]
