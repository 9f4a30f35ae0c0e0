"""Brute-force ground truth for small graphs.

:func:`enumerate_upos` walks linear extensions of the edge reachability
order by backtracking and keeps the complete orders accepted by a full
checker.  Prefix pruning only discards prefixes that no valid completion
can have, so the final filter alone decides membership.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .axioms import check_admissible, check_Q, check_U
from .errors import TooLarge
from .graph import EdgeId, ProgressiveGraph, domain_codomain
from .order import EdgeOrder

MAX_ENUMERATION_EDGES = 12
MAX_PERMUTATION_EDGES = 7


@dataclass(frozen=True)
class EnumerationResult:
    orders: tuple[EdgeOrder, ...]
    exhausted: bool

    def __len__(self) -> int:
        return len(self.orders)

    def __contains__(self, order: object) -> bool:
        return order in self.orders


class _Search:
    def __init__(self, g: ProgressiveGraph, admissible: bool, prune: bool):
        self.g = g
        self.admissible = admissible
        self.prune = prune
        self.edges = sorted(g.edges)
        self.preds = {e: len(g.in_edges(g.source(e))) for e in self.edges}
        self.inputs, self.outputs = domain_codomain(g)
        inner = set(g.inner_vertices)
        self.vertices = list(g.vertices)
        self.n_in = {v: len(g.in_edges(v)) for v in self.vertices}
        self.n_out = {v: len(g.out_edges(v)) for v in self.vertices}
        self.inner = inner
        # per-vertex placement state: count placed and rank of first placed
        self.c_in = dict.fromkeys(self.vertices, 0)
        self.c_out = dict.fromkeys(self.vertices, 0)
        self.f_in: dict[str, int] = {}
        self.f_out: dict[str, int] = {}
        self.last_in: dict[str, int] = {}
        self.last_out: dict[str, int] = {}

    def _open(self, count: dict[str, int], total: dict[str, int], v: str) -> bool:
        return 0 < count[v] < total[v]

    def allowed(self, e: EdgeId, placed: list[EdgeId]) -> bool:
        g = self.g
        s, t = g.edges[e]
        if placed:
            # a processive vertex's first out-edge follows its last in-edge directly
            prev_t = g.target(placed[-1])
            if self.n_out[prev_t] and self.c_in[prev_t] == self.n_in[prev_t] and self.c_out[prev_t] == 0:
                if s != prev_t:
                    return False
        for v in self.vertices:
            if v != t and self._open(self.c_in, self.n_in, v):
                # e falls inside hull(I(v)): all of I(t) must sit inside it
                if self.c_in[t] and self.f_in[t] < self.f_in[v]:
                    return False
            if v != s and self._open(self.c_out, self.n_out, v):
                if self.c_out[s] and self.f_out[s] < self.f_out[v]:
                    return False
        # closing I(t): no other in-set may straddle its far end
        if self.c_in[t] + 1 == self.n_in[t] and self.c_in[t]:
            for v in self.vertices:
                if v != t and self._open(self.c_in, self.n_in, v) and self.last_in[v] > self.f_in[t]:
                    return False
        if self.c_out[s] + 1 == self.n_out[s] and self.c_out[s]:
            for v in self.vertices:
                if v != s and self._open(self.c_out, self.n_out, v) and self.last_out[v] > self.f_out[s]:
                    return False
        if self.admissible:
            if e in self.inputs and any(self._open(self.c_out, self.n_out, v) for v in self.inner):
                return False
            if e in self.outputs and any(self._open(self.c_in, self.n_in, v) for v in self.inner):
                return False
        return True

    def place(self, e: EdgeId, rank: int) -> tuple:
        s, t = self.g.edges[e]
        saved = (self.f_in.get(t), self.f_out.get(s), self.last_in.get(t), self.last_out.get(s))
        if not self.c_in[t]:
            self.f_in[t] = rank
        if not self.c_out[s]:
            self.f_out[s] = rank
        self.last_in[t] = rank
        self.last_out[s] = rank
        self.c_in[t] += 1
        self.c_out[s] += 1
        for f in self.g.out_edges(t):
            self.preds[f] -= 1
        return saved

    def unplace(self, e: EdgeId, saved: tuple) -> None:
        s, t = self.g.edges[e]
        self.c_in[t] -= 1
        self.c_out[s] -= 1
        for f in self.g.out_edges(t):
            self.preds[f] += 1
        for store, key, old in (
            (self.f_in, t, saved[0]),
            (self.f_out, s, saved[1]),
            (self.last_in, t, saved[2]),
            (self.last_out, s, saved[3]),
        ):
            if old is None:
                store.pop(key, None)
            else:
                store[key] = old

    def run(self):
        placed: list[EdgeId] = []
        used: set[EdgeId] = set()

        def walk():
            if len(placed) == len(self.edges):
                yield tuple(placed)
                return
            for e in self.edges:
                if e in used or self.preds[e]:
                    continue
                if self.prune and not self.allowed(e, placed):
                    continue
                saved = self.place(e, len(placed) + 1)
                placed.append(e)
                used.add(e)
                yield from walk()
                used.discard(e)
                placed.pop()
                self.unplace(e, saved)

        return walk()


def enumerate_upos(
    g: ProgressiveGraph,
    require_admissible: bool = False,
    definition: str = "q",
    limit: int | None = None,
    *,
    prune: bool = True,
    force: bool = False,
) -> EnumerationResult:
    """All upward planar orders of ``g`` (optionally only admissible ones).

    Orders are listed in lexicographic order of their edge-id sequences.
    ``exhausted`` is False when ``limit`` cut the listing short.
    """
    if len(g.edges) > MAX_ENUMERATION_EDGES and not force:
        raise TooLarge(f"{len(g.edges)} edges exceeds the enumeration cap of {MAX_ENUMERATION_EDGES}")
    checker = {"u": check_U, "q": check_Q}[definition.lower()]
    found: list[EdgeOrder] = []
    for seq in _Search(g, require_admissible, prune).run():
        order = EdgeOrder(seq)
        if not checker(g, order).passed:
            continue
        if require_admissible and not check_admissible(g, order).passed:
            continue
        if limit is not None and len(found) >= limit:
            return EnumerationResult(tuple(found), False)
        found.append(order)
    return EnumerationResult(tuple(found), True)


def find_disagreement(g: ProgressiveGraph, *, force: bool = False) -> EdgeOrder | None:
    """First permutation of ``E(g)`` on which the two axiom systems disagree."""
    if len(g.edges) > MAX_PERMUTATION_EDGES and not force:
        raise TooLarge(f"{len(g.edges)} edges exceeds the permutation cap of {MAX_PERMUTATION_EDGES}")
    for perm in itertools.permutations(sorted(g.edges)):
        order = EdgeOrder(perm)
        if check_U(g, order).passed != check_Q(g, order).passed:
            return order
    return None


def definitions_agree(g: ProgressiveGraph, *, force: bool = False) -> bool:
    """Whether both axiom systems give the same verdict on every permutation."""
    return find_disagreement(g, force=force) is None
