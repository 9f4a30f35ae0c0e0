"""Total orders on edge sets and the interval machinery built on them.

Ranks are dense integers ``1..n``.  Intervals are closed rank ranges; the
empty interval is a distinct value so empty-set conventions stay explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import ClassVar, Iterable, Iterator, Sequence

from .errors import MarkersNotSorted, OrderError, OverlappingDomains, UnknownEdge
from .graph import EdgeId


@dataclass(frozen=True)
class EdgeOrder:
    """A linear order on a finite set of edge ids, lowest first."""

    sequence: tuple[EdgeId, ...]

    def __post_init__(self) -> None:
        if len(set(self.sequence)) != len(self.sequence):
            dup = next(e for i, e in enumerate(self.sequence) if e in self.sequence[:i])
            raise OrderError(f"edge {dup!r} appears twice in order")

    @classmethod
    def from_sequence(cls, edges: Iterable[EdgeId]) -> EdgeOrder:
        return cls(tuple(edges))

    @classmethod
    def from_ranks(cls, ranks: dict[EdgeId, int]) -> EdgeOrder:
        if sorted(ranks.values()) != list(range(1, len(ranks) + 1)):
            raise OrderError("ranks must be a bijection onto 1..n")
        return cls(tuple(sorted(ranks, key=ranks.__getitem__)))

    @cached_property
    def ranks(self) -> dict[EdgeId, int]:
        return {e: i for i, e in enumerate(self.sequence, start=1)}

    def rank(self, e: EdgeId) -> int:
        try:
            return self.ranks[e]
        except KeyError:
            raise UnknownEdge(f"edge {e!r} is not ordered", (e,)) from None

    @property
    def domain(self) -> frozenset[EdgeId]:
        return frozenset(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[EdgeId]:
        return iter(self.sequence)

    def __contains__(self, e: object) -> bool:
        return e in self.ranks

    def __getitem__(self, rank: int) -> EdgeId:
        """Edge at a 1-based rank."""
        if not 1 <= rank <= len(self.sequence):
            raise IndexError(rank)
        return self.sequence[rank - 1]


@dataclass(frozen=True)
class Interval:
    """Closed rank range ``[lo, hi]``; ``Interval.EMPTY`` has no bounds."""

    lo: int | None
    hi: int | None
    EMPTY: ClassVar[Interval]

    def __post_init__(self) -> None:
        if (self.lo is None) != (self.hi is None):
            raise ValueError("both bounds or neither")
        if self.lo is not None and self.lo > self.hi:
            raise ValueError(f"empty range [{self.lo}, {self.hi}]; use Interval.EMPTY")

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    def __contains__(self, rank: object) -> bool:
        return self.lo is not None and self.lo <= rank <= self.hi

    def __len__(self) -> int:
        return 0 if self.lo is None else self.hi - self.lo + 1

    def ranks(self) -> range:
        return range(0) if self.lo is None else range(self.lo, self.hi + 1)

    def issubset(self, other: Interval) -> bool:
        if self.is_empty:
            return True
        return not other.is_empty and other.lo <= self.lo and self.hi <= other.hi

    def isdisjoint(self, other: Interval) -> bool:
        if self.is_empty or other.is_empty:
            return True
        return self.hi < other.lo or other.hi < self.lo

    def __repr__(self) -> str:
        return "Interval.EMPTY" if self.is_empty else f"[{self.lo}, {self.hi}]"


Interval.EMPTY = Interval(None, None)


def hull(order: EdgeOrder, edges: Iterable[EdgeId]) -> Interval:
    """Smallest closed rank interval containing ``edges``."""
    ranks = [order.rank(e) for e in edges]
    if not ranks:
        return Interval.EMPTY
    return Interval(min(ranks), max(ranks))


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Block:
    label: str
    edges: tuple[EdgeId, ...]


@dataclass(frozen=True)
class IntervalPartition:
    """Consecutive blocks of a total order, each entirely below the next.

    Blocks are labelled ``B0, m1, B1, ..., mn, Bn`` by
    :func:`partition_by_markers`; ``markers`` keeps the cut edges.
    """

    blocks: tuple[Block, ...]
    markers: tuple[EdgeId, ...] = ()

    def __getitem__(self, label: str) -> tuple[EdgeId, ...]:
        for b in self.blocks:
            if b.label == label:
                return b.edges
        raise KeyError(label)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(b.label for b in self.blocks)

    def flatten(self) -> EdgeOrder:
        return EdgeOrder(tuple(e for b in self.blocks for e in b.edges))


def partition_by_markers(order: EdgeOrder, markers: Sequence[EdgeId]) -> IntervalPartition:
    """Cut ``order`` at each marker edge.

    Returns ``B0 < {m1} < B1 < ... < {mn} < Bn``; ``B0`` holds edges below the
    first marker and ``Bn`` those above the last.
    """
    ranks = [order.rank(m) for m in markers]
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise MarkersNotSorted(f"markers {tuple(markers)} are not strictly increasing")
    blocks: list[Block] = []
    lo = 1
    for k, (m, r) in enumerate(zip(markers, ranks), start=1):
        blocks.append(Block(f"B{k - 1}", order.sequence[lo - 1 : r - 1]))
        blocks.append(Block(f"m{k}", (m,)))
        lo = r + 1
    blocks.append(Block(f"B{len(ranks)}", order.sequence[lo - 1 :]))
    return IntervalPartition(tuple(blocks), tuple(markers))


def closures(partition: IntervalPartition, side: Side) -> IntervalPartition:
    """Merge each marker into a neighbouring basic block.

    ``RIGHT`` gives ``J_k = B_{k-1} + {m_k}`` for ``k = 1..n`` and
    ``J_{n+1} = B_n``.  ``LEFT`` gives ``I_0 = B_0`` and ``I_k = {m_k} + B_k``.
    """
    n = len(partition.markers)
    basic = [partition[f"B{k}"] for k in range(n + 1)]
    if side is Side.RIGHT:
        blocks = [Block(f"J{k}", basic[k - 1] + (partition.markers[k - 1],)) for k in range(1, n + 1)]
        blocks.append(Block(f"J{n + 1}", basic[n]))
    else:
        blocks = [Block("I0", basic[0])]
        blocks += [Block(f"I{k}", (partition.markers[k - 1],) + basic[k]) for k in range(1, n + 1)]
    return IntervalPartition(tuple(blocks), partition.markers)


def restrict(order: EdgeOrder, subset: Iterable[EdgeId]) -> EdgeOrder:
    keep = set(subset)
    missing = keep - order.domain
    if missing:
        e = min(missing)
        raise UnknownEdge(f"edge {e!r} is not ordered", (e,))
    return EdgeOrder(tuple(e for e in order.sequence if e in keep))


def concat(blocks: Iterable[EdgeOrder | Sequence[EdgeId]]) -> EdgeOrder:
    """Chain orders with pairwise disjoint domains, earlier blocks lowest."""
    out: list[EdgeId] = []
    seen: set[EdgeId] = set()
    for block in blocks:
        for e in block:
            if e in seen:
                raise OverlappingDomains(f"edge {e!r} occurs in more than one block")
            seen.add(e)
            out.append(e)
    return EdgeOrder(tuple(out))
