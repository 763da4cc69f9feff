"""Oriented graphs, generators, girth and the 2-dipath closure.

Vertices are dense integer indices ``0..n-1``.  Neighbourhoods are kept as
integer bitmasks so that set operations are single word operations at the
sizes this package targets (a few dozen vertices).
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a digraph violates the oriented-graph invariants."""

    def __init__(self, message: str, arc: tuple[int, int] | None = None):
        super().__init__(message)
        self.arc = arc


@dataclass(frozen=True)
class OrientedGraph:
    """Loop-free digraph without opposite arc pairs.

    Use :func:`build_graph` to construct one; the constructor re-validates.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc ({u}, {v}) has an endpoint outside 0..{self.n - 1}", (u, v))
            if u == v:
                raise GraphError(f"loop at vertex {u}", (u, v))
            if (v, u) in seen:
                raise GraphError(f"2-cycle between {u} and {v}", (u, v))
            seen.add((u, v))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError(f"{len(self.labels)} labels for {self.n} vertices")

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * self.n
        for u, v in self.arcs:
            inn[v] |= 1 << u
        return tuple(inn)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Underlying simple graph adjacency."""
        return tuple(o | i for o, i in zip(self.out_masks, self.in_masks))

    @cached_property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def out_neighbors(self, v: int) -> list[int]:
        return _bits(self.out_masks[v])

    def in_neighbors(self, v: int) -> list[int]:
        return _bits(self.in_masks[v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.neighbor_masks[u] >> v & 1)

    def bfs_order(self, root: int = 0) -> list[int]:
        """BFS order on the underlying graph; unreached vertices start new trees."""
        order: list[int] = []
        seen = 0
        starts = [root] + [v for v in range(self.n) if v != root] if self.n else []
        for s in starts:
            if seen >> s & 1:
                continue
            seen |= 1 << s
            queue = deque([s])
            while queue:
                u = queue.popleft()
                order.append(u)
                for w in _bits(self.neighbor_masks[u] & ~seen):
                    seen |= 1 << w
                    queue.append(w)
        return order

    @property
    def vertex_count(self) -> int:
        return self.n

    def __len__(self) -> int:
        return self.n


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(vertex_count: int, arcs: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> OrientedGraph:
    arcs = tuple((int(u), int(v)) for u, v in arcs)
    return OrientedGraph(vertex_count, arcs, tuple(labels) if labels is not None else None)


def directed_cycle(r: int) -> OrientedGraph:
    """The directed cycle u_0 -> u_1 -> ... -> u_{r-1} -> u_0."""
    if r < 3:
        raise GraphError(f"a directed cycle needs at least 3 vertices, got {r}")
    return build_graph(r, [(i, (i + 1) % r) for i in range(r)])


def directed_path(n: int) -> OrientedGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def random_oriented_graph(n: int, rng: random.Random, p: float = 1 / 3) -> OrientedGraph:
    """Each ordered pair becomes an arc with probability ``p``; 2-cycles are rejected."""
    arcs = set()
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if rng.random() < p and (v, u) not in arcs:
                arcs.add((u, v))
    return build_graph(n, sorted(arcs))


def girth(g: OrientedGraph) -> int | float:
    """Shortest cycle length of the underlying simple graph (``math.inf`` for forests)."""
    best = math.inf
    nbr = g.neighbor_masks
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in _bits(nbr[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class AugmentedAdjacency:
    """Pairs that are adjacent or joined by a directed 2-path (either way round)."""

    base: OrientedGraph
    rows: tuple[int, ...]

    def related(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(len(self.rows)) for y in _bits(self.rows[x]) if x < y]


def augment(g: OrientedGraph) -> AugmentedAdjacency:
    rows = list(g.neighbor_masks)
    for w in range(g.n):
        # every in-neighbour of w reaches every out-neighbour of w
        ins, outs = g.in_masks[w], g.out_masks[w]
        for x in _bits(ins):
            rows[x] |= outs
        for y in _bits(outs):
            rows[y] |= ins
    rows = [row & ~(1 << v) for v, row in enumerate(rows)]
    return AugmentedAdjacency(g, tuple(rows))


def _max_clique(rows: Sequence[int], n: int) -> tuple[int, ...]:
    best = [0, 0]  # size, mask

    def expand(chosen: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(chosen | low, size + 1, cand & rows[v])
            cand ^= low

    expand(0, 0, (1 << n) - 1)
    return tuple(_bits(best[1]))


def _related_directly(g: OrientedGraph, x: int, y: int) -> bool:
    if g.adjacent(x, y):
        return True
    return bool(g.out_masks[x] & g.in_masks[y]) or bool(g.out_masks[y] & g.in_masks[x])


def omega_ro(g: OrientedGraph) -> tuple[int, tuple[int, ...]]:
    """Oriented relative clique number and a maximum witness set."""
    witness = _max_clique(augment(g).rows, g.n)
    assert all(_related_directly(g, x, y) for i, x in enumerate(witness) for y in witness[i + 1:])
    return len(witness), witness


def alpha_o(g: OrientedGraph) -> tuple[int, tuple[int, ...]]:
    """Oriented independence number and a maximum witness set."""
    full = (1 << g.n) - 1
    rows = augment(g).rows
    comp = [full & ~row & ~(1 << v) for v, row in enumerate(rows)]
    witness = _max_clique(comp, g.n)
    assert not any(_related_directly(g, x, y) for i, x in enumerate(witness) for y in witness[i + 1:])
    return len(witness), witness
