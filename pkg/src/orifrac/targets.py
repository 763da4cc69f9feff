"""Circulant targets T_l and k-niceness.

T_l lives on ``n = 4m + 1`` vertices with ``m = 2**l``; vertex ``x_i`` carries
the residues ``i, ..., i+m-1 (mod n)`` and has arcs to ``x_{i+m}`` and
``x_{i+m+1}``.  Reading the tuples as color sets gives an m-fold n-coloring,
so anything mapping to T_l has fractional value at most ``4 + 1/m``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .coloring import BFoldColoring, to_mask
from .graph import OrientedGraph, _bits, build_graph

MAX_LEVEL = 3


@dataclass(frozen=True)
class TargetGraph:
    l: int
    m: int
    n: int
    graph: OrientedGraph
    tuples: tuple[tuple[int, ...], ...]


def build_target(l: int, max_level: int = MAX_LEVEL) -> TargetGraph:
    if l < 0:
        raise ValueError(f"level must be non-negative, got {l}")
    if l > max_level:
        raise ValueError(f"level {l} exceeds the configured limit {max_level}")
    m = 2**l
    n = 4 * m + 1
    tuples = tuple(tuple((i + j) % n for j in range(m)) for i in range(n))
    arcs = [(i, (i + d) % n) for i in range(n) for d in (m, m + 1)]
    labels = ["{" + ",".join(map(str, t)) + "}" for t in tuples]
    return TargetGraph(l, m, n, build_graph(n, arcs, labels), tuples)


def tuple_coloring(t: TargetGraph) -> BFoldColoring:
    return BFoldColoring(t.n, t.m, tuple(to_mask(tup) for tup in t.tuples))


@dataclass(frozen=True)
class NicenessReport:
    k: int
    nice: bool | None  # None: budget exhausted
    signs: tuple[str, ...] | None = None  # alpha_1..alpha_k; alpha_k is applied first
    start: int | None = None
    reached: tuple[int, ...] | None = None
    steps: int = 0

    @property
    def outcome(self) -> str:
        return {True: "nice", False: "counterexample", None: "inconclusive"}[self.nice]


def signed_neighborhood(g: OrientedGraph, signs, x: int) -> int:
    """N^alpha(x) as a bitmask, applying ``signs[-1]`` first (direct recomputation)."""
    cur = 1 << x
    for s in reversed(signs):
        table = g.out_masks if s == "+" else g.in_masks
        nxt = 0
        for v in _bits(cur):
            nxt |= table[v]
        cur = nxt
    return cur


def check_nice(g: OrientedGraph, k: int, max_steps: int | None = None,
               time_limit: float | None = None) -> NicenessReport:
    """Exhaustively decide whether every signed k-step neighbourhood is all of V.

    Reached sets are propagated depth-first over the sign tree with
    memoisation of ``(set, remaining steps)`` pairs already known to end in V,
    so shared prefixes and coinciding sets are expanded once.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    everything = (1 << g.n) - 1
    outs, ins = g.out_masks, g.in_masks
    good: set[tuple[int, int]] = set()
    steps = 0
    deadline = time.monotonic() + time_limit if time_limit else 0.0
    path: list[str] = []

    class _Stop(Exception):
        pass

    def step(cur: int, table) -> int:
        nxt = 0
        while cur:
            low = cur & -cur
            nxt |= table[low.bit_length() - 1]
            cur ^= low
        return nxt

    def dfs(cur: int, remaining: int):
        nonlocal steps
        if remaining == 0:
            return None if cur == everything else cur
        if (cur, remaining) in good:
            return None
        for sign, table in (("+", outs), ("-", ins)):
            steps += 1
            if max_steps and steps > max_steps:
                raise _Stop
            if deadline and steps & 0x3FF == 0 and time.monotonic() > deadline:
                raise _Stop
            path.append(sign)
            bad = dfs(step(cur, table), remaining - 1)
            if bad is not None:
                return bad
            path.pop()
        good.add((cur, remaining))
        return None

    try:
        for x in range(g.n):
            path.clear()
            bad = dfs(1 << x, k)
            if bad is not None:
                signs = tuple(reversed(path))
                return NicenessReport(k, False, signs, x, tuple(_bits(bad)), steps)
    except _Stop:
        return NicenessReport(k, None, steps=steps)
    return NicenessReport(k, True, steps=steps)


@dataclass(frozen=True)
class EpsilonReport:
    eps: Fraction
    l: int
    m: int
    n: int
    girth: int
    bound: Fraction
    note: str = ("bound holds for oriented planar graphs of girth >= the stated value, "
                 "conditional on the cited result that n-nice targets attract every "
                 "planar graph of girth >= 5n-1")


def epsilon_report(eps: Fraction) -> EpsilonReport:
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    l = 0
    while Fraction(1, 2**l) > eps:
        l += 1
    m = 2**l
    n = 4 * m + 1
    return EpsilonReport(eps, l, m, n, 5 * n - 1, Fraction(n, m))
