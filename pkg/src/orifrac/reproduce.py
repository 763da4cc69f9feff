"""Reproduction suites: expected vs computed tables for the CLI ``reproduce`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .coloring import verify_coloring
from .cycles import cycle_value
from .graph import OrientedGraph, build_graph, directed_cycle, random_oriented_graph
from .solver import Outcome, SearchBudget, bound_sweep, hom_exists
from .targets import build_target, check_nice, tuple_coloring

DEFAULT_SEED = 20240613


@dataclass(frozen=True)
class Row:
    item: str
    expected: str
    computed: str
    ok: bool


def fmt(q) -> str:
    if q is None:
        return "-"
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cycles_suite(rs=range(4, 13), b_max: int = 3, budget: SearchBudget | None = None) -> list[Row]:
    rows = []
    for r in rs:
        tv = cycle_value(r)
        rep = bound_sweep(directed_cycle(r), b_max, budget, graph_id=f"C_{r}")
        b, k = rep.upper_source or (None, None)
        computed = (f"upper {fmt(rep.upper)} (b={b}, k={k}), "
                    f"lower {fmt(rep.lower)} ({rep.lower_source})")
        ok = rep.conclusive and rep.upper == tv.value and rep.lower <= tv.value
        rows.append(Row(f"C_{r}", tv.describe(), computed, ok))
    return rows


def target_invariants(t) -> list[str]:
    """Violated structural properties of a target (empty when all hold)."""
    bad = []
    g = t.graph
    for v in range(t.n):
        if len(g.out_neighbors(v)) != 2 or len(g.in_neighbors(v)) != 2:
            bad.append(f"degree at x_{v}")
        for w in ((v + t.m) % t.n, (v + t.m + 1) % t.n):
            if not g.has_arc(v, w):
                bad.append(f"missing arc x_{v} -> x_{w}")
    for u, v in g.arcs:
        if set(t.tuples[u]) & set(t.tuples[v]):
            bad.append(f"tuples of arc {u}->{v} meet")
    return bad


def planar_suite(levels=(0, 1, 2)) -> list[Row]:
    rows = []
    for l in levels:
        t = build_target(l)
        bad = target_invariants(t)
        rows.append(Row(f"T_{l} structure", "out/in-degree 2, disjoint arc tuples",
                        "ok" if not bad else "; ".join(bad[:3]), not bad))
        rep = check_nice(t.graph, t.n)
        rows.append(Row(f"T_{l} {t.n}-nice", "nice", rep.outcome, rep.nice is True))
        col = tuple_coloring(t)
        valid = verify_coloring(t.graph, col).valid
        want = 4 + Fraction(1, 2**l)
        rows.append(Row(f"T_{l} tuple coloring", f"valid, ratio {fmt(want)}",
                        f"{'valid' if valid else 'invalid'}, ratio {fmt(col.ratio())}",
                        valid and col.ratio() == want))
        if l <= 1:
            r = 5 * 2 ** (l + 1)
            h = hom_exists(directed_cycle(r), t.graph)
            rows.append(Row(f"C_{r} -> T_{l}", "exists", str(h.outcome), h.outcome is Outcome.EXISTS))
    return rows


def random_corpus(seed: int = DEFAULT_SEED, count: int = 200, n_min: int = 4, n_max: int = 8) -> list[OrientedGraph]:
    rng = random.Random(seed)
    return [random_oriented_graph(rng.randint(n_min, n_max), rng) for _ in range(count)]


def hom_pairs(seed: int = DEFAULT_SEED, count: int = 50) -> list[tuple[OrientedGraph, OrientedGraph, list[int]]]:
    """Pairs ``(G, H, phi)`` where G is built as a random preimage of H under ``phi``."""
    rng = random.Random(seed + 1)
    out = []
    while len(out) < count:
        h = random_oriented_graph(rng.randint(4, 8), rng)
        if not h.arcs:
            continue
        n = rng.randint(4, 8)
        phi = [rng.randrange(h.n) for _ in range(n)]
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and h.has_arc(phi[u], phi[v]) and rng.random() < 0.5]
        out.append((build_graph(n, arcs), h, phi))
    return out


def properties_suite(seed: int = DEFAULT_SEED, count: int = 200, pairs: int = 50, b_max: int = 2,
                     budget: SearchBudget | None = None) -> list[Row]:
    rows = []
    conclusive = ok = 0
    for i, g in enumerate(random_corpus(seed, count)):
        rep = bound_sweep(g, b_max, budget, graph_id=f"G{i}")
        if not rep.conclusive:
            continue
        conclusive += 1
        good = rep.lower <= rep.upper <= rep.chi_o and not rep.problems(g)
        ok += good
        if not good:
            rows.append(Row(f"G{i} sandwich", "lower <= upper <= chi_o",
                            f"{fmt(rep.lower)}, {fmt(rep.upper)}, {rep.chi_o}", False))
    rows.insert(0, Row("sandwich", f"{count} graphs, all conclusive sweeps ordered",
                       f"{ok}/{conclusive} ordered ({count - conclusive} inconclusive)", ok == conclusive))

    checked = mono = 0
    for j, (g, h, phi) in enumerate(hom_pairs(seed, pairs)):
        res = hom_exists(g, h, budget)
        if res.outcome is not Outcome.EXISTS:
            continue
        rg, rh = bound_sweep(g, b_max, budget), bound_sweep(h, b_max, budget)
        if not (rg.conclusive and rh.conclusive):
            continue
        checked += 1
        pulled = rh.certificates[rh.upper_source].compose(res.mapping)
        good = rg.upper <= rh.upper and verify_coloring(g, pulled).valid
        mono += good
        if not good:
            rows.append(Row(f"pair {j}", "upper(G) <= upper(H)", f"{fmt(rg.upper)} vs {fmt(rh.upper)}", False))
    rows.append(Row("hom monotonicity", f"{pairs} pairs, G -> H implies upper(G) <= upper(H)",
                    f"{mono}/{checked} hold", mono == checked and checked > 0))
    return rows


SUITES = {"cycles": cycles_suite, "planar": planar_suite, "properties": properties_suite}
