"""Exact backtracking search: b-fold colorings, chromatic numbers, homomorphisms.

Every positive answer carries a certificate that is re-verified with the
plain verifier before it is returned; every negative answer is the result
of an exhausted search.  Running out of budget is reported as
``Outcome.INCONCLUSIVE`` and never as a negative.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import kernel
from .coloring import BFoldColoring, is_homomorphism, verify_coloring
from .graph import OrientedGraph, _bits, alpha_o, augment, omega_ro

DEFAULT_MAX_NODES = 10**8
MAX_CANDIDATES = 2_000_000


class Outcome(str, enum.Enum):
    EXISTS = "exists"
    NOT_EXISTS = "not-exists"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = DEFAULT_MAX_NODES
    time_limit: float | None = None

    @classmethod
    def unlimited(cls) -> "SearchBudget":
        return cls(None, None)

    def deadline(self) -> float:
        return time.monotonic() + self.time_limit if self.time_limit else 0.0


@dataclass
class SearchResult:
    outcome: Outcome
    b: int
    k: int
    certificate: BFoldColoring | None = None
    nodes: int = 0

    @property
    def exists(self) -> bool:
        return self.outcome is Outcome.EXISTS


@dataclass(frozen=True)
class _Plan:
    order: list[int]
    forced: list[list[int]]
    arcs: list[list[tuple[int, int]]]


def _plan(g: OrientedGraph) -> _Plan:
    order = g.bfs_order(0)
    pos = {v: i for i, v in enumerate(order)}
    rows = augment(g).rows
    forced = [sorted(pos[u] for u in _bits(rows[v]) if pos[u] < i) for i, v in enumerate(order)]
    arcs: list[list[tuple[int, int]]] = [[] for _ in order]
    for u, v in g.arcs:
        arcs[max(pos[u], pos[v])].append((pos[u], pos[v]))
    for lst in arcs:
        lst.sort()
    return _Plan(order, forced, arcs)


def _candidates(k: int, b: int) -> list[int]:
    if math.comb(k, b) > MAX_CANDIDATES:
        raise ValueError(f"C({k},{b}) candidate sets exceed the desk-scale limit")
    return [sum(1 << c for c in combo) for combo in combinations(range(k), b)]


def _check_params(b: int, k: int) -> None:
    if b < 1 or k < b:
        raise ValueError(f"need 1 <= b <= k, got b={b}, k={k}")


def _run(g, b, k, budget, symmetry, backend, max_solutions):
    _check_params(b, k)
    if symmetry not in ("root", "colors"):
        raise ValueError(f"unknown symmetry mode {symmetry!r}")
    budget = budget or SearchBudget()
    plan = _plan(g)
    root = (1 << b) - 1 if symmetry == "root" else 0
    status, sols, nodes = kernel.search_bfold(
        g.n, k, _candidates(k, b), plan.forced, plan.arcs, root, symmetry == "colors",
        budget.max_nodes or 0, budget.deadline(), max_solutions, backend=backend)
    colorings = []
    for sol in sols:
        masks = [0] * g.n
        for p, v in enumerate(plan.order):
            masks[v] = sol[p]
        colorings.append(BFoldColoring(k, b, tuple(masks)))
    return status, colorings, nodes


def exists_bfold(g: OrientedGraph, b: int, k: int, budget: SearchBudget | None = None,
                 symmetry: str = "colors", backend: str | None = None) -> SearchResult:
    """Decide whether ``g`` has a b-fold oriented k-coloring.

    ``symmetry="root"`` fixes the first vertex to ``{0..b-1}``;
    ``symmetry="colors"`` additionally introduces unused colors in increasing
    order, which is sound because colors are interchangeable.
    """
    status, cols, nodes = _run(g, b, k, budget, symmetry, backend, 1)
    if cols:
        cert = cols[0]
        verdict = verify_coloring(g, cert)
        if not verdict:
            raise AssertionError(f"search produced an invalid certificate: {verdict.violation}")
        return SearchResult(Outcome.EXISTS, b, k, cert, nodes)
    if status == kernel.BUDGET:
        return SearchResult(Outcome.INCONCLUSIVE, b, k, None, nodes)
    return SearchResult(Outcome.NOT_EXISTS, b, k, None, nodes)


def enumerate_bfold(g: OrientedGraph, b: int, k: int, budget: SearchBudget | None = None,
                    symmetry: str = "colors", backend: str | None = None) -> tuple[list[BFoldColoring], bool]:
    """All b-fold k-colorings under the chosen symmetry breaking; flag is False on budget exhaustion."""
    status, cols, _ = _run(g, b, k, budget, symmetry, backend, 0)
    return cols, status != kernel.BUDGET


@dataclass
class ChiResult:
    b: int
    value: int | None
    certificate: BFoldColoring | None
    outcomes: dict[int, Outcome] = field(default_factory=dict)
    conclusive: bool = True

    def ratio(self) -> Fraction | None:
        return None if self.value is None else Fraction(self.value, self.b)


def chi_b(g: OrientedGraph, b: int, budget: SearchBudget | None = None,
          symmetry: str = "colors", backend: str | None = None) -> ChiResult:
    """Smallest k with a b-fold k-coloring, ascending from ``b * omega_ro``.

    If some smaller k was inconclusive the returned value is only an upper
    bound and ``conclusive`` is False.
    """
    if b < 1:
        raise ValueError(f"fold must be positive, got {b}")
    if g.n == 0:
        raise ValueError("empty graph")
    omega, _ = omega_ro(g)
    res = ChiResult(b, None, None)
    for k in range(b * max(omega, 1), b * g.n + 1):
        r = exists_bfold(g, b, k, budget, symmetry, backend)
        res.outcomes[k] = r.outcome
        if r.outcome is Outcome.INCONCLUSIVE:
            res.conclusive = False
        elif r.exists:
            res.value, res.certificate = k, r.certificate
            return res
    # all-distinct sets always work, so only exhausted budgets get here
    res.conclusive = False
    return res


def chi_o(g: OrientedGraph, budget: SearchBudget | None = None,
          symmetry: str = "colors", backend: str | None = None) -> ChiResult:
    return chi_b(g, 1, budget, symmetry, backend)


@dataclass
class HomResult:
    outcome: Outcome
    mapping: list[int] | None = None
    nodes: int = 0


def hom_exists(g: OrientedGraph, h: OrientedGraph, budget: SearchBudget | None = None) -> HomResult:
    """Backtracking search for an arc-preserving map ``g -> h``."""
    budget = budget or SearchBudget()
    if g.n == 0:
        return HomResult(Outcome.EXISTS, [], 0)
    if h.n == 0:
        return HomResult(Outcome.NOT_EXISTS, None, 0)
    order = g.bfs_order(0)
    pos = {v: i for i, v in enumerate(order)}
    rows = augment(g).rows
    outs, ins = g.out_masks, g.in_masks
    h_out, h_in = h.out_masks, h.in_masks
    everything = (1 << h.n) - 1
    phi = [-1] * g.n
    nodes = 0
    max_nodes = budget.max_nodes or 0
    deadline = budget.deadline()

    class _Stop(Exception):
        pass

    def rec(i: int) -> bool:
        nonlocal nodes
        if i == g.n:
            return True
        v = order[i]
        allowed = everything
        for w in _bits(outs[v]):
            if pos[w] < i:
                allowed &= h_in[phi[w]]
        for u in _bits(ins[v]):
            if pos[u] < i:
                allowed &= h_out[phi[u]]
        # 2-dipath endpoints can never share an image in an oriented target
        for u in _bits(rows[v]):
            if pos[u] < i:
                allowed &= ~(1 << phi[u])
        for t in _bits(allowed):
            nodes += 1
            if max_nodes and nodes > max_nodes:
                raise _Stop
            if deadline and nodes & 0xFFF == 0 and time.monotonic() > deadline:
                raise _Stop
            phi[v] = t
            if rec(i + 1):
                return True
        phi[v] = -1
        return False

    try:
        found = rec(0)
    except _Stop:
        return HomResult(Outcome.INCONCLUSIVE, None, nodes)
    if not found:
        return HomResult(Outcome.NOT_EXISTS, None, nodes)
    if not is_homomorphism(g, h, phi):
        raise AssertionError("search produced a map that is not a homomorphism")
    return HomResult(Outcome.EXISTS, list(phi), nodes)


@dataclass
class BoundReport:
    graph_id: str
    n: int
    omega: int
    omega_witness: tuple[int, ...]
    alpha: int
    alpha_witness: tuple[int, ...]
    lower: Fraction
    lower_source: str
    upper: Fraction | None
    upper_source: tuple[int, int] | None
    chi: dict[int, ChiResult]
    outcomes: dict[tuple[int, int], Outcome]
    certificates: dict[tuple[int, int], BFoldColoring]

    @property
    def conclusive(self) -> bool:
        return all(c.conclusive for c in self.chi.values())

    @property
    def chi_o(self) -> int | None:
        c = self.chi.get(1)
        return c.value if c is not None and c.conclusive else None

    @property
    def tight(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def problems(self, g: OrientedGraph) -> list[str]:
        """Internal inconsistencies; an empty list means the report is sound."""
        out = []
        if self.upper is not None and self.lower > self.upper:
            out.append(f"lower {self.lower} exceeds upper {self.upper}")
        if self.chi_o is not None and self.upper is not None and self.upper > self.chi_o:
            out.append(f"upper {self.upper} exceeds chi_o {self.chi_o}")
        for key, cert in self.certificates.items():
            if not verify_coloring(g, cert):
                out.append(f"certificate {key} does not verify")
        return out


def bound_sweep(g: OrientedGraph, b_max: int, budget: SearchBudget | None = None,
                graph_id: str = "", symmetry: str = "colors", backend: str | None = None) -> BoundReport:
    if b_max < 1:
        raise ValueError(f"b_max must be at least 1, got {b_max}")
    omega, wit_o = omega_ro(g)
    alpha, wit_a = alpha_o(g)
    clique, counting = Fraction(omega), Fraction(g.n, alpha)
    lower, source = (clique, "clique") if clique >= counting else (counting, "counting")
    chis, outcomes, certs = {}, {}, {}
    upper, upper_src = None, None
    for b in range(1, b_max + 1):
        res = chi_b(g, b, budget, symmetry, backend)
        chis[b] = res
        for k, o in res.outcomes.items():
            outcomes[(b, k)] = o
        if res.value is not None:
            certs[(b, res.value)] = res.certificate
            q = Fraction(res.value, b)
            if upper is None or q < upper:
                upper, upper_src = q, (b, res.value)
    return BoundReport(graph_id, g.n, omega, wit_o, alpha, wit_a, lower, source,
                       upper, upper_src, chis, outcomes, certs)
