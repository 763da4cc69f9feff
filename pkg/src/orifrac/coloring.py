"""b-fold oriented colorings and consistent Kneser suborientations.

Color sets are stored as integer bitmasks over the palette ``0..k-1``.
Both conditions of a b-fold oriented coloring reduce to one test on a pair
of arcs ``xy, zw``: the pair is bad when ``f(x) & f(w)`` and ``f(y) & f(z)``
are both non-empty.  For ``xy == zw`` that is exactly a failure of the
disjointness condition, and for arcs sharing a vertex it is the 2-dipath rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .graph import OrientedGraph, _bits, build_graph

Rational = Fraction


class ColoringError(ValueError):
    pass


def to_mask(colors: Iterable[int]) -> int:
    mask = 0
    for c in colors:
        mask |= 1 << int(c)
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


@dataclass(frozen=True)
class BFoldColoring:
    """Assignment of ``b``-element color sets from a ``k``-color palette."""

    k: int
    b: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or self.b < 1:
            raise ColoringError(f"palette and fold must be positive (k={self.k}, b={self.b})")
        top = 1 << self.k
        for v, m in enumerate(self.masks):
            if m >= top or m < 0:
                raise ColoringError(f"vertex {v} uses a color outside 0..{self.k - 1}")
            if m.bit_count() != self.b:
                raise ColoringError(f"vertex {v} has {m.bit_count()} colors, expected {self.b}")

    @classmethod
    def from_sets(cls, k: int, b: int, sets: Iterable[Iterable[int]]) -> "BFoldColoring":
        masks = []
        for v, s in enumerate(sets):
            s = list(s)
            if len(set(s)) != len(s):
                raise ColoringError(f"vertex {v} lists a color twice")
            if any(c < 0 or c >= k for c in s):
                raise ColoringError(f"vertex {v} uses a color outside 0..{k - 1}")
            masks.append(to_mask(s))
        return cls(k, b, tuple(masks))

    @property
    def sets(self) -> list[tuple[int, ...]]:
        return [from_mask(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def ratio(self) -> Fraction:
        return Fraction(self.k, self.b)

    def compose(self, phi: Sequence[int]) -> "BFoldColoring":
        """Pull back along a vertex map ``phi`` (coloring of ``G`` from one of ``H``)."""
        return BFoldColoring(self.k, self.b, tuple(self.masks[phi[v]] for v in range(len(phi))))


def ratio(c: BFoldColoring) -> Fraction:
    return c.ratio()


@dataclass(frozen=True)
class Violation:
    kind: str  # "disjointness" or "orientation"
    first: tuple[int, int]
    second: tuple[int, int]
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} violation on arcs {self.first} / {self.second}: {self.detail}"


@dataclass(frozen=True)
class Verdict:
    violation: Violation | None = None

    @property
    def valid(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.valid


def _fmt(mask: int) -> str:
    return "{" + ",".join(map(str, from_mask(mask))) + "}"


def _first_bad_pair(arcs: Sequence[tuple[int, int]], label) -> Violation | None:
    for x, y in arcs:
        if label(x) & label(y):
            return Violation("disjointness", (x, y), (x, y),
                             f"{_fmt(label(x))} and {_fmt(label(y))} share {_fmt(label(x) & label(y))}")
    for (x, y), (z, w) in product(arcs, repeat=2):
        xw = label(x) & label(w)
        yz = label(y) & label(z)
        if xw and yz:
            return Violation("orientation", (x, y), (z, w),
                             f"tails/heads meet ({_fmt(xw)} in c({x})&c({w})) "
                             f"while c({y})&c({z}) = {_fmt(yz)}")
    return None


def verify_coloring(g: OrientedGraph, c: BFoldColoring) -> Verdict:
    """Check both coloring conditions over every ordered pair of arcs.

    The reported violation is the lexicographically first one: disjointness
    failures are scanned before orientation failures.
    """
    if len(c) != g.n:
        raise ColoringError(f"coloring covers {len(c)} vertices, graph has {g.n}")
    masks = c.masks
    return Verdict(_first_bad_pair(g.arcs, masks.__getitem__))


def is_homomorphism(g: OrientedGraph, h: OrientedGraph, phi: Sequence[int]) -> bool:
    if len(phi) != g.n or any(not 0 <= p < h.n for p in phi):
        return False
    return all(h.has_arc(phi[u], phi[v]) for u, v in g.arcs)


@dataclass(frozen=True)
class ConsistentSubOrientation:
    """Oriented graph on ``b``-subsets of ``0..a-1``; vertex ``i`` carries ``labels[i]``."""

    a: int
    b: int
    labels: tuple[int, ...]
    graph: OrientedGraph

    def label_sets(self) -> list[tuple[int, ...]]:
        return [from_mask(m) for m in self.labels]

    def as_coloring(self) -> BFoldColoring:
        return BFoldColoring(self.a, self.b, self.labels)


def verify_consistency(s: ConsistentSubOrientation) -> Verdict:
    g = s.graph
    if len(s.labels) != g.n:
        return Verdict(Violation("labels", (-1, -1), (-1, -1), f"{len(s.labels)} labels for {g.n} vertices"))
    for v, m in enumerate(s.labels):
        if m < 0 or m >= 1 << s.a or m.bit_count() != s.b:
            return Verdict(Violation("labels", (v, v), (v, v),
                                     f"label {_fmt(m)} is not a {s.b}-subset of 0..{s.a - 1}"))
    if len(set(s.labels)) != len(s.labels):
        return Verdict(Violation("labels", (-1, -1), (-1, -1), "repeated vertex label"))
    return Verdict(_first_bad_pair(g.arcs, s.labels.__getitem__))


def extract_suborientation(g: OrientedGraph, c: BFoldColoring) -> tuple[ConsistentSubOrientation, list[int]]:
    """Collapse ``g`` onto its color sets.

    Returns the suborientation and the label map ``v -> vertex index``, which is
    a homomorphism from ``g``.
    """
    verdict = verify_coloring(g, c)
    if not verdict:
        raise ColoringError(f"cannot extract from an invalid coloring: {verdict.violation}")
    labels = sorted(set(c.masks), key=from_mask)
    index = {m: i for i, m in enumerate(labels)}
    phi = [index[m] for m in c.masks]
    arcs = sorted({(phi[u], phi[v]) for u, v in g.arcs})
    texts = ["{" + ",".join(map(str, from_mask(m))) + "}" for m in labels]
    sub = ConsistentSubOrientation(c.k, c.b, tuple(labels), build_graph(len(labels), arcs, texts))
    return sub, phi


def blow_up_mask(mask: int, c: int) -> int:
    out = 0
    block = (1 << c) - 1
    for t in _bits(mask):
        out |= block << (t * c)
    return out


def blow_up(s: ConsistentSubOrientation, c: int) -> ConsistentSubOrientation:
    """Replace color ``t`` by the block ``t*c .. t*c+c-1``; same arcs, larger palette."""
    if c < 1:
        raise ColoringError(f"blow-up factor must be at least 1, got {c}")
    labels = tuple(blow_up_mask(m, c) for m in s.labels)
    texts = [_fmt(m) for m in labels]
    g = build_graph(s.graph.n, s.graph.arcs, texts)
    return ConsistentSubOrientation(s.a * c, s.b * c, labels, g)


def blow_up_coloring(col: BFoldColoring, c: int) -> BFoldColoring:
    return BFoldColoring(col.k * c, col.b * c, tuple(blow_up_mask(m, c) for m in col.masks))
