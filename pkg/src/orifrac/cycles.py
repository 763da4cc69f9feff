"""Fractional oriented chromatic numbers of directed cycles.

Closed forms, the explicit coloring for cycles with a prime factor
``p = 3 mod 4`` and a structural analyzer for colorings of ratio below 4
("miser" colorings).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import BFoldColoring, verify_coloring
from .graph import directed_cycle


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_factors(r: int) -> list[int]:
    out, d = [], 2
    while d * d <= r:
        while r % d == 0:
            if d not in out:
                out.append(d)
            r //= d
        d += 1
    if r > 1 and r not in out:
        out.append(r)
    return out


@dataclass(frozen=True)
class PrimeType:
    p: int
    kind: str  # "A" (p = 3 mod 4) or "B" (p = 1 mod 4)


def classify_prime(p: int) -> PrimeType | None:
    """Type of a prime above 3; ``None`` for 2, 3 and non-primes."""
    if p <= 3 or not is_prime(p):
        return None
    return PrimeType(p, "A" if p % 4 == 3 else "B")


@dataclass(frozen=True)
class BetaValue:
    r: int
    value: Fraction
    p: int | None


def beta(r: int) -> BetaValue:
    if r <= 5:
        raise ValueError(f"beta is defined for r > 5, got {r}")
    for p in prime_factors(r):
        pt = classify_prime(p)
        if pt is not None and pt.kind == "A":
            return BetaValue(r, Fraction(4, p + 1), p)
    return BetaValue(r, Fraction(0), None)


@dataclass(frozen=True)
class CycleValue:
    r: int
    value: Fraction
    case: str
    p: int | None = None

    def describe(self) -> str:
        if self.case == "d":
            extra = f", p={self.p}" if self.p else ", no 3-mod-4 prime factor"
            return f"{_frac(self.value)} (case d{extra})"
        return f"{_frac(self.value)} (case {self.case})"


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cycle_value(r: int) -> CycleValue:
    if r < 3:
        raise ValueError(f"directed cycles have length at least 3, got {r}")
    if r % 3 == 0:
        return CycleValue(r, Fraction(3), "a")
    if r == 4:
        return CycleValue(r, Fraction(4), "b")
    if r == 5:
        return CycleValue(r, Fraction(5), "c")
    bv = beta(r)
    return CycleValue(r, 4 - bv.value, "d", bv.p)


def theorem_value(r: int) -> Fraction:
    return cycle_value(r).value


def construct_typeA_coloring(r: int) -> BFoldColoring:
    """k-fold p-coloring of C_r, p = 4k-1 the least prime factor with p = 3 mod 4.

    Vertex ``x`` with ``x = i mod p`` gets ``{i*k, ..., i*k + k - 1} mod p``.
    """
    if r <= 5 or r % 3 == 0:
        raise ValueError(f"need r > 5 and r not divisible by 3, got {r}")
    p = beta(r).p
    if p is None:
        raise ValueError(f"{r} has no prime factor = 3 mod 4; no coloring below ratio 4 exists")
    k = (p + 1) // 4
    blocks = []
    for x in range(r):
        i = x % p
        blocks.append([(i * k + j) % p for j in range(k)])
    c = BFoldColoring.from_sets(p, k, blocks)
    assert verify_coloring(directed_cycle(r), c)
    return c


# --- miser structure ---------------------------------------------------------

class MiserRejection(RuntimeError):
    """A coloring of ratio < 4 that does not decompose as expected."""

    def __init__(self, invariant: str, detail: str):
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant
        self.detail = detail


# label patterns: (meets A, meets B, meets C)
A_ONLY, B_ONLY, C_ONLY = (1, 0, 0), (0, 1, 0), (0, 0, 1)
AB, BC = (1, 1, 0), (0, 1, 1)


@dataclass(frozen=True)
class MiserStructure:
    r: int
    rotation: int
    base: tuple[int, int, int, int]  # masks A, B, C, D
    patterns: tuple[tuple[int, int, int], ...]
    blocks: tuple[tuple[str, int], ...]  # ("triple" | "quad", start) in rotated indices
    t_matrix: tuple[tuple[int, ...], ...]
    q: int
    t: int
    max_color_use: int

    def row_string(self, i: int) -> str:
        return "".join(map(str, self.t_matrix[i]))

    def block_string(self) -> str:
        return " ".join("T" if kind == "triple" else "Q" for kind, _ in self.blocks)


def _patterns(labels, a, b, c):
    return tuple((int(bool(x & a)), int(bool(x & b)), int(bool(x & c))) for x in labels)


def _parse_blocks(pats):
    r = len(pats)
    blocks, i = [], 0
    while i < r:
        if pats[i] != A_ONLY:
            return None
        if i + 2 < r and pats[i + 2] == C_ONLY and pats[i + 1] in (B_ONLY, AB):
            blocks.append(("triple", i))
            i += 3
        elif i + 3 < r and pats[i + 1] == AB and pats[i + 2] == BC and pats[i + 3] == C_ONLY:
            blocks.append(("quad", i))
            i += 4
        else:
            return None
    return blocks


def _decompose(labels, s):
    r = len(labels)
    rot = labels[s:] + labels[:s]
    a, b, c = rot[0], rot[1], rot[2]
    if a & b or b & c or a & c:
        return None
    pats = _patterns(rot, a, b, c)
    return rot, pats, _parse_blocks(pats)


def _separations(blocks):
    """Quads between each triple and the next one (cyclically)."""
    kinds = [kind for kind, _ in blocks]
    tri = [i for i, kind in enumerate(kinds) if kind == "triple"]
    seps = []
    for j, i in enumerate(tri):
        nxt = tri[(j + 1) % len(tri)]
        seps.append((nxt - i - 1) % len(kinds))
    return seps


def _check_observations(rot, pats, base):
    """Local consequences of a ratio below 4, relative to the base labels."""
    r = len(rot)
    A, B, C, _ = base
    for i, x in enumerate(rot):
        if not x & (A | B | C):
            raise MiserRejection("no label inside D", f"label at {i} uses only leftover colors")
    for i in range(r):
        window = rot[i] | rot[(i + 1) % r] | rot[(i + 2) % r]
        for name, X in (("A", A), ("B", B), ("C", C)):
            if not window & X:
                raise MiserRejection("every 3-window meets each base set",
                                     f"window at {i} misses {name}")
        for axis, name in enumerate("ABC"):
            if all(pats[(i + d) % r][axis] for d in range(3)):
                raise MiserRejection("no 3-window inside one base set",
                                     f"window at {i} meets {name} three times")
        nxt = pats[(i + 1) % r]
        if pats[i][1] and nxt[0]:
            raise MiserRejection("B-label is never followed by an A-label", f"at {i}")
        if pats[i][2] and not pats[i][1] and (not nxt[0] or nxt[2]):
            raise MiserRejection("C without B forces A without C next", f"at {i}")
        if pats[i][1] and not pats[i][0] and (not nxt[2] or nxt[1]):
            raise MiserRejection("B without A forces C without B next", f"at {i}")


def analyze_miser(r: int, c: BFoldColoring) -> MiserStructure:
    """Decompose a valid coloring of C_r with k < 4b into triples and quads.

    Every rotation is tried; the first one whose base labels give a full
    triple/quad decomposition is used.  All structural claims are checked
    independently and a failure raises :class:`MiserRejection`.
    """
    if len(c) != r:
        raise ValueError(f"coloring has {len(c)} vertices, cycle has {r}")
    if c.k >= 4 * c.b:
        raise ValueError(f"ratio {c.k}/{c.b} is not below 4")
    verdict = verify_coloring(directed_cycle(r), c)
    if not verdict:
        raise ValueError(f"invalid coloring: {verdict.violation}")
    labels = list(c.masks)

    found = None
    for s in range(r):
        dec = _decompose(labels, s)
        if dec is not None and dec[2] is not None:
            found = (s,) + dec
            break
    if found is None:
        raise MiserRejection("triple/quad decomposition", "no rotation decomposes into triples and quads")
    s, rot, pats, blocks = found
    full = (1 << c.k) - 1
    A, B, C = rot[0], rot[1], rot[2]
    base = (A, B, C, full & ~(A | B | C))
    _check_observations(rot, pats, base)

    covered = sorted(i for kind, st in blocks for i in range(st, st + (3 if kind == "triple" else 4)))
    if covered != list(range(r)):
        raise MiserRejection("blocks partition the cycle", f"covered {covered}")

    # re-basing at any other triple must give the same (rotated) block sequence
    seq = [kind for kind, _ in blocks]
    for j, (kind, st) in enumerate(blocks):
        if kind != "triple":
            continue
        dec = _decompose(labels, (s + st) % r)
        if dec is None or dec[2] is None or [kd for kd, _ in dec[2]] != seq[j:] + seq[:j]:
            raise MiserRejection("triples stay triples under re-basing", f"triple at {st}")

    seps = _separations(blocks)
    t = len(seps)
    if len(set(seps)) != 1:
        raise MiserRejection("constant triple separation", f"quads between triples: {seps}")
    q = seps[0]
    if r % 3 and q == 0:
        raise MiserRejection("no consecutive triples", f"blocks {seq}")
    if r != (4 * q + 3) * t:
        raise MiserRejection("cycle length", f"r={r} but (4q+3)t={(4 * q + 3) * t}")

    tm = tuple(tuple(int(bool(rot[i] & rot[j])) for j in range(r)) for i in range(r))
    for i in range(r):
        row, nxt = tm[i], tm[(i + 1) % r]
        if nxt != row[-1:] + row[:-1]:
            raise MiserRejection("cyclic shift of the intersection matrix", f"rows {i}, {(i + 1) % r}")

    use = [sum(1 for x in rot if x >> col & 1) for col in range(c.k)]
    if max(use) > (q + 1) * t:
        raise MiserRejection("color usage bound", f"a color is used {max(use)} > (q+1)t={(q + 1) * t} times")

    return MiserStructure(r, s, base, pats, tuple(blocks), tm, q, t, max(use))
