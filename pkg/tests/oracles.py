"""Brute-force reference implementations.

Deliberately naive: plain Python sets, direct definitions, no bitmasks and
nothing imported from the package except the graph container.
"""

from itertools import combinations, permutations, product


def arcs_of(g):
    return list(g.arcs)


def related(arcs, x, y):
    """Adjacent, or joined by a directed 2-path in either direction."""
    s = set(arcs)
    if (x, y) in s or (y, x) in s:
        return True
    mids = {w for (a, w) in s}
    return any(((x, w) in s and (w, y) in s) or ((y, w) in s and (w, x) in s) for w in mids)


def brute_omega(n, arcs):
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if all(related(arcs, x, y) for x, y in combinations(sub, 2)):
                return size
    return 0


def brute_alpha(n, arcs):
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if not any(related(arcs, x, y) for x, y in combinations(sub, 2)):
                return size
    return 0


def brute_girth(n, arcs):
    """Shortest simple cycle of the underlying graph by enumerating vertex sequences."""
    edges = {frozenset(a) for a in arcs}
    for length in range(3, n + 1):
        for seq in combinations(range(n), length):
            for rest in permutations(seq[1:]):
                cyc = (seq[0],) + rest
                if all(frozenset((cyc[i], cyc[(i + 1) % length])) in edges for i in range(length)):
                    return length
    return None


def brute_valid(arcs, sets):
    """Both coloring conditions from the definition, over all ordered arc pairs."""
    for x, y in arcs:
        if sets[x] & sets[y]:
            return False
    for (x, y), (z, w) in product(arcs, repeat=2):
        if sets[x] & sets[w] and sets[y] & sets[z]:
            return False
    return True


def brute_bfold_exists(n, arcs, b, k):
    subsets = [set(c) for c in combinations(range(k), b)]
    for assignment in product(subsets, repeat=n):
        if brute_valid(arcs, assignment):
            return True
    return False


def brute_hom_exists(g, h):
    harcs = set(h.arcs)
    for phi in product(range(h.n), repeat=g.n):
        if all((phi[u], phi[v]) in harcs for u, v in g.arcs):
            return True
    return False


def brute_nice(n, arcs, k):
    out = {v: {w for (u, w) in arcs if u == v} for v in range(n)}
    inn = {v: {u for (u, w) in arcs if w == v} for v in range(n)}
    for alpha in product("+-", repeat=k):
        for x in range(n):
            cur = {x}
            for s in reversed(alpha):
                table = out if s == "+" else inn
                cur = set().union(*(table[v] for v in cur)) if cur else set()
            if cur != set(range(n)):
                return False
    return True
