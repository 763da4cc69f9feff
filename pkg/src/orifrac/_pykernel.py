"""Pure-Python b-fold search kernel (fallback for ``_ckernel``).

Vertices are addressed by search position.  At position ``p``:

* ``forced[p]`` lists earlier positions whose sets must be disjoint from ours
  (arcs and 2-dipaths, known before any color is placed);
* ``arcs[p]`` lists ``(tail_pos, head_pos)`` arcs completed by placing ``p``.

Each completed arc ``(X, Y)`` is tested against every previously completed
arc ``(Z, W)``: ``X & W and Y & Z`` is a violation.

Return value is ``(status, solutions, nodes)`` with status 0 = search space
exhausted, 1 = stopped after ``max_solutions`` solutions, 2 = budget hit.
"""

import time

EXHAUSTED, STOPPED, BUDGET = 0, 1, 2


class _OutOfBudget(Exception):
    pass


def search_bfold(n, k, cands, forced, arcs, root_mask, canon, max_nodes, deadline, max_solutions):
    full = (1 << k) - 1
    assign = [0] * n
    stack = []
    solutions = []
    nodes = 0

    def rec(p, used):
        nonlocal nodes
        forbid = 0
        for q in forced[p]:
            forbid |= assign[q]
        free = full & ~used
        level = (root_mask,) if p == 0 and root_mask else cands
        for cand in level:
            if cand & forbid:
                continue
            if canon:
                new = cand & free
                if new and (free & ~new) & ((1 << new.bit_length()) - 1):
                    continue
            nodes += 1
            if max_nodes and nodes > max_nodes:
                raise _OutOfBudget
            if deadline and nodes & 0xFFF == 0 and time.monotonic() > deadline:
                raise _OutOfBudget
            assign[p] = cand
            top = len(stack)
            ok = True
            for tp, hp in arcs[p]:
                x = assign[tp]
                y = assign[hp]
                for z, w in stack:
                    if x & w and y & z:
                        ok = False
                        break
                if not ok:
                    break
                stack.append((x, y))
            if ok:
                if p + 1 == n:
                    solutions.append(list(assign))
                    if max_solutions and len(solutions) >= max_solutions:
                        return True
                elif rec(p + 1, used | cand):
                    return True
            del stack[top:]
        return False

    if n == 0:
        return STOPPED, [[]], 0
    try:
        stopped = rec(0, 0)
    except _OutOfBudget:
        return BUDGET, solutions, nodes
    return (STOPPED if stopped else EXHAUSTED), solutions, nodes
