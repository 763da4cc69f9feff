from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_bfold_exists, brute_hom_exists, brute_valid
from orifrac.coloring import verify_coloring
from orifrac.graph import build_graph, directed_cycle, directed_path
from orifrac.solver import (
    Outcome,
    SearchBudget,
    bound_sweep,
    chi_b,
    chi_o,
    enumerate_bfold,
    exists_bfold,
    hom_exists,
)
from orifrac.targets import build_target
from test_graph import oriented_graphs


@pytest.mark.parametrize("symmetry", ["root", "colors"])
def test_c7_two_fold(symmetry):
    g = directed_cycle(7)
    yes = exists_bfold(g, 2, 7, symmetry=symmetry)
    assert yes.outcome is Outcome.EXISTS
    assert verify_coloring(g, yes.certificate)
    # 14 color slots but an independent set holds at most 2 vertices: 2 * 6 < 14
    assert exists_bfold(g, 2, 6, symmetry=symmetry).outcome is Outcome.NOT_EXISTS


def test_c4_needs_eight_colors_for_two_fold():
    # all four vertices are pairwise related, so 4 * 2 distinct colors are needed
    assert exists_bfold(directed_cycle(4), 2, 7).outcome is Outcome.NOT_EXISTS
    assert exists_bfold(directed_cycle(4), 2, 8).outcome is Outcome.EXISTS


@pytest.mark.parametrize("r, value", [(3, 3), (4, 4), (5, 5), (6, 3), (7, 4), (8, 4)])
def test_chi_o_cycles(r, value):
    res = chi_o(directed_cycle(r))
    assert res.conclusive and res.value == value
    assert brute_bfold_exists(r, directed_cycle(r).arcs, 1, value)
    assert not brute_bfold_exists(r, directed_cycle(r).arcs, 1, value - 1)


def test_chi_b_examples():
    assert chi_b(directed_cycle(7), 2).value == 7
    # frozen from exhaustive enumeration: C_6 has no 2-fold 5-coloring
    res = chi_b(directed_cycle(6), 2)
    assert res.value == 6 and res.ratio() == 3
    assert chi_b(directed_path(3), 2).value == 6
    with pytest.raises(ValueError):
        chi_b(directed_cycle(5), 0)


def test_isolated_and_single_arc():
    assert chi_o(build_graph(3, [])).value == 1
    assert chi_b(build_graph(2, [(0, 1)]), 3).value == 6


def test_hom_examples():
    assert hom_exists(directed_cycle(6), directed_cycle(3)).outcome is Outcome.EXISTS
    assert hom_exists(directed_cycle(7), directed_cycle(3)).outcome is Outcome.NOT_EXISTS
    assert hom_exists(directed_cycle(10), build_target(0).graph).outcome is Outcome.EXISTS
    res = hom_exists(directed_path(4), directed_cycle(5))
    assert res.outcome is Outcome.EXISTS and len(res.mapping) == 4


@settings(max_examples=60, deadline=None)
@given(oriented_graphs(n_max=5), oriented_graphs(n_max=4))
def test_hom_matches_enumeration(g, h):
    res = hom_exists(g, h)
    assert (res.outcome is Outcome.EXISTS) == brute_hom_exists(g, h)


@settings(max_examples=60, deadline=None)
@given(oriented_graphs(n_max=5), st.integers(1, 4))
def test_one_fold_matches_enumeration(g, k):
    want = brute_bfold_exists(g.n, g.arcs, 1, k)
    for sym in ("root", "colors"):
        res = exists_bfold(g, 1, k, symmetry=sym)
        assert (res.outcome is Outcome.EXISTS) == want
        if res.exists:
            assert brute_valid(g.arcs, [set(s) for s in res.certificate.sets])


@settings(max_examples=40, deadline=None)
@given(oriented_graphs(n_max=4), st.integers(2, 5))
def test_two_fold_matches_enumeration(g, k):
    want = brute_bfold_exists(g.n, g.arcs, 2, k)
    for sym in ("root", "colors"):
        assert (exists_bfold(g, 2, k, symmetry=sym).outcome is Outcome.EXISTS) == want


@settings(max_examples=30, deadline=None)
@given(oriented_graphs(n_min=2, n_max=6), st.integers(1, 2))
def test_monotone_in_k_and_scaling(g, b):
    res = chi_b(g, b)
    k = res.value
    assert exists_bfold(g, b, k + 1).exists
    if k > b:
        assert not exists_bfold(g, b, k - 1).exists
    assert exists_bfold(g, 2 * b, 2 * k).exists


def test_enumeration_counts_agree_across_modes():
    g = directed_cycle(7)
    root, done_r = enumerate_bfold(g, 2, 7, symmetry="root")
    canon, done_c = enumerate_bfold(g, 2, 7, symmetry="colors")
    assert done_r and done_c
    assert len(root) == 240
    assert all(verify_coloring(g, c) for c in root + canon)
    assert 0 < len(canon) < len(root)


def test_budget_gives_inconclusive():
    res = exists_bfold(directed_cycle(13), 3, 11, SearchBudget(max_nodes=5), symmetry="root")
    assert res.outcome is Outcome.INCONCLUSIVE and res.certificate is None
    ch = chi_b(directed_cycle(13), 3, SearchBudget(max_nodes=5))
    assert not ch.conclusive


def test_sweep_examples():
    rep = bound_sweep(directed_cycle(7), 3, graph_id="C_7")
    assert rep.conclusive
    assert rep.lower == Fraction(7, 2) and rep.lower_source == "counting"
    assert rep.upper == Fraction(7, 2) and rep.upper_source == (2, 7)
    assert rep.chi_o == 4 and rep.tight and not rep.problems(directed_cycle(7))

    c4 = bound_sweep(directed_cycle(4), 3)
    assert (c4.lower, c4.lower_source, c4.upper) == (4, "clique", 4)

    c8 = bound_sweep(directed_cycle(8), 3)
    assert c8.lower == 4 and c8.upper == 4 and c8.alpha == 2


def test_sweep_rejects_bad_bmax():
    with pytest.raises(ValueError):
        bound_sweep(directed_cycle(5), 0)
