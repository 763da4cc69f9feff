import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orifrac import kernel
from orifrac.graph import directed_cycle
from orifrac.solver import SearchBudget, enumerate_bfold, exists_bfold
from test_graph import oriented_graphs

needs_compiled = pytest.mark.skipif(not kernel.HAVE_COMPILED, reason="compiled kernel not built")


@needs_compiled
@settings(max_examples=80, deadline=None)
@given(oriented_graphs(n_max=7), st.integers(1, 2), st.integers(1, 8), st.sampled_from(["root", "colors"]))
def test_backends_agree(g, b, k, symmetry):
    if k < b:
        k = b
    py = exists_bfold(g, b, k, symmetry=symmetry, backend="python")
    cy = exists_bfold(g, b, k, symmetry=symmetry, backend="cython")
    assert (py.outcome, py.nodes) == (cy.outcome, cy.nodes)
    assert py.certificate == cy.certificate


@needs_compiled
@pytest.mark.parametrize("r, b, k, symmetry", [(7, 2, 7, "root"), (11, 3, 11, "colors"), (8, 2, 7, "root")])
def test_backends_enumerate_the_same(r, b, k, symmetry):
    a, done_a = enumerate_bfold(directed_cycle(r), b, k, symmetry=symmetry, backend="python")
    c, done_c = enumerate_bfold(directed_cycle(r), b, k, symmetry=symmetry, backend="cython")
    assert done_a and done_c and a == c


@needs_compiled
def test_backends_stop_at_same_budget():
    g = directed_cycle(13)
    for backend in ("python", "cython"):
        res = exists_bfold(g, 3, 11, SearchBudget(max_nodes=1000), symmetry="root", backend=backend)
        assert str(res.outcome) == "inconclusive"
        assert res.nodes == 1001


def test_auto_selection():
    assert kernel.backend_name() in ("cython", "python")
    res = exists_bfold(directed_cycle(7), 2, 7)
    assert res.exists


def test_missing_compiled_kernel_is_reported(monkeypatch):
    monkeypatch.setattr(kernel, "HAVE_COMPILED", False)
    with pytest.raises(RuntimeError):
        exists_bfold(directed_cycle(5), 1, 5, backend="cython")
    assert exists_bfold(directed_cycle(5), 1, 5).exists


def test_empty_graph_search():
    status, sols, nodes = kernel.search_bfold(0, 3, [1, 2, 4], [], [], backend="python")
    assert status == kernel.STOPPED and sols == [[]] and nodes == 0
