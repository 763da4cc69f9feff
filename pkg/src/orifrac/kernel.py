"""Search-kernel selection.

The compiled kernel is used when it was built and the palette fits in a
machine word; ``ORIFRAC_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernel

EXHAUSTED, STOPPED, BUDGET = _pykernel.EXHAUSTED, _pykernel.STOPPED, _pykernel.BUDGET

try:
    if os.environ.get("ORIFRAC_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

HAVE_COMPILED = _ckernel is not None


def backend_name() -> str:
    return "cython" if HAVE_COMPILED else "python"


def search_bfold(n, k, cands, forced, arcs, root_mask=0, canon=False, max_nodes=0,
                 deadline=0.0, max_solutions=1, backend=None):
    """Dispatch to the compiled or pure-Python kernel (see ``_pykernel``)."""
    if backend is None:
        backend = "cython" if HAVE_COMPILED and k <= 64 else "python"
    if backend == "cython":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel is not available")
        impl = _ckernel.search_bfold
    else:
        impl = _pykernel.search_bfold
    return impl(n, k, cands, forced, arcs, root_mask, canon, max_nodes, deadline, max_solutions)
