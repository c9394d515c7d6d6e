import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import edge_list, naive_max_cut, naive_triangles
from turanlab import _backend, _pykernels

BACKENDS = _backend.available()
needs_both = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled extension not built")


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert _backend.get("python") is _pykernels
    with pytest.raises(ValueError):
        _backend.get("fortran")


def test_env_forces_fallback():
    env = dict(os.environ, TURANLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import turanlab; print(turanlab.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_both
@settings(max_examples=300, deadline=None)
@given(graphs(max_n=11), st.integers(1, 3), st.integers(3, 6))
def test_backend_parity(g, t, m):
    c, p = _backend.get("cython"), _backend.get("python")
    n, rows = g.n, list(g.rows)
    assert c.canonical_labeling(n, rows)[:2] == p.canonical_labeling(n, rows)[:2]
    assert c.count_triangles(n, rows) == p.count_triangles(n, rows)
    if m <= n:
        assert c.count_cycles(n, rows, m) == p.count_cycles(n, rows, m)
    assert c.find_packing(n, rows, t, m) == p.find_packing(n, rows, t, m)
    assert c.has_path(n, rows, m) == p.has_path(n, rows, m)
    assert c.max_cut(n, rows) == p.max_cut(n, rows)
    for args in ((0, 0, 0, -1), (1, t, m, -1), (2, m, 0, -1), (0, 0, 0, 3)):
        assert sorted(c.augment(n, rows, *args)) == sorted(p.augment(n, rows, *args))


@pytest.mark.parametrize("name", BACKENDS)
def test_each_backend_against_oracles(name):
    k = _backend.get(name)
    from turanlab import cycle, complete, turan, blow_up

    for g in (cycle(5), complete(6), turan(2, 9), blow_up(cycle(5), [2] * 5)):
        assert k.count_triangles(g.n, g.rows) == naive_triangles(g.n, edge_list(g))
        assert k.max_cut(g.n, g.rows) == naive_max_cut(g.n, edge_list(g))
    g = blow_up(cycle(5), [2] * 5)
    assert k.count_cycles(g.n, g.rows, 5) == 32


@pytest.mark.parametrize("name", BACKENDS)
def test_canonical_key_is_relabelling_invariant(name):
    k = _backend.get(name)
    from turanlab import cycle

    g = cycle(7)
    base = k.canonical_labeling(g.n, list(g.rows))[1]
    for shift in range(7):
        perm = [(v + shift) % 7 for v in range(7)][::-1]
        h = g.relabel(perm)
        assert k.canonical_labeling(h.n, list(h.rows))[1] == base


def test_import_without_extension(monkeypatch):
    import turanlab

    monkeypatch.setitem(sys.modules, "turanlab._ckernels", None)
    monkeypatch.delattr(turanlab, "_ckernels", raising=False)
    mod = importlib.reload(_backend)
    try:
        assert mod.available() == ["python"]
        assert mod.kernels.NAME == "python"
    finally:
        monkeypatch.undo()
        importlib.reload(_backend)
