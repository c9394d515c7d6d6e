"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``TURANLAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def available():
    """Names of the kernel backends that can be loaded in this process."""
    names = ["python"]
    if _ckernels is not None:
        names.insert(0, "cython")
    return names


def get(name=None):
    if name is None:
        name = "python" if os.environ.get("TURANLAB_PURE_PYTHON") else available()[0]
    if name == "python":
        return _pykernels
    if name == "cython":
        if _ckernels is None:
            raise ImportError("turanlab._ckernels is not built")
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


kernels = get()
