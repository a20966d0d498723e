"""Search kernels, backed by the compiled extension when it is importable.

The pure-Python module ``_pykernels`` is always available and defines the
reference behaviour; ``_ckernels`` is its Cython twin. :func:`use_backend`
switches between them at runtime (the benchmark and the twin-agreement
tests rely on this).
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_impl: ModuleType = _ckernels or _pykernels


def available_backends() -> list[str]:
    return ["cython", "python"] if _ckernels is not None else ["python"]


def backend() -> str:
    return "cython" if _impl is _ckernels else "python"


def use_backend(name: str) -> str:
    """Select ``"cython"`` or ``"python"``; returns the previous backend."""
    global _impl
    previous = backend()
    if name == "python":
        _impl = _pykernels
    elif name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        _impl = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def odd_hole(adj, n):
    return _impl.odd_hole(adj, n)


def clique_number(adj, n):
    return _impl.clique_number(adj, n)


def max_clique(adj, n):
    return _impl.max_clique(adj, n)


def induced_embedding(adj, n, padj, pn):
    return _impl.induced_embedding(adj, n, padj, pn)


def canonical_code(adj, n):
    return _impl.canonical_code(adj, n)
