"""Selects the reduction kernel at import time.

The compiled Cython kernel is preferred when present; the pure-Python engine
is the fallback.  Set CYCONTRACT_PURE=1 to force the fallback (used by the
benchmark and by tests that compare the two lanes).
"""

from __future__ import annotations

import os

from . import _engine_py

if os.environ.get("CYCONTRACT_PURE") == "1":
    _impl = _engine_py
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _engine_py

Engine = _impl.Engine
PyEngine = _engine_py.Engine


def backend() -> str:
    """Name of the active reduction kernel ('cython' or 'python')."""
    return Engine.backend


def available_backends() -> list[str]:
    out = ["python"]
    try:
        from . import _core  # noqa: F401

        out.insert(0, "cython")
    except ImportError:
        pass
    return out


def engine_class(name: str):
    if name == "python":
        return PyEngine
    if name == "cython":
        from . import _core

        return _core.Engine
    raise ValueError(f"unknown backend {name!r}")
