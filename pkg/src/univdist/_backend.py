"""Kernel backend selection.

The compiled extension is used when importable; ``UNIVDIST_BACKEND=python``
forces the pure-Python kernels.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BY_NAME = {"python": _pykernels}
if _ckernels is not None:
    _BY_NAME["cython"] = _ckernels


def available() -> list[str]:
    return sorted(_BY_NAME)


def load(name: str | None = None) -> ModuleType:
    if name is None:
        return ACTIVE
    try:
        return _BY_NAME[name]
    except KeyError:
        raise ValueError(f"backend {name!r} not available; have {available()}") from None


def _pick() -> ModuleType:
    forced = os.environ.get("UNIVDIST_BACKEND")
    if forced:
        return load(forced)
    return _ckernels if _ckernels is not None else _pykernels


ACTIVE = _pick()
