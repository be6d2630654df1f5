"""Hot kernels with an optional compiled backend.

The compiled module is used when it imports and ``AFFMV_PURE_PYTHON`` is
unset or "0".  Calls that overflow 64-bit rationals are retried in Python.
"""

import os

from . import _pyscan
from ._pyscan import DOWN, STABLE, UP, ZERO, LevelError

_c = None
if os.environ.get("AFFMV_PURE_PYTHON", "0") in ("", "0"):
    try:
        from . import _cscan as _c
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"


def analyze(f0, slopes, durations):
    if _c is not None:
        try:
            return _c.analyze(f0, slopes, durations)
        except OverflowError:
            pass
    return _pyscan.analyze(f0, slopes, durations)


def level_profile(f0, slopes, durations):
    if _c is not None:
        try:
            return _c.level_profile(f0, slopes, durations)
        except OverflowError:
            pass
    return _pyscan.level_profile(f0, slopes, durations)


__all__ = ["analyze", "level_profile", "BACKEND", "LevelError", "ZERO", "STABLE", "UP", "DOWN"]
