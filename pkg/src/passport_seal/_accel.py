"""Numba availability probe.

Hot pixel kernels ship in two flavours: numba @njit loops and pure-numpy
fallbacks. Selection is made once at import time; set the environment
variable PASSPORT_SEAL_NO_NUMBA=1 to force the numpy path (useful for
debugging and for the benchmark comparison).
"""
import os

_DISABLE_VALUES = ("1", "true", "yes", "on")


def numba_enabled() -> bool:
    if os.environ.get("PASSPORT_SEAL_NO_NUMBA", "").strip().lower() in _DISABLE_VALUES:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


USE_NUMBA = numba_enabled()
