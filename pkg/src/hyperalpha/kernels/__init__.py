"""Backend selection for the numeric kernels.

HYPERALPHA_BACKEND=numba|numpy|auto chooses the implementation; auto (the
default) takes numba when it imports and falls back to pure numpy otherwise.
Both backends expose the same functions with the same argument order.
"""

import os

_ENV = "HYPERALPHA_BACKEND"
_active = None


def _resolve(name):
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_ENV} must be auto, numba, or numpy, got {name!r}")
    if name in ("auto", "numba"):
        try:
            from . import _numba
            return _numba
        except Exception:
            if name == "numba":
                raise
    from . import _numpy
    return _numpy


def get(name):
    """Backend module by explicit name (benchmarks and cross-checks)."""
    return _resolve(name)


def active():
    """The process-wide backend, chosen once from the environment."""
    global _active
    if _active is None:
        _active = _resolve(os.environ.get(_ENV, "auto"))
    return _active


def backend_name():
    return active().NAME
