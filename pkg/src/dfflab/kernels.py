"""Backend selection for the root-solver kernels.

The compiled extension is preferred; the pure-numpy fallback is used when the
extension is unavailable or when DFFLAB_PURE_PYTHON=1 is set.  Both expose the
same two functions and are cross-checked against each other in the tests.
"""
import os

from . import _bae_numpy

if os.environ.get("DFFLAB_PURE_PYTHON") == "1":
    _impl = _bae_numpy
    BACKEND = "numpy"
else:
    try:
        from . import _bae_core as _impl

        BACKEND = "compiled"
    except ImportError:  # extension not built on this platform
        _impl = _bae_numpy
        BACKEND = "numpy"


def defects(k, lam, I, J, L, U):
    return _impl.defects(k, lam, I, J, L, U)


def jacobian(k, lam, L, U):
    return _impl.jacobian(k, lam, L, U)
