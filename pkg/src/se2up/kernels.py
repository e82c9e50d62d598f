"""Backend selection for the hot kernels.

Only the ratio kernels have a compiled version; ``convolve`` is always
numpy's.

The compiled extension is used when it imports; set ``SE2UP_PURE_PYTHON=1``
to force the numpy fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("SE2UP_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _pykernels

convolve = _pykernels.convolve
ratio_terms = _impl.ratio_terms
ratio_and_gradient = _impl.ratio_and_gradient


def backends():
    """Map backend name to kernel module for every backend that imports."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:  # pragma: no cover
        pass
    return found
