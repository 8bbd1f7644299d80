"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the numpy
fallback in ``_pykernels`` is used.  Set ``ENTCAT_BACKEND=python`` or
``ENTCAT_BACKEND=cython`` to force one side (forcing the extension raises
if it is not built).
"""

import os

_requested = os.environ.get("ENTCAT_BACKEND", "auto").strip().lower()

if _requested in ("python", "py"):
    from . import _pykernels as _impl
elif _requested in ("cython", "c", "compiled"):
    from . import _ckernels as _impl
elif _requested in ("auto", ""):
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl
else:
    raise ImportError(
        f"unrecognized ENTCAT_BACKEND={_requested!r}; use 'cython', 'python' or 'auto'"
    )

BACKEND = "cython" if _impl.__name__.endswith("_ckernels") else "python"

tail_sums = _impl.tail_sums
prefix_first_violation = _impl.prefix_first_violation
pmax_witness = _impl.pmax_witness
outer_sorted = _impl.outer_sorted
catalyst_scan = _impl.catalyst_scan
