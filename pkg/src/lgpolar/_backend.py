"""Kernel backend selection.

The Cython extension ``_kernels`` is preferred when importable; otherwise the
numpy fallback ``_kernels_py`` is used.  Set ``LGPOLAR_BACKEND=python`` to
force the fallback (useful for benchmarking and parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("LGPOLAR_BACKEND", "").lower() in {"python", "py"}:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

l_sweep = _impl.l_sweep
r_sweep = _impl.r_sweep
transform_bits_inplace = _impl.transform_bits_inplace
systematic_solve = _impl.systematic_solve
