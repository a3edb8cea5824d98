"""Pick the compiled kernels when importable, else the pure-Python twin.

Setting ``UURJPDD_PURE_PYTHON=1`` forces the pure-Python kernels.
"""
import os

if os.environ.get("UURJPDD_PURE_PYTHON", "") not in ("", "0"):
    from . import _fallback as impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as impl
    except ImportError:  # extension not built
        from . import _fallback as impl

        BACKEND = "python"
    else:
        BACKEND = "cython"

jacobi_eigh = impl.jacobi_eigh
max_eigenvalue = impl.max_eigenvalue
norm_table = impl.norm_table
