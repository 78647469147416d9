"""Mod-p linear algebra kernels.

Two interchangeable backends implement the same three functions:

* ``_modpcore`` -- compiled Cython extension (built by ``setup.py``),
* ``_purepy``   -- stdlib-only fallback.

The compiled backend is preferred when importable; setting the
environment variable ``FUSIONRING_PURE=1`` forces the fallback.
``benchmarks/bench_kernels.py`` compares the two.
"""

import os

from fusionring.kernels import _purepy

if os.environ.get("FUSIONRING_PURE"):
    _impl = _purepy
    BACKEND = "python"
else:
    try:
        from fusionring.kernels import _modpcore as _impl

        BACKEND = "c"
    except ImportError:
        _impl = _purepy
        BACKEND = "python"

rank_mod_p = _impl.rank_mod_p
matmul_mod_p = _impl.matmul_mod_p
nilpotent_rank_profile = _impl.nilpotent_rank_profile

__all__ = ["BACKEND", "rank_mod_p", "matmul_mod_p", "nilpotent_rank_profile"]
