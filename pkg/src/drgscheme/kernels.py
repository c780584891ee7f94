"""Select the graph kernel backend: compiled if importable, numpy otherwise.

Set DRG_PURE_PYTHON=1 to force the numpy fallback.
"""

import os

BACKEND = "python"
if not os.environ.get("DRG_PURE_PYTHON"):
    try:
        from ._kernels import all_distances, local_counts

        BACKEND = "cython"
    except ImportError:
        pass
if BACKEND == "python":
    from ._kernels_py import all_distances, local_counts

__all__ = ["BACKEND", "all_distances", "local_counts"]
