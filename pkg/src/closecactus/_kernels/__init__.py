"""Kernel backend selection.

Imports the compiled kernels when available, falling back to the pure
Python versions. Set ``CLOSECACTUS_PURE_PYTHON=1`` to force the fallback
(used by the benchmark harness and backend-equivalence tests).
"""

import os

if os.environ.get("CLOSECACTUS_PURE_PYTHON"):
    from closecactus._kernels.pure import *  # noqa: F401,F403
    BACKEND = "pure"
else:
    try:
        from closecactus._speedups import *  # noqa: F401,F403
        BACKEND = "cython"
    except ImportError:
        from closecactus._kernels.pure import *  # noqa: F401,F403
        BACKEND = "pure"
