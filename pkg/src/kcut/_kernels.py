"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is. Set ``KCUT_PURE_PYTHON=1`` to force the fallback.
"""
import os

from kcut import _pykernels

if os.environ.get("KCUT_PURE_PYTHON"):
    impl = _pykernels
    BACKEND = "python"
else:
    try:
        from kcut import _ckernels as impl
    except ImportError:
        impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

near_cuts = impl.near_cuts
stoer_wagner = impl.stoer_wagner
min_kpartition = impl.min_kpartition
pvc_best_coloring = impl.pvc_best_coloring
