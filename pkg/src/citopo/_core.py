"""Kernel selection: compiled extension when available, pure Python otherwise.

Set CITOPO_PURE=1 to force the pure-Python kernel (the benchmark and the
twin-agreement tests use this).
"""

import os

if os.environ.get("CITOPO_PURE"):
    from . import _core_py as _impl
else:
    try:
        from . import _core_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

IMPL_NAME = _impl.IMPL_NAME
g_ladder = _impl.g_ladder
invariant_key = _impl.invariant_key
power_key = _impl.power_key
scan = _impl.scan
