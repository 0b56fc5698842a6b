"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension (``serpbias._kernels._native``, built from
``_native.pyx``) is preferred when importable; otherwise the pure-Python
module is used.  Set ``SERPBIAS_PURE=1`` to force the fallback, e.g. for
benchmarking or debugging.  ``BACKEND`` names the selection.
"""

import os

from . import pure

if os.environ.get("SERPBIAS_PURE"):
    _impl = pure
else:
    try:
        from . import _native as _impl
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND

KIND_PLAIN = pure.KIND_PLAIN
KIND_ENTRY = pure.KIND_ENTRY
KIND_INTENSIFIER = pure.KIND_INTENSIFIER
KIND_NEGATOR = pure.KIND_NEGATOR

score_adjusted_mean = _impl.score_adjusted_mean
ndcg = _impl.ndcg
expected_average_precision = _impl.expected_average_precision
fair_metric_samples = _impl.fair_metric_samples


def available_backends():
    """Importable kernel modules keyed by backend name."""
    backends = {"pure": pure}
    try:
        from . import _native
    except ImportError:
        pass
    else:
        backends["native"] = _native
    return backends
