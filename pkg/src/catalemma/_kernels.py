"""Backend selection for the hot kernels.

At import time this module picks between the compiled extension
(:mod:`catalemma._ckernels`) and the pure-Python fallback
(:mod:`catalemma._pykernels`).  Setting the environment variable
``CATALEMMA_PURE=1`` forces the fallback; this is what the benchmark uses
to time both paths.

The compiled kernel works in 128-bit integers, so it is only invoked when
an exact worst-case bound on every intermediate product fits; otherwise the
call silently routes to the pure path, which uses Python's unbounded ints.
"""

from __future__ import annotations

import os

from . import _pykernels

try:  # pragma: no cover - exercised only when the extension is built
    from . import _ckernels as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

_FORCE_PURE = os.environ.get("CATALEMMA_PURE", "") not in ("", "0")

_I128_LIMIT = 1 << 126


def backend() -> str:
    """Name of the kernel backend selected at import: 'compiled' or 'pure'."""
    return "compiled" if (_compiled is not None and not _FORCE_PURE) else "pure"


def _fast_path_safe(m: int, first: list[int], rest: list[int]) -> bool:
    """Exact overflow check for the 128-bit kernel.

    Bounds the largest absolute per-composition product by dynamic
    programming over the part sizes, then multiplies by the composition
    count; conservative but cheap.
    """
    limit = 1 << 62
    if any(abs(v) >= limit for v in first) or any(abs(v) >= limit for v in rest):
        return False
    best = [1] * (m + 1)
    for u in range(1, m + 1):
        best[u] = max(
            max(abs(rest[p]), 1) * best[u - p] for p in range(1, u + 1)
        )
    per_composition = max(
        max(abs(first[p]), 1) * best[m - p] for p in range(1, m + 1)
    )
    return (1 << (m - 1)) * per_composition < _I128_LIMIT


def signed_composition_sum(l: int, m: int) -> int:
    """Alternating composition sum; see :func:`catalemma._pykernels`."""
    if _compiled is not None and not _FORCE_PURE:
        first, rest = _pykernels.composition_tables(l, m)
        if _fast_path_safe(m, first, rest):
            return _compiled.signed_composition_sum(l, m, first, rest)
    return _pykernels.signed_composition_sum(l, m)


def signed_composition_sum_pure(l: int, m: int) -> int:
    """Pure-Python path regardless of backend selection (for benchmarks)."""
    return _pykernels.signed_composition_sum(l, m)


def signed_composition_sum_compiled(l: int, m: int) -> int:
    """Compiled path; raises RuntimeError when unavailable or out of range."""
    if _compiled is None:
        raise RuntimeError("compiled kernel is not available")
    first, rest = _pykernels.composition_tables(l, m)
    if not _fast_path_safe(m, first, rest):
        raise RuntimeError("inputs exceed the 128-bit fast-path bound")
    return _compiled.signed_composition_sum(l, m, first, rest)
