"""Pure-Python fallback for the hot enumeration kernels.

This module must stay import-light and dependency-free: it is the reference
implementation the compiled extension is checked against, and the code path
used when the extension is unavailable (or disabled via CATALEMMA_PURE=1).
"""

from __future__ import annotations

import math


def _binomial_gen(n: int, k: int) -> int:
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** (k & 1) * math.comb(k - n - 1, k)


def composition_tables(l: int, m: int) -> tuple[list[int], list[int]]:
    """Per-part coefficients: first[p] for a leading part, rest[p] otherwise."""
    first = [0] * (m + 1)
    rest = [0] * (m + 1)
    for p in range(1, m + 1):
        first[p] = _binomial_gen(l - p, p - 1)
        rest[p] = _binomial_gen(l - p, p)
    return first, rest


def signed_composition_sum(l: int, m: int) -> int:
    """Sum of (-1)^t * first[m_1] * rest[m_2] * ... over compositions of m."""
    first, rest = composition_tables(l, m)

    def tail(remaining: int, prefix: int, sign: int) -> int:
        if remaining == 0:
            return sign * prefix
        total = 0
        for p in range(1, remaining + 1):
            coeff = rest[p]
            if coeff:
                total += tail(remaining - p, prefix * coeff, -sign)
        return total

    total = 0
    for p in range(1, m + 1):
        coeff = first[p]
        if coeff:
            total += tail(m - p, coeff, -1)
    return total
