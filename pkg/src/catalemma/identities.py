"""Exact evaluation of the Catalan-number identities and their recurrences.

All arithmetic is integer/rational and exact.  The alternating composition
sum (the brute-force side of the composition identity) dispatches to a
compiled kernel when one is available; see :mod:`catalemma._kernels`.

Everything here is a pure function over immutable values; the only cache
(`catalan`) is an lru_cache, whose worst concurrent behavior is recomputing
the same value, so results are observationally pure under threading.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from . import _kernels


def binomial_gen(n: int, k: int) -> int:
    """Generalized binomial coefficient for arbitrary integer upper index.

    Uses the falling-factorial convention: n(n-1)...(n-k+1)/k! for k >= 0
    (an exact integer for every integer n) and 0 for k < 0.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** (k & 1) * math.comb(k - n - 1, k)


@functools.lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """The n-th Catalan number binomial(2n, n)/(n + 1)."""
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def lhs_identity1(s: int) -> int:
    """Alternating Catalan sum over i of (-1)^i C_i binomial(i+1, s-i).

    Evaluates to 0 for every s >= 1; the single term at s = 0 gives 1,
    which the verification layer reports as the documented exception.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    total = 0
    for i in range(s + 1):
        b = binomial_gen(i + 1, s - i)
        if b:
            term = catalan(i) * b
            total += -term if i & 1 else term
    return total


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive parts with a fixed total."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError("composition parts must be positive integers")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)


def compositions(m: int) -> Iterator[Composition]:
    """All 2^(m-1) compositions of m, lazily, in lexicographic part order."""
    if m < 1:
        raise ValueError("compositions are defined for m >= 1")

    def rec(remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    for parts in rec(m):
        yield Composition(parts)


def lhs_identity2prime(l: int, m: int) -> int:
    """Brute-force alternating sum over all compositions of m.

    Each composition (m_1, ..., m_t) contributes
    (-1)^t binomial(l-m_1, m_1-1) * prod_{j>=2} binomial(l-m_j, m_j).
    Equals (-1)^m C_{m-1} whenever 1 <= m <= l.
    """
    if m < 1 or m > l:
        raise ValueError("requires 1 <= m <= l")
    return _kernels.signed_composition_sum(l, m)


def a_recurrence_eval(l: int, m: int, prior: Mapping[int, int]) -> int:
    """One step of the recurrence for the composition sum A(l, m).

    ``prior`` must contain A(l, m-k) for k = 1 .. m-1.  Returns
    -binomial(l-m, m-1) - sum_k binomial(l-k, k) * prior[m-k].
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    total = -binomial_gen(l - m, m - 1)
    for k in range(1, m):
        try:
            previous = prior[m - k]
        except KeyError:
            raise ValueError(f"missing prior value A(l, {m - k})") from None
        total -= binomial_gen(l - k, k) * previous
    return total


def a_recurrence_table(l: int, m_max: int) -> dict[int, int]:
    """Fill A(l, 1..m_max) via the recurrence alone."""
    table: dict[int, int] = {}
    for m in range(1, m_max + 1):
        table[m] = a_recurrence_eval(l, m, table)
    return table


def lhs_identity3(l: int, m: int) -> int:
    """Sum over k of (-1)^k binomial(l-m+k, m-k) C_k for 0 <= m <= l."""
    if m < 0 or m > l:
        raise ValueError("requires 0 <= m <= l")
    total = 0
    for k in range(m + 1):
        b = binomial_gen(l - m + k, m - k)
        if b:
            term = b * catalan(k)
            total += -term if k & 1 else term
    return total


def rhs_identity3(l: int, m: int) -> int:
    """binomial(l-m-1, m) with the generalized (falling-factorial) convention."""
    return binomial_gen(l - m - 1, m)


def f_value(l: int, m: int) -> Fraction:
    """The normalized sum lhs/rhs; equals 1 wherever the identity holds.

    Raises ZeroDivisionError when the right side vanishes (which happens
    exactly when 0 <= l-m-1 < m), since the normalization divides by it.
    """
    rhs = rhs_identity3(l, m)
    if rhs == 0:
        raise ZeroDivisionError(
            f"right side binomial({l - m - 1}, {m}) is zero; f is undefined at l={l}, m={m}"
        )
    return Fraction(lhs_identity3(l, m), rhs)


@dataclass(frozen=True)
class IdentityReport:
    """Result of checking one identity instance at concrete parameters."""

    identity: str
    params: tuple[tuple[str, int], ...]
    lhs: int
    rhs: int

    @property
    def verdict(self) -> str:
        return "equal" if self.lhs == self.rhs else "unequal"

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def line(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params)
        mark = "ok" if self.ok else "FAIL"
        return f"{mark} {self.identity}({args}): lhs={self.lhs} rhs={self.rhs}"
