"""Bernoulli numbers modulo p, irregular pairs and eigenspace exponents.

Two independent routes produce the table of B_k mod p for even k in [2, p-3]:
inversion of the truncated series (e^x - 1)/x, and the classical recurrence
sum_{j<=k} C(k+1, j) B_j = 0. The eigenspace exponent of an irregular pair is
the p-adic valuation of the generalized Bernoulli number B_{1, omega^(k-1)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .arith import mod_inv, teich_char

# Largest modulus used for p-adic work: p^(m+1) must stay below this.
DOUBLE_WORD = 2**128


class PrecisionExhausted(ArithmeticError):
    """Raised when the valuation cannot be decided within the precision cap."""


@dataclass(frozen=True)
class IrregularPair:
    p: int
    k: int
    e: int


@dataclass(frozen=True)
class BernoulliTable:
    p: int
    values: dict[int, int]

    def zeros(self) -> list[int]:
        return sorted(k for k, v in self.values.items() if v == 0)


class GenBernoulli(NamedTuple):
    value: int
    valuation: int
    exhausted: bool


def _inverse_factorials(p: int, n: int) -> np.ndarray:
    """1/i! mod p for i = 0..n (requires n < p)."""
    out = np.empty(n + 1, dtype=np.int64)
    f = 1
    for i in range(n + 1):
        if i:
            f = f * i % p
        out[i] = mod_inv(f, p)
    return out


def _series_inverse(a: np.ndarray, p: int) -> np.ndarray:
    """Inverse of the power series a (a[0] == 1) mod p, truncated to len(a)."""
    n = len(a)
    c = np.zeros(n, dtype=np.int64)
    c[0] = 1
    for k in range(1, n):
        c[k] = -int(np.dot(a[1 : k + 1], c[k - 1 :: -1])) % p
    return c


def bernoulli_even_mod_p(p: int) -> BernoulliTable:
    """B_k mod p for even k in [2, p-3] via series inversion of (e^x - 1)/x."""
    top = p - 3
    if top < 2:
        return BernoulliTable(p, {})
    inv_fact = _inverse_factorials(p, top + 1)
    # (e^x - 1)/x = sum x^i / (i+1)!
    coeffs = _series_inverse(inv_fact[1 : top + 2].copy(), p)
    values = {}
    fact = 1
    for k in range(1, top + 1):
        fact = fact * k % p
        if k % 2 == 0:
            values[k] = fact * int(coeffs[k]) % p
    return BernoulliTable(p, values)


def bernoulli_even_mod_p_recurrence(p: int) -> BernoulliTable:
    """Same table from sum_{j=0}^{k} C(k+1, j) B_j = 0, used as a cross-check."""
    top = p - 3
    if top < 2:
        return BernoulliTable(p, {})
    b = np.zeros(top + 1, dtype=np.int64)
    b[0] = 1
    # row holds C(n, j) mod p for j = 0..top+1, starting at n = 1
    row = np.zeros(top + 2, dtype=np.int64)
    row[0] = row[1] = 1
    for k in range(1, top + 1):
        row[1:] = (row[1:] + row[:-1]) % p  # now C(k+1, j)
        s = int(np.dot(row[:k], b[:k])) % p
        b[k] = -s * mod_inv(k + 1, p) % p
    return BernoulliTable(p, {k: int(b[k]) for k in range(2, top + 1, 2)})


@lru_cache(maxsize=256)
def _irregular(p: int) -> tuple[int, ...]:
    return tuple(bernoulli_even_mod_p(p).zeros())


def irregular_indices(p: int) -> list[int]:
    """Even k in [2, p-3] with p | B_k, ascending."""
    return list(_irregular(p))


def index_of_irregularity(p: int) -> int:
    return len(_irregular(p))


def _valuation(x: int, p: int, cap: int) -> int:
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


def gen_bernoulli_B1(p: int, k: int, m: int) -> GenBernoulli:
    """B_{1, omega^(k-1)} mod p^m together with min(m, v_p) of it.

    Computed as (1/p) * sum_a omega(a)^(k-1) * a with the Teichmüller character
    taken mod p^(m+1); the sum is divisible by p.
    """
    if k % 2 or not 2 <= k <= p - 3:
        raise ValueError(f"k must be even in [2, {p - 3}], got {k}")
    if m < 1:
        raise ValueError("precision m must be >= 1")
    big = p ** (m + 1)
    if big >= DOUBLE_WORD:
        raise PrecisionExhausted(f"p^{m + 1} exceeds double-word range")
    total = 0
    for a in range(1, p):
        total += pow(teich_char(a, p, m + 1), k - 1, big) * a
    total %= big
    if total % p:
        raise ArithmeticError(f"generalized Bernoulli sum not divisible by {p}")
    value = total // p
    v = _valuation(value, p, m)
    return GenBernoulli(value, v, v >= m)


def eigenspace_exponent(p: int, k: int, precision_cap: int | None = None) -> int:
    """Valuation of B_{1, omega^(k-1)}, raising precision from m = 2 until decided."""
    m = 2
    while True:
        if precision_cap is not None and m > precision_cap:
            raise PrecisionExhausted(f"e_{k} for p={p} is >= {precision_cap}")
        g = gen_bernoulli_B1(p, k, m)
        if not g.exhausted:
            return g.valuation
        m += 1


def irregular_pairs(p: int, precision_cap: int | None = None) -> list[IrregularPair]:
    return [IrregularPair(p, k, eigenspace_exponent(p, k, precision_cap)) for k in irregular_indices(p)]
