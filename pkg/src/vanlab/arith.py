"""Modular arithmetic, primality, primitive roots and rank over F_p."""

from __future__ import annotations

from typing import Sequence

import numpy as np

# Deterministic for every n < 3.3e24, which covers the full 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertible(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test for 0 <= n < 2**64."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m by left-to-right square and multiply."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        return mod_pow(mod_inv(base, m), -exp, m)
    base %= m
    result = 1
    for bit in bin(exp)[2:]:
        result = result * result % m
        if bit == "1":
            result = result * base % m
    return result


def mod_inv(a: int, m: int) -> int:
    """Inverse of a modulo m via the extended Euclidean algorithm."""
    old_r, r = a % m, m
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return old_s % m


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    """Smallest generator of (Z/p)^*."""
    if p == 2:
        return 1
    exps = [(p - 1) // q for q in prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exps):
            return g
    raise ValueError(f"{p} has no primitive root (not prime?)")


def is_primitive_root(g: int, p: int) -> bool:
    return g % p != 0 and all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


def teich_char(a: int, p: int, m: int) -> int:
    """Teichmüller lift of a mod p^m: the (p-1)-st root of unity congruent to a."""
    pm = p**m
    return pow(a, p ** (m - 1), pm)


def fp_rank(rows: Sequence[Sequence[int]] | np.ndarray, p: int) -> int:
    """Rank of a matrix over F_p by Gaussian elimination. The input is not modified."""
    m = np.array(rows, dtype=np.int64, copy=True) % p
    if m.ndim != 2 or m.size == 0:
        return 0
    n_rows, n_cols = m.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        m[rank] = m[rank] * mod_inv(int(m[rank, col]), p) % p
        below = m[rank + 1 :, col]
        if below.any():
            m[rank + 1 :] = (m[rank + 1 :] - np.outer(below, m[rank])) % p
        rank += 1
    return rank


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi] by a simple sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for d in range(2, int(hi**0.5) + 1):
        if sieve[d]:
            sieve[d * d :: d] = False
    return [int(x) for x in np.nonzero(sieve)[0] if x >= lo]
