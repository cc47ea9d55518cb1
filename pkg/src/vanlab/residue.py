"""Arithmetic in R_p = F_p[t]/(t^(p-1)), the residue ring Z[zeta_p]/(p) with zeta = 1 + t.

Also builds the log-linearized image of the real cyclotomic units in R_p and
reads off r0 from its rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .arith import fp_rank, mod_inv


class NotUnit(ArithmeticError):
    pass


def _mul_coeffs(x: Sequence[int], y: Sequence[int], p: int) -> tuple[int, ...]:
    n = len(x)
    if n > 40:
        prod = np.convolve(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))[:n] % p
        return tuple(int(c) for c in prod)
    out = [0] * n
    for i, xi in enumerate(x):
        if xi:
            for j in range(n - i):
                out[i + j] += xi * y[j]
    return tuple(c % p for c in out)


@dataclass(frozen=True)
class ResidueElem:
    """Element of F_p[t]/(t^(p-1)); coeffs[i] is the coefficient of t^i."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, p: int, coeffs: Iterable[int]) -> ResidueElem:
        c = [int(x) % p for x in coeffs]
        n = p - 1
        if len(c) > n:
            c = c[:n]
        return cls(p, tuple(c + [0] * (n - len(c))))

    @classmethod
    def one(cls, p: int) -> ResidueElem:
        return cls.from_coeffs(p, [1])

    @classmethod
    def zero(cls, p: int) -> ResidueElem:
        return cls.from_coeffs(p, [])

    @classmethod
    def t(cls, p: int) -> ResidueElem:
        return cls.from_coeffs(p, [0, 1])

    def _check(self, other: ResidueElem) -> None:
        if other.p != self.p:
            raise ValueError("elements live in different rings")

    def __add__(self, other: ResidueElem) -> ResidueElem:
        self._check(other)
        return ResidueElem(self.p, tuple((a + b) % self.p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: ResidueElem) -> ResidueElem:
        self._check(other)
        return ResidueElem(self.p, tuple((a - b) % self.p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> ResidueElem:
        return ResidueElem(self.p, tuple(-a % self.p for a in self.coeffs))

    def __mul__(self, other: ResidueElem | int) -> ResidueElem:
        if isinstance(other, int):
            return ResidueElem(self.p, tuple(a * other % self.p for a in self.coeffs))
        self._check(other)
        return ResidueElem(self.p, _mul_coeffs(self.coeffs, other.coeffs, self.p))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ResidueElem:
        if e < 0:
            return self.inv() ** (-e)
        result = ResidueElem.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def inv(self) -> ResidueElem:
        """Inverse by solving the triangular system coefficient by coefficient."""
        p = self.p
        c = self.coeffs
        if c[0] == 0:
            raise NotUnit("constant coefficient is zero")
        c0_inv = mod_inv(c[0], p)
        out = [c0_inv]
        for k in range(1, p - 1):
            s = sum(c[i] * out[k - i] for i in range(1, k + 1))
            out.append(-s * c0_inv % p)
        return ResidueElem(p, tuple(out))

    def __repr__(self) -> str:
        terms = [f"{c}t^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"R{self.p}({' + '.join(terms) or '0'})"


def reduce_zeta_poly(p: int, c: Sequence[int]) -> ResidueElem:
    """Image of sum c_i zeta^i under zeta -> 1 + t."""
    n = p - 1
    acc = [0] * n
    for ci in reversed(list(c)):
        # acc <- acc * (1 + t) + ci
        for i in range(n - 1, 0, -1):
            acc[i] = (acc[i] + acc[i - 1]) % p
        acc[0] = (acc[0] + ci) % p
    return ResidueElem(p, tuple(acc))


def unit_decompose(u: ResidueElem) -> tuple[int, ResidueElem]:
    """Split a unit as c * v with c in F_p^* and v = 1 mod t."""
    if not u.is_unit():
        raise NotUnit("constant coefficient is zero")
    c = u.coeffs[0]
    return c, u * mod_inv(c, u.p)


def _batch_log(v: np.ndarray, p: int) -> np.ndarray:
    """Truncated logarithm of each row of v (rows are principal units).

    Uses log(v)_n = (1/n) [t^(n-1)] (v'/v) for 1 <= n <= p-2, which matches the
    alternating series because every denominator involved is below p.
    """
    rows, n = v.shape
    deriv = np.zeros_like(v)
    deriv[:, :-1] = v[:, 1:] * np.arange(1, n, dtype=np.int64) % p
    q = np.zeros_like(v)
    for k in range(n - 1):
        if k:
            s = np.einsum("ij,ij->i", v[:, 1 : k + 1], q[:, k - 1 :: -1])
            q[:, k] = (deriv[:, k] - s) % p
        else:
            q[:, 0] = deriv[:, 0]
    out = np.zeros_like(v)
    inv = np.array([0] + [mod_inv(j, p) for j in range(1, n)], dtype=np.int64)
    out[:, 1:] = q[:, :-1] * inv[1:] % p
    return out


def truncated_log(v: ResidueElem) -> ResidueElem:
    """log of a principal unit v = 1 mod t; the result is 0 mod t."""
    if v.coeffs[0] != 1:
        raise ValueError("truncated_log needs v = 1 mod t")
    if v.p < 5:
        # R_3 = F_3[t]/(t^2): log(1 + a t) = a t
        return ResidueElem(v.p, (0,) + v.coeffs[1:])
    row = _batch_log(np.array([v.coeffs], dtype=np.int64), v.p)[0]
    return ResidueElem(v.p, tuple(int(x) for x in row))


def truncated_exp(w: ResidueElem) -> ResidueElem:
    """Inverse of truncated_log: sum_{j<p-1} w^j / j! for w = 0 mod t."""
    if w.coeffs[0] != 0:
        raise ValueError("truncated_exp needs w = 0 mod t")
    p = w.p
    total = ResidueElem.one(p)
    term = ResidueElem.one(p)
    for j in range(1, p - 1):
        term = term * w * mod_inv(j, p)
        total = total + term
    return total


def _binomial_rows(p: int, tops: np.ndarray, n: int) -> np.ndarray:
    """C(tops[r], j) mod p for j = 0..n-1, each top in [0, p)."""
    out = np.zeros((len(tops), n), dtype=np.int64)
    out[:, 0] = 1
    for j in range(1, n):
        out[:, j] = out[:, j - 1] * ((tops - j + 1) % p) % p * mod_inv(j, p) % p
    return out


def cyclotomic_unit(p: int, a: int) -> ResidueElem:
    """Image of xi_a = zeta^((1-a)/2) (zeta^a - 1)/(zeta - 1) in R_p."""
    if not 2 <= a <= (p - 1) // 2:
        raise ValueError(f"a must lie in [2, {(p - 1) // 2}]")
    n = p - 1
    f = _binomial_rows(p, np.array([a]), n + 1)[0, 1:]  # ((1+t)^a - 1)/t
    shift = (1 - a) * mod_inv(2, p) % p
    g = _binomial_rows(p, np.array([shift]), n)[0]  # (1+t)^shift
    u = ResidueElem(p, _mul_coeffs(f.tolist(), g.tolist(), p))
    assert u.coeffs[0] == a % p and (n < 2 or u.coeffs[1] == 0), "cyclotomic unit is not real"
    return u


def unit_relation_matrix(p: int) -> np.ndarray:
    """Rows: log(xi_a^(p-1)) for a = 2..(p-1)/2, restricted to columns t^2..t^(p-2).

    Computed as -(shift_a * log(1+t) + log(((1+t)^a - 1)/(a t))), which is the
    same vector since xi_a^(p-1) = (xi_a / a)^(p-1) and log is additive.
    """
    n_rows = (p - 3) // 2
    if n_rows <= 0:
        return np.zeros((0, max(p - 3, 0)), dtype=np.int64)
    n = p - 1
    a = np.arange(2, (p - 1) // 2 + 1, dtype=np.int64)
    f = _binomial_rows(p, a, n + 1)[:, 1:]
    inv_a = np.array([mod_inv(int(x), p) for x in a], dtype=np.int64)
    f = f * inv_a[:, None] % p
    logs = _batch_log(f, p)
    inv = np.array([0] + [mod_inv(j, p) for j in range(1, n)], dtype=np.int64)
    sign = np.where(np.arange(n) % 2 == 1, 1, p - 1)
    log_zeta = inv * sign % p  # log(1+t) = sum (-1)^(j+1) t^j / j
    log_zeta[0] = 0
    shift = (1 - a) * mod_inv(2, p) % p
    rows = -(logs + shift[:, None] * log_zeta[None, :]) % p
    assert not rows[:, :2].any(), "normalized cyclotomic units must be 1 mod t^2"
    return rows[:, 2:]


def compute_r0(p: int) -> int:
    """(p-3)/2 minus the F_p-rank of the cyclotomic unit log matrix."""
    n_rows = (p - 3) // 2
    if n_rows <= 0:
        return 0
    return n_rows - fp_rank(unit_relation_matrix(p), p)


def dim_V(p: int, r0: int | None = None) -> int:
    return (p - 3) // 2 + (compute_r0(p) if r0 is None else r0)
