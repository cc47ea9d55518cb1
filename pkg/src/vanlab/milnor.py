"""Brute-force checks in Z[zeta_p] and Z[zeta_{p^2}] for p in {3, 5, 7}.

Elements are exact integer coefficient vectors modulo the p^level-th cyclotomic
polynomial. The maps j1, j2 send them to the residue ring R_p; j2 is taken as
j1 composed with the norm down to Z[zeta_p]. The unit group U(R_p) and the image
of the global units are enumerated outright, so these routines only scale to p = 7.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .residue import ResidueElem, cyclotomic_unit, reduce_zeta_poly
from .structure import PicardStructure

MICRO_PRIMES = (3, 5, 7)


class NotInSubfield(ArithmeticError):
    pass


class UnsupportedPrime(ValueError):
    pass


def _order(p: int, level: int) -> int:
    return p**level


def _phi(p: int, level: int) -> int:
    return p ** (level - 1) * (p - 1)


def _reduce(p: int, level: int, cyclic: list[int]) -> tuple[int, ...]:
    """Reduce a vector indexed mod p^level by Phi_{p^level}(x) = sum_{i<p} x^(i*m)."""
    m = p ** (level - 1)
    phi = (p - 1) * m
    out = cyclic[:phi]
    for r in range(m):
        top = cyclic[phi + r]
        if top:
            for i in range(p - 1):
                out[i * m + r] -= top
    return tuple(out)


@dataclass(frozen=True)
class CycInt:
    """Exact element of Z[zeta_{p^level}] in the power basis 1, zeta, ..., zeta^(phi-1)."""

    p: int
    level: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, p: int, level: int, coeffs: Iterable[int]) -> CycInt:
        n = _order(p, level)
        cyc = [0] * n
        for i, c in enumerate(coeffs):
            cyc[i % n] += c
        return cls(p, level, _reduce(p, level, cyc))

    @classmethod
    def integer(cls, p: int, level: int, n: int) -> CycInt:
        return cls.from_coeffs(p, level, [n])

    @classmethod
    def zeta(cls, p: int, level: int, power: int = 1) -> CycInt:
        n = _order(p, level)
        v = [0] * n
        v[power % n] = 1
        return cls.from_coeffs(p, level, v)

    def _check(self, other: CycInt) -> None:
        if (self.p, self.level) != (other.p, other.level):
            raise ValueError("operands live in different rings")

    def __add__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.p, self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycInt) -> CycInt:
        self._check(other)
        return CycInt(self.p, self.level, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycInt:
        return CycInt(self.p, self.level, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycInt) -> CycInt:
        self._check(other)
        n = _order(self.p, self.level)
        cyc = [0] * n
        ys = [(j, y) for j, y in enumerate(other.coeffs) if y]
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in ys:
                    k = i + j
                    if k >= n:
                        k -= n
                    cyc[k] += x * y
        return CycInt(self.p, self.level, _reduce(self.p, self.level, cyc))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def galois_apply(a: CycInt, u: int) -> CycInt:
    """sigma_u: zeta -> zeta^u."""
    n = _order(a.p, a.level)
    if gcd(u, n) != 1:
        raise ValueError(f"{u} is not a unit modulo {n}")
    cyc = [0] * n
    for i, c in enumerate(a.coeffs):
        if c:
            cyc[i * u % n] += c
    return CycInt(a.p, a.level, _reduce(a.p, a.level, cyc))


def norm_K2_K1(a: CycInt) -> CycInt:
    """Norm from Q(zeta_{p^2}) to Q(zeta_p): product of sigma_{1+cp}, c = 0..p-1."""
    if a.level != 2:
        raise ValueError("norm_K2_K1 expects a level-2 element")
    p = a.p
    prod = a
    for c in range(1, p):
        prod = prod * galois_apply(a, 1 + c * p)
    for i, coeff in enumerate(prod.coeffs):
        if coeff and i % p:
            raise NotInSubfield(f"norm has support at zeta^{i}")
    return CycInt(p, 1, prod.coeffs[::p])


def j1(a: CycInt) -> ResidueElem:
    if a.level != 1:
        raise ValueError("j1 expects a level-1 element")
    return reduce_zeta_poly(a.p, a.coeffs)


def j2(a: CycInt) -> ResidueElem:
    return j1(norm_K2_K1(a))


def j2_additivity_test(p: int, trials: int = 1000, seed: int = 0, bound: int = 3) -> bool:
    """j2(a+b) = j2(a) + j2(b) and j2(ab) = j2(a) j2(b) on random level-2 pairs."""
    rng = random.Random(seed)
    n = _phi(p, 2)
    for _ in range(trials):
        a = CycInt(p, 2, tuple(rng.randint(-bound, bound) for _ in range(n)))
        b = CycInt(p, 2, tuple(rng.randint(-bound, bound) for _ in range(n)))
        ja, jb = j2(a), j2(b)
        if j2(a + b) != ja + jb:
            return False
        if j2(a * b) != ja * jb:
            return False
    return True


@dataclass(frozen=True)
class UnitImage:
    p: int
    subgroup: frozenset[ResidueElem]
    generator_tags: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.subgroup)

    def __contains__(self, x: ResidueElem) -> bool:
        return x in self.subgroup


def _closure(one: ResidueElem, gens: Sequence[ResidueElem]) -> set[ResidueElem]:
    seen = {one}
    queue = deque([one])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _require_micro(p: int) -> None:
    if p not in MICRO_PRIMES:
        raise UnsupportedPrime(f"brute force is limited to p in {MICRO_PRIMES}, got {p}")


def unit_image_generators(p: int) -> list[tuple[str, ResidueElem]]:
    gens = [("-1", j1(CycInt.integer(p, 1, -1))), ("zeta", j1(CycInt.zeta(p, 1)))]
    gens += [(f"xi_{a}", cyclotomic_unit(p, a)) for a in range(2, (p - 1) // 2 + 1)]
    return gens


def unit_image_subgroup(p: int) -> UnitImage:
    """Subgroup of U(R_p) generated by the images of -1, zeta and the xi_a."""
    _require_micro(p)
    gens = unit_image_generators(p)
    elems = _closure(ResidueElem.one(p), [g for _, g in gens])
    return UnitImage(p, frozenset(elems), tuple(tag for tag, _ in gens))


def enumerate_units(p: int) -> list[ResidueElem]:
    """Every unit of R_p, by running over all p^(p-1) elements."""
    _require_micro(p)
    return [
        ResidueElem(p, c)
        for c in itertools.product(range(p), repeat=p - 1)
        if c[0] != 0
    ]


@dataclass(frozen=True)
class MicroResult:
    p: int
    unit_order: int
    image_order: int
    V: PicardStructure
    elementary: bool
    e2_absorbed: bool
    j2_additive: bool

    @property
    def ok(self) -> bool:
        return self.elementary and self.e2_absorbed and self.j2_additive


def coset_representatives(units: list[ResidueElem], image: UnitImage) -> tuple[list[ResidueElem], bool]:
    """Coset representatives of U/image and whether every one has order dividing p."""
    p = image.p
    covered: set[ResidueElem] = set()
    reps = []
    for u in units:
        if u in covered:
            continue
        reps.append(u)
        covered.update(u * h for h in image.subgroup)
    elementary = all(r**p in image for r in reps)
    return reps, elementary


def micro_V(p: int) -> PicardStructure:
    """U(R_p)/image(E_1) as an elementary abelian p-group (rank only)."""
    reps, elementary = coset_representatives(enumerate_units(p), unit_image_subgroup(p))
    rank = _log_exact(len(reps), p)
    if not elementary or rank is None:
        raise ArithmeticError(f"U/E_1 for p={p} is not elementary abelian")
    return PicardStructure(rank)


def _log_exact(n: int, p: int) -> int | None:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else None


def level2_cyclotomic_unit(p: int, a: int) -> CycInt:
    """(zeta_{p^2}^a - 1)/(zeta_{p^2} - 1) = 1 + zeta + ... + zeta^(a-1)."""
    return CycInt.from_coeffs(p, 2, [1] * a)


def e2_generators(p: int) -> list[tuple[str, CycInt]]:
    gens = [("-1", CycInt.integer(p, 2, -1)), ("zeta2", CycInt.zeta(p, 2))]
    n = p * p
    for a in range(2, (n + 1) // 2):
        if a % p:
            gens.append((f"u_{a}", level2_cyclotomic_unit(p, a)))
    return gens


def e2_absorption_test(p: int, image: UnitImage | None = None) -> bool:
    """Every j2-image of a generator of E_2 already lies in the image of E_1."""
    _require_micro(p)
    if image is None:
        image = unit_image_subgroup(p)
    return all(j2(g) in image for _, g in e2_generators(p))


def micro_check(p: int, trials: int = 1000) -> MicroResult:
    units = enumerate_units(p)
    image = unit_image_subgroup(p)
    reps, elementary = coset_representatives(units, image)
    rank = _log_exact(len(reps), p)
    return MicroResult(
        p=p,
        unit_order=len(units),
        image_order=len(image),
        V=PicardStructure(rank if rank is not None else -1),
        elementary=elementary and rank is not None,
        e2_absorbed=e2_absorption_test(p, image),
        j2_additive=j2_additivity_test(p, trials),
    )
