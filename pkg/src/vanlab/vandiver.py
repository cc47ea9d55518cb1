"""Auxiliary-prime test that an eigencomponent of the cyclotomic units is not a p-th power.

For an irregular pair (p, k) and a prime q = 1 mod p, the unit
eta_k = prod_a (1 - zeta^a)^(a^(p-1-k)) is reduced modulo a prime above q.
If its image is not a p-th power in F_q^*, eta_k is not a global p-th power
and the corresponding eigenspace of the real class group has no p-torsion.
A p-th power residue proves nothing, so that outcome is only "inconclusive".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import is_prime, primitive_root
from .bernoulli import irregular_indices

WITNESSED = "witnessed"
INCONCLUSIVE = "inconclusive"


class DegenerateRoot(ArithmeticError):
    pass


@dataclass(frozen=True)
class VandiverVerdict:
    p: int
    k: int
    status: str
    q: int | None = None
    eta_power_residue: int | None = None
    tried: tuple[int, ...] = field(default_factory=tuple)

    @property
    def witnessed(self) -> bool:
        return self.status == WITNESSED


def find_aux_primes(p: int, count: int) -> list[int]:
    """The `count` smallest primes q = 1 mod p."""
    out = []
    q = p + 1
    while len(out) < count:
        if is_prime(q):
            out.append(q)
        q += p
    return out


def eigen_exponents(p: int, k: int) -> list[int]:
    """c_a = a^(p-1-k) mod p for a = 1..p-1 (index 0 holds a = 1)."""
    exps = [pow(a, p - 1 - k, p) for a in range(1, p)]
    if sum(exps) % p:
        raise ArithmeticError(f"exponent sum for (p={p}, k={k}) is not divisible by p")
    return exps


def eigen_unit_mod_q(p: int, k: int, q: int, g: int | None = None) -> int:
    """eta_k modulo the prime above q where zeta maps to g^((q-1)/p)."""
    if (q - 1) % p:
        raise ValueError(f"q={q} is not 1 mod {p}")
    if g is None:
        g = primitive_root(q)
    w = pow(g, (q - 1) // p, q)
    if w == 1:
        raise DegenerateRoot(f"{g} does not generate F_{q}^*")
    eta = 1
    wa = 1
    for c in eigen_exponents(p, k):
        wa = wa * w % q
        eta = eta * pow(1 - wa, c, q) % q
    return eta


def vandiver_witness(p: int, k: int, q: int, g: int | None = None) -> VandiverVerdict:
    eta = eigen_unit_mod_q(p, k, q, g)
    residue = pow(eta, (q - 1) // p, q)
    if residue != 1:
        return VandiverVerdict(p, k, WITNESSED, q, residue, (q,))
    return VandiverVerdict(p, k, INCONCLUSIVE, None, None, (q,))


def check_vandiver(p: int, max_aux: int = 10) -> list[VandiverVerdict]:
    """One verdict per irregular index of p, trying auxiliary primes in ascending order."""
    if max_aux < 1:
        raise ValueError("max_aux must be >= 1")
    ks = irregular_indices(p)
    if not ks:
        return []
    qs = find_aux_primes(p, max_aux)
    verdicts = []
    for k in ks:
        tried: list[int] = []
        verdict = None
        for q in qs:
            tried.append(q)
            v = vandiver_witness(p, k, q)
            if v.witnessed:
                verdict = VandiverVerdict(p, k, WITNESSED, q, v.eta_power_residue, tuple(tried))
                break
        if verdict is None:
            verdict = VandiverVerdict(p, k, INCONCLUSIVE, None, None, tuple(tried))
        verdicts.append(verdict)
    return verdicts
