"""Per-prime invariant reports: R/r numbers, S_1 and B_p shapes, identity checks.

The plus-part numbers R_plus, r_plus, r_minus are fixed at zero (the model under
test). Two computations are independent of that model and act as falsifiers:
r0 from the rank of the cyclotomic unit logarithms, and the Bernoulli index
i(p) = R_minus. Auxiliary-prime witnesses corroborate the plus-part vanishing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bernoulli import PrecisionExhausted, eigenspace_exponent, irregular_indices
from .residue import compute_r0
from .vandiver import VandiverVerdict, check_vandiver

ASSUMPTIONS = (
    "each minus eigenspace of S_1 is cyclic of order p^e_k",
    "R_plus = r_plus = r_minus = 0",
    "cyclotomic units generate the units modulo p-th powers",
)

# Checks whose failure marks the report as an identity violation.
VANDIVER_CHECK = "vandiver witnessed"


@dataclass(frozen=True)
class RNumbers:
    R: int
    r: int
    R_plus: int
    R_minus: int
    r_plus: int
    r_minus: int
    r0: int


@dataclass(frozen=True)
class PicardStructure:
    """Elementary part F_p^elementary_rank plus cyclic factors Z/p^n, n in cyclic_factors."""

    elementary_rank: int
    cyclic_factors: tuple[int, ...] = ()

    def log_order(self) -> int:
        return self.elementary_rank + sum(self.cyclic_factors)

    def describe(self, p: int) -> str:
        parts = []
        if self.elementary_rank:
            parts.append(f"F_{p}^{self.elementary_rank}" if self.elementary_rank > 1 else f"F_{p}")
        for n in self.cyclic_factors:
            parts.append(f"Z/{p}^{n}" if n > 1 else f"Z/{p}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    details: str = ""


@dataclass(frozen=True)
class InvariantReport:
    p: int
    index_of_irregularity: int
    irregular_pairs: tuple[tuple[int, int], ...]
    r_numbers: RNumbers
    dim_V: int
    s1_factors: tuple[int, ...]
    b_p: PicardStructure
    s_p_image_dim: int
    checks: tuple[Check, ...]
    vandiver: tuple[VandiverVerdict, ...]
    cl_level2: str = "omitted"
    unpromoted_generators: tuple[int, ...] = ()
    assumptions: tuple[str, ...] = field(default=ASSUMPTIONS)

    @property
    def identity_violation(self) -> bool:
        return any(not c.passed for c in self.checks if c.name != VANDIVER_CHECK)

    @property
    def all_checks_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def minus_structure(p: int, precision_cap: int | None = None) -> list[int]:
    """Exponent e_k of the cyclic factor p^e_k for each irregular index k, sorted by k."""
    return [eigenspace_exponent(p, k, precision_cap) for k in irregular_indices(p)]


def r_numbers(p: int, r0: int | None = None) -> RNumbers:
    if r0 is None:
        r0 = compute_r0(p)
    R_minus = len(irregular_indices(p))
    return RNumbers(R=R_minus, r=0, R_plus=0, R_minus=R_minus, r_plus=0, r_minus=0, r0=r0)


def b_p_structure(p: int, exponents: list[int] | None = None) -> PicardStructure:
    """F_p^((p-3)/2) plus one Z/p^(e+1) per generator of S_1 (with r = 0 every one is promoted)."""
    if exponents is None:
        exponents = minus_structure(p)
    return PicardStructure((p - 3) // 2, tuple(sorted((e + 1 for e in exponents), reverse=True)))


def identity_checks(
    p: int,
    rn: RNumbers,
    dim_v: int,
    exponents: list[int],
    b_p: PicardStructure,
    vandiver: list[VandiverVerdict] | tuple[VandiverVerdict, ...],
) -> list[Check]:
    half = (p - 3) // 2
    checks = [
        Check("R-r=r0", rn.R - rn.r == rn.r0, f"R={rn.R} r={rn.r} r0={rn.r0}"),
        Check(
            "R_minus-r_minus<=r0",
            rn.R_minus - rn.r_minus <= rn.r0,
            f"{rn.R_minus - rn.r_minus} <= {rn.r0}",
        ),
        Check(
            "R_minus-r_minus=r0",
            rn.R_minus - rn.r_minus == rn.r0,
            f"{rn.R_minus - rn.r_minus} = {rn.r0}",
        ),
        Check(
            "r_minus=r_plus=R_plus",
            rn.r_minus == rn.r_plus == rn.R_plus,
            f"{rn.r_minus}, {rn.r_plus}, {rn.R_plus}",
        ),
        Check("R=R_plus+R_minus", rn.R == rn.R_plus + rn.R_minus, ""),
        Check("r=r_plus+r_minus", rn.r == rn.r_plus + rn.r_minus, ""),
        Check("dim_V=(p-3)/2+r0", dim_v == half + rn.r0, f"{dim_v} = {half} + {rn.r0}"),
        Check(
            "log_p|B_p|=dim_V+sum(e)",
            b_p.log_order() == dim_v + sum(exponents),
            f"{b_p.elementary_rank} + {sum(b_p.cyclic_factors)} = {dim_v} + {sum(exponents)}",
        ),
    ]
    unresolved = [v.k for v in vandiver if not v.witnessed]
    checks.append(
        Check(
            VANDIVER_CHECK,
            not unresolved,
            "inconclusive at k=" + ",".join(map(str, unresolved)) if unresolved else f"{len(vandiver)} pair(s)",
        )
    )
    return checks


def invariant_report(p: int, max_aux: int = 10, precision_cap: int | None = None) -> InvariantReport:
    r0 = compute_r0(p)
    rn = r_numbers(p, r0)
    ks = irregular_indices(p)
    exponents = []
    exhausted = []
    for k in ks:
        try:
            exponents.append(eigenspace_exponent(p, k, precision_cap))
        except PrecisionExhausted:
            exhausted.append(k)
            exponents.append(precision_cap or 0)
    dim_v = (p - 3) // 2 + r0
    b_p = b_p_structure(p, exponents)
    vandiver = tuple(check_vandiver(p, max_aux))
    checks = identity_checks(p, rn, dim_v, exponents, b_p, vandiver)
    if exhausted:
        checks.append(Check("eigenspace exponents resolved", False, f"precision cap hit at k={exhausted}"))
    return InvariantReport(
        p=p,
        index_of_irregularity=len(ks),
        irregular_pairs=tuple(zip(ks, exponents)),
        r_numbers=rn,
        dim_V=dim_v,
        s1_factors=tuple(exponents),
        b_p=b_p,
        s_p_image_dim=r0,
        checks=tuple(checks),
        vandiver=vandiver,
    )
