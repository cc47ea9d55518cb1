"""JSON, CSV and plain-text rendering of invariant reports."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .structure import Check, InvariantReport, PicardStructure, RNumbers
from .vandiver import VandiverVerdict

CSV_COLUMNS = ("p", "i", "r0", "dimV", "e_list", "checks_pass", "vandiver_status")


def report_to_dict(rep: InvariantReport) -> dict[str, Any]:
    rn = rep.r_numbers
    return {
        "p": rep.p,
        "index_of_irregularity": rep.index_of_irregularity,
        "irregular_pairs": [{"k": k, "e": e} for k, e in rep.irregular_pairs],
        "r_numbers": {
            "R": rn.R,
            "r": rn.r,
            "R_plus": rn.R_plus,
            "R_minus": rn.R_minus,
            "r_plus": rn.r_plus,
            "r_minus": rn.r_minus,
            "r0": rn.r0,
        },
        "dim_V": rep.dim_V,
        "s1_factors": list(rep.s1_factors),
        "b_p": {"elementary_rank": rep.b_p.elementary_rank, "cyclic_factors": list(rep.b_p.cyclic_factors)},
        "s_p_image_dim": rep.s_p_image_dim,
        "cl_level2": rep.cl_level2,
        "unpromoted_generators": list(rep.unpromoted_generators),
        "checks": [{"name": c.name, "pass": c.passed, "details": c.details} for c in rep.checks],
        "vandiver": [
            {
                "k": v.k,
                "status": v.status,
                "q": v.q,
                "eta_power_residue": v.eta_power_residue,
                "tried": list(v.tried),
            }
            for v in rep.vandiver
        ],
        "identity_violation": rep.identity_violation,
        "assumptions": list(rep.assumptions),
    }


def report_from_dict(d: dict[str, Any]) -> InvariantReport:
    p = d["p"]
    return InvariantReport(
        p=p,
        index_of_irregularity=d["index_of_irregularity"],
        irregular_pairs=tuple((x["k"], x["e"]) for x in d["irregular_pairs"]),
        r_numbers=RNumbers(**d["r_numbers"]),
        dim_V=d["dim_V"],
        s1_factors=tuple(d["s1_factors"]),
        b_p=PicardStructure(d["b_p"]["elementary_rank"], tuple(d["b_p"]["cyclic_factors"])),
        s_p_image_dim=d["s_p_image_dim"],
        checks=tuple(Check(c["name"], c["pass"], c.get("details", "")) for c in d["checks"]),
        vandiver=tuple(
            VandiverVerdict(p, v["k"], v["status"], v["q"], v.get("eta_power_residue"), tuple(v.get("tried", ())))
            for v in d["vandiver"]
        ),
        cl_level2=d.get("cl_level2", "omitted"),
        unpromoted_generators=tuple(d.get("unpromoted_generators", ())),
        assumptions=tuple(d["assumptions"]),
    )


def render_json(rep: InvariantReport, indent: int | None = 2) -> str:
    return json.dumps(report_to_dict(rep), indent=indent)


def vandiver_status(rep: InvariantReport) -> str:
    if not rep.vandiver:
        return "vacuous"
    if all(v.witnessed for v in rep.vandiver):
        return "witnessed"
    return "inconclusive"


def csv_row(rep: InvariantReport) -> list[str]:
    return [
        str(rep.p),
        str(rep.index_of_irregularity),
        str(rep.r_numbers.r0),
        str(rep.dim_V),
        ";".join(str(e) for e in rep.s1_factors),
        "true" if rep.all_checks_pass else "false",
        vandiver_status(rep),
    ]


def render_csv(reports: list[InvariantReport], header: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(CSV_COLUMNS)
    for rep in reports:
        w.writerow(csv_row(rep))
    return buf.getvalue()


def render_table(rep: InvariantReport) -> str:
    p = rep.p
    rn = rep.r_numbers
    lines = [
        f"p = {p}",
        f"  index of irregularity   {rep.index_of_irregularity}",
        "  irregular pairs         "
        + (", ".join(f"(k={k}, e={e})" for k, e in rep.irregular_pairs) or "none"),
        f"  R={rn.R} r={rn.r} R+={rn.R_plus} R-={rn.R_minus} r+={rn.r_plus} r-={rn.r_minus} r0={rn.r0}",
        f"  dim V                   {rep.dim_V}",
        "  S_1 (minus part)        "
        + (" + ".join(f"Z/{p}^{e}" if e > 1 else f"Z/{p}" for e in rep.s1_factors) or "0"),
        f"  B_p                     {rep.b_p.describe(p)}",
        f"  image of S_p in V       F_{p}^{rep.s_p_image_dim}",
        f"  Cl(Z[zeta_p^2])_p       {rep.cl_level2}",
        "  checks:",
    ]
    for c in rep.checks:
        lines.append(f"    [{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f"  ({c.details})" if c.details else ""))
    for v in rep.vandiver:
        lines.append(f"  vandiver {vandiver_line(v)}")
    if rep.identity_violation:
        lines.append("  IDENTITY-VIOLATION")
    return "\n".join(lines) + "\n"


def table_header() -> str:
    return f"{'p':>7} {'i':>2} {'r0':>3} {'dimV':>6} {'e':>8} {'checks':>6}  vandiver\n"


def table_row(rep: InvariantReport) -> str:
    e = ";".join(map(str, rep.s1_factors)) or "-"
    ok = "ok" if rep.all_checks_pass else "FAIL"
    return f"{rep.p:>7} {rep.index_of_irregularity:>2} {rep.r_numbers.r0:>3} {rep.dim_V:>6} {e:>8} {ok:>6}  {vandiver_status(rep)}\n"


def vandiver_line(v: VandiverVerdict) -> str:
    if v.witnessed:
        return f"k={v.k}: Witnessed q={v.q}"
    return f"k={v.k}: Inconclusive tried={','.join(map(str, v.tried))}"
