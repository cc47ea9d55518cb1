"""Cyclotomic invariants of odd primes: irregularity, r0, V, B_p and Vandiver witnesses."""

__version__ = "0.1.0"

from .structure import InvariantReport, PicardStructure, RNumbers, invariant_report  # noqa: E402

__all__ = ["__version__", "InvariantReport", "PicardStructure", "RNumbers", "invariant_report"]
