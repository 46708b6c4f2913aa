"""Exact certificates for the Gossez operator family on sequence spaces.

The library realizes, in exact rational arithmetic, the machinery around a
linear operator family whose inverses are maximal monotone of type (D)
while the inverses of their unique maximal monotone bidual extensions are
not: the Gossez operator, its centered variant mapping into the null
sequences, the closed-form quadratic extremizer behind every supremum,
and the three decision procedures built on it (the type (D) gap
criterion, monotone-closure membership, and the inverse-extension
certificate with its strict gap-versus-pairing verdict).
"""

from .scalar import BACKEND, Rat, format_rat, parse_rat, rat
from .seqspace import (
    ALL_ONES,
    EvConstSeq,
    FinSeq,
    LimFunctional,
    combine,
    decompose,
    l1_norm,
    pair_c_functional,
    pair_l1_c,
    sup_norm,
)
from .operators import (
    CubicGraphPoint,
    TruncMatrix,
    centered_gossez,
    complete_cubic_point,
    exact_determinant,
    gossez,
    monotone_gap,
    solve_centered_gossez,
    truncation_matrix,
)
from .certificates import (
    CertReport,
    CheckFailed,
    Finite,
    Member,
    Unbounded,
    Verdict,
    Violation,
    certificate_pipeline,
    closure_membership,
    extremize,
    failure_verdict,
    inverse_type_d_certificate,
    type_d_gap,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_ONES",
    "BACKEND",
    "CertReport",
    "CheckFailed",
    "CubicGraphPoint",
    "EvConstSeq",
    "FinSeq",
    "Finite",
    "LimFunctional",
    "Member",
    "Rat",
    "TruncMatrix",
    "Unbounded",
    "Verdict",
    "Violation",
    "centered_gossez",
    "certificate_pipeline",
    "closure_membership",
    "combine",
    "complete_cubic_point",
    "decompose",
    "exact_determinant",
    "extremize",
    "failure_verdict",
    "format_rat",
    "gossez",
    "inverse_type_d_certificate",
    "l1_norm",
    "monotone_gap",
    "pair_c_functional",
    "pair_l1_c",
    "parse_rat",
    "rat",
    "solve_centered_gossez",
    "sup_norm",
    "truncation_matrix",
    "type_d_gap",
]
