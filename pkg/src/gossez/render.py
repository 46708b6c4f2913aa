"""Text and machine renderings of model values and reports.

Rationals are always serialized as canonical "p/q" strings, never as
floats, in both formats.  Machine output is one JSON document per
invocation; maps keyed by sequence index are emitted in increasing index
order so equal inputs produce byte-identical documents.
"""

from __future__ import annotations

import json

from .certificates import (
    CertReport,
    Finite,
    GapResult,
    Member,
    Unbounded,
    Verdict,
    Violation,
)
from .operators import CubicGraphPoint
from .scalar import format_rat, is_rational
from .seqspace import EvConstSeq, FinSeq, LimFunctional

__all__ = ["render", "to_jsonable", "to_text"]


def to_jsonable(value):
    if is_rational(value):
        return format_rat(value)
    if isinstance(value, bool):
        return value
    if isinstance(value, FinSeq):
        return {str(i): format_rat(v) for i, v in value.items()}
    if isinstance(value, EvConstSeq):
        return {"head": [format_rat(v) for v in value.head], "tail": format_rat(value.tail)}
    if isinstance(value, LimFunctional):
        return {"abs": to_jsonable(value.abs_part), "lim": format_rat(value.lim_coeff)}
    if isinstance(value, Finite):
        return {"kind": "Finite", "value": format_rat(value.value), "witness": to_jsonable(value.witness)}
    if isinstance(value, Unbounded):
        return {"kind": "Unbounded", "ray": to_jsonable(value.ray)}
    if isinstance(value, GapResult):
        return {"outcome": to_jsonable(value.outcome), "criterion_holds": value.criterion_holds}
    if isinstance(value, Member):
        return {"kind": "Member"}
    if isinstance(value, Violation):
        return {"kind": "Violation", "witness": to_jsonable(value.witness), "value": format_rat(value.value)}
    if isinstance(value, Verdict):
        return value.value
    if isinstance(value, CertReport):
        return {
            "beta": to_jsonable(value.beta),
            "pairing": format_rat(value.pairing),
            "verdict": value.verdict.value,
            "transcript": [{"name": n, "value": v} for n, v in value.transcript],
        }
    if isinstance(value, CubicGraphPoint):
        return {
            "primal": {"seq": to_jsonable(value.primal_seq), "scalar": format_rat(value.primal_scalar)},
            "dual": {"seq": to_jsonable(value.dual_seq), "scalar": format_rat(value.dual_scalar)},
        }
    raise TypeError(f"no machine rendering for {type(value).__name__}")


def to_text(value) -> str:
    if is_rational(value):
        return format_rat(value)
    if isinstance(value, (FinSeq, EvConstSeq, LimFunctional)):
        return repr(value)
    if isinstance(value, Finite):
        return f"Finite{{value: {format_rat(value.value)}, witness: {value.witness!r}}}"
    if isinstance(value, Unbounded):
        return f"Unbounded{{ray: {value.ray!r}}}"
    if isinstance(value, GapResult):
        holds = "true" if value.criterion_holds else "false"
        return f"{to_text(value.outcome)}\ncriterion_holds: {holds}"
    if isinstance(value, Member):
        return "Member"
    if isinstance(value, Violation):
        return f"Violation{{witness: {value.witness!r}, value: {format_rat(value.value)}}}"
    if isinstance(value, Verdict):
        return value.value
    if isinstance(value, CertReport):
        lines = [
            f"beta     {to_text(value.beta)}",
            f"pairing  {format_rat(value.pairing)}",
            f"verdict  {value.verdict.value}",
            "transcript:",
        ]
        width = max((len(n) for n, _ in value.transcript), default=0)
        lines += [f"  {n.ljust(width)}  {v}" for n, v in value.transcript]
        return "\n".join(lines)
    if isinstance(value, CubicGraphPoint):
        return (
            f"CubicGraphPoint{{primal: ({value.primal_seq!r}, {format_rat(value.primal_scalar)}), "
            f"dual: ({value.dual_seq!r}, {format_rat(value.dual_scalar)})}}"
        )
    raise TypeError(f"no text rendering for {type(value).__name__}")


def render(value, fmt: str) -> str:
    """Render a value as 'text' or as a 'machine' JSON document."""
    if fmt == "machine":
        return json.dumps(to_jsonable(value), indent=2)
    if fmt == "text":
        return to_text(value)
    raise ValueError(f"unknown output format {fmt!r}")
