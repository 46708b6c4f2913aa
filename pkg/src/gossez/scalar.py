"""Exact rational scalars.

Every number in this library is an exact rational: arbitrary-precision
numerator over a positive arbitrary-precision denominator, always in lowest
terms.  Floats are rejected everywhere, since the certificates this package
produces are exact identities with zero tolerance.

Two interchangeable backends provide the scalar type, selected once at
import:

* ``gmpy2.mpq`` (GMP-backed, fast) when gmpy2 is importable,
* ``fractions.Fraction`` (pure Python) otherwise.

Set the environment variable ``GOSSEZ_SCALAR`` to ``fraction`` or ``gmp``
to force one.  Both backends are registered as ``numbers.Rational``,
normalize identically, and print identically, so results never depend on
the choice; see ``benchmarks/bench_scalar_backends.py`` for the speed
comparison.
"""

from __future__ import annotations

import numbers
import os
import re
from fractions import Fraction

__all__ = [
    "BACKEND",
    "Rat",
    "RatLike",
    "ZERO",
    "ONE",
    "format_rat",
    "is_rational",
    "parse_rat",
    "rat",
]

_ENV_VAR = "GOSSEZ_SCALAR"


def _select_backend():
    choice = os.environ.get(_ENV_VAR, "").strip().lower()
    if choice in ("fraction", "fractions", "pure"):
        return Fraction, "fraction"
    if choice in ("gmp", "gmpy", "gmpy2"):
        from gmpy2 import mpq

        return mpq, "gmp"
    if choice:
        raise RuntimeError(
            f"{_ENV_VAR}={choice!r} not understood (use 'fraction' or 'gmp')"
        )
    try:
        from gmpy2 import mpq
    except ImportError:
        return Fraction, "fraction"
    return mpq, "gmp"


_RatImpl, BACKEND = _select_backend()

#: Static alias for annotations; ints count as rationals.
Rat = numbers.Rational
RatLike = numbers.Rational | str

# Canonical textual form: optional sign, integer part, optional /positive-int.
_RAT_TEXT = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")


def is_rational(value) -> bool:
    """True for exact rational scalars (ints included, bools excluded)."""
    return isinstance(value, numbers.Rational) and not isinstance(value, bool)


def rat(value: RatLike, den: int = 1) -> Rat:
    """Build an exact rational from ints, a "p/q" string, or any Rational.

    Floats and bools are rejected outright: silently accepting them would
    launder rounding error into certificates that claim exactness.
    """
    if isinstance(value, str):
        if den != 1:
            raise TypeError("rat(text) takes no denominator")
        return parse_rat(value)
    if not is_rational(value) or not is_rational(den):
        raise TypeError(f"not an exact rational: {value!r}/{den!r}")
    if den == 1:
        return _RatImpl(value)
    return _RatImpl(value) / _RatImpl(den)


def parse_rat(text: str) -> Rat:
    """Parse the canonical form "p/q" (or "p" when the denominator is 1)."""
    m = _RAT_TEXT.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return _RatImpl(num, den)


def format_rat(value: Rat) -> str:
    """Canonical textual form: "p/q", with "/q" omitted when q is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


ZERO = rat(0)
ONE = rat(1)
