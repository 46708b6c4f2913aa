"""Exact models of the sequence spaces the certificates live in.

Three immutable value types, all over exact rationals with 1-based indices:

``FinSeq``
    A finitely supported sequence, stored sparsely with no zero entries.
    Models elements of l1, and (embedded with tail 0) finitely supported
    elements of the space of null sequences.

``EvConstSeq``
    An eventually constant sequence: a finite head followed by a constant
    tail.  Models convergent sequences; the limit is the tail by
    construction.  Canonical form trims the head so that equality is
    structural, which the certificate code relies on when branching on
    "is this a constant sequence".

``LimFunctional``
    An absolutely summable part plus a multiple of the limit functional.
    Models, on convergent sequences, the functionals the inverse-extension
    certificate evaluates; the pure limit functional (0, 1) annihilates
    every sequence with tail 0.

Duality products between these models are finite exact sums, so every
pairing here is computed with zero tolerance.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .scalar import Rat, RatLike, ZERO, format_rat, is_rational, rat

__all__ = [
    "ALL_ONES",
    "EvConstSeq",
    "FinSeq",
    "LimFunctional",
    "combine",
    "decompose",
    "l1_norm",
    "pair_c_functional",
    "pair_l1_c",
    "sup_norm",
]


def _check_index(i) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise ValueError(f"sequence indices are positive integers, got {i!r}")
    return i


class FinSeq:
    """Finitely supported rational sequence (sparse, no stored zeros)."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[int, RatLike] | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        canon = {}
        for i, v in items:
            i = _check_index(i)
            if i in canon:
                raise ValueError(f"duplicate index {i}")
            v = rat(v)
            if v != 0:
                canon[i] = v
        self._entries = canon

    @classmethod
    def zero(cls) -> "FinSeq":
        return cls()

    @classmethod
    def delta(cls, i: int, value: RatLike = 1) -> "FinSeq":
        """The scaled coordinate sequence value * delta_i."""
        return cls({i: value})

    def __getitem__(self, i: int) -> Rat:
        return self._entries.get(_check_index(i), ZERO)

    def items(self):
        """Entries as (index, value) pairs in increasing index order."""
        return sorted(self._entries.items())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._entries))

    def max_support(self) -> int:
        """Largest index with a nonzero entry; 0 for the zero sequence."""
        return max(self._entries, default=0)

    def is_zero(self) -> bool:
        return not self._entries

    def l1_norm(self) -> Rat:
        return sum((abs(v) for v in self._entries.values()), ZERO)

    def as_evconst(self) -> "EvConstSeq":
        """Embed as an eventually constant sequence with tail 0."""
        n = self.max_support()
        return EvConstSeq([self[i] for i in range(1, n + 1)], 0)

    def __add__(self, other):
        if not isinstance(other, FinSeq):
            return NotImplemented
        merged = dict(self._entries)
        for i, v in other._entries.items():
            merged[i] = merged.get(i, ZERO) + v
        return FinSeq(merged.items())

    def __sub__(self, other):
        if not isinstance(other, FinSeq):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FinSeq((i, -v) for i, v in self._entries.items())

    def __rmul__(self, scalar):
        if not is_rational(scalar):
            return NotImplemented
        return FinSeq((i, scalar * v) for i, v in self._entries.items())

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, FinSeq):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        body = ", ".join(f"{i}: {format_rat(v)}" for i, v in self.items())
        return f"fin{{{body}}}"


class EvConstSeq:
    """Eventually constant rational sequence: finite head, then a tail value.

    Canonical form: the head is empty or its last entry differs from the
    tail, so structural equality is value equality.
    """

    __slots__ = ("_head", "_tail")

    def __init__(self, head: Iterable[RatLike] = (), tail: RatLike = 0):
        tail = rat(tail)
        head = [rat(v) for v in head]
        while head and head[-1] == tail:
            head.pop()
        self._head = tuple(head)
        self._tail = tail

    @classmethod
    def zero(cls) -> "EvConstSeq":
        return cls((), 0)

    @classmethod
    def constant(cls, value: RatLike) -> "EvConstSeq":
        return cls((), value)

    @property
    def head(self) -> tuple[Rat, ...]:
        return self._head

    @property
    def tail(self) -> Rat:
        return self._tail

    def __getitem__(self, n: int) -> Rat:
        n = _check_index(n)
        if n <= len(self._head):
            return self._head[n - 1]
        return self._tail

    def limit(self) -> Rat:
        """The limit of the sequence, which is the tail by construction."""
        return self._tail

    def is_zero(self) -> bool:
        return not self._head and self._tail == 0

    def sup_norm(self) -> Rat:
        return max([abs(v) for v in self._head] + [abs(self._tail)])

    def __add__(self, other):
        if not isinstance(other, EvConstSeq):
            return NotImplemented
        n = max(len(self._head), len(other._head))
        return EvConstSeq(
            [self[i] + other[i] for i in range(1, n + 1)], self._tail + other._tail
        )

    def __sub__(self, other):
        if not isinstance(other, EvConstSeq):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return EvConstSeq([-v for v in self._head], -self._tail)

    def __rmul__(self, scalar):
        if not is_rational(scalar):
            return NotImplemented
        return EvConstSeq([scalar * v for v in self._head], scalar * self._tail)

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, EvConstSeq):
            return NotImplemented
        return self._head == other._head and self._tail == other._tail

    def __hash__(self):
        return hash((self._head, self._tail))

    def __repr__(self):
        body = ", ".join(format_rat(v) for v in self._head)
        return f"evc([{body}], {format_rat(self._tail)})"


#: The all-ones sequence: the canonical convergent sequence with limit 1
#: that lies outside the null-sequence model.
ALL_ONES = EvConstSeq((), 1)


class LimFunctional:
    """Absolutely summable part plus lim_coeff times the limit functional.

    Acts on eventually constant sequences y as

        sum_k abs_part[k] * y[k]  +  lim_coeff * limit(y),

    a finite exact sum.  With abs_part = 0 the action depends only on the
    limit, so (0, c) vanishes on every sequence with tail 0.
    """

    __slots__ = ("_abs_part", "_lim_coeff")

    def __init__(self, abs_part: FinSeq | None = None, lim_coeff: RatLike = 0):
        if abs_part is None:
            abs_part = FinSeq()
        if not isinstance(abs_part, FinSeq):
            raise TypeError("abs_part must be a FinSeq")
        self._abs_part = abs_part
        self._lim_coeff = rat(lim_coeff)

    @property
    def abs_part(self) -> FinSeq:
        return self._abs_part

    @property
    def lim_coeff(self) -> Rat:
        return self._lim_coeff

    def __call__(self, y: EvConstSeq) -> Rat:
        return pair_c_functional(y, self)

    def __eq__(self, other):
        if not isinstance(other, LimFunctional):
            return NotImplemented
        return self._abs_part == other._abs_part and self._lim_coeff == other._lim_coeff

    def __hash__(self):
        return hash((self._abs_part, self._lim_coeff))

    def __repr__(self):
        if self._abs_part.is_zero():
            return f"lim({format_rat(self._lim_coeff)})"
        return f"limf({self._abs_part!r}, {format_rat(self._lim_coeff)})"


def pair_l1_c(x: FinSeq, y: EvConstSeq) -> Rat:
    """Duality product sum_k x[k] * y[k]; finite because x is."""
    return sum((v * y[i] for i, v in x.items()), ZERO)


def pair_c_functional(y: EvConstSeq, phi: LimFunctional) -> Rat:
    """Action of a limit-plus-summable functional on a convergent sequence."""
    head_part = sum((v * y[i] for i, v in phi.abs_part.items()), ZERO)
    return head_part + phi.lim_coeff * y.tail


def decompose(y: EvConstSeq) -> tuple[Rat, FinSeq]:
    """Split y = mu * ALL_ONES + w with w finitely supported.

    mu is the tail of y and w collects the head deviations from it; the
    reconstruction is exact.  Every certificate branches on whether w
    vanishes, which canonical forms make decidable.
    """
    mu = y.tail
    w = FinSeq((i + 1, v - mu) for i, v in enumerate(y.head))
    return mu, w


def combine(terms: Iterable[tuple[RatLike, FinSeq]] | Iterable[tuple[RatLike, EvConstSeq]]):
    """Exact linear combination of homogeneously typed operands.

    Accepts (coefficient, operand) pairs whose operands are all FinSeq or
    all EvConstSeq, and returns the same type, re-canonicalized.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("combine() needs at least one term")
    kinds = {type(op) for _, op in terms}
    if kinds == {FinSeq}:
        acc = FinSeq()
    elif kinds == {EvConstSeq}:
        acc = EvConstSeq.zero()
    else:
        raise TypeError("combine() operands must be all FinSeq or all EvConstSeq")
    for coeff, op in terms:
        acc = acc + rat(coeff) * op
    return acc


def l1_norm(x: FinSeq) -> Rat:
    return x.l1_norm()


def sup_norm(y: EvConstSeq) -> Rat:
    return y.sup_norm()
