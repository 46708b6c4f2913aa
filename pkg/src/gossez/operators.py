"""The Gossez operator, its centered variant, and their exact inverses.

The Gossez operator sends a finitely supported sequence x to the sequence
whose n-th entry is (sum of x after index n) minus (sum of x before
index n).  It is linear and anti-symmetric for the duality product, and
its entries stabilize at minus the total sum of x, so the image is an
eventually constant sequence.

Adding back the total sum in every entry recenters that image to have
limit 0; the result is again finitely supported, with support inside the
support window of x.  This centered operator is a linear bijection on
the finitely supported model (its truncations are upper triangular with
unit diagonal), everywhere defined, monotone with

    <centered(x), x> = (total sum of x)^2 >= 0,

and injective because a kernel element would have to alternate signs
with constant magnitude, which no summable sequence does.  Its inverse
is the monotone operator every certificate in this package interrogates.

``TruncMatrix`` is the deliberately independent finite-dimensional
oracle: the matrix of the centered operator on the first n coordinates,
written down entrywise (2 above the diagonal, 1 on it, 0 below) rather
than through the operator code, with a structure-blind fraction-free
determinant.

``complete_cubic_point`` realizes the nonlinear relative: the operator
pairing the centered-operator graph with a cubic scalar channel, queried
by completing a graph point from its primal half.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .scalar import Rat, RatLike, ZERO, format_rat, rat
from .seqspace import ALL_ONES, EvConstSeq, FinSeq, pair_l1_c

__all__ = [
    "CubicGraphPoint",
    "DEFAULT_TRUNCATION_CAP",
    "TruncMatrix",
    "centered_gossez",
    "complete_cubic_point",
    "exact_determinant",
    "gossez",
    "monotone_gap",
    "solve_centered_gossez",
    "truncation_matrix",
]

#: Largest truncation dimension the exhaustive injectivity checks walk to.
#: Exact unit-determinant checks stay fast up to here, and the alternating
#: kernel argument is fully exercised well before it.
DEFAULT_TRUNCATION_CAP = 100


def gossez(x: FinSeq) -> EvConstSeq:
    """Apply the Gossez operator.

    Entry n is sum_{k>n} x[k] - sum_{k<n} x[k].  Past the support the
    entries are constantly minus the total sum, so the tail of the result
    equals -pair_l1_c(x, ALL_ONES).
    """
    n_max = x.max_support()
    total = pair_l1_c(x, ALL_ONES)
    head = []
    before = ZERO  # sum of entries strictly below the current index
    for n in range(1, n_max + 1):
        x_n = x[n]
        head.append((total - before - x_n) - before)
        before = before + x_n
    return EvConstSeq(head, -total)


def centered_gossez(x: FinSeq) -> FinSeq:
    """Apply the centered operator: Gossez image plus total-sum times ones.

    The recentering cancels the limit exactly, so the image lies in the
    null-sequence model and is returned sparsely.  A nonzero tail here is
    impossible for correct code and raises rather than truncates.
    """
    total = pair_l1_c(x, ALL_ONES)
    shifted = gossez(x) + total * ALL_ONES
    if shifted.tail != 0:
        raise ArithmeticError(
            f"centered image has nonzero limit {format_rat(shifted.tail)}"
        )
    return FinSeq(enumerate(shifted.head, start=1))


def solve_centered_gossez(y: FinSeq) -> FinSeq:
    """Invert the centered operator on the finitely supported model.

    Consecutive image entries differ by x[n] + x[n+1], so with N the top
    support index of y the solution falls out of a downward recursion
    from x[N] = y[N].  The solve is a bijection on the model, but the
    result is still verified by reapplication; a mismatch is a defect in
    this module, never bad input.
    """
    n_max = y.max_support()
    entries = {}
    prev = ZERO  # x[n+1] during the downward sweep
    for n in range(n_max, 0, -1):
        value = (y[n] - y[n + 1]) - prev if n < n_max else y[n]
        entries[n] = value
        prev = value
    x = FinSeq(entries)
    if centered_gossez(x) != y:
        raise ArithmeticError("centered-operator solve failed verification")
    return x


def monotone_gap(x: FinSeq, y: FinSeq) -> Rat:
    """Monotonicity product <centered(x) - centered(y), x - y>.

    Computed directly and through the square identity
    <centered(d), d> = <d, ones>^2 with d = x - y; the two routes must
    agree exactly.
    """
    diff = x - y
    image = centered_gossez(x) - centered_gossez(y)
    direct = pair_l1_c(diff, image.as_evconst())
    square = pair_l1_c(diff, ALL_ONES) ** 2
    if direct != square:
        raise ArithmeticError(
            f"monotonicity identity broke: {format_rat(direct)} != {format_rat(square)}"
        )
    return direct


@dataclass(frozen=True)
class TruncMatrix:
    """Matrix of the centered operator on the first n coordinates.

    Upper triangular with unit diagonal and 2 everywhere above, hence
    determinant 1; column j is the centered image of the j-th coordinate
    sequence truncated to n entries.
    """

    n: int
    entries: tuple[tuple[Rat, ...], ...]

    def matvec(self, vec: list[Rat]) -> list[Rat]:
        if len(vec) != self.n:
            raise ValueError(f"expected a vector of length {self.n}")
        return [
            sum((a * v for a, v in zip(row, vec)), ZERO) for row in self.entries
        ]

    def back_substitute(self, rhs: list[Rat]) -> list[Rat]:
        """Solve self @ x = rhs by upward substitution."""
        if len(rhs) != self.n:
            raise ValueError(f"expected a vector of length {self.n}")
        sol = [ZERO] * self.n
        for i in range(self.n - 1, -1, -1):
            acc = rhs[i]
            for j in range(i + 1, self.n):
                acc = acc - self.entries[i][j] * sol[j]
            sol[i] = acc / self.entries[i][i]
        return sol

    def determinant(self) -> Rat:
        """Exact determinant via structure-blind elimination."""
        return exact_determinant([list(row) for row in self.entries])


def truncation_matrix(n: int) -> TruncMatrix:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"truncation dimension must be a positive integer, got {n!r}")
    rows = tuple(
        tuple(rat(2) if i < j else (rat(1) if i == j else ZERO) for j in range(n))
        for i in range(n)
    )
    return TruncMatrix(n, rows)


def exact_determinant(rows: list[list[RatLike]]) -> Rat:
    """Fraction-free (Bareiss) determinant of a square rational matrix.

    Denominators are cleared row by row first, so the elimination runs on
    plain integers with exact divisions; no triangularity or other
    structure is assumed.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("matrix must be nonempty")
    scale = 1
    work = []
    for row in rows:
        vals = [rat(v) for v in row]
        mult = lcm(*(v.denominator for v in vals)) if vals else 1
        scale *= mult
        work.append([int(v.numerator * (mult // v.denominator)) for v in vals])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for r in range(k + 1, n):
                if work[r][k] != 0:
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = work[k][k]
        for i in range(k + 1, n):
            m_ik = work[i][k]
            row_i = work[i]
            row_k = work[k]
            work[i] = [
                (pivot * row_i[j] - m_ik * row_k[j]) // prev for j in range(n)
            ]
        prev = pivot
    return rat(sign * work[n - 1][n - 1], scale)


@dataclass(frozen=True)
class CubicGraphPoint:
    """One graph point of the nonlinear cubic-channel operator.

    The point lies on the graph exactly when the primal sequence is the
    centered image of the dual sequence and the dual scalar is the cube
    of the primal scalar.
    """

    primal_seq: FinSeq
    primal_scalar: Rat
    dual_seq: FinSeq
    dual_scalar: Rat

    def on_graph(self) -> bool:
        return (
            centered_gossez(self.dual_seq) == self.primal_seq
            and self.dual_scalar == self.primal_scalar**3
        )


def complete_cubic_point(y: FinSeq, t: RatLike) -> CubicGraphPoint:
    """Complete a graph point of the cubic-channel operator from (y, t)."""
    t = rat(t)
    return CubicGraphPoint(
        primal_seq=y,
        primal_scalar=t,
        dual_seq=solve_centered_gossez(y),
        dual_scalar=t**3,
    )
