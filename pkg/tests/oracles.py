"""Independent brute-force oracles used to freeze expected values.

Everything here recomputes quantities from first principles, staying off
the code paths under test: entrywise partial sums instead of prefix-sum
recurrences, dense matrix algebra instead of sparse solves, raw
graph-point objectives instead of the reduced closed forms, and a sympy
route for one-dimensional extremization.
"""

from fractions import Fraction

import sympy

from gossez.seqspace import EvConstSeq, FinSeq, pair_l1_c


def gossez_entry(x: FinSeq, n: int) -> Fraction:
    """Entry n of the Gossez image, summed directly over the support."""
    after = sum((Fraction(v) for i, v in x.items() if i > n), Fraction(0))
    before = sum((Fraction(v) for i, v in x.items() if i < n), Fraction(0))
    return after - before


def centered_entry(x: FinSeq, n: int) -> Fraction:
    """Entry n of the centered image: Gossez entry plus the total sum."""
    total = sum((Fraction(v) for _, v in x.items()), Fraction(0))
    return gossez_entry(x, n) + total


def dense(x: FinSeq, n: int) -> list:
    return [Fraction(x[i]) for i in range(1, n + 1)]


def trunc_entries(n: int) -> list:
    """The n x n matrix with 2 above the diagonal, 1 on it, 0 below."""
    return [
        [Fraction(2) if i < j else (Fraction(1) if i == j else Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def matvec(rows: list, vec: list) -> list:
    return [sum((r * v for r, v in zip(row, vec)), Fraction(0)) for row in rows]


def back_substitute(rows: list, rhs: list) -> list:
    n = len(rows)
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = rhs[i] - sum((rows[i][j] * sol[j] for j in range(i + 1, n)), Fraction(0))
        sol[i] = acc / rows[i][i]
    return sol


def laplace_det(rows: list) -> Fraction:
    """Determinant by first-column Laplace expansion (tiny n only)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for i in range(n):
        if rows[i][0] == 0:
            continue
        minor = [r[1:] for k, r in enumerate(rows) if k != i]
        total += (-1) ** i * rows[i][0] * laplace_det(minor)
    return total


# Raw optimization objectives, evaluated pointwise on graph samples.  Each
# certificate reduces one of these to a single closed-form extremization;
# the tests check the reduction by comparing raw values against the
# reduced linear-minus-square form on many sample points.

def raw_gap_objective(ystar: FinSeq, xstar: FinSeq, xss: EvConstSeq, apply_op) -> Fraction:
    image = apply_op(ystar).as_evconst()
    return Fraction(
        pair_l1_c(xstar, image) + pair_l1_c(ystar, xss) - pair_l1_c(ystar, image)
    )


def raw_membership_objective(ystar: FinSeq, xstar: FinSeq, xss: EvConstSeq, apply_op) -> Fraction:
    image = apply_op(ystar).as_evconst()
    return Fraction(pair_l1_c(xstar - ystar, xss - image))


def raw_inverse_objective(xstar: FinSeq, xss0: EvConstSeq, phi, apply_op) -> Fraction:
    image = apply_op(xstar).as_evconst()
    return Fraction(pair_l1_c(xstar, xss0) + phi(image) - pair_l1_c(xstar, image))


def window_extremize(c: EvConstSeq, sigma, sense: str, window: int | None = None):
    """Brute-force extremization of the truncated explicit quadratic.

    The objective over sequences supported in [1, window] is
    sum_k c[k] x[k] -/+ sigma (sum_k x[k])^2.  The window always extends
    one index past the head so it sees the eventual constant value.

    Returns ("unbounded", (i, j)) with c[i] != c[j] when some difference
    direction delta_i - delta_j has nonzero slope, else ("finite", value,
    t_opt) where the one-dimensional problem in t = sum_k x[k] is solved
    symbolically by sympy.
    """
    sigma = Fraction(sigma)
    assert sigma > 0
    if window is None:
        window = len(c.head) + 1
    window = max(window, len(c.head) + 1)
    vals = [Fraction(c[i]) for i in range(1, window + 1)]
    for i in range(window):
        for j in range(i + 1, window):
            if vals[i] != vals[j]:
                return "unbounded", (i + 1, j + 1)
    # Constant window: the objective collapses to the 1-D problem in t.
    mu = sympy.Rational(vals[0]) if vals else sympy.Rational(Fraction(c.tail))
    s = sympy.Rational(sigma)
    t = sympy.Symbol("t", real=True)
    if sense == "max":
        expr = mu * t - s * t**2
        opt = sympy.maximum(expr, t, sympy.S.Reals)
    else:
        expr = mu * t + s * t**2
        opt = sympy.minimum(expr, t, sympy.S.Reals)
    t_opt = sympy.solve(sympy.Eq(expr, opt), t)
    return "finite", Fraction(int(opt.p), int(opt.q)), [Fraction(int(r.p), int(r.q)) for r in t_opt]


def eval_quadratic(c: EvConstSeq, sigma, sense: str, x: FinSeq) -> Fraction:
    """Direct evaluation of the extremizer objective at one point."""
    sigma = Fraction(sigma)
    lin = Fraction(pair_l1_c(x, c))
    t = sum((Fraction(v) for _, v in x.items()), Fraction(0))
    return lin - sigma * t * t if sense == "max" else lin + sigma * t * t
