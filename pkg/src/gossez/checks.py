"""Deterministic seeded property suites over the exact model.

Every invariant the library promises is re-checked here on randomly
generated inputs: pairings are bilinear, the Gossez operator is
anti-symmetric with the expected tail, the centered operator satisfies
its square identity and round-trips through its solve, the extremizer is
sound against an independent one-dimensional route, the gap criterion
always holds on the model, and closure membership characterizes graph
points exactly.

Generation is fully deterministic: every check derives its own RNG from
the configured seed and the check name, so equal configurations replay
bit-identical runs and a failure report always names a reproducible
counterexample.  All checks call the operator and certificate modules
through their module attributes, which keeps deliberately broken
variants (used by the tamper tests) on the hot path instead of being
snapshotted away at import time.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from . import certificates as certs
from . import operators as ops
from .scalar import Rat, rat
from .seqspace import (
    ALL_ONES,
    EvConstSeq,
    FinSeq,
    LimFunctional,
    decompose,
    l1_norm,
    pair_c_functional,
    pair_l1_c,
    sup_norm,
)

__all__ = [
    "ALL_CHECK_NAMES",
    "CheckResult",
    "RunConfig",
    "DEFAULT_CONFIG",
    "rand_evconst",
    "rand_finseq",
    "rand_limfunc",
    "rand_rat",
    "run_all",
    "run_check",
    "verify_all",
]


@dataclass(frozen=True)
class RunConfig:
    """Knobs for the seeded suites; equal configs replay identically."""

    seed: int = 0xD15EA5E
    sample_count: int = 500
    max_support: int = 12
    max_magnitude: int = 10
    output_format: str = "text"

    def validate(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.sample_count < 1:
            raise ValueError("sample_count must be positive")
        if self.max_support < 1:
            raise ValueError("max_support must be positive")
        if self.max_magnitude < 1:
            raise ValueError("max_magnitude must be positive")
        if self.output_format not in ("text", "machine"):
            raise ValueError("output_format must be 'text' or 'machine'")


DEFAULT_CONFIG = RunConfig()


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None


# ---------------------------------------------------------------------------
# Deterministic generators

def _rng(cfg: RunConfig, name: str) -> random.Random:
    tag = int.from_bytes(hashlib.sha256(name.encode()).digest()[:8], "big")
    return random.Random(cfg.seed ^ tag)


def rand_rat(rng: random.Random, magnitude: int, nonzero: bool = False) -> Rat:
    while True:
        num = rng.randint(-magnitude, magnitude)
        if nonzero and num == 0:
            continue
        return rat(num, rng.randint(1, magnitude))


def rand_finseq(rng: random.Random, cfg: RunConfig, nonzero: bool = False) -> FinSeq:
    size = rng.randint(1 if nonzero else 0, cfg.max_support)
    indices = rng.sample(range(1, cfg.max_support + 1), k=size)
    return FinSeq({i: rand_rat(rng, cfg.max_magnitude, nonzero=True) for i in indices})


def rand_evconst(rng: random.Random, cfg: RunConfig) -> EvConstSeq:
    # Inverse of decompose: constant part plus an embedded head deviation.
    mu = rand_rat(rng, cfg.max_magnitude)
    return mu * ALL_ONES + rand_finseq(rng, cfg).as_evconst()


def rand_limfunc(rng: random.Random, cfg: RunConfig) -> LimFunctional:
    return LimFunctional(rand_finseq(rng, cfg), rand_rat(rng, cfg.max_magnitude))


# ---------------------------------------------------------------------------
# Check registry

CHECKS: dict[str, object] = {}


def _suite(name: str):
    def register(fn):
        CHECKS[name] = fn
        return fn

    return register


def _result(name, cfg, failure, detail):
    if failure is None:
        return CheckResult(name, True, detail)
    return CheckResult(name, False, detail, failure)


@_suite("pairing-bilinearity")
def _check_bilinearity(cfg: RunConfig) -> CheckResult:
    name, rng = "pairing-bilinearity", _rng(cfg, "pairing-bilinearity")
    for _ in range(cfg.sample_count):
        a, b = (rand_rat(rng, cfg.max_magnitude) for _ in range(2))
        x, xp = rand_finseq(rng, cfg), rand_finseq(rng, cfg)
        y, yp = rand_evconst(rng, cfg), rand_evconst(rng, cfg)
        left_slot = pair_l1_c(a * x + b * xp, y) == a * pair_l1_c(x, y) + b * pair_l1_c(xp, y)
        right_slot = pair_l1_c(x, a * y + b * yp) == a * pair_l1_c(x, y) + b * pair_l1_c(x, yp)
        if not (left_slot and right_slot):
            return _result(name, cfg, f"a={a} b={b} x={x!r} x'={xp!r} y={y!r} y'={yp!r}", "bilinearity")
    return _result(name, cfg, None, f"{cfg.sample_count} samples, both slots")


@_suite("decompose-round-trip")
def _check_decompose(cfg: RunConfig) -> CheckResult:
    name, rng = "decompose-round-trip", _rng(cfg, "decompose-round-trip")
    for _ in range(cfg.sample_count):
        y = rand_evconst(rng, cfg)
        mu, w = decompose(y)
        if mu * ALL_ONES + w.as_evconst() != y:
            return _result(name, cfg, f"y={y!r}", "reconstruction")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("holder-bound")
def _check_holder(cfg: RunConfig) -> CheckResult:
    name, rng = "holder-bound", _rng(cfg, "holder-bound")
    for _ in range(cfg.sample_count):
        x, y = rand_finseq(rng, cfg), rand_evconst(rng, cfg)
        if abs(pair_l1_c(x, y)) > l1_norm(x) * sup_norm(y):
            return _result(name, cfg, f"x={x!r} y={y!r}", "bound")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("limit-functional-linearity")
def _check_functional_linearity(cfg: RunConfig) -> CheckResult:
    name, rng = "limit-functional-linearity", _rng(cfg, "limit-functional-linearity")
    for _ in range(cfg.sample_count):
        phi = rand_limfunc(rng, cfg)
        a, b = (rand_rat(rng, cfg.max_magnitude) for _ in range(2))
        y, yp = rand_evconst(rng, cfg), rand_evconst(rng, cfg)
        if pair_c_functional(a * y + b * yp, phi) != a * phi(y) + b * phi(yp):
            return _result(name, cfg, f"phi={phi!r} a={a} b={b} y={y!r} y'={yp!r}", "linearity")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("limit-functional-annihilation")
def _check_annihilation(cfg: RunConfig) -> CheckResult:
    name, rng = "limit-functional-annihilation", _rng(cfg, "limit-functional-annihilation")
    for _ in range(cfg.sample_count):
        lam = rand_rat(rng, cfg.max_magnitude)
        y = rand_finseq(rng, cfg).as_evconst()  # arbitrary tail-0 sequence
        if LimFunctional(FinSeq.zero(), lam)(y) != 0:
            return _result(name, cfg, f"lam={lam} y={y!r}", "annihilation on tail-0")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("gossez-anti-symmetry")
def _check_anti_symmetry(cfg: RunConfig) -> CheckResult:
    name, rng = "gossez-anti-symmetry", _rng(cfg, "gossez-anti-symmetry")
    for _ in range(cfg.sample_count):
        x, y = rand_finseq(rng, cfg), rand_finseq(rng, cfg)
        if pair_l1_c(y, ops.gossez(x)) != -pair_l1_c(x, ops.gossez(y)):
            return _result(name, cfg, f"x={x!r} y={y!r}", "anti-symmetry")
    return _result(name, cfg, None, f"{cfg.sample_count} sample pairs")


@_suite("gossez-tail-identity")
def _check_tail_identity(cfg: RunConfig) -> CheckResult:
    name, rng = "gossez-tail-identity", _rng(cfg, "gossez-tail-identity")
    for _ in range(cfg.sample_count):
        x = rand_finseq(rng, cfg)
        if ops.gossez(x).tail != -pair_l1_c(x, ALL_ONES):
            return _result(name, cfg, f"x={x!r}", "tail equals minus total sum")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("centering-range-identity")
def _check_centering_range(cfg: RunConfig) -> CheckResult:
    name, rng = "centering-range-identity", _rng(cfg, "centering-range-identity")
    for _ in range(cfg.sample_count):
        x = rand_finseq(rng, cfg)
        shifted = ops.gossez(x) + pair_l1_c(x, ALL_ONES) * ALL_ONES
        if shifted.tail != 0:
            return _result(name, cfg, f"x={x!r}", "recentered image vanishes at infinity")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("quadratic-self-duality")
def _check_self_duality(cfg: RunConfig) -> CheckResult:
    name, rng = "quadratic-self-duality", _rng(cfg, "quadratic-self-duality")
    for _ in range(cfg.sample_count):
        x = rand_finseq(rng, cfg)
        if pair_l1_c(x, ops.centered_gossez(x).as_evconst()) != pair_l1_c(x, ALL_ONES) ** 2:
            return _result(name, cfg, f"x={x!r}", "<centered(x), x> = <x, ones>^2")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("solve-round-trip")
def _check_round_trip(cfg: RunConfig) -> CheckResult:
    name, rng = "solve-round-trip", _rng(cfg, "solve-round-trip")
    for _ in range(cfg.sample_count):
        x, y = rand_finseq(rng, cfg), rand_finseq(rng, cfg)
        if ops.solve_centered_gossez(ops.centered_gossez(x)) != x:
            return _result(name, cfg, f"x={x!r}", "solve after apply")
        if ops.centered_gossez(ops.solve_centered_gossez(y)) != y:
            return _result(name, cfg, f"y={y!r}", "apply after solve")
    return _result(name, cfg, None, f"{cfg.sample_count} samples each way")


@_suite("truncation-oracle-agreement")
def _check_truncation_oracle(cfg: RunConfig) -> CheckResult:
    name, rng = "truncation-oracle-agreement", _rng(cfg, "truncation-oracle-agreement")
    for _ in range(cfg.sample_count):
        x = rand_finseq(rng, cfg)
        n = max(x.max_support(), 1)
        matrix = ops.truncation_matrix(n)
        dense = [x[i] for i in range(1, n + 1)]
        image = ops.centered_gossez(x)
        if matrix.matvec(dense) != [image[i] for i in range(1, n + 1)]:
            return _result(name, cfg, f"x={x!r}", "matrix-vector agreement")
        solved = matrix.back_substitute(dense)
        if FinSeq(enumerate(solved, start=1)) != ops.solve_centered_gossez(x):
            return _result(name, cfg, f"x={x!r}", "back-substitution agreement")
    return _result(name, cfg, None, f"{cfg.sample_count} samples")


@_suite("truncation-determinants")
def _check_determinants(cfg: RunConfig) -> CheckResult:
    name = "truncation-determinants"
    cap = ops.DEFAULT_TRUNCATION_CAP
    for n in range(1, cap + 1):
        if ops.truncation_matrix(n).determinant() != 1:
            return _result(name, cfg, f"n={n}", "unit determinant")
    return _result(name, cfg, None, f"all n <= {cap}")


@_suite("cubic-graph-monotonicity")
def _check_cubic_monotonicity(cfg: RunConfig) -> CheckResult:
    name, rng = "cubic-graph-monotonicity", _rng(cfg, "cubic-graph-monotonicity")
    for _ in range(cfg.sample_count):
        p = ops.complete_cubic_point(rand_finseq(rng, cfg), rand_rat(rng, cfg.max_magnitude))
        q = ops.complete_cubic_point(rand_finseq(rng, cfg), rand_rat(rng, cfg.max_magnitude))
        d_dual = p.dual_seq - q.dual_seq
        d_primal = (p.primal_seq - q.primal_seq).as_evconst()
        dt = p.primal_scalar - q.primal_scalar
        ds = p.dual_scalar - q.dual_scalar
        product = pair_l1_c(d_dual, d_primal) + dt * ds
        expected = pair_l1_c(d_dual, ALL_ONES) ** 2 + dt * (p.primal_scalar**3 - q.primal_scalar**3)
        if product != expected or product < 0:
            return _result(name, cfg, f"p={p!r} q={q!r}", "graph monotonicity")
        if not (p.on_graph() and q.on_graph()):
            return _result(name, cfg, f"p={p!r} q={q!r}", "completions lie on the graph")
    return _result(name, cfg, None, f"{cfg.sample_count} sample pairs")


def _window_values(c: EvConstSeq) -> list[Rat]:
    # One index past the head, so the window sees the eventual value.
    return [c[i] for i in range(1, len(c.head) + 2)]


@_suite("extremize-soundness")
def _check_extremize_soundness(cfg: RunConfig) -> CheckResult:
    name, rng = "extremize-soundness", _rng(cfg, "extremize-soundness")
    outer = max(1, cfg.sample_count // 10)
    for _ in range(outer):
        mu = rand_rat(rng, cfg.max_magnitude)
        sigma = abs(rand_rat(rng, cfg.max_magnitude, nonzero=True))
        sense = rng.choice(("max", "min"))
        c = EvConstSeq.constant(mu)  # finite branch needs a constant direction
        outcome = certs.extremize(c, sigma, sense)
        if not isinstance(outcome, certs.Finite):
            return _result(name, cfg, f"c={c!r} sigma={sigma} {sense}", "finite outcome")
        if certs.quad_value(c, sigma, sense, outcome.witness) != outcome.value:
            return _result(name, cfg, f"c={c!r} sigma={sigma} {sense}", "witness attains value")
        for _ in range(200):
            x = rand_finseq(rng, cfg)
            q = certs.quad_value(c, sigma, sense, x)
            if (sense == "max" and q > outcome.value) or (sense == "min" and q < outcome.value):
                return _result(name, cfg, f"c={c!r} sigma={sigma} {sense} x={x!r}", "optimality")
    return _result(name, cfg, None, f"{outer} outcomes x 200 samples")


@_suite("extremize-unboundedness")
def _check_extremize_unbounded(cfg: RunConfig) -> CheckResult:
    name, rng = "extremize-unboundedness", _rng(cfg, "extremize-unboundedness")
    far = rat(certs.FAR_RAY_SCALE)
    for _ in range(cfg.sample_count):
        mu = rand_rat(rng, cfg.max_magnitude)
        w = rand_finseq(rng, cfg, nonzero=True)
        c = mu * ALL_ONES + w.as_evconst()
        sense = rng.choice(("max", "min"))
        sigma = abs(rand_rat(rng, cfg.max_magnitude, nonzero=True))
        outcome = certs.extremize(c, sigma, sense)
        if not isinstance(outcome, certs.Unbounded):
            return _result(name, cfg, f"c={c!r}", "unbounded outcome")
        ray = outcome.ray
        slope = pair_l1_c(ray, c)
        if pair_l1_c(ray, ALL_ONES) != 0 or slope == 0:
            return _result(name, cfg, f"c={c!r} ray={ray!r}", "ray kills the square term")
        base = certs.quad_value(c, sigma, sense, FinSeq.zero())
        step = certs.quad_value(c, sigma, sense, ray)
        far_q = certs.quad_value(c, sigma, sense, far * ray)
        if step - base != slope or far_q - base != far * slope:
            return _result(name, cfg, f"c={c!r} ray={ray!r}", "exact affine growth at s=10^6")
    return _result(name, cfg, None, f"{cfg.sample_count} rays, evaluated at s=10^6")


@_suite("extremize-window-oracle")
def _check_extremize_window(cfg: RunConfig) -> CheckResult:
    name, rng = "extremize-window-oracle", _rng(cfg, "extremize-window-oracle")
    for _ in range(cfg.sample_count):
        c = rand_evconst(rng, cfg)
        sigma = abs(rand_rat(rng, cfg.max_magnitude, nonzero=True))
        sense = rng.choice(("max", "min"))
        outcome = certs.extremize(c, sigma, sense)
        vals = _window_values(c)
        deviates = any(v != vals[0] for v in vals)
        if deviates != isinstance(outcome, certs.Unbounded):
            return _result(name, cfg, f"c={c!r}", "window deviation vs outcome kind")
        if isinstance(outcome, certs.Finite):
            # Independent optimality certificate for mu t -/+ sigma t^2:
            # the optimum v satisfies mu^2 = 4 sigma |v| with attainment.
            mu = vals[0]
            target = 4 * sigma * outcome.value if sense == "max" else -4 * sigma * outcome.value
            if mu**2 != target:
                return _result(name, cfg, f"c={c!r} sigma={sigma} {sense}", "discriminant certificate")
            if certs.quad_value(c, sigma, sense, outcome.witness) != outcome.value:
                return _result(name, cfg, f"c={c!r}", "witness attains the optimum")
    return _result(name, cfg, None, f"{cfg.sample_count} directions")


@_suite("gap-criterion-always-holds")
def _check_gap_criterion(cfg: RunConfig) -> CheckResult:
    name, rng = "gap-criterion-always-holds", _rng(cfg, "gap-criterion-always-holds")
    for _ in range(cfg.sample_count):
        xstar, xss = rand_finseq(rng, cfg), rand_evconst(rng, cfg)
        outcome, holds = certs.type_d_gap(xstar, xss)
        if not holds:
            return _result(name, cfg, f"xstar={xstar!r} xss={xss!r}", "criterion")
        # Reduction spot check: raw graph objective matches the reduced form.
        total = pair_l1_c(xstar, ALL_ONES)
        c = xss - ops.gossez(xstar) + total * ALL_ONES
        for _ in range(3):
            ystar = rand_finseq(rng, cfg)
            image = ops.centered_gossez(ystar).as_evconst()
            raw = pair_l1_c(xstar, image) + pair_l1_c(ystar, xss) - pair_l1_c(ystar, image)
            if raw != certs.quad_value(c, 1, "max", ystar):
                return _result(name, cfg, f"xstar={xstar!r} xss={xss!r} y={ystar!r}", "reduction")
            if isinstance(outcome, certs.Finite) and raw > outcome.value:
                return _result(name, cfg, f"xstar={xstar!r} xss={xss!r} y={ystar!r}", "supremum bound")
    return _result(name, cfg, None, f"{cfg.sample_count} pairs + reduction samples")


@_suite("closure-membership-characterization")
def _check_membership(cfg: RunConfig) -> CheckResult:
    name, rng = "closure-membership-characterization", _rng(cfg, "closure-membership-characterization")
    for _ in range(cfg.sample_count):
        ystar = rand_finseq(rng, cfg)
        graph_image = ops.centered_gossez(ystar).as_evconst()
        if not isinstance(certs.closure_membership(graph_image, ystar), certs.Member):
            return _result(name, cfg, f"ystar={ystar!r}", "graph points are members")
        kind = rng.choice(("head", "tail"))
        eps = rand_rat(rng, cfg.max_magnitude, nonzero=True)
        if kind == "tail":
            perturbed = graph_image + eps * ALL_ONES
        else:
            idx = rng.randint(1, cfg.max_support)
            perturbed = graph_image + FinSeq.delta(idx, eps).as_evconst()
        verdict = certs.closure_membership(perturbed, ystar)
        if not isinstance(verdict, certs.Violation) or verdict.value >= 0:
            return _result(name, cfg, f"ystar={ystar!r} perturbed={perturbed!r}", "perturbations violate")
        # The carried witness must actually exhibit the violation.
        witness_image = ops.centered_gossez(verdict.witness).as_evconst()
        raw = pair_l1_c(ystar - verdict.witness, perturbed - witness_image)
        if raw != verdict.value:
            return _result(name, cfg, f"ystar={ystar!r} witness={verdict.witness!r}", "witness value")
    return _result(name, cfg, None, f"{cfg.sample_count} members + {cfg.sample_count} perturbations")


@_suite("graph-points-member")
def _check_graph_points(cfg: RunConfig) -> CheckResult:
    name, rng = "graph-points-member", _rng(cfg, "graph-points-member")
    for _ in range(cfg.sample_count):
        ystar = rand_finseq(rng, cfg)
        image = ops.centered_gossez(ystar).as_evconst()
        if not isinstance(certs.closure_membership(image, ystar), certs.Member):
            return _result(name, cfg, f"ystar={ystar!r}", "membership")
        # Infimum contribution is exactly 0, attained at the point itself.
        total = pair_l1_c(ystar, ALL_ONES)
        c = ops.gossez(ystar) - total * ALL_ONES - image
        inf_value = pair_l1_c(ystar, image) + certs.extremize(c, 1, "min").value
        at_self = pair_l1_c(ystar - ystar, image - image)
        if inf_value != 0 or at_self != 0:
            return _result(name, cfg, f"ystar={ystar!r}", "zero infimum at the point")
    return _result(name, cfg, None, f"{cfg.sample_count} graph points")


@_suite("verdict-boundary-strictness")
def _check_verdict_boundary(cfg: RunConfig) -> CheckResult:
    name, rng = "verdict-boundary-strictness", _rng(cfg, "verdict-boundary-strictness")
    for _ in range(cfg.sample_count):
        mu = rand_rat(rng, cfg.max_magnitude)
        xss0 = EvConstSeq.constant(mu)
        boundary = mu**2 / 4  # the finite gap supremum for this direction
        if mu != 0:
            # With lim coefficient, pairing = lam * mu; solve lam for boundary.
            lam_boundary = boundary / mu
            at = certs.inverse_type_d_certificate(xss0, LimFunctional(None, lam_boundary))
            if at.verdict is not certs.Verdict.TYPE_D_HOLDS:
                return _result(name, cfg, f"mu={mu}", "boundary pairing must pass")
            bump = abs(rand_rat(rng, cfg.max_magnitude, nonzero=True)) / abs(mu)
            above = certs.inverse_type_d_certificate(
                xss0, LimFunctional(None, lam_boundary + (bump if mu > 0 else -bump))
            )
            if above.verdict is not certs.Verdict.TYPE_D_FAILS:
                return _result(name, cfg, f"mu={mu}", "pairing above the supremum must fail")
        else:
            at = certs.inverse_type_d_certificate(xss0, rand_limfunc(rng, cfg))
            expected = certs.failure_verdict(at.beta, at.pairing)
            if at.verdict is not expected:
                return _result(name, cfg, f"report={at!r}", "verdict consistency")
    return _result(name, cfg, None, f"{cfg.sample_count} boundary probes")


@_suite("parser-round-trip")
def _check_parser_round_trip(cfg: RunConfig) -> CheckResult:
    from . import lang

    name, rng = "parser-round-trip", _rng(cfg, "parser-round-trip")
    for _ in range(cfg.sample_count):
        expr = _rand_expr(rng, cfg, lang)
        printed = lang.unparse(expr)
        if lang.parse(printed) != expr:
            return _result(name, cfg, printed, "unparse/parse round trip")
    return _result(name, cfg, None, f"{cfg.sample_count} printed expressions")


def _rand_rat_expr(rng, cfg, lang):
    value = rand_rat(rng, cfg.max_magnitude)
    node = lang.RatLit(abs(value))
    return lang.Neg(node) if value < 0 else node


def _rand_expr(rng, cfg, lang, depth: int = 0):
    """A random well-spaced expression, shaped like parser output.

    Space-directed: a target space is chosen first and the tree is built
    to land in it, so every generated expression passes the checker.
    """
    lang_spaces = (lang.Space.RAT, lang.Space.FINSEQ, lang.Space.EVCONST, lang.Space.LIMFUNC)
    return _rand_of_space(rng, cfg, lang, rng.choice(lang_spaces), depth)


def _rand_of_space(rng, cfg, lang, space, depth: int):
    recurse = depth < 3 and rng.random() < 0.6
    if space is lang.Space.RAT:
        if not recurse:
            return _rand_rat_expr(rng, cfg, lang)
        kind = rng.choice(("binop", "pair-seq", "pair-func"))
        if kind == "binop":
            return lang.BinOp(
                rng.choice(("+", "-", "*")),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
            )
        if kind == "pair-seq":
            args = [
                _rand_of_space(rng, cfg, lang, lang.Space.FINSEQ, depth + 1),
                _rand_of_space(rng, cfg, lang, lang.Space.EVCONST, depth + 1),
            ]
        else:
            args = [
                _rand_of_space(rng, cfg, lang, lang.Space.EVCONST, depth + 1),
                _rand_of_space(rng, cfg, lang, lang.Space.LIMFUNC, depth + 1),
            ]
        rng.shuffle(args)
        return lang.Call("pair", tuple(args))
    if space is lang.Space.FINSEQ:
        if not recurse:
            items = tuple(
                (i, _rand_rat_expr(rng, cfg, lang))
                for i in sorted(rng.sample(range(1, cfg.max_support + 1), k=rng.randint(0, 3)))
            )
            return lang.FinLit(items)
        kind = rng.choice(("neg", "sum", "scale", "op"))
        if kind == "neg":
            return lang.Neg(_rand_of_space(rng, cfg, lang, space, depth + 1))
        if kind == "sum":
            return lang.BinOp(
                rng.choice(("+", "-")),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
            )
        if kind == "scale":
            return lang.BinOp(
                "*", _rand_rat_expr(rng, cfg, lang), _rand_of_space(rng, cfg, lang, space, depth + 1)
            )
        return lang.Call(
            rng.choice(("A", "Ainv")), (_rand_of_space(rng, cfg, lang, space, depth + 1),)
        )
    if space is lang.Space.EVCONST:
        if not recurse:
            head = tuple(_rand_rat_expr(rng, cfg, lang) for _ in range(rng.randint(0, 2)))
            return lang.EvcLit(head, _rand_rat_expr(rng, cfg, lang))
        kind = rng.choice(("neg", "sum", "mixed", "scale", "gossez"))
        if kind == "neg":
            return lang.Neg(_rand_of_space(rng, cfg, lang, space, depth + 1))
        if kind == "sum":
            return lang.BinOp(
                rng.choice(("+", "-")),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
            )
        if kind == "mixed":
            sides = [
                _rand_of_space(rng, cfg, lang, lang.Space.FINSEQ, depth + 1),
                _rand_of_space(rng, cfg, lang, space, depth + 1),
            ]
            rng.shuffle(sides)
            return lang.BinOp(rng.choice(("+", "-")), sides[0], sides[1])
        if kind == "scale":
            return lang.BinOp(
                "*", _rand_rat_expr(rng, cfg, lang), _rand_of_space(rng, cfg, lang, space, depth + 1)
            )
        return lang.Call("G", (_rand_of_space(rng, cfg, lang, lang.Space.FINSEQ, depth + 1),))
    return lang.LimfLit(
        _rand_of_space(rng, cfg, lang, lang.Space.FINSEQ, depth + 1)
        if depth < 3 and rng.random() < 0.5
        else lang.FinLit(()),
        _rand_rat_expr(rng, cfg, lang),
    )


# ---------------------------------------------------------------------------
# Runners

ALL_CHECK_NAMES = tuple(CHECKS)


def run_check(name: str, cfg: RunConfig) -> CheckResult:
    fn = CHECKS[name]
    try:
        return fn(cfg)
    except Exception as exc:  # a crash is a failed check, not a crashed run
        return CheckResult(name, False, "raised", f"{type(exc).__name__}: {exc}")


def run_all(cfg: RunConfig, names: tuple[str, ...] | None = None) -> list[CheckResult]:
    return [run_check(name, cfg) for name in (names or ALL_CHECK_NAMES)]


def verify_all(cfg: RunConfig):
    """Certificate pipeline plus every property suite.

    Returns (results, report); report is None when the pipeline aborted.
    """
    results = []
    report = None
    try:
        report = certs.certificate_pipeline()
        results.append(
            CheckResult(
                "certificate-pipeline",
                True,
                f"verdict {report.verdict.value}, gap supremum "
                + (str(report.beta.value) if isinstance(report.beta, certs.Finite) else "unbounded"),
            )
        )
    except certs.CheckFailed as exc:
        results.append(
            CheckResult(f"certificate-pipeline: {exc.check}", False, "hypothesis failed", str(exc))
        )
    except Exception as exc:
        results.append(
            CheckResult("certificate-pipeline", False, "raised", f"{type(exc).__name__}: {exc}")
        )
    results.extend(run_all(cfg))
    return results, report
