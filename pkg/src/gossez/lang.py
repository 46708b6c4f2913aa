"""A small expression language over the exact sequence model.

Grammar (fixed):

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | primary
    primary := INT [ '/' INT ]                      rational literal
             | 'fin' '{' [ INT ':' expr { ',' INT ':' expr } ] '}'
             | 'evc' '(' '[' [ expr { ',' expr } ] ']' ',' expr ')'
             | 'e' | 'delta' '(' INT ')' | 'lim' '(' expr ')'
             | 'limf' '(' expr ',' expr ')'
             | 'G' '(' expr ')' | 'A' '(' expr ')' | 'Ainv' '(' expr ')'
             | 'pair' '(' expr ',' expr ')'
             | 'gap' '(' expr ',' expr ')'
             | 'member' '(' expr ',' expr ')'
             | 'invcert' '(' expr ',' expr ')'
             | 'pipeline' '(' ')' | 'Tnl' '(' expr ',' expr ')'
             | '(' expr ')' | IDENT                 variable reference

'delta(i)', 'e' and 'lim(r)' are sugar for 'fin{i: 1}', 'evc([], 1)' and
'limf(fin{}, r)'.

Every subexpression is assigned exactly one space before evaluation.
Operand spaces are rational scalars, summable sequences (FinSeq),
convergent sequences (EvConstSeq) and limit functionals; certificate
calls produce result-only spaces that can be printed but not operated
on.  Two coercions apply, both the tail-0 embedding of a finitely
supported sequence among convergent ones: mixed '+'/'-' of FinSeq with
EvConstSeq widens to EvConstSeq, and call slots expecting a convergent
sequence (gap, member, invcert) accept a FinSeq.  'pair' never coerces:
the duality product needs one summable and one convergent side, and an
ambiguous 'pair(fin, fin)' is rejected as ill-spaced rather than
guessed.  Syntax errors and space errors carry distinct codes plus the
line and column they point at.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import certificates as certs
from . import operators as ops
from .scalar import Rat, format_rat, rat
from .seqspace import EvConstSeq, FinSeq, LimFunctional, pair_c_functional, pair_l1_c

__all__ = [
    "LangError",
    "ExprSyntaxError",
    "SpaceError",
    "Space",
    "Expr",
    "parse",
    "check_spaces",
    "evaluate",
    "unparse",
]


class LangError(Exception):
    """Base for expression-language errors; carries a stable code."""

    code = "lang"

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"{message} (line {line}, column {col})")


class ExprSyntaxError(LangError):
    code = "syntax"

    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        self.expected = expected
        if expected:
            message = f"{message}; expected {' | '.join(expected)}"
        super().__init__(message, line, col)


class SpaceError(LangError):
    code = "space"


class Space(enum.Enum):
    RAT = "Rat"
    FINSEQ = "FinSeq"
    EVCONST = "EvConstSeq"
    LIMFUNC = "LimFunctional"
    GAP_RESULT = "GapResult"
    MEMBERSHIP = "Membership"
    CERT_REPORT = "CertReport"
    CUBIC_POINT = "CubicGraphPoint"


_POS = field(default=(1, 1), compare=False, repr=False)


@dataclass(frozen=True)
class RatLit:
    value: Rat
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class FinLit:
    items: tuple[tuple[int, "Expr"], ...]
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class EvcLit:
    head: tuple["Expr", ...]
    tail: "Expr"
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class LimfLit:
    abs_part: "Expr"
    lim: "Expr"
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class VarRef:
    name: str
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-' or '*'
    left: "Expr"
    right: "Expr"
    pos: tuple[int, int] = _POS


@dataclass(frozen=True)
class Call:
    name: str  # G A Ainv pair gap member invcert pipeline Tnl
    args: tuple["Expr", ...]
    pos: tuple[int, int] = _POS


Expr = RatLit | FinLit | EvcLit | LimfLit | VarRef | Neg | BinOp | Call


# ---------------------------------------------------------------------------
# Lexer

_SYMBOLS = "{}()[],:+-*/"
_KIND_NAMES = {"int": "an integer", "ident": "a name", "end": "end of input"}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int', 'ident', 'end', or the symbol itself
    text: str
    line: int
    col: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(source):
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(source) and source[i].isdigit():
                i += 1
            tokens.append(_Token("int", source[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(source) and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(_Token("ident", source[start:i], line, col))
            col += i - start
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser

_UNARY_CALLS = ("G", "A", "Ainv", "lim")
_BINARY_CALLS = ("limf", "pair", "gap", "member", "invcert", "Tnl")
_RESERVED = set(_UNARY_CALLS) | set(_BINARY_CALLS) | {"fin", "evc", "delta", "pipeline", "e"}


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(tok, (_KIND_NAMES.get(kind, f"'{kind}'"),))
        return self.advance()

    def fail(self, tok: _Token, expected: tuple[str, ...]):
        got = _KIND_NAMES.get(tok.kind, f"'{tok.text}'")
        raise ExprSyntaxError(f"unexpected {got}", tok.line, tok.col, expected)

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            tok = self.advance()
            right = self.parse_term()
            node = BinOp(tok.kind, node, right, pos=(tok.line, tok.col))
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while self.peek().kind == "*":
            tok = self.advance()
            right = self.parse_unary()
            node = BinOp("*", node, right, pos=(tok.line, tok.col))
        return node

    def parse_unary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return Neg(self.parse_unary(), pos=(tok.line, tok.col))
        return self.parse_primary()

    def parse_primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "int":
            return self.parse_rational()
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            return self.parse_ident()
        self.fail(tok, ("an integer", "a name", "'('", "'-'"))

    def parse_rational(self) -> Expr:
        tok = self.expect("int")
        num = int(tok.text)
        den = 1
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("int")
            den = int(den_tok.text)
            if den == 0:
                raise ExprSyntaxError("zero denominator", den_tok.line, den_tok.col)
        return RatLit(rat(num, den), pos=(tok.line, tok.col))

    def parse_index(self) -> int:
        tok = self.expect("int")
        idx = int(tok.text)
        if idx < 1:
            raise ExprSyntaxError("indices start at 1", tok.line, tok.col)
        return idx

    def parse_ident(self) -> Expr:
        tok = self.advance()
        name = tok.text
        pos = (tok.line, tok.col)
        if name == "e":
            return EvcLit((), RatLit(rat(1), pos=pos), pos=pos)
        if name == "fin":
            return self.parse_fin(pos)
        if name == "evc":
            self.expect("(")
            self.expect("[")
            head = []
            if self.peek().kind != "]":
                head.append(self.parse_expr())
                while self.peek().kind == ",":
                    self.advance()
                    head.append(self.parse_expr())
            self.expect("]")
            self.expect(",")
            tail = self.parse_expr()
            self.expect(")")
            return EvcLit(tuple(head), tail, pos=pos)
        if name == "delta":
            self.expect("(")
            idx = self.parse_index()
            close = self.expect(")")
            one = RatLit(rat(1), pos=(close.line, close.col))
            return FinLit(((idx, one),), pos=pos)
        if name == "lim":
            self.expect("(")
            coeff = self.parse_expr()
            self.expect(")")
            return LimfLit(FinLit((), pos=pos), coeff, pos=pos)
        if name == "limf":
            self.expect("(")
            abs_part = self.parse_expr()
            self.expect(",")
            coeff = self.parse_expr()
            self.expect(")")
            return LimfLit(abs_part, coeff, pos=pos)
        if name == "pipeline":
            self.expect("(")
            self.expect(")")
            return Call("pipeline", (), pos=pos)
        if name in _UNARY_CALLS:
            self.expect("(")
            arg = self.parse_expr()
            self.expect(")")
            return Call(name, (arg,), pos=pos)
        if name in _BINARY_CALLS:
            self.expect("(")
            first = self.parse_expr()
            self.expect(",")
            second = self.parse_expr()
            self.expect(")")
            return Call(name, (first, second), pos=pos)
        if self.peek().kind == "(":
            raise ExprSyntaxError(f"unknown function {name!r}", tok.line, tok.col)
        return VarRef(name, pos=pos)

    def parse_fin(self, pos) -> Expr:
        self.expect("{")
        items = []
        seen = set()
        if self.peek().kind != "}":
            while True:
                idx_tok = self.peek()
                idx = self.parse_index()
                if idx in seen:
                    raise ExprSyntaxError(f"duplicate index {idx}", idx_tok.line, idx_tok.col)
                seen.add(idx)
                self.expect(":")
                items.append((idx, self.parse_expr()))
                if self.peek().kind != ",":
                    break
                self.advance()
        self.expect("}")
        return FinLit(tuple(items), pos=pos)


def parse(source: str) -> Expr:
    """Parse source text into a well-formed expression tree."""
    parser = _Parser(_tokenize(source))
    node = parser.parse_expr()
    end = parser.peek()
    if end.kind != "end":
        parser.fail(end, ("end of input",))
    return node


# ---------------------------------------------------------------------------
# Space checking

_OPERAND = (Space.RAT, Space.FINSEQ, Space.EVCONST, Space.LIMFUNC)


def check_spaces(expr: Expr, env: dict[str, Space] | None = None) -> Space:
    """Assign one space to every subexpression or raise SpaceError."""
    env = env or {}

    def visit(node: Expr) -> Space:
        if isinstance(node, RatLit):
            return Space.RAT
        if isinstance(node, FinLit):
            for idx, value in node.items:
                _require(value, visit(value), (Space.RAT,), f"entry {idx} of fin{{}}")
            return Space.FINSEQ
        if isinstance(node, EvcLit):
            for value in node.head:
                _require(value, visit(value), (Space.RAT,), "evc head entry")
            _require(node.tail, visit(node.tail), (Space.RAT,), "evc tail")
            return Space.EVCONST
        if isinstance(node, LimfLit):
            _require(node.abs_part, visit(node.abs_part), (Space.FINSEQ,), "limf summable part")
            _require(node.lim, visit(node.lim), (Space.RAT,), "limf limit coefficient")
            return Space.LIMFUNC
        if isinstance(node, VarRef):
            if node.name not in env:
                raise SpaceError(f"unbound variable {node.name!r}", *node.pos)
            return env[node.name]
        if isinstance(node, Neg):
            space = visit(node.arg)
            if space in (Space.RAT, Space.FINSEQ, Space.EVCONST):
                return space
            raise SpaceError(f"cannot negate a {space.value}", *node.pos)
        if isinstance(node, BinOp):
            return _visit_binop(node, visit)
        if isinstance(node, Call):
            return _visit_call(node, visit)
        raise TypeError(f"not an expression node: {node!r}")

    return visit(expr)


def _require(node, space: Space, allowed: tuple[Space, ...], what: str) -> Space:
    if space not in allowed:
        names = " or ".join(s.value for s in allowed)
        raise SpaceError(f"{what} must be {names}, got {space.value}", *node.pos)
    return space


def _visit_binop(node: BinOp, visit) -> Space:
    left = visit(node.left)
    right = visit(node.right)
    if node.op == "*":
        if left == right == Space.RAT:
            return Space.RAT
        if Space.RAT in (left, right):
            other = right if left is Space.RAT else left
            if other in (Space.FINSEQ, Space.EVCONST):
                return other
        raise SpaceError(
            f"'*' needs a rational scalar factor, got {left.value} * {right.value}",
            *node.pos,
        )
    # '+' or '-'
    if left == right and left in (Space.RAT, Space.FINSEQ, Space.EVCONST):
        return left
    if {left, right} == {Space.FINSEQ, Space.EVCONST}:
        return Space.EVCONST  # summable side embeds with tail 0
    raise SpaceError(
        f"'{node.op}' needs matching operand spaces, got {left.value} {node.op} {right.value}",
        *node.pos,
    )


def _visit_call(node: Call, visit) -> Space:
    name = node.name
    if name == "pipeline":
        return Space.CERT_REPORT
    spaces = [visit(arg) for arg in node.args]
    if name in ("G", "A", "Ainv"):
        _require(node.args[0], spaces[0], (Space.FINSEQ,), f"argument of {name}")
        return Space.EVCONST if name == "G" else Space.FINSEQ
    if name == "pair":
        pair = {spaces[0], spaces[1]}
        if pair == {Space.FINSEQ, Space.EVCONST} or pair == {Space.EVCONST, Space.LIMFUNC}:
            return Space.RAT
        if pair == {Space.FINSEQ}:
            raise SpaceError(
                "pairing two summable sequences has no convergent-sequence side",
                *node.pos,
            )
        if pair == {Space.EVCONST}:
            raise SpaceError(
                "pairing two convergent sequences has no summable side", *node.pos
            )
        raise SpaceError(
            f"cannot pair {spaces[0].value} with {spaces[1].value}", *node.pos
        )
    if name == "gap":
        _require(node.args[0], spaces[0], (Space.FINSEQ,), "first argument of gap")
        _require(
            node.args[1], spaces[1], (Space.FINSEQ, Space.EVCONST), "second argument of gap"
        )
        return Space.GAP_RESULT
    if name == "member":
        _require(
            node.args[0], spaces[0], (Space.FINSEQ, Space.EVCONST), "first argument of member"
        )
        _require(node.args[1], spaces[1], (Space.FINSEQ,), "second argument of member")
        return Space.MEMBERSHIP
    if name == "invcert":
        _require(
            node.args[0], spaces[0], (Space.FINSEQ, Space.EVCONST), "first argument of invcert"
        )
        _require(node.args[1], spaces[1], (Space.LIMFUNC,), "second argument of invcert")
        return Space.CERT_REPORT
    if name == "Tnl":
        _require(node.args[0], spaces[0], (Space.FINSEQ,), "first argument of Tnl")
        _require(node.args[1], spaces[1], (Space.RAT,), "second argument of Tnl")
        return Space.CUBIC_POINT
    raise TypeError(f"unknown call {name!r}")


# ---------------------------------------------------------------------------
# Evaluation

def evaluate(expr: Expr, env: dict | None = None, space_env: dict[str, Space] | None = None):
    """Space-check, then evaluate to an exact model value."""
    check_spaces(expr, space_env or _spaces_of(env))
    return _eval(expr, env or {})


def _spaces_of(env: dict | None) -> dict[str, Space]:
    table = {
        FinSeq: Space.FINSEQ,
        EvConstSeq: Space.EVCONST,
        LimFunctional: Space.LIMFUNC,
    }
    spaces = {}
    for name, value in (env or {}).items():
        spaces[name] = table.get(type(value), Space.RAT)
    return spaces


def _as_evconst(value) -> EvConstSeq:
    return value.as_evconst() if isinstance(value, FinSeq) else value


def _eval(node: Expr, env: dict):
    if isinstance(node, RatLit):
        return node.value
    if isinstance(node, FinLit):
        entries = {}
        for idx, value in node.items:
            entries[idx] = _eval(value, env)
        return FinSeq(entries)
    if isinstance(node, EvcLit):
        return EvConstSeq([_eval(v, env) for v in node.head], _eval(node.tail, env))
    if isinstance(node, LimfLit):
        return LimFunctional(_eval(node.abs_part, env), _eval(node.lim, env))
    if isinstance(node, VarRef):
        return env[node.name]
    if isinstance(node, Neg):
        return -_eval(node.arg, env)
    if isinstance(node, BinOp):
        left = _eval(node.left, env)
        right = _eval(node.right, env)
        if node.op == "*":
            return left * right
        if isinstance(left, (FinSeq, EvConstSeq)) and isinstance(
            right, (FinSeq, EvConstSeq)
        ) and type(left) is not type(right):
            left, right = _as_evconst(left), _as_evconst(right)
        return left + right if node.op == "+" else left - right
    if isinstance(node, Call):
        args = [_eval(a, env) for a in node.args]
        if node.name == "G":
            return ops.gossez(args[0])
        if node.name == "A":
            return ops.centered_gossez(args[0])
        if node.name == "Ainv":
            return ops.solve_centered_gossez(args[0])
        if node.name == "pair":
            first, second = args
            if isinstance(first, LimFunctional) or isinstance(second, LimFunctional):
                phi = first if isinstance(first, LimFunctional) else second
                y = second if isinstance(first, LimFunctional) else first
                return pair_c_functional(y, phi)
            x = first if isinstance(first, FinSeq) else second
            y = second if isinstance(first, FinSeq) else first
            return pair_l1_c(x, y)
        if node.name == "gap":
            return certs.type_d_gap(args[0], _as_evconst(args[1]))
        if node.name == "member":
            return certs.closure_membership(_as_evconst(args[0]), args[1])
        if node.name == "invcert":
            return certs.inverse_type_d_certificate(_as_evconst(args[0]), args[1])
        if node.name == "pipeline":
            return certs.certificate_pipeline()
        if node.name == "Tnl":
            return ops.complete_cubic_point(args[0], args[1])
    raise TypeError(f"not an expression node: {node!r}")


# ---------------------------------------------------------------------------
# Pretty-printing (unparse(parse(s)) reparses to an equal tree)

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_UNARY, _LEVEL_ATOM = 0, 1, 2, 3


def unparse(expr: Expr) -> str:
    return _print(expr, _LEVEL_ADD)


def _print(node: Expr, min_level: int) -> str:
    text, level = _print_level(node)
    if level < min_level:
        return f"({text})"
    return text


def _print_level(node: Expr) -> tuple[str, int]:
    if isinstance(node, RatLit):
        if node.value < 0:
            return f"-{format_rat(-node.value)}", _LEVEL_UNARY
        return format_rat(node.value), _LEVEL_ATOM
    if isinstance(node, FinLit):
        body = ", ".join(f"{i}: {_print(v, _LEVEL_ADD)}" for i, v in node.items)
        return f"fin{{{body}}}", _LEVEL_ATOM
    if isinstance(node, EvcLit):
        head = ", ".join(_print(v, _LEVEL_ADD) for v in node.head)
        return f"evc([{head}], {_print(node.tail, _LEVEL_ADD)})", _LEVEL_ATOM
    if isinstance(node, LimfLit):
        if node.abs_part == FinLit(()):
            return f"lim({_print(node.lim, _LEVEL_ADD)})", _LEVEL_ATOM
        return (
            f"limf({_print(node.abs_part, _LEVEL_ADD)}, {_print(node.lim, _LEVEL_ADD)})",
            _LEVEL_ATOM,
        )
    if isinstance(node, VarRef):
        return node.name, _LEVEL_ATOM
    if isinstance(node, Neg):
        return f"-{_print(node.arg, _LEVEL_UNARY)}", _LEVEL_UNARY
    if isinstance(node, BinOp):
        if node.op == "*":
            left = _print(node.left, _LEVEL_MUL)
            right = _print(node.right, _LEVEL_UNARY)
            return f"{left} * {right}", _LEVEL_MUL
        left = _print(node.left, _LEVEL_ADD)
        right = _print(node.right, _LEVEL_MUL)
        return f"{left} {node.op} {right}", _LEVEL_ADD
    if isinstance(node, Call):
        args = ", ".join(_print(a, _LEVEL_ADD) for a in node.args)
        return f"{node.name}({args})", _LEVEL_ATOM
    raise TypeError(f"not an expression node: {node!r}")
