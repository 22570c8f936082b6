"""A small expression language over the q-series atoms.

Grammar, with whitespace insignificant and offsets reported one-based:

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | power
    power   := primary ('^' INT)*
    primary := INT | '(' expr ')' | 'q' ['^' INT] | atom
    atom    := E|phi|psi|sigma|omega '(' qarg ')'
             | chi '(' '-' qarg ')'
             | f '(' ['+'|'-'] qarg ',' ['+'|'-'] qarg ')'
             | even|odd|T2|altq '(' expr ')'
             | lattice '(' INT ')' | lattice7 '(' ['-'] INT ')'
    qarg    := 'q' ['^' INT]        with INT >= 1

Precedence is ^ above unary minus above * and / above + and -, all
binaries left-associative.  ``to_text`` inverts ``parse``: printing any
AST and reparsing reconstructs the identical tree, so parentheses are
emitted exactly where reparsing would otherwise regroup.  A bare caret
on q folds into the q^k atom itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .identities import hecke_T2
from .partitions import lattice_rank_sum, lattice_sum
from .series import TruncSeries
from .theta import (
    ThetaArgs,
    chi_neg,
    euler_E,
    omega_at,
    phi,
    psi,
    sigma_at,
    theta_f,
)


class ExprSyntaxError(ValueError):
    """Parse failure; offset is the one-based character position."""

    def __init__(self, offset: int, detail: str, expected=None):
        self.offset = offset
        self.expected = expected
        super().__init__(f"syntax error at offset {offset}, {detail}")


class ExprEvalError(ValueError):
    """Evaluation failure; quotes the offending sub-expression."""

    def __init__(self, expression: str, detail: str):
        self.expression = expression
        super().__init__(f"cannot evaluate '{expression}': {detail}")


# -- AST ----------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    span: tuple = field(default=(0, 0), compare=False, repr=False, kw_only=True)


@dataclass(frozen=True)
class Const(Node):
    value: int


@dataclass(frozen=True)
class QPow(Node):
    k: int


@dataclass(frozen=True)
class EulerAtom(Node):
    k: int


@dataclass(frozen=True)
class PhiAtom(Node):
    k: int


@dataclass(frozen=True)
class PsiAtom(Node):
    k: int


@dataclass(frozen=True)
class ChiAtom(Node):
    # chi(-q^k): the sign in the argument is part of the atom.
    k: int


@dataclass(frozen=True)
class SigmaAtom(Node):
    k: int


@dataclass(frozen=True)
class OmegaAtom(Node):
    k: int


@dataclass(frozen=True)
class ThetaAtom(Node):
    sign_a: int
    r: int
    sign_b: int
    s: int


@dataclass(frozen=True)
class LatticeAtom(Node):
    t: int


@dataclass(frozen=True)
class Lattice7Atom(Node):
    j: int


@dataclass(frozen=True)
class Unary(Node):
    op: str  # "neg" | "even" | "odd" | "T2" | "altq"
    child: Node


@dataclass(frozen=True)
class Binary(Node):
    op: str  # "+" | "-" | "*" | "/"
    left: Node
    right: Node


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: int


# -- tokenizer ----------------------------------------------------------

class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_PUNCT = set("+-*/^(),")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t\r\n":
            i += 1
            continue
        if c.isdigit():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], i))
            i = j
            continue
        if c in _PUNCT:
            tokens.append(Token(c, c, i))
            i += 1
            continue
        raise ExprSyntaxError(i + 1, f"unexpected character {c!r}")
    tokens.append(Token("END", "", n))
    return tokens


# -- parser -------------------------------------------------------------

_UNARY_NAMES = ("even", "odd", "T2", "altq")
_KARG_ATOMS = {
    "E": EulerAtom,
    "phi": PhiAtom,
    "psi": PsiAtom,
    "sigma": SigmaAtom,
    "omega": OmegaAtom,
}
_KNOWN_NAMES = (
    "q", "E", "phi", "psi", "chi", "f", "sigma", "omega",
    "even", "odd", "T2", "altq", "lattice", "lattice7",
)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def advance(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, shown=None) -> Token:
        tok = self.toks[self.i]
        if tok.kind != kind:
            shown = shown or f'"{kind}"'
            got = "end of input" if tok.kind == "END" else repr(tok.text)
            raise ExprSyntaxError(
                tok.pos + 1, f"expected {shown}, got {got}", expected=kind
            )
        self.i += 1
        return tok

    def parse(self) -> Node:
        node = self.parse_expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ExprSyntaxError(
                tok.pos + 1, f"unexpected trailing input {tok.text!r}"
            )
        return node

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.parse_term()
            node = Binary(op, node, rhs, span=(node.span[0], rhs.span[1]))
        return node

    def parse_term(self) -> Node:
        node = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            rhs = self.parse_factor()
            node = Binary(op, node, rhs, span=(node.span[0], rhs.span[1]))
        return node

    def parse_factor(self) -> Node:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            child = self.parse_factor()
            return Unary("neg", child, span=(tok.pos, child.span[1]))
        return self.parse_power()

    def parse_power(self) -> Node:
        node = self.parse_primary()
        while self.peek().kind == "^":
            self.advance()
            tok = self.expect("INT", "an integer exponent")
            node = Power(
                node, int(tok.text), span=(node.span[0], tok.pos + len(tok.text))
            )
        return node

    def parse_primary(self) -> Node:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return Const(int(tok.text), span=(tok.pos, tok.pos + len(tok.text)))
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "NAME":
            return self.parse_name()
        got = "end of input" if tok.kind == "END" else repr(tok.text)
        raise ExprSyntaxError(tok.pos + 1, f"expected an expression, got {got}")

    def parse_name(self) -> Node:
        tok = self.advance()
        name = tok.text
        start = tok.pos
        if name == "q":
            # q^k is one atom; the first caret after bare q belongs to it.
            if self.peek().kind == "^":
                self.advance()
                e = self.expect("INT", "an integer exponent")
                return QPow(int(e.text), span=(start, e.pos + len(e.text)))
            return QPow(1, span=(start, start + 1))
        if name in _KARG_ATOMS:
            self.expect("(")
            k = self.parse_qarg()
            end = self.expect(")").pos + 1
            return _KARG_ATOMS[name](k, span=(start, end))
        if name == "chi":
            self.expect("(")
            self.expect("-", 'the "-" of chi(-q^k)')
            k = self.parse_qarg()
            end = self.expect(")").pos + 1
            return ChiAtom(k, span=(start, end))
        if name == "f":
            self.expect("(")
            sa, r = self.parse_signed_qarg()
            self.expect(",")
            sb, s = self.parse_signed_qarg()
            end = self.expect(")").pos + 1
            return ThetaAtom(sa, r, sb, s, span=(start, end))
        if name in _UNARY_NAMES:
            self.expect("(")
            child = self.parse_expr()
            end = self.expect(")").pos + 1
            return Unary(name, child, span=(start, end))
        if name == "lattice":
            self.expect("(")
            it = self.expect("INT", "a lattice dimension")
            t = int(it.text)
            if t not in (2, 3, 5, 7):
                raise ExprSyntaxError(
                    it.pos + 1, f"lattice dimension must be 2, 3, 5, or 7, got {t}"
                )
            end = self.expect(")").pos + 1
            return LatticeAtom(t, span=(start, end))
        if name == "lattice7":
            self.expect("(")
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            it = self.expect("INT", "a rank class")
            j = sign * int(it.text)
            if j not in (-1, 0, 1, 2):
                raise ExprSyntaxError(
                    it.pos + 1, f"rank class must be -1, 0, 1, or 2, got {j}"
                )
            end = self.expect(")").pos + 1
            return Lattice7Atom(j, span=(start, end))
        raise ExprSyntaxError(
            tok.pos + 1,
            f"unknown atom name {name!r}; known names: "
            + ", ".join(_KNOWN_NAMES),
        )

    def parse_qarg(self) -> int:
        tok = self.expect("NAME", '"q"')
        if tok.text != "q":
            raise ExprSyntaxError(
                tok.pos + 1, f'expected "q", got {tok.text!r}'
            )
        if self.peek().kind == "^":
            self.advance()
            e = self.expect("INT", "an integer exponent")
            k = int(e.text)
            if k < 1:
                raise ExprSyntaxError(
                    e.pos + 1, "atom exponents are one-based; q^0 is not allowed"
                )
            return k
        return 1

    def parse_signed_qarg(self):
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        return sign, self.parse_qarg()


def parse(text: str) -> Node:
    """Parse an expression, or raise ExprSyntaxError."""
    return _Parser(text).parse()


# -- printer ------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 10, 20, 30, 40, 50


def _prec(node: Node) -> int:
    if isinstance(node, Binary):
        return _PREC_ADD if node.op in ("+", "-") else _PREC_MUL
    if isinstance(node, Unary):
        return _PREC_NEG if node.op == "neg" else _PREC_ATOM
    if isinstance(node, Power):
        return _PREC_POW
    return _PREC_ATOM


def _qtxt(k: int) -> str:
    return "q" if k == 1 else f"q^{k}"


def to_text(node: Node) -> str:
    """Print an AST so that parsing the text rebuilds the identical tree."""
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, QPow):
        return _qtxt(node.k)
    if isinstance(node, EulerAtom):
        return f"E({_qtxt(node.k)})"
    if isinstance(node, PhiAtom):
        return f"phi({_qtxt(node.k)})"
    if isinstance(node, PsiAtom):
        return f"psi({_qtxt(node.k)})"
    if isinstance(node, ChiAtom):
        return f"chi(-{_qtxt(node.k)})"
    if isinstance(node, SigmaAtom):
        return f"sigma({_qtxt(node.k)})"
    if isinstance(node, OmegaAtom):
        return f"omega({_qtxt(node.k)})"
    if isinstance(node, ThetaAtom):
        a = ("-" if node.sign_a < 0 else "") + _qtxt(node.r)
        b = ("-" if node.sign_b < 0 else "") + _qtxt(node.s)
        return f"f({a},{b})"
    if isinstance(node, LatticeAtom):
        return f"lattice({node.t})"
    if isinstance(node, Lattice7Atom):
        return f"lattice7({node.j})"
    if isinstance(node, Unary):
        if node.op == "neg":
            inner = to_text(node.child)
            if _prec(node.child) < _PREC_NEG:
                inner = f"({inner})"
            return f"-{inner}"
        return f"{node.op}({to_text(node.child)})"
    if isinstance(node, Binary):
        mine = _prec(node)
        left = to_text(node.left)
        if _prec(node.left) < mine:
            left = f"({left})"
        right = to_text(node.right)
        # Equal precedence on the right would reassociate when reparsed.
        if _prec(node.right) <= mine:
            right = f"({right})"
        sep = f" {node.op} " if node.op in ("+", "-") else node.op
        return f"{left}{sep}{right}"
    if isinstance(node, Power):
        base = to_text(node.base)
        if _prec(node.base) < _PREC_POW or (
            isinstance(node.base, QPow) and node.base.k == 1
        ):
            # A bare q before ^ would fold into the q^k atom when reparsed.
            base = f"({base})"
        return f"{base}^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluator ----------------------------------------------------------

def eval_ast(node: Node, order: int) -> TruncSeries:
    """Evaluate an AST to a TruncSeries of the given order."""
    if isinstance(node, Const):
        return TruncSeries.constant(node.value, order)
    if isinstance(node, QPow):
        return TruncSeries.monomial(1, node.k, order)
    if isinstance(node, EulerAtom):
        return euler_E(node.k, order)
    if isinstance(node, PhiAtom):
        return phi(node.k, order)
    if isinstance(node, PsiAtom):
        return psi(node.k, order)
    if isinstance(node, ChiAtom):
        return chi_neg(node.k, order)
    if isinstance(node, SigmaAtom):
        return sigma_at(node.k, order)
    if isinstance(node, OmegaAtom):
        return omega_at(node.k, order)
    if isinstance(node, ThetaAtom):
        return theta_f(ThetaArgs(node.sign_a, node.r, node.sign_b, node.s), order)
    if isinstance(node, LatticeAtom):
        return lattice_sum(node.t, order)
    if isinstance(node, Lattice7Atom):
        return lattice_rank_sum(node.j, order)
    if isinstance(node, Unary):
        if node.op == "T2":
            # The halving action reads coefficients up to twice the order.
            return hecke_T2(eval_ast(node.child, 2 * order))
        child = eval_ast(node.child, order)
        if node.op == "neg":
            return child.neg()
        if node.op == "even":
            return child.even_part()
        if node.op == "odd":
            return child.odd_part()
        if node.op == "altq":
            return child.alternate()
        raise ExprEvalError(to_text(node), f"unknown unary operation {node.op!r}")
    if isinstance(node, Binary):
        left = eval_ast(node.left, order)
        right = eval_ast(node.right, order)
        if node.op == "+":
            return left.add(right)
        if node.op == "-":
            return left.sub(right)
        if node.op == "*":
            return left.mul(right)
        if node.op == "/":
            if right.coeffs[0] not in (1, -1):
                raise ExprEvalError(
                    to_text(node.right),
                    f"division needs constant term +1 or -1, got {right.coeffs[0]}",
                )
            return left.div(right)
        raise ExprEvalError(to_text(node), f"unknown operation {node.op!r}")
    if isinstance(node, Power):
        return eval_ast(node.base, order).pow(node.exponent)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(expr, order: int) -> TruncSeries:
    """Parse (if given text) and evaluate to a TruncSeries."""
    node = parse(expr) if isinstance(expr, str) else expr
    return eval_ast(node, order)


# Module-level alias for callers that expect the operation under this
# name; the builtin stays reachable as builtins.eval.
eval = evaluate
