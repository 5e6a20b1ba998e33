"""Surface syntax for ring elements.

Grammar (precedence ^ > * > + -, left associative, unary minus allowed):

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' INT)*
    atom   := INT | d<i> | t<j> | tau<i> | tau_<i> | N '(' [INT (',' INT)*] ')'
            | '(' expr ')'

d<i> is the i-th group generator, t<j> the j-th T variable, tau<i> sugar
for d<i> - 1, N(i, ...) the norm of the listed cyclic factors and N() the
full group norm.  ``element_to_text`` prints in tau/T notation and round
trips through ``parse_element``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import ParseError
from .groupring import (
    GroupRingSpec,
    RingElement,
    const,
    delta,
    from_vector,
    norm_element,
    one,
    tvar,
)

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^(),]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    column: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    for lineno, line in enumerate(src.split("\n"), start=1):
        pos = 0
        while pos < len(line):
            m = _TOKEN_RE.match(line, pos)
            if m is None:
                rest = line[pos:].lstrip()
                if not rest:
                    break
                col = pos + (len(line[pos:]) - len(rest)) + 1
                raise ParseError(f"unexpected character {rest[0]!r}", lineno, col)
            kind = m.lastgroup
            tokens.append(Token(kind, m.group(kind), lineno, m.start(kind) + 1))
            pos = m.end()
    last = tokens[-1] if tokens else None
    tokens.append(Token("end", "", last.line if last else 1,
                        last.column + len(last.text) if last else 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], spec: GroupRingSpec):
        self.tokens = tokens
        self.pos = 0
        self.spec = spec

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        return self.advance()

    def parse(self) -> RingElement:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input starting at {tok.text!r}",
                             tok.line, tok.column)
        return value

    def expr(self) -> RingElement:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            value = -self.term()
        else:
            value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> RingElement:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> RingElement:
        value = self.atom()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "^":
                self.advance()
                etok = self.peek()
                if etok.kind != "int":
                    raise ParseError("exponent must be a nonnegative integer",
                                     etok.line, etok.column)
                self.advance()
                value = value ** int(etok.text)
            else:
                return value

    def atom(self) -> RingElement:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return const(self.spec, int(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return -self.atom()
        if tok.kind == "name":
            self.advance()
            return self.name_atom(tok)
        raise ParseError(f"expected a value, found {tok.text or 'end of input'!r}",
                         tok.line, tok.column)

    def name_atom(self, tok: Token) -> RingElement:
        spec = self.spec
        name = tok.text
        if name == "N":
            self.expect("(")
            indices = []
            if not (self.peek().kind == "op" and self.peek().text == ")"):
                while True:
                    itok = self.peek()
                    if itok.kind != "int":
                        raise ParseError("norm arguments must be factor indices",
                                         itok.line, itok.column)
                    self.advance()
                    indices.append(int(itok.text))
                    if self.peek().kind == "op" and self.peek().text == ",":
                        self.advance()
                    else:
                        break
            self.expect(")")
            for i in indices:
                if not 1 <= i <= spec.s:
                    raise ParseError(f"norm index {i} out of range 1..{spec.s}",
                                     tok.line, tok.column)
            return norm_element(spec, indices or None)
        m = re.fullmatch(r"(d|t|tau_?)(\d+)", name)
        if m is None:
            raise ParseError(f"unknown identifier {name!r}", tok.line, tok.column)
        head, idx = m.group(1), int(m.group(2))
        if head == "d" or head.startswith("tau"):
            if not 1 <= idx <= spec.s:
                raise ParseError(f"group generator index {idx} out of range 1..{spec.s}",
                                 tok.line, tok.column)
            g = delta(spec, idx)
            return g - one(spec) if head.startswith("tau") else g
        if not 1 <= idx <= spec.d:
            raise ParseError(f"T-variable index {idx} out of range 1..{spec.d}",
                             tok.line, tok.column)
        return tvar(spec, idx)


def parse_element(src: str, spec: GroupRingSpec) -> RingElement:
    """Parse and evaluate an expression in the ring given by ``spec``."""
    return _Parser(tokenize(src), spec).parse()


def _tau_coefficients(x: RingElement) -> np.ndarray:
    """Coefficient tensor in the basis tau^a * T^b, tau_i = delta_i - 1.

    delta^a = (1 + tau)^a expands binomially along each group axis.
    """
    spec = x.spec
    mod = spec.modulus
    coeffs = x.coeffs.reshape(spec.radices).astype(object)
    for axis, m in enumerate(spec.orders):
        mat = np.array([[comb(a, e) % mod for a in range(m)] for e in range(m)],
                       dtype=object)
        coeffs = np.tensordot(mat, coeffs, axes=([1], [axis]))
        coeffs = np.moveaxis(coeffs, 0, axis) % mod
    return coeffs


def element_to_text(x: RingElement) -> str:
    """Canonical tau/T-notation text, re-parseable by ``parse_element``.

    Terms are ordered by ascending total degree, then lexicographically by
    exponent tuple; the zero element prints as "0".
    """
    spec = x.spec
    coeffs = _tau_coefficients(x)
    entries = []
    for flat, c in enumerate(coeffs.reshape(-1)):
        c = int(c)
        if c == 0:
            continue
        exps = spec.exps_of(flat)
        entries.append((sum(exps), exps, c))
    if not entries:
        return "0"
    entries.sort(key=lambda t: (t[0], t[1]))
    parts = []
    for _, exps, c in entries:
        factors = []
        for i in range(spec.s):
            if exps[i] == 1:
                factors.append(f"tau{i + 1}")
            elif exps[i] > 1:
                factors.append(f"tau{i + 1}^{exps[i]}")
        for j in range(spec.d):
            e = exps[spec.s + j]
            if e == 1:
                factors.append(f"t{j + 1}")
            elif e > 1:
                factors.append(f"t{j + 1}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)
