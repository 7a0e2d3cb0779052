"""Surface syntax for symmetric-function expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('o' atom)* | INT factor | '(' expr ')'
    atom   := ('s' | 'p' | 'h') '[' INT (',' INT)* ']'

``o`` is plethysm and associates to the right.  Atom indices accept the
exponent shorthand ``2^3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .partitions import Partition, format_partition, parse_partition
from .plethysm import PlethysmExpression, iterated, plethysm
from .symfunc import PSeries, h_to_p, schur_to_p


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class DegreeError(ValueError):
    """Sum of terms with different degrees."""


@dataclass(frozen=True)
class Atom:
    kind: str  # 's', 'p' or 'h'
    index: Partition

    @property
    def degree(self):
        return self.index.weight


@dataclass(frozen=True)
class Plethysm:
    atoms: tuple  # outermost first

    @property
    def degree(self):
        d = 1
        for a in self.atoms:
            d *= a.degree
        return d


@dataclass(frozen=True)
class Scaled:
    scalar: int
    body: "Node"

    @property
    def degree(self):
        return self.body.degree


@dataclass(frozen=True)
class Product:
    factors: tuple

    @property
    def degree(self):
        return sum(f.degree for f in self.factors)


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign, node), ...)

    @property
    def degree(self):
        return self.terms[0][1].degree


Node = Union[Atom, Plethysm, Scaled, Product, Sum]

_TOKEN = re.compile(r"\s*(?:(\d+)|([sph])\s*\[([^\]]*)\]|(o)|([+\-*()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1):
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2):
            try:
                index = parse_partition(m.group(3))
            except ValueError as exc:
                raise ParseError(f"bad index: {exc}", start) from None
            if not index:
                raise ParseError("empty index", start)
            tokens.append(("ATOM", Atom(m.group(2), index), start))
        elif m.group(4):
            tokens.append(("o", "o", start))
        else:
            tokens.append((m.group(5), m.group(5), start))
        pos = m.end()
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Node:
        terms = [(1, self.term())]
        while self.peek()[0] in "+-":
            sign = 1 if self.take()[0] == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        degrees = {node.degree for _, node in terms}
        if len(degrees) > 1:
            raise DegreeError(f"sum of terms with degrees {sorted(degrees)}")
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        kind, value, pos = self.peek()
        if kind == "INT":
            self.take()
            return Scaled(value, self.factor())
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "ATOM":
            atoms = [self.take()[1]]
            while self.peek()[0] == "o":
                self.take()
                atoms.append(self.take("ATOM")[1])
            return atoms[0] if len(atoms) == 1 else Plethysm(tuple(atoms))
        if kind == "END":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)


def parse(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "END":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return node


def render(node: Node) -> str:
    if isinstance(node, Atom):
        return node.kind + format_partition(node.index)
    if isinstance(node, Plethysm):
        return " o ".join(render(a) for a in node.atoms)
    if isinstance(node, Scaled):
        inner = render(node.body)
        if isinstance(node.body, (Sum, Product)):
            inner = f"({inner})"
        return f"{node.scalar} {inner}"
    if isinstance(node, Product):
        return " * ".join(f"({render(f)})" if isinstance(f, Sum) else render(f)
                          for f in node.factors)
    out = ""
    for k, (sign, term) in enumerate(node.terms):
        text = render(term)
        if k == 0:
            out = text  # the parser never produces a leading minus
        else:
            out += (" + " if sign > 0 else " - ") + text
    return out


def as_chain(node: Node) -> Optional[PlethysmExpression]:
    """The Schur chain if ``node`` is s[..] o s[..] o ..., else None."""
    atoms = node.atoms if isinstance(node, Plethysm) else (node,) if isinstance(node, Atom) else None
    if atoms is None or any(a.kind != "s" for a in atoms):
        return None
    return PlethysmExpression(a.index for a in atoms)


def _atom_to_p(atom: Atom) -> PSeries:
    if atom.kind == "s":
        return schur_to_p(atom.index)
    if atom.kind == "p":
        return PSeries.p(atom.index)
    return h_to_p(atom.index)


def to_pseries(node: Node) -> PSeries:
    chain = as_chain(node)
    if chain is not None:
        return iterated(chain)
    if isinstance(node, Atom):
        return _atom_to_p(node)
    if isinstance(node, Plethysm):
        out = _atom_to_p(node.atoms[-1])
        for atom in reversed(node.atoms[:-1]):
            out = plethysm(_atom_to_p(atom), out)
        return out
    if isinstance(node, Scaled):
        return to_pseries(node.body).scale(node.scalar)
    if isinstance(node, Product):
        out = PSeries.one()
        for f in node.factors:
            out = out * to_pseries(f)
        return out
    total = PSeries(node.degree)
    for sign, term in node.terms:
        total = total + to_pseries(term).scale(sign)
    return total


def to_alphabet(node: Node, alphabet=None):
    """node[A] for a polynomial alphabet A (default 1 - x - y)."""
    from .alphabet import BivariatePoly, eval_chain_on_1mxmy, eval_schur_on

    if alphabet is None:
        chain = as_chain(node)
        if chain is not None:
            return eval_chain_on_1mxmy(chain)
        alphabet = BivariatePoly.one_minus_x_minus_y()

    def atom_on(atom: Atom, a):
        if atom.kind == "s":
            return eval_schur_on(atom.index, a)
        out = BivariatePoly.const(1)
        for part in atom.index:
            out = out * (a.substitute_power(part) if atom.kind == "p"
                         else eval_schur_on((part,), a))
        return out

    if isinstance(node, Atom):
        return atom_on(node, alphabet)
    if isinstance(node, Plethysm):
        out = alphabet
        for atom in reversed(node.atoms):
            out = atom_on(atom, out)
        return out
    if isinstance(node, Scaled):
        return to_alphabet(node.body, alphabet) * node.scalar
    if isinstance(node, Product):
        out = BivariatePoly.const(1)
        for f in node.factors:
            out = out * to_alphabet(f, alphabet)
        return out
    total = BivariatePoly()
    for sign, term in node.terms:
        total = total + to_alphabet(term, alphabet) * sign
    return total
