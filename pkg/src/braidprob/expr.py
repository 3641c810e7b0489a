"""
Expression language for morphisms of the bimonoid PROB.

Grammar (whitespace insensitive)::

    morphism := tens ("." tens)*
    tens     := atom ("+" atom)*
    atom     := "id" nat | "m" | "u" | "d" | "e"
              | "s(" nat "," nat ")" ["'"] | "b(" nat "," nat ")" | "(" morphism ")"

``f . g`` is ``f o g``: the rightmost factor acts first.  ``+`` binds tighter.
Both operators are parsed as left-nested binary nodes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from . import ordinal
from .bimonoid import BimonMorphism, braid_gen, delta, eps, eta, mu
from .braid import BraidWord
from .monoid import MonMorphism


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class ElaborationError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (expression at byte {offset})")
        self.offset = offset


# --- syntax tree ---------------------------------------------------------------
# ``pos`` is the byte offset of the node in the source and is ignored by ==.


@dataclass(frozen=True)
class Id:
    k: int
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class M:
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class U:
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class D:
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class E:
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Gen:
    i: int
    n: int
    inverse: bool = False
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Block:
    m: int
    n: int
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Comp:
    """``outer o inner``."""

    outer: Expr
    inner: Expr
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Tens:
    left: Expr
    right: Expr
    pos: int = field(default=0, compare=False, repr=False)


Expr = Union[Id, M, U, D, E, Gen, Block, Comp, Tens]


# --- parser ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<word>[A-Za-z_]+)|(?P<punct>[().+,']))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, i = [], 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i == len(text):
            break
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", _byte(text, i))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), _byte(text, m.start(kind))))
        i = m.end()
    tokens.append(("end", "", _byte(text, len(text))))
    return tokens


def _byte(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {_describe(kind, text)}", pos)

    def nat(self) -> int:
        kind, text, pos = self.take()
        if kind != "nat":
            raise ParseError(f"expected a natural number, found {_describe(kind, text)}", pos)
        return int(text)

    def morphism(self) -> Expr:
        expr = self.tens()
        while self.peek()[1] == ".":
            pos = self.take()[2]
            expr = Comp(expr, self.tens(), pos=pos)
        return expr

    def tens(self) -> Expr:
        expr = self.atom()
        while self.peek()[1] == "+":
            pos = self.take()[2]
            expr = Tens(expr, self.atom(), pos=pos)
        return expr

    def atom(self) -> Expr:
        kind, text, pos = self.take()
        if kind == "punct" and text == "(":
            expr = self.morphism()
            self.expect(")")
            return expr
        if kind == "word":
            if text == "id":
                return Id(self.nat(), pos=pos)
            simple = {"m": M, "u": U, "d": D, "e": E}
            if text in simple:
                return simple[text](pos=pos)
            if text in ("s", "b"):
                self.expect("(")
                a = self.nat()
                self.expect(",")
                b = self.nat()
                self.expect(")")
                if text == "b":
                    return Block(a, b, pos=pos)
                inverse = self.peek()[1] == "'"
                if inverse:
                    self.take()
                return Gen(a, b, inverse, pos=pos)
            raise ParseError(f"unknown atom {text!r}", pos)
        raise ParseError(f"expected an atom, found {_describe(kind, text)}", pos)


def _describe(kind: str, text: str) -> str:
    return "end of input" if kind == "end" else repr(text)


def parse(text: str) -> Expr:
    p = _Parser(text)
    expr = p.morphism()
    kind, tok, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {tok!r}", pos)
    return expr


# --- printer ---------------------------------------------------------------------


def to_text(e: Expr) -> str:
    if isinstance(e, Id):
        return f"id {e.k}"
    if isinstance(e, (M, U, D, E)):
        return type(e).__name__.lower()
    if isinstance(e, Gen):
        return f"s({e.i},{e.n})" + ("'" if e.inverse else "")
    if isinstance(e, Block):
        return f"b({e.m},{e.n})"
    if isinstance(e, Comp):
        outer, inner = to_text(e.outer), to_text(e.inner)
        if isinstance(e.outer, Tens):
            outer = f"({outer})"
        if isinstance(e.inner, (Comp, Tens)):
            inner = f"({inner})"
        return f"{outer} . {inner}"
    if isinstance(e, Tens):
        left, right = to_text(e.left), to_text(e.right)
        if isinstance(e.left, Comp):
            left = f"({left})"
        if isinstance(e.right, (Comp, Tens)):
            right = f"({right})"
        return f"{left} + {right}"
    raise TypeError(f"not an expression: {e!r}")


# --- elaboration -------------------------------------------------------------------


def elaborate(e: Expr) -> BimonMorphism:
    """Canonical triple of ``e``; arity errors carry the offending node's offset."""
    if isinstance(e, Id):
        return BimonMorphism.identity(e.k)
    if isinstance(e, M):
        return mu()
    if isinstance(e, U):
        return eta()
    if isinstance(e, D):
        return delta()
    if isinstance(e, E):
        return eps()
    if isinstance(e, Gen):
        if not 1 <= e.i < e.n:
            raise ElaborationError(f"s({e.i},{e.n}) needs 1 <= i < n", e.pos)
        return BimonMorphism.from_mon(MonMorphism.from_braid(
            BraidWord.generator(e.i, e.n, inverse=e.inverse)))
    if isinstance(e, Block):
        return braid_gen(e.m, e.n)
    if isinstance(e, Comp):
        outer, inner = elaborate(e.outer), elaborate(e.inner)
        if inner.tgt != outer.src:
            raise ElaborationError(
                f"cannot compose {outer.src} -> {outer.tgt} after {inner.src} -> {inner.tgt}", e.pos)
        return outer.compose(inner)
    if isinstance(e, Tens):
        return elaborate(e.left).tensor(elaborate(e.right))
    raise TypeError(f"not an expression: {e!r}")


def arity(e: Expr) -> tuple[int, int]:
    """``(src, tgt)`` of ``e`` without normalizing; raises ``ElaborationError``."""
    if isinstance(e, Id):
        return e.k, e.k
    fixed = {M: (2, 1), U: (0, 1), D: (1, 2), E: (1, 0)}
    if type(e) in fixed:
        return fixed[type(e)]
    if isinstance(e, Gen):
        if not 1 <= e.i < e.n:
            raise ElaborationError(f"s({e.i},{e.n}) needs 1 <= i < n", e.pos)
        return e.n, e.n
    if isinstance(e, Block):
        return e.m + e.n, e.m + e.n
    if isinstance(e, Comp):
        (a, b), (c, d) = arity(e.outer), arity(e.inner)
        if d != a:
            raise ElaborationError(f"cannot compose {a} -> {b} after {c} -> {d}", e.pos)
        return c, b
    if isinstance(e, Tens):
        (a, b), (c, d) = arity(e.left), arity(e.right)
        return a + c, b + d
    raise TypeError(f"not an expression: {e!r}")


def _from_ordinal(e, dual: bool) -> Expr:
    if isinstance(e, ordinal.Id):
        return Id(e.k)
    if isinstance(e, ordinal.Gen):
        if e.name == "M":
            return D() if dual else M()
        return E() if dual else U()
    if isinstance(e, ordinal.Compose):
        outer, inner = _from_ordinal(e.outer, dual), _from_ordinal(e.inner, dual)
        return Comp(inner, outer) if dual else Comp(outer, inner)
    if isinstance(e, ordinal.Tensor):
        return Tens(_from_ordinal(e.left, dual), _from_ordinal(e.right, dual))
    raise TypeError(e)


def from_morphism(f: BimonMorphism) -> Expr:
    """An expression elaborating to ``f``: multiplications, then the braid, then comultiplications."""
    parts = []
    if not f.phi.is_identity:
        parts.append(_from_ordinal(ordinal.factorize(f.phi), dual=False))
    for i, sign in reversed(f.braid.letters):
        parts.append(Gen(i, f.mid, sign < 0))
    if not f.psi.is_identity:
        parts.append(_from_ordinal(ordinal.factorize(f.psi), dual=True))
    if not parts:
        return Id(f.src)
    expr = parts[0]
    for p in parts[1:]:
        expr = Comp(expr, p)
    return expr
