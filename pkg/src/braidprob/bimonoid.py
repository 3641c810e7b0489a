"""
The PROB for bimonoids: order maps, then a braid, then order maps.

A morphism ``p -> q`` is stored as a triple ``(psi, braid, phi)`` through a
middle object ``s``: ``psi: s -> p`` read backwards (comultiplications and
counits), then ``braid`` in ``B_s``, then ``phi: s -> q`` (multiplications and
units).  All braiding sits in the middle slot and both outer legs are pure
order maps, so two triples denote the same morphism iff they agree
componentwise with the braids equal as group elements.

Composition rewrites the cospan in the middle of ``f2 o f1`` into a span
(:func:`cospan_to_span`).  A monoid-PROB morphism ``(a, x)`` used as a left
span leg contributes ``a`` to the comultiplication side and the braid
``x`` read backwards (:meth:`BraidWord.reverse`) to the middle; with this
reading the ``(m, m)`` rule below is the bimonoid law with the braiding
(not its inverse) between the two comultiplications.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .braid import BraidWord, block_braiding
from .monoid import MonMorphism
from .ordinal import M, U, OrdinalMap, factorize


@dataclass(frozen=True)
class BimonMorphism:
    psi: OrdinalMap
    braid: BraidWord
    phi: OrdinalMap

    def __post_init__(self):
        if not (self.psi.src == self.braid.strands == self.phi.src):
            raise ValueError(
                f"middle objects disagree: psi from {self.psi.src}, braid on "
                f"{self.braid.strands}, phi from {self.phi.src}")

    @property
    def src(self) -> int:
        return self.psi.tgt

    @property
    def tgt(self) -> int:
        return self.phi.tgt

    @property
    def mid(self) -> int:
        return self.psi.src

    @property
    def is_monoidal(self) -> bool:
        """True when no comultiplication or counit occurs (``psi`` is an identity)."""
        return self.psi.is_identity

    @classmethod
    def identity(cls, n: int) -> BimonMorphism:
        return cls(OrdinalMap.identity(n), BraidWord.identity(n), OrdinalMap.identity(n))

    @classmethod
    def from_mon(cls, f: MonMorphism) -> BimonMorphism:
        return cls(OrdinalMap.identity(f.src), f.braid, f.ord)

    @classmethod
    def from_comon(cls, f: MonMorphism) -> BimonMorphism:
        """The opposite of ``f: t -> s``, a morphism ``s -> t``."""
        return cls(f.ord, f.braid.reverse(), OrdinalMap.identity(f.src))

    def compose(self, inner: BimonMorphism) -> BimonMorphism:
        """``self o inner``."""
        if inner.tgt != self.src:
            raise ValueError(f"cannot compose {self.src}->{self.tgt} after {inner.src}->{inner.tgt}")
        span = cospan_to_span(MonMorphism(inner.phi, inner.braid), MonMorphism.from_ord(self.psi))
        front = MonMorphism(self.phi, self.braid).compose(span.right)
        braid = front.braid.compose(span.left.braid.reverse()).free_reduce()
        return BimonMorphism(inner.psi.compose(span.left.ord), braid, front.ord)

    def __matmul__(self, inner: BimonMorphism) -> BimonMorphism:
        return self.compose(inner)

    def tensor(self, other: BimonMorphism) -> BimonMorphism:
        return BimonMorphism(self.psi.tensor(other.psi), self.braid.tensor(other.braid),
                             self.phi.tensor(other.phi))

    def __add__(self, other: BimonMorphism) -> BimonMorphism:
        return self.tensor(other)

    def equal(self, other: BimonMorphism) -> bool:
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise ValueError("morphisms have different source or target")
        return self == other

    def __str__(self):
        return f"[{self.src} <- {self.mid} -> {self.tgt}: psi={self.psi}, braid={self.braid}, phi={self.phi}]"


def mu() -> BimonMorphism:
    return BimonMorphism.from_mon(MonMorphism.from_ord(M))


def eta() -> BimonMorphism:
    return BimonMorphism.from_mon(MonMorphism.from_ord(U))


def delta() -> BimonMorphism:
    return BimonMorphism.from_comon(MonMorphism.from_ord(M))


def eps() -> BimonMorphism:
    return BimonMorphism.from_comon(MonMorphism.from_ord(U))


def braid_gen(m: int, n: int) -> BimonMorphism:
    return BimonMorphism.from_mon(MonMorphism.from_braid(block_braiding(m, n)))


# --- cospans to spans -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SpanLift:
    """Span ``left: t -> s1``, ``right: t -> s2`` standing for ``right o left^op``.

    Spans are compared as the morphisms they stand for.
    """

    left: MonMorphism
    right: MonMorphism

    def __post_init__(self):
        if self.left.src != self.right.src:
            raise ValueError("span legs start at different objects")

    @property
    def mid(self) -> int:
        return self.left.src

    def to_bimon(self) -> BimonMorphism:
        braid = self.right.braid.compose(self.left.braid.reverse())
        return BimonMorphism(self.left.ord, braid, self.right.ord)

    def normalized(self) -> SpanLift:
        """Equivalent span whose right leg carries no braid."""
        braid = self.left.braid.compose(self.right.braid.reverse())
        return SpanLift(MonMorphism(self.left.ord, braid), MonMorphism.from_ord(self.right.ord))

    def tensor(self, other: SpanLift) -> SpanLift:
        return SpanLift(self.left.tensor(other.left), self.right.tensor(other.right))

    def __eq__(self, other):
        if not isinstance(other, SpanLift):
            return NotImplemented
        return self.to_bimon() == other.to_bimon()

    def __hash__(self):
        return hash(self.to_bimon())

    def agrees_with_pullback(self, alpha: MonMorphism, beta: MonMorphism) -> bool:
        """The underlying square of finite sets commutes and is a pullback."""
        a, b = alpha.set_map(), beta.set_map()
        pairs = {(x, y) for x in range(1, alpha.src + 1) for y in range(1, beta.src + 1)
                 if a[x - 1] == b[y - 1]}
        left, right = self.left.set_map(), self.right.set_map()
        images = set(zip(left, right))
        return self.mid == len(pairs) and images == pairs and len(images) == self.mid

    def __str__(self):
        return f"span {self.left.tgt} <- {self.mid} -> {self.right.tgt}: left={self.left}, right={self.right}"


def cospan_to_span(alpha: MonMorphism, beta: MonMorphism, nesting: str = "left") -> SpanLift:
    """Rewrite ``beta^op o alpha`` (``alpha: s1 -> n <- s2: beta``) as ``right o left^op``.

    Braids are stripped off both legs first; the remaining cospan of order
    maps is split over the points of ``n`` and each block is reduced to the
    four base cospans built from ``m`` and ``u`` by factorizing one leg.
    ``nesting`` picks the shape of the multiplication chains used for that.
    """
    if alpha.tgt != beta.tgt:
        raise ValueError(f"cospan legs end at {alpha.tgt} and {beta.tgt}")
    base = _lift_orders(alpha.ord, beta.ord, nesting)
    if not alpha.braid.letters and not beta.braid.letters:
        return base
    left = MonMorphism.from_braid(alpha.braid.reverse()).compose(base.left)
    right = MonMorphism.from_braid(beta.braid.reverse()).compose(base.right)
    return SpanLift(left, right)


def _mon(f: OrdinalMap) -> MonMorphism:
    return MonMorphism.from_ord(f)


def _empty_span() -> SpanLift:
    return SpanLift(MonMorphism.identity(0), MonMorphism.identity(0))


@functools.lru_cache(maxsize=None)
def _lift_orders(phi: OrdinalMap, psi: OrdinalMap, nesting: str) -> SpanLift:
    if phi.is_identity:
        return SpanLift(_mon(psi), MonMorphism.identity(psi.src))
    if psi.is_identity:
        return SpanLift(MonMorphism.identity(phi.src), _mon(phi))
    if phi.tgt != 1:
        span = _empty_span()
        for k, l in zip(phi.fibers(), psi.fibers()):
            span = span.tensor(_lift_orders(OrdinalMap.collapse(k), OrdinalMap.collapse(l), nesting))
        return span
    k, l = phi.src, psi.src
    if (k, l) == (2, 2):
        return SpanLift(MonMorphism(M + M, BraidWord.generator(2, 4)), _mon(M + M))
    if (k, l) == (0, 0):
        return _empty_span()
    if (k, l) == (2, 0):
        return SpanLift(_mon(U + U), MonMorphism.identity(0))
    if (k, l) == (0, 2):
        return SpanLift(MonMorphism.identity(0), _mon(U + U))
    if k > 2:
        inner = factorize(phi, nesting).inner.evaluate()  # phi = M o inner
        first = cospan_to_span(_mon(M), _mon(psi), nesting)
        second = cospan_to_span(_mon(inner), first.left, nesting)
        return SpanLift(second.left, first.right.compose(second.right))
    inner = factorize(psi, nesting).inner.evaluate()  # psi = M o inner
    first = cospan_to_span(_mon(phi), _mon(M), nesting)
    second = cospan_to_span(first.right, _mon(inner), nesting)
    return SpanLift(first.left.compose(second.left), second.right)
