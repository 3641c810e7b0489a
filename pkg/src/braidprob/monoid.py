"""
The PROB for monoids: morphisms ``n -> m`` are pairs ``(ord, braid)`` meaning
``ord o braid`` with ``braid`` in ``B_n`` acting first.

Composition pushes the braid of the outer factor past the order map of the
inner one (:func:`braidprob.crossed.distribute`).  The pair is unique, so
equality is componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, block_braiding
from .crossed import distribute
from .ordinal import OrdinalMap


@dataclass(frozen=True)
class MonMorphism:
    ord: OrdinalMap
    braid: BraidWord

    def __post_init__(self):
        if self.braid.strands != self.ord.src:
            raise ValueError(f"braid on {self.braid.strands} strands before a map from {self.ord.src}")

    @property
    def src(self) -> int:
        return self.ord.src

    @property
    def tgt(self) -> int:
        return self.ord.tgt

    @classmethod
    def identity(cls, n: int) -> MonMorphism:
        return cls(OrdinalMap.identity(n), BraidWord.identity(n))

    @classmethod
    def from_ord(cls, f: OrdinalMap) -> MonMorphism:
        return cls(f, BraidWord.identity(f.src))

    @classmethod
    def from_braid(cls, g: BraidWord) -> MonMorphism:
        return cls(OrdinalMap.identity(g.strands), g)

    def compose(self, inner: MonMorphism) -> MonMorphism:
        """``self o inner``."""
        if inner.tgt != self.src:
            raise ValueError(f"cannot compose {self.src}->{self.tgt} after {inner.src}->{inner.tgt}")
        moved = distribute(inner.ord, self.braid)
        return MonMorphism(self.ord.compose(moved.ord), moved.braid.compose(inner.braid))

    def __matmul__(self, inner: MonMorphism) -> MonMorphism:
        return self.compose(inner)

    def tensor(self, other: MonMorphism) -> MonMorphism:
        return MonMorphism(self.ord.tensor(other.ord), self.braid.tensor(other.braid))

    def __add__(self, other: MonMorphism) -> MonMorphism:
        return self.tensor(other)

    def equal(self, other: MonMorphism) -> bool:
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise ValueError("morphisms have different source or target")
        return self.ord == other.ord and self.braid.equal(other.braid)

    def set_map(self) -> tuple[int, ...]:
        """Underlying function ``{1..src} -> {1..tgt}`` as 1-based images."""
        p = self.braid.underlying_permutation()
        return tuple(self.ord(p(x)) for x in range(1, self.src + 1))

    def __str__(self):
        return f"({self.ord}, {self.braid})"


def braiding(m: int, n: int) -> MonMorphism:
    return MonMorphism.from_braid(block_braiding(m, n))


@dataclass(frozen=True)
class OpMorphism:
    """Formal opposite: ``OpMorphism(f)`` goes ``f.tgt -> f.src``."""

    base: MonMorphism

    @property
    def src(self) -> int:
        return self.base.tgt

    @property
    def tgt(self) -> int:
        return self.base.src

    @classmethod
    def identity(cls, n: int) -> OpMorphism:
        return cls(MonMorphism.identity(n))

    def compose(self, inner: OpMorphism) -> OpMorphism:
        """``self o inner`` in the opposite category, i.e. ``(inner.base o self.base)^op``."""
        return OpMorphism(inner.base.compose(self.base))

    def __matmul__(self, inner: OpMorphism) -> OpMorphism:
        return self.compose(inner)

    def tensor(self, other: OpMorphism) -> OpMorphism:
        return OpMorphism(self.base.tensor(other.base))

    def equal(self, other: OpMorphism) -> bool:
        return self.base.equal(other.base)
