"""
The PRO of finite ordinals: order-preserving maps ``n -> m``.

Maps are stored as 1-based image tuples.  ``M`` is the unique map ``2 -> 1``
and ``U`` the unique map ``0 -> 1``; every map is a finite expression in
these, identities, composition and tensor (see :func:`factorize`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple


@dataclass(frozen=True)
class OrdinalMap:
    """Order-preserving map from ``{1..src}`` to ``{1..tgt}``."""

    src: int
    tgt: int
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if self.src != len(images):
            raise ValueError(f"source {self.src} but {len(images)} images")
        if any(not 1 <= v <= self.tgt for v in images):
            raise ValueError(f"images {images} not in 1..{self.tgt}")
        if any(a > b for a, b in zip(images, images[1:])):
            raise ValueError(f"images {images} not order-preserving")

    @classmethod
    def _unchecked(cls, src: int, tgt: int, images: tuple) -> OrdinalMap:
        # for results of operations on valid maps
        f = object.__new__(cls)
        object.__setattr__(f, "src", src)
        object.__setattr__(f, "tgt", tgt)
        object.__setattr__(f, "images", images)
        return f

    @classmethod
    def from_images(cls, images, tgt: int) -> OrdinalMap:
        images = tuple(images)
        return cls(len(images), tgt, images)

    @classmethod
    def identity(cls, n: int) -> OrdinalMap:
        return cls(n, n, tuple(range(1, n + 1)))

    @classmethod
    def from_fibers(cls, fibers) -> OrdinalMap:
        images = tuple(j for j, k in enumerate(fibers, start=1) for _ in range(k))
        return cls(len(images), len(fibers), images)

    @classmethod
    def collapse(cls, n: int) -> OrdinalMap:
        """The unique map ``n -> 1``."""
        return cls(n, 1, (1,) * n)

    @property
    def is_identity(self) -> bool:
        return self.src == self.tgt and self.images == tuple(range(1, self.src + 1))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: OrdinalMap) -> OrdinalMap:
        """``self o other``."""
        if other.tgt != self.src:
            raise ValueError(f"cannot compose {self.src}->{self.tgt} after {other.src}->{other.tgt}")
        return OrdinalMap._unchecked(other.src, self.tgt, tuple(self.images[v - 1] for v in other.images))

    def __matmul__(self, other: OrdinalMap) -> OrdinalMap:
        return self.compose(other)

    def tensor(self, other: OrdinalMap) -> OrdinalMap:
        return OrdinalMap._unchecked(self.src + other.src, self.tgt + other.tgt,
                                     self.images + tuple(v + self.tgt for v in other.images))

    def __add__(self, other: OrdinalMap) -> OrdinalMap:
        return self.tensor(other)

    def fibers(self) -> tuple[int, ...]:
        counts = [0] * self.tgt
        for v in self.images:
            counts[v - 1] += 1
        return tuple(counts)

    def __str__(self):
        return f"{self.src}->{self.tgt}{list(self.images)}"


M = OrdinalMap(2, 1, (1, 1))
U = OrdinalMap(0, 1, ())


def all_maps(n: int, m: int) -> Iterator[OrdinalMap]:
    """Every order-preserving map ``n -> m`` (there are C(n+m-1, n) of them)."""
    for images in itertools.combinations_with_replacement(range(1, m + 1), n):
        yield OrdinalMap(n, m, images)


# --- generator expressions --------------------------------------------------


@dataclass(frozen=True)
class Gen:
    """Leaf ``M`` or ``U``."""

    name: str

    @property
    def src(self):
        return 2 if self.name == "M" else 0

    @property
    def tgt(self):
        return 1

    def evaluate(self) -> OrdinalMap:
        return M if self.name == "M" else U

    def __str__(self):
        return self.name.lower()


@dataclass(frozen=True)
class Id:
    k: int

    @property
    def src(self):
        return self.k

    @property
    def tgt(self):
        return self.k

    def evaluate(self) -> OrdinalMap:
        return OrdinalMap.identity(self.k)

    def __str__(self):
        return f"id {self.k}"


@dataclass(frozen=True)
class Compose:
    """``outer o inner``."""

    outer: object
    inner: object

    def __post_init__(self):
        if self.inner.tgt != self.outer.src:
            raise ValueError(f"cannot compose {self.outer} after {self.inner}")

    @property
    def src(self):
        return self.inner.src

    @property
    def tgt(self):
        return self.outer.tgt

    def evaluate(self) -> OrdinalMap:
        return self.outer.evaluate().compose(self.inner.evaluate())

    def __str__(self):
        return f"{_paren(self.outer, Tensor)} . {_paren(self.inner, (Compose, Tensor))}"


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object

    @property
    def src(self):
        return self.left.src + self.right.src

    @property
    def tgt(self):
        return self.left.tgt + self.right.tgt

    def evaluate(self) -> OrdinalMap:
        return self.left.evaluate().tensor(self.right.evaluate())

    def __str__(self):
        return f"{_paren(self.left, Compose)} + {_paren(self.right, (Compose, Tensor))}"


def _paren(e, kinds):
    return f"({e})" if isinstance(e, kinds) else str(e)


MGen = Gen("M")
UGen = Gen("U")


def multiplication_chain(k: int, nesting: str = "left"):
    """Expression for the unique map ``k -> 1`` (``k >= 2``) as ``k-1`` copies of M."""
    if k < 2:
        raise ValueError("chains need at least two inputs")
    expr = MGen
    for _ in range(k - 2):
        if nesting == "left":
            expr = Compose(MGen, Tensor(expr, Id(1)))
        elif nesting == "right":
            expr = Compose(MGen, Tensor(Id(1), expr))
        else:
            raise ValueError(f"unknown nesting {nesting!r}")
    return expr


def factorize(f: OrdinalMap, nesting: str = "left"):
    """Generator expression evaluating to ``f``; fibers tensored in target order."""
    blocks = []
    for k in f.fibers():
        if k == 0:
            blocks.append(UGen)
        elif k == 1:
            if blocks and isinstance(blocks[-1], Id):
                blocks[-1] = Id(blocks[-1].k + 1)
            else:
                blocks.append(Id(1))
        else:
            blocks.append(multiplication_chain(k, nesting))
    if not blocks:
        return Id(0)
    expr = blocks[0]
    for b in blocks[1:]:
        expr = Tensor(expr, b)
    return expr


# --- pullbacks of finite sets ----------------------------------------------


class Pullback(NamedTuple):
    size: int
    left: tuple[int, ...]   # set map size -> f.src, 1-based images
    right: tuple[int, ...]  # set map size -> g.src


def pullback(f: OrdinalMap, g: OrdinalMap) -> Pullback:
    """Fiber product of ``f: n -> k`` and ``g: m -> k`` as finite sets.

    Elements are ordered by (target point, index in f-fiber, index in g-fiber).
    """
    if f.tgt != g.tgt:
        raise ValueError(f"cospan targets differ: {f.tgt} vs {g.tgt}")
    left, right = [], []
    for j in range(1, f.tgt + 1):
        fa = [a for a in range(1, f.src + 1) if f(a) == j]
        gb = [b for b in range(1, g.src + 1) if g(b) == j]
        for a in fa:
            for b in gb:
                left.append(a)
                right.append(b)
    return Pullback(len(left), tuple(left), tuple(right))
