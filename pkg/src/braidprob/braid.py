"""
Braid groups B_n as words in the Artin generators.

A word is a sequence of letters ``(i, sign)`` with ``1 <= i <= n-1`` and
``sign`` in ``{+1, -1}``, stored in order of application: the first letter
acts first.  ``sigma_i`` crosses the strand at position ``i`` over the strand
at position ``i+1``.

Equality is decided by the left Garside normal form ``Delta^k A_1 ... A_r``
where each ``A_j`` is a permutation braid (a positive braid in which every pair
of strands crosses at most once).  Permutations are handled 0-based
internally; the public ``Permutation`` type is 1-based.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..size}``; ``images[j-1]`` is the image of ``j``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        if self.size != other.size:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for j, k in enumerate(self.images, start=1):
            inv[k - 1] = j
        return Permutation(tuple(inv))

    def __str__(self):
        return "[" + " ".join(map(str, self.images)) + "]"


# --- permutation-braid (simple element) arithmetic, 0-based ----------------
#
# A simple element is identified with its permutation ``p`` where ``p[j]`` is
# the top position of the strand starting at bottom position ``j``.  The
# product ``A.B`` (A first) has permutation ``p_B o p_A``.


def _starting_set(p):
    # i such that the simple element is sigma_i . X
    return {i for i in range(len(p) - 1) if p[i] > p[i + 1]}


def _finishing_set(p):
    # i such that the simple element is X . sigma_i
    inv = _inverse(p)
    return {i for i in range(len(p) - 1) if inv[i] > inv[i + 1]}


def _inverse(p):
    inv = [0] * len(p)
    for j, k in enumerate(p):
        inv[k] = j
    return inv


def _swap_values(p, i):
    # s_i o p
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _swap_positions(p, i):
    # p o s_i
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def _flip(p):
    # conjugation by the half twist
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def _delta(n):
    return tuple(range(n - 1, -1, -1))


def _identity(n):
    return tuple(range(n))


def _left_weight(a, b):
    """Slide generators from the front of ``b`` onto the back of ``a``."""
    while True:
        movable = _starting_set(b) - _finishing_set(a)
        if not movable:
            return a, b
        i = min(movable)
        a = _swap_values(a, i)
        b = _swap_positions(b, i)


def _positive_word(p):
    """Positive Artin word (0-based indices, application order) for a simple element."""
    # bubble sort the arrangement of strands until it matches the target
    n = len(p)
    arrangement = list(range(n))  # strand sitting at each position
    target = _inverse(p)  # strand that must end at each position
    word = []
    for pos in range(n):
        k = arrangement.index(target[pos])
        while k > pos:
            # strand at k-1 crosses over strand at k, moving right
            arrangement[k - 1], arrangement[k] = arrangement[k], arrangement[k - 1]
            word.append(k - 1)
            k -= 1
    return word


@functools.lru_cache(maxsize=1 << 18)
def _left_weight_cached(a, b):
    return _left_weight(a, b)


@functools.lru_cache(maxsize=1 << 16)
def _normal_form(strands: int, letters: tuple) -> tuple[int, tuple]:
    if strands <= 1:
        return 0, ()
    n = strands
    ident, delta = _identity(n), _delta(n)
    power = 0
    factors: list[tuple] = []  # left-weighted, no identity or half-twist factors
    for i, sign in letters:
        i -= 1
        if sign > 0:
            simple = _swap_values(ident, i)
        else:
            # sigma_i^-1 = Delta^-1 . (Delta sigma_i^-1); Delta^-1 moves to the front
            power -= 1
            factors = [_flip(f) for f in factors]
            simple = _swap_values(delta, i)
        # right multiplication by a simple element needs one backward sweep
        factors.append(simple)
        for j in range(len(factors) - 2, -1, -1):
            pair = _left_weight_cached(factors[j], factors[j + 1])
            if pair == (factors[j], factors[j + 1]):
                break
            factors[j], factors[j + 1] = pair
        while factors and factors[-1] == ident:
            factors.pop()
        while factors and factors[0] == delta:
            factors.pop(0)
            power += 1
    return power, tuple(factors)


def _free_reduce(letters):
    out = []
    for letter in letters:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class BraidWord:
    """Element of the braid group ``B_strands`` given by a word.

    ``==`` and ``hash`` are those of the group element, not of the word.
    """

    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator index {i} out of range for B_{self.strands}")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if self.strands < 0:
            raise ValueError("negative strand count")
        object.__setattr__(self, "letters", letters)

    # construction

    @classmethod
    def _unchecked(cls, strands: int, letters: tuple) -> BraidWord:
        # for results of operations on valid words
        w = object.__new__(cls)
        object.__setattr__(w, "strands", strands)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)

    @classmethod
    def generator(cls, i: int, n: int, inverse: bool = False) -> BraidWord:
        return cls(n, ((i, -1 if inverse else 1),))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> BraidWord:
        """Signed indices: ``2`` is sigma_2, ``-2`` its inverse."""
        return cls(n, tuple((abs(k), 1 if k > 0 else -1) for k in indices))

    # group structure

    def compose(self, other: BraidWord) -> BraidWord:
        """``self o other``: ``other`` first, then ``self``."""
        if self.strands != other.strands:
            raise ValueError(f"cannot compose B_{self.strands} with B_{other.strands}")
        return BraidWord._unchecked(self.strands, other.letters + self.letters)

    def __matmul__(self, other: BraidWord) -> BraidWord:
        return self.compose(other)

    def tensor(self, other: BraidWord) -> BraidWord:
        shift = self.strands
        return BraidWord._unchecked(self.strands + other.strands,
                                    self.letters + tuple((i + shift, s) for i, s in other.letters))

    def inverse(self) -> BraidWord:
        return BraidWord._unchecked(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def reverse(self) -> BraidWord:
        """Anti-automorphism fixing every generator (word read backwards)."""
        return BraidWord._unchecked(self.strands, tuple(reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord._unchecked(self.strands, tuple((i, -s) for i, s in self.letters))

    def shifted(self, offset: int, strands: int) -> BraidWord:
        """Embed into ``B_strands`` acting on positions ``offset+1 ..``."""
        if offset + self.strands > strands:
            raise ValueError("embedding does not fit")
        return BraidWord(strands, tuple((i + offset, s) for i, s in self.letters))

    def free_reduce(self) -> BraidWord:
        return BraidWord._unchecked(self.strands, _free_reduce(self.letters))

    # invariants

    def underlying_permutation(self) -> Permutation:
        pos = list(range(1, self.strands + 1))  # pos[j-1]: current position of strand j
        at = list(range(1, self.strands + 1))  # at[k-1]: strand at position k
        for i, _ in self.letters:
            a, b = at[i - 1], at[i]
            at[i - 1], at[i] = b, a
            pos[a - 1], pos[b - 1] = i + 1, i
        return Permutation(tuple(pos))

    @property
    def normal_form(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        """``(k, factors)`` with ``self = Delta^k A_1 ... A_r`` left-weighted."""
        return _normal_form(self.strands, self.letters)

    def is_trivial(self) -> bool:
        if not self.letters:
            return True
        return self.normal_form == (0, ())

    def equal(self, other: BraidWord) -> bool:
        if self.strands != other.strands:
            raise ValueError(f"cannot compare B_{self.strands} with B_{other.strands}")
        if self.letters == other.letters:
            return True
        if self.underlying_permutation() != other.underlying_permutation():
            return False
        return self.normal_form == other.normal_form

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.strands == other.strands and self.equal(other)

    def __hash__(self):
        return hash((self.strands, self.normal_form))

    def canonical(self) -> BraidWord:
        """Word determined by the normal form (equal elements give equal words)."""
        power, factors = self.normal_form
        n = self.strands
        delta_word = tuple((i + 1, 1) for i in _positive_word(_delta(n))) if n > 1 else ()
        if power >= 0:
            letters = delta_word * power
        else:
            letters = tuple((i, -s) for i, s in reversed(delta_word)) * (-power)
        for f in factors:
            letters += tuple((i + 1, 1) for i in _positive_word(f))
        return BraidWord._unchecked(n, _free_reduce(letters))

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return f"BraidWord({self.strands}, {self.letters!r})"

    def __str__(self):
        if not self.letters:
            return f"id {self.strands}"
        return " . ".join(
            f"s({i},{self.strands})" + ("'" if s < 0 else "") for i, s in reversed(self.letters)
        )


def block_braiding(m: int, n: int) -> BraidWord:
    """Braid in ``B_{m+n}`` moving the first ``m`` strands over the last ``n``."""
    letters = []
    for k in range(m, 0, -1):
        letters.extend((j, 1) for j in range(k, k + n))
    return BraidWord(m + n, tuple(letters))


def cable(g: BraidWord, weights: Sequence[int]) -> BraidWord:
    """Replace the strand with bottom endpoint ``j`` by ``weights[j-1]`` parallel strands."""
    weights = list(weights)
    if len(weights) != g.strands:
        raise ValueError(f"{len(weights)} weights for a braid on {g.strands} strands")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    total = sum(weights)
    letters: list[tuple[int, int]] = []
    current = list(weights)  # weight sitting at each position
    for i, sign in g.letters:
        a, b = current[i - 1], current[i]
        offset = sum(current[: i - 1])
        if sign > 0:
            piece = block_braiding(a, b)
        else:
            piece = block_braiding(b, a).inverse()
        letters.extend((k + offset, s) for k, s in piece.letters)
        current[i - 1], current[i] = b, a
    return BraidWord(total, tuple(letters))
