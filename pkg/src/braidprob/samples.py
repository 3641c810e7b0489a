"""Enumeration and seeded random sampling of small morphisms."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .bimonoid import BimonMorphism
from .braid import BraidWord
from .monoid import MonMorphism
from .ordinal import OrdinalMap, all_maps


def all_words(n: int, max_length: int) -> Iterator[BraidWord]:
    """Every word in ``B_n`` with at most ``max_length`` letters."""
    alphabet = [(i, s) for i in range(1, n) for s in (1, -1)]
    yield BraidWord(n)
    if not alphabet:
        return
    for length in range(1, max_length + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield BraidWord(n, letters)


def distinct_braids(n: int, max_length: int) -> list[BraidWord]:
    """One representative word per group element reachable with ``max_length`` letters."""
    seen = {}
    for w in all_words(n, max_length):
        seen.setdefault(w, w)
    return list(seen.values())


def all_mon(n: int, m: int, max_length: int, distinct: bool = True) -> Iterator[MonMorphism]:
    words = distinct_braids(n, max_length) if distinct else list(all_words(n, max_length))
    for f in all_maps(n, m):
        for g in words:
            yield MonMorphism(f, g)


def random_word(rng: random.Random, n: int, max_length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    length = rng.randint(0, max_length)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)))


def random_map(rng: random.Random, n: int, m: int) -> OrdinalMap:
    if m == 0:
        if n:
            raise ValueError("no map from a non-empty ordinal to 0")
        return OrdinalMap(0, 0, ())
    return OrdinalMap(n, m, tuple(sorted(rng.randint(1, m) for _ in range(n))))


def random_mon(rng: random.Random, n: int, m: int, max_length: int) -> MonMorphism:
    return MonMorphism(random_map(rng, n, m), random_word(rng, n, max_length))


def random_bimon(rng: random.Random, p: int, q: int, max_mid: int = 3,
                 max_length: int = 3) -> BimonMorphism:
    # a non-empty middle needs somewhere to map to on both sides
    s = 0 if p == 0 or q == 0 else rng.randint(0, max_mid)
    return BimonMorphism(random_map(rng, s, p), random_word(rng, s, max_length),
                         random_map(rng, s, q))
