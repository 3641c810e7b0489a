"""
Pushing a braid past an order-preserving map.

For ``psi: n -> m`` and ``h`` in ``B_m`` the composite ``h o psi`` is rewritten
as ``ord o braid`` with ``ord: n -> m`` order-preserving and ``braid`` in
``B_n``.  The fibers of ``psi`` are carried along by ``h`` (so ``ord`` lists
them in the order ``h`` leaves them) and ``braid`` is ``h`` with strand ``j``
thickened into ``|psi^-1(j)|`` parallel strands.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

from .braid import BraidWord, cable
from .ordinal import OrdinalMap


class CrossedFactorization(NamedTuple):
    ord: OrdinalMap
    braid: BraidWord


@functools.lru_cache(maxsize=1 << 16)
def _distribute(psi: OrdinalMap, letters: tuple, strands: int):
    h = BraidWord(strands, letters)
    fibers = psi.fibers()
    perm = h.underlying_permutation()
    moved = [0] * psi.tgt
    for j, k in enumerate(fibers, start=1):
        moved[perm(j) - 1] = k
    return CrossedFactorization(OrdinalMap.from_fibers(moved), cable(h, fibers))


def distribute(psi: OrdinalMap, h: BraidWord) -> CrossedFactorization:
    """Return ``(ord, braid)`` with ``h o psi = ord o braid``."""
    if h.strands != psi.tgt:
        raise ValueError(f"braid on {h.strands} strands after a map into {psi.tgt}")
    return _distribute(psi, h.letters, h.strands)


def commutes_on_sets(psi: OrdinalMap, h: BraidWord, result: CrossedFactorization) -> bool:
    """Set-level square ``perm(h) o psi == ord o perm(braid)``."""
    ph = h.underlying_permutation()
    pb = result.braid.underlying_permutation()
    return all(ph(psi(x)) == result.ord(pb(x)) for x in range(1, psi.src + 1))
