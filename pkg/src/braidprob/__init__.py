"""Braided PROBs for monoids and bimonoids: normal forms, composition and matrix semantics."""

from .bimonoid import (BimonMorphism, SpanLift, braid_gen, cospan_to_span, delta, eps, eta,
                       mu)
from .braid import BraidWord, Permutation, block_braiding, cable
from .crossed import CrossedFactorization, distribute
from .monoid import MonMorphism, OpMorphism, braiding
from .ordinal import M, U, OrdinalMap, factorize, pullback

__all__ = [
    "BimonMorphism", "BraidWord", "CrossedFactorization", "M", "MonMorphism", "OpMorphism",
    "OrdinalMap", "Permutation", "SpanLift", "U", "block_braiding", "braid_gen", "braiding",
    "cable", "cospan_to_span", "delta", "distribute", "eps", "eta", "factorize", "mu", "pullback",
]
