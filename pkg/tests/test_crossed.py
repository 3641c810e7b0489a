import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidprob.braid import BraidWord, block_braiding, cable
from braidprob.crossed import commutes_on_sets, distribute
from braidprob.ordinal import M, U, OrdinalMap

from oracles import compose_maps, strand_permutation
from strategies import ordinal_maps, words


def test_example_moves_fibers_and_cables():
    psi = OrdinalMap.identity(1) + M  # fibers (1, 2)
    r = distribute(psi, BraidWord.generator(1, 2))
    assert r.ord == M + OrdinalMap.identity(1)
    assert r.braid == block_braiding(1, 2)
    assert commutes_on_sets(psi, BraidWord.generator(1, 2), r)


def test_units_and_empty_fibers():
    r = distribute(U + OrdinalMap.identity(1), BraidWord.generator(1, 2, inverse=True))
    assert r.ord == OrdinalMap.identity(1) + U
    assert r.braid.strands == 1 and r.braid.is_trivial()


def test_arity_mismatch():
    with pytest.raises(ValueError):
        distribute(M, BraidWord.generator(1, 2))


@given(st.data())
def test_set_level_square(data):
    psi = data.draw(ordinal_maps())
    h = data.draw(words(psi.tgt, max_length=5))
    r = distribute(psi, h)
    lhs = compose_maps(strand_permutation(h.strands, h.letters), psi.images)
    rhs = compose_maps(r.ord.images, strand_permutation(r.braid.strands, r.braid.letters))
    assert lhs == rhs
    assert r.braid == cable(h, psi.fibers())


@given(st.data())
def test_multiplicative_in_the_braid(data):
    psi = data.draw(ordinal_maps())
    h1 = data.draw(words(psi.tgt, max_length=3))
    h2 = data.draw(words(psi.tgt, max_length=3))
    r1 = distribute(psi, h1)
    r2 = distribute(r1.ord, h2)
    r = distribute(psi, h2.compose(h1).canonical())
    assert r.ord == r2.ord
    assert r.braid == r2.braid.compose(r1.braid)


@given(st.data())
def test_multiplicative_in_the_map(data):
    psi = data.draw(ordinal_maps())
    chi = data.draw(ordinal_maps(m=psi.src))
    h = data.draw(words(psi.tgt, max_length=4))
    r1 = distribute(psi, h)
    r2 = distribute(chi, r1.braid)
    r = distribute(psi.compose(chi), h)
    assert r.ord == r1.ord.compose(r2.ord)
    assert r.braid == r2.braid


@given(st.data())
def test_units(data):
    psi = data.draw(ordinal_maps())
    r = distribute(psi, BraidWord.identity(psi.tgt))
    assert r.ord == psi and r.braid.is_trivial()
    h = data.draw(words(psi.tgt))
    r = distribute(OrdinalMap.identity(psi.tgt), h)
    assert r.ord.is_identity and r.braid == h


@given(st.data())
def test_tensor_compatibility(data):
    psi1, psi2 = data.draw(ordinal_maps(max_size=3)), data.draw(ordinal_maps(max_size=3))
    h1, h2 = data.draw(words(psi1.tgt, max_length=3)), data.draw(words(psi2.tgt, max_length=3))
    a, b = distribute(psi1, h1), distribute(psi2, h2)
    r = distribute(psi1.tensor(psi2), h1.tensor(h2))
    assert r.ord == a.ord.tensor(b.ord)
    assert r.braid == a.braid.tensor(b.braid)
