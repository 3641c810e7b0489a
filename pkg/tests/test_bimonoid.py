import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidprob.bimonoid import (BimonMorphism, SpanLift, braid_gen, cospan_to_span, delta, eps,
                                eta, mu)
from braidprob.braid import BraidWord
from braidprob.monoid import MonMorphism
from braidprob.ordinal import M, U, OrdinalMap

from oracles import pullback_size
from strategies import bimon_morphisms, mon_morphisms, words


def mon(f, braid=None):
    return MonMorphism(f, braid or BraidWord.identity(f.src))


I = BimonMorphism.identity


# --- the four base cospans -------------------------------------------------------------


def test_rule_mm():
    span = cospan_to_span(mon(M), mon(M))
    assert span.mid == 4
    assert span.left.ord == M + M
    assert span.left.braid.letters == ((2, 1),)  # id 1 + s + id 1 in B_4
    assert span.right.ord == M + M
    assert span.right.braid.letters == ()


def test_rule_uu():
    span = cospan_to_span(mon(U), mon(U))
    assert span.mid == 0
    assert span.left.equal(MonMorphism.identity(0))
    assert span.right.equal(MonMorphism.identity(0))


def test_rule_mu_and_um():
    span = cospan_to_span(mon(M), mon(U))
    assert span.mid == 0 and span.left.ord == U + U and span.right.tgt == 0
    span = cospan_to_span(mon(U), mon(M))
    assert span.mid == 0 and span.right.ord == U + U and span.left.tgt == 0


def test_pure_braids_lift_through_the_opposite_embedding():
    g = BraidWord.from_indices(3, (1, 2, -1))
    h = BraidWord.from_indices(3, (2, 2))
    span = cospan_to_span(MonMorphism.from_braid(g), MonMorphism.from_braid(h))
    assert span.left.ord.is_identity and span.right.ord.is_identity
    assert span.left.braid == g.reverse()
    assert span.right.braid == h.reverse()
    # the span stands for h^op . g
    assert span.to_bimon().braid == h.reverse().compose(g)


def test_identity_leg():
    beta = MonMorphism(M + OrdinalMap.identity(1), BraidWord.generator(1, 3))
    span = cospan_to_span(MonMorphism.identity(2), beta)
    assert span.mid == 3
    # up to moving the braid across the middle the span is (beta, id)
    assert span.normalized().right.equal(MonMorphism.identity(3))
    assert span.normalized().left.equal(beta)
    assert span == SpanLift(beta, MonMorphism.identity(3))


def test_mixed_cospan():
    phi = OrdinalMap.identity(1) + M   # 3 -> 2
    g = BraidWord.generator(1, 2)
    span = cospan_to_span(mon(phi), MonMorphism.from_braid(g)).normalized()
    assert span.mid == 3
    assert span.left.ord.is_identity
    assert span.right.braid.letters == ()
    assert span.right.ord == M + OrdinalMap.identity(1)


def test_target_mismatch():
    with pytest.raises(ValueError):
        cospan_to_span(mon(M), mon(OrdinalMap.identity(2)))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_span_agrees_with_pullback(data):
    alpha = data.draw(mon_morphisms(max_size=3, max_length=2))
    beta = data.draw(mon_morphisms(m=alpha.tgt, max_size=3, max_length=2))
    span = cospan_to_span(alpha, beta)
    assert span.mid == pullback_size(alpha.set_map(), beta.set_map(), alpha.tgt)
    assert span.agrees_with_pullback(alpha, beta)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_factorization_independence(data):
    alpha = data.draw(mon_morphisms(max_size=4, max_length=2))
    beta = data.draw(mon_morphisms(m=alpha.tgt, max_size=4, max_length=2))
    assert cospan_to_span(alpha, beta, "left") == cospan_to_span(alpha, beta, "right")


def test_span_normalization_keeps_the_morphism():
    span = cospan_to_span(mon(M, BraidWord.generator(1, 2)), mon(M))
    assert span.normalized() == span
    assert span.normalized().right.braid.letters == ()
    with pytest.raises(ValueError):
        SpanLift(MonMorphism.identity(1), MonMorphism.identity(2))


# --- the category Q -----------------------------------------------------------------------


def test_generators():
    assert mu().mid == 2 and (mu().src, mu().tgt) == (2, 1)
    assert delta().mid == 2 and (delta().src, delta().tgt) == (1, 2)
    assert (eta().src, eta().tgt) == (0, 1)
    assert (eps().src, eps().tgt) == (1, 0)
    assert braid_gen(2, 1).braid == BraidWord.from_indices(3, (2, 1))
    assert mu().is_monoidal and not delta().is_monoidal


def test_delta_after_mu_is_the_mixed_law():
    f = delta() @ mu()
    assert f.mid == 4
    assert f.psi == M + M and f.phi == M + M
    assert f.braid == BraidWord.generator(2, 4)
    assert f.equal((mu() + mu()) @ (I(1) + braid_gen(1, 1) + I(1)) @ (delta() + delta()))


def test_counit_and_unit_laws():
    assert (eps() @ mu()).mid == 0
    assert (eps() @ mu()).equal(eps() + eps())
    assert (delta() @ eta()).equal(eta() + eta())
    assert (eps() @ eta()).equal(I(0))


def test_braid_is_not_absorbed():
    assert not (mu() @ braid_gen(1, 1)).equal(mu())
    assert not (braid_gen(1, 1) @ delta()).equal(delta())


def test_compose_type_errors():
    with pytest.raises(ValueError):
        mu() @ mu()
    with pytest.raises(ValueError):
        mu().equal(delta())
    with pytest.raises(ValueError):
        BimonMorphism(M, BraidWord.identity(3), M)


@given(bimon_morphisms())
def test_identities(f):
    assert (I(f.tgt) @ f).equal(f)
    assert (f @ I(f.src)).equal(f)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_associativity(data):
    h = data.draw(bimon_morphisms())
    g = data.draw(bimon_morphisms(p=h.tgt))
    f = data.draw(bimon_morphisms(p=g.tgt))
    assert (f @ (g @ h)).equal((f @ g) @ h)


@settings(deadline=None)
@given(st.data())
def test_monoidal_morphisms_compose_as_in_the_monoid_prob(data):
    g = data.draw(mon_morphisms())
    f = data.draw(mon_morphisms(n=g.tgt))
    assert (BimonMorphism.from_mon(f) @ BimonMorphism.from_mon(g)).equal(BimonMorphism.from_mon(f @ g))


@settings(deadline=None)
@given(st.data())
def test_comonoidal_morphisms_compose_contravariantly(data):
    g = data.draw(mon_morphisms())
    f = data.draw(mon_morphisms(n=g.tgt))
    lhs = BimonMorphism.from_comon(g) @ BimonMorphism.from_comon(f)
    assert lhs.equal(BimonMorphism.from_comon(f @ g))


@settings(deadline=None)
@given(st.data())
def test_interchange(data):
    g1, g2 = data.draw(bimon_morphisms(max_size=2)), data.draw(bimon_morphisms(max_size=2))
    f1, f2 = data.draw(bimon_morphisms(p=g1.tgt, max_size=2)), data.draw(bimon_morphisms(p=g2.tgt, max_size=2))
    assert ((f1 + f2) @ (g1 + g2)).equal((f1 @ g1) + (f2 @ g2))


@given(words(max_strands=4, max_length=4))
def test_pure_braids_form_a_subgroup(w):
    b = BimonMorphism.from_mon(MonMorphism.from_braid(w))
    inv = BimonMorphism.from_mon(MonMorphism.from_braid(w.inverse()))
    assert (b @ inv).equal(I(w.strands))


def test_braiding_natural_in_generators():
    for g in (mu(), eta(), delta(), eps()):
        assert (braid_gen(g.tgt, 1) @ (g + I(1))).equal((I(1) + g) @ braid_gen(g.src, 1))
        assert (braid_gen(1, g.tgt) @ (I(1) + g)).equal((g + I(1)) @ braid_gen(1, g.src))
