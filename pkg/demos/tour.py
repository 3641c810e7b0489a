"""A short walk through the package: braids, the crossed law, spans and matrices."""

from braidprob import algebra as alg
from braidprob.bimonoid import cospan_to_span, delta, mu
from braidprob.braid import BraidWord, block_braiding
from braidprob.crossed import distribute
from braidprob.expr import elaborate, from_morphism, parse, to_text
from braidprob.monoid import MonMorphism
from braidprob.ordinal import M, OrdinalMap

print("braid relations")
s = BraidWord.from_indices
print("  s1 s2 s1 == s2 s1 s2:", s(3, (1, 2, 1)) == s(3, (2, 1, 2)))
print("  s1 == s1^-1:", s(2, (1,)) == s(2, (-1,)))

print("\npushing a crossing past id 1 + m")
psi = OrdinalMap.identity(1) + M
pushed = distribute(psi, BraidWord.generator(1, 2))
print("  new map:", pushed.ord, " cabled braid:", pushed.braid,
      " equals b(1,2):", pushed.braid == block_braiding(1, 2))

print("\nthe cospan (m, m) as a span")
span = cospan_to_span(MonMorphism.from_ord(M), MonMorphism.from_ord(M))
print(f"  through {span.mid}: left {span.left.ord} with braid {span.left.braid}, right {span.right.ord}")

print("\nnormal form of d . m")
f = elaborate(parse("d . m"))
print("  ", to_text(from_morphism(f)))
print("  same as delta after mu:", f.equal(delta() @ mu()))

print("\nmatrices in the braided line over F_7")
line = alg.braided_line()
print("  comultiplication of x^2:", [int(v) for v in line.comul[:, 2]])
print("  bimonoid laws hold:", alg.check_bimonoid(line).passed)
square = alg.evaluate(s(2, (1, 1)), line)
print("  braiding squares to the identity:", (square == line.identity(2)).all())
