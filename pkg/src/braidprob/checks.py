"""
Check suites run by ``braidprob check``.

Every suite returns a :class:`~braidprob.report.Report`.  Enumerations are
exhaustive over the stated grid; randomized parts draw from
``random.Random(seed)`` so a fixed seed reproduces the output exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import algebra as alg
from .bimonoid import (BimonMorphism, braid_gen, cospan_to_span, delta, eps, eta, mu)
from .braid import BraidWord, block_braiding
from .crossed import commutes_on_sets, distribute
from .monoid import MonMorphism, braiding
from .ordinal import M, U, OrdinalMap, all_maps
from .report import Report
from .samples import all_mon, all_words, distinct_braids, random_bimon, random_word

DEFAULT_SEED = 1729

SUITES = ("braid", "crossed-law", "monoid-prob", "bimonoid-prob", "yang-baxter", "bimonoid-axioms")


@dataclass
class Options:
    max_strands: int | None = None
    max_length: int | None = None
    cases: int | None = None
    seed: int = DEFAULT_SEED
    algebras: list = field(default_factory=list)


# --- free-group oracle for braid equality --------------------------------------


def _reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _substitute(images, word):
    out = []
    for x in word:
        out.extend(images[x - 1] if x > 0 else [-y for y in reversed(images[-x - 1])])
    return _reduce(out)


def artin_action(w: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Images of the free generators ``x_1..x_n`` under the Artin action of ``w``.

    The action is faithful, so two words are equal braids iff the images agree.
    """
    n = w.strands
    images = tuple((j,) for j in range(1, n + 1))
    for i, sign in w.letters:
        step = [(j,) for j in range(1, n + 1)]
        if sign > 0:
            step[i - 1], step[i] = (i, i + 1, -i), (i,)
        else:
            step[i - 1], step[i] = (i + 1,), (-(i + 1), i, i + 1)
        images = tuple(_substitute(step, img) for img in images)
    return images


# --- braid ---------------------------------------------------------------------------


def _relator(rng: random.Random, n: int) -> tuple:
    i = rng.randint(1, n - 1)
    kinds = ["cancel"] + (["braid"] if n >= 3 else []) + (["commute"] if n >= 4 else [])
    kind = rng.choice(kinds)
    if kind == "cancel":
        s = rng.choice((1, -1))
        return ((i, s), (i, -s))
    if kind == "braid":
        i = rng.randint(1, n - 2)
        return ((i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1))
    i, j = rng.choice([(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) >= 2])
    return ((i, 1), (j, 1), (i, -1), (j, -1))


def braid_suite(opts: Options) -> Report:
    n_max = opts.max_strands or 5
    length = opts.max_length or 10
    cases = opts.cases or 500
    rng = random.Random(opts.seed)
    report = Report()

    ok, count = True, 0
    for n in range(2, n_max + 1):
        for i in range(1, n):
            s = lambda *idx: BraidWord.from_indices(n, idx)  # noqa: E731
            count += 1
            ok &= BraidWord(n, ((i, 1), (i, -1))).is_trivial()
            if i + 1 < n:
                count += 1
                ok &= s(i, i + 1, i) == s(i + 1, i, i + 1)
            for j in range(i + 2, n):
                count += 1
                ok &= s(i, j) == s(j, i)
    report.add("Artin relations hold", ok, cases=count)
    report.add("s(1,2) differs from s(1,2)'",
               not BraidWord.generator(1, 2).equal(BraidWord.generator(1, 2, inverse=True)))

    false_neg = false_pos = oracle = perm = inverse = 0
    witness = {}
    for k in range(cases):
        n = rng.randint(2, n_max)
        w = random_word(rng, n, length)
        cut = rng.randint(0, len(w.letters))
        relator = _relator(rng, n)
        same = BraidWord(n, w.letters[:cut] + relator + w.letters[cut:])
        j, s = rng.randint(1, n - 1), rng.choice((1, -1))
        other = BraidWord(n, w.letters[:cut] + ((j, s), (j, s)) + w.letters[cut:])
        if not w.equal(same):
            false_neg += 1
            witness.setdefault("false negative", [str(w), str(same)])
        if w.equal(other):
            false_pos += 1
            witness.setdefault("false positive", [str(w), str(other)])
        if (artin_action(w) == artin_action(same)) != w.equal(same) or \
                (artin_action(w) == artin_action(other)) != w.equal(other):
            oracle += 1
            witness.setdefault("free-group action disagrees", str(w))
        if w.underlying_permutation() != same.underlying_permutation() or \
                w.underlying_permutation() != other.underlying_permutation():
            perm += 1
            witness.setdefault("permutation filter", str(w))
        if not w.compose(w.inverse()).is_trivial() or not w.inverse().compose(w).is_trivial():
            inverse += 1
            witness.setdefault("inverse law", str(w))
    report.add("relator insertion keeps the braid (no false negatives)", false_neg == 0,
               witness.get("false negative"), cases)
    report.add("inserting a squared generator changes the braid (no false positives)", false_pos == 0,
               witness.get("false positive"), cases)
    report.add("agrees with the free-group action", oracle == 0,
               witness.get("free-group action disagrees"), 2 * cases)
    report.add("permutation filter consistent", perm == 0, witness.get("permutation filter"), 2 * cases)
    report.add("w . w' and w' . w are trivial", inverse == 0, witness.get("inverse law"), cases)
    return report


# --- crossed law -------------------------------------------------------------------


def crossed_suite(opts: Options) -> Report:
    """Set-level square and both multiplicativity equations for ``distribute``.

    Sources range up to ``max_strands`` and targets up to one less.
    """
    n_max = opts.max_strands or 4
    length = opts.max_length or 3
    report = Report()
    counts = dict.fromkeys(("square", "defined", "unit", "braids", "maps"), 0)
    bad: dict = {}

    def fail(key, *items):
        bad.setdefault(key, [str(x) for x in items])

    for m in range(0, n_max):
        words = list(all_words(m, length))
        reps = distinct_braids(m, length)
        for n in range(0, n_max + 1):
            for psi in all_maps(n, m):
                counts["unit"] += 1
                r = distribute(psi, BraidWord.identity(m))
                if r.ord != psi or not r.braid.is_trivial():
                    fail("unit", psi)
                for h in words:
                    r = distribute(psi, h)
                    counts["square"] += 1
                    if not commutes_on_sets(psi, h, r):
                        fail("square", psi, h)
                    counts["defined"] += 1
                    c = distribute(psi, h.canonical())
                    if c.ord != r.ord or c.braid != r.braid:
                        fail("defined", psi, h)
                    # h o (psi o chi) for every chi: k -> n
                    for k in range(0, n_max + 1):
                        for chi in all_maps(k, n):
                            counts["maps"] += 1
                            lhs = distribute(psi.compose(chi), h)
                            r2 = distribute(chi, r.braid)
                            if lhs.ord != r.ord.compose(r2.ord) or lhs.braid != r2.braid:
                                fail("maps", psi, chi, h)
                for h1, h2 in itertools.product(reps, repeat=2):
                    counts["braids"] += 1
                    lhs = distribute(psi, h2.compose(h1).canonical())
                    r1 = distribute(psi, h1)
                    r2 = distribute(r1.ord, h2)
                    if lhs.ord != r2.ord or lhs.braid != r2.braid.compose(r1.braid):
                        fail("braids", psi, h1, h2)
        for h in words:
            counts["unit"] += 1
            r = distribute(OrdinalMap.identity(m), h)
            if not r.ord.is_identity or r.braid != h:
                fail("unit", h)

    report.add("set-level square commutes", "square" not in bad, bad.get("square"), counts["square"])
    report.add("equal braids distribute equally", "defined" not in bad, bad.get("defined"), counts["defined"])
    report.add("identity braid and identity map act trivially", "unit" not in bad, bad.get("unit"),
               counts["unit"])
    report.add("multiplicative in the braid", "braids" not in bad, bad.get("braids"), counts["braids"])
    report.add("multiplicative in the order map", "maps" not in bad, bad.get("maps"), counts["maps"])
    return report


# --- monoid PROB ---------------------------------------------------------------------


def _intern(values, table: dict) -> list[int]:
    return [table.setdefault(v, len(table)) for v in values]


def _associativity(fs, gs, hs) -> tuple[bool, object]:
    """``f o (g o h) == (f o g) o h`` for every triple, with shared subresults memoized."""
    if not (fs and gs and hs):
        return True, None
    inner, outer = {}, {}
    gh = np.array([_intern([g.compose(h) for h in hs], inner) for g in gs])
    fg = np.array([_intern([f.compose(g) for g in gs], outer) for f in fs])
    results: dict = {}
    inner_vals, outer_vals = list(inner), list(outer)
    left = np.array([_intern([f.compose(x) for x in inner_vals], results) for f in fs])
    right = np.array([_intern([y.compose(h) for h in hs], results) for y in outer_vals])
    lhs = left[:, gh]             # [f, g, h] -> id of f o (g o h)
    rhs = right[fg, :]            # [f, g, h] -> id of (f o g) o h
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j, k = bad[0]
        return False, [str(fs[i]), str(gs[j]), str(hs[k])]
    return True, None


def monoid_suite(opts: Options) -> Report:
    """Category, braiding naturality and hexagon laws on every morphism with objects and words bounded."""
    n_max = opts.max_strands or 3
    length = opts.max_length or 2
    report = Report()
    objects = range(n_max + 1)
    hom = {(a, b): list(all_mon(a, b, length, distinct=False)) for a in objects for b in objects}

    ok, witness, count = True, None, 0
    for (a, b), fs in hom.items():
        for f in fs:
            count += 1
            if not (MonMorphism.identity(b).compose(f).equal(f) and f.compose(MonMorphism.identity(a)).equal(f)):
                ok, witness = False, witness or str(f)
    report.add("identity laws", ok, witness, count)

    ok, witness, count = True, None, 0
    for a, b, c, d in itertools.product(objects, repeat=4):
        fs, gs, hs = hom[c, d], hom[b, c], hom[a, b]
        count += len(fs) * len(gs) * len(hs)
        good, w = _associativity(fs, gs, hs)
        if not good:
            ok, witness = False, witness or w
    report.add("associativity", ok, witness, count)

    ok, witness, count = True, None, 0
    for (a, a2), fs in hom.items():
        for f in fs:
            for b in objects:
                idb = MonMorphism.identity(b)
                count += 2
                if not braiding(a2, b).compose(f.tensor(idb)).equal(idb.tensor(f).compose(braiding(a, b))):
                    ok, witness = False, witness or [str(f), b]
                if not braiding(b, a2).compose(idb.tensor(f)).equal(f.tensor(idb).compose(braiding(b, a))):
                    ok, witness = False, witness or [b, str(f)]
    report.add("braiding is natural in each variable", ok, witness, count)

    ok, witness, count = True, None, 0
    for a, b, c in itertools.product(objects, repeat=3):
        ida, idb, idc = (MonMorphism.identity(x) for x in (a, b, c))
        count += 2
        if not braiding(a, b + c).equal(idb.tensor(braiding(a, c)).compose(braiding(a, b).tensor(idc))):
            ok, witness = False, witness or [a, b, c]
        if not braiding(a + b, c).equal(braiding(a, c).tensor(idb).compose(ida.tensor(braiding(b, c)))):
            ok, witness = False, witness or [a, b, c]
    report.add("hexagon identities", ok, witness, count)

    rng = random.Random(opts.seed)
    cases = opts.cases or 200
    ok, witness = True, None
    composable = [(a, b, c) for a, b, c in itertools.product(objects, repeat=3) if hom[a, b] and hom[b, c]]
    for _ in range(cases):
        (a, b, c), (a2, b2, c2) = rng.choice(composable), rng.choice(composable)
        f, g = rng.choice(hom[b, c]), rng.choice(hom[a, b])
        f2, g2 = rng.choice(hom[b2, c2]), rng.choice(hom[a2, b2])
        if not f.tensor(f2).compose(g.tensor(g2)).equal(f.compose(g).tensor(f2.compose(g2))):
            ok, witness = False, witness or [str(f), str(g), str(f2), str(g2)]
    report.add("interchange law (random)", ok, witness, cases)
    return report


# --- bimonoid PROB -------------------------------------------------------------------


def _mon(f: OrdinalMap, braid: BraidWord | None = None) -> MonMorphism:
    return MonMorphism(f, braid or BraidWord.identity(f.src))


def generator_rules() -> Report:
    """The four cospans of multiplications and units against each other."""
    report = Report()
    identity0 = MonMorphism.identity(0)
    span = cospan_to_span(_mon(M), _mon(M))
    report.add("(m, m) lifts through 4 with legs ((m+m) . s(2,4), m+m)",
               span.mid == 4 and span.left.ord == M + M and span.left.braid == BraidWord.generator(2, 4)
               and span.right.ord == M + M and span.right.braid.is_trivial()
               and span.left.braid.letters == ((2, 1),), str(span))
    span = cospan_to_span(_mon(U), _mon(U))
    report.add("(u, u) lifts through 0 with identity legs",
               span.mid == 0 and span.left.equal(identity0) and span.right.equal(identity0), str(span))
    span = cospan_to_span(_mon(M), _mon(U))
    report.add("(m, u) lifts through 0 with legs (u+u, id 0)",
               span.mid == 0 and span.left.equal(_mon(U + U)) and span.right.equal(identity0), str(span))
    span = cospan_to_span(_mon(U), _mon(M))
    report.add("(u, m) lifts through 0 with legs (id 0, u+u)",
               span.mid == 0 and span.left.equal(identity0) and span.right.equal(_mon(U + U)), str(span))
    return report


def _atoms(n_max: int) -> list[BimonMorphism]:
    gens = [mu(), eta(), delta(), eps(), braid_gen(1, 1),
            BimonMorphism.from_mon(MonMorphism.from_braid(BraidWord.generator(1, 2, inverse=True)))]
    out = [BimonMorphism.identity(k) for k in range(n_max + 1)]
    for g in gens:
        for i in range(n_max + 1):
            for j in range(n_max + 1 - i):
                if i + j + max(g.src, g.tgt) <= n_max:
                    out.append(BimonMorphism.identity(i).tensor(g).tensor(BimonMorphism.identity(j)))
    return out


def bimonoid_suite(opts: Options) -> Report:
    n_max = opts.max_strands or 3
    length = opts.max_length or 2
    cases = opts.cases or 200
    rng = random.Random(opts.seed)
    report = generator_rules()

    objects = range(n_max + 1)
    hom = {(a, b): list(all_mon(a, b, length, distinct=False)) for a in objects for b in objects}
    ok_pb = ok_conf = True
    wit_pb = wit_conf = None
    count = 0
    for n in objects:
        legs = [f for s in objects for f in hom[s, n]]
        for alpha, beta in itertools.product(legs, repeat=2):
            count += 1
            span = cospan_to_span(alpha, beta)
            if not span.agrees_with_pullback(alpha, beta):
                ok_pb, wit_pb = False, wit_pb or [str(alpha), str(beta)]
            if cospan_to_span(alpha, beta, nesting="right") != span:
                ok_conf, wit_conf = False, wit_conf or [str(alpha), str(beta)]
    report.add("span lifts agree with the pullback of finite sets", ok_pb, wit_pb, count)
    report.add("left- and right-nested factorizations give equal spans", ok_conf, wit_conf, count)

    ident = lambda k: BimonMorphism.identity(k)  # noqa: E731
    b11 = braid_gen(1, 1)
    laws = [
        ("d . m = (m + m) . (id 1 + b(1,1) + id 1) . (d + d)", delta() @ mu(),
         (mu() + mu()) @ (ident(1) + b11 + ident(1)) @ (delta() + delta())),
        ("e . m = e + e", eps() @ mu(), eps() + eps()),
        ("d . u = u + u", delta() @ eta(), eta() + eta()),
        ("e . u = id 0", eps() @ eta(), ident(0)),
        ("m . (m + id 1) = m . (id 1 + m)", mu() @ (mu() + ident(1)), mu() @ (ident(1) + mu())),
        ("(d + id 1) . d = (id 1 + d) . d", (delta() + ident(1)) @ delta(), (ident(1) + delta()) @ delta()),
        ("(e + id 1) . d = id 1", (eps() + ident(1)) @ delta(), ident(1)),
        ("(id 1 + e) . d = id 1", (ident(1) + eps()) @ delta(), ident(1)),
        ("m . (u + id 1) = id 1", mu() @ (eta() + ident(1)), ident(1)),
    ]
    for g in (mu(), eta(), delta(), eps()):
        a, b = g.src, g.tgt
        laws.append((f"braiding natural in {g.src}->{g.tgt} generator (left)",
                     braid_gen(b, 1) @ (g + ident(1)), (ident(1) + g) @ braid_gen(a, 1)))
        laws.append((f"braiding natural in {g.src}->{g.tgt} generator (right)",
                     braid_gen(1, b) @ (ident(1) + g), (g + ident(1)) @ braid_gen(1, a)))
    for name, lhs, rhs in laws:
        report.add(name, lhs.equal(rhs), [str(lhs), str(rhs)])

    atoms = _atoms(n_max)
    ok, witness, count = True, None, 0
    for f in atoms:
        count += 2
        if not (ident(f.tgt) @ f).equal(f) or not (f @ ident(f.src)).equal(f):
            ok, witness = False, witness or str(f)
    for _ in range(cases):
        p, q = rng.randint(0, n_max), rng.randint(0, n_max)
        f = random_bimon(rng, p, q, max_mid=n_max, max_length=length)
        count += 2
        if not (ident(q) @ f).equal(f) or not (f @ ident(p)).equal(f):
            ok, witness = False, witness or str(f)
    report.add("identity laws", ok, witness, count)

    ok, witness, count = True, None, 0
    by_src: dict = {}
    for g in atoms:
        by_src.setdefault(g.src, []).append(g)
    for h in atoms:
        for g in by_src.get(h.tgt, []):
            gh = g @ h
            for f in by_src.get(g.tgt, []):
                count += 1
                if not (f @ gh).equal((f @ g) @ h):
                    ok, witness = False, witness or [str(f), str(g), str(h)]
    report.add("associativity on generator placements", ok, witness, count)

    ok, witness = True, None
    for _ in range(cases):
        p, q, r, s = (rng.randint(0, n_max) for _ in range(4))
        h = random_bimon(rng, p, q, max_mid=n_max, max_length=length)
        g = random_bimon(rng, q, r, max_mid=n_max, max_length=length)
        f = random_bimon(rng, r, s, max_mid=n_max, max_length=length)
        if not (f @ (g @ h)).equal((f @ g) @ h):
            ok, witness = False, witness or [str(f), str(g), str(h)]
    report.add("associativity (random)", ok, witness, cases)
    return report


# --- algebra suites -------------------------------------------------------------------


def _explicit_braid_matrix(A: alg.YBAlgebraData, w: BraidWord) -> np.ndarray:
    fld, d, n = A.field, A.dimension, w.strands
    out = fld.identity(d ** n)
    for i, sign in w.letters:
        R = A.R if sign > 0 else A.R_inverse
        layer = alg.kron(fld, fld.identity(d ** (i - 1)), R, fld.identity(d ** (n - i - 1)))
        out = alg.matmul(fld, layer, out)
    return out


def is_symmetric(A: alg.YBAlgebraData) -> bool:
    """Whether the braiding squares to the identity."""
    return bool(np.array_equal(alg.evaluate(BraidWord.from_indices(2, (1, 1)), A), A.identity(2)))


def yang_baxter_suite(A: alg.YBAlgebraData, n_max: int = 3) -> Report:
    report = Report()
    alg._require(A, "R")
    report.add("Yang-Baxter equation", alg.check_ybe(A.R, A.dimension, A.field))
    fld = A.field
    report.add("R times its inverse is the identity",
               np.array_equal(alg.matmul(fld, A.R, A.R_inverse), A.identity(2)))
    ok, witness, count = True, None, 0
    for m in range(n_max + 1):
        for n in range(n_max + 1 - m):
            w = block_braiding(m, n)
            count += 1
            if not np.array_equal(alg.evaluate(braiding(m, n), A), _explicit_braid_matrix(A, w)):
                ok, witness = False, witness or [m, n]
    report.add("block braidings evaluate to the product of R layers", ok, witness, count)
    return report


def bimonoid_axioms_suite(A: alg.YBAlgebraData, cases: int = 50, seed: int = DEFAULT_SEED,
                          n_max: int = 3) -> Report:
    report = alg.check_bimonoid(A)
    fld, I = A.field, A.identity()
    lhs = alg.evaluate(delta() @ mu(), A)
    rhs = alg.matmul(fld, alg.kron(fld, A.mul, A.mul),
                     alg.matmul(fld, alg.kron(fld, I, A.R, I), alg.kron(fld, A.comul, A.comul)))
    report.add("composite d . m evaluates to (m (x) m)(I (x) R (x) I)(d (x) d)", np.array_equal(lhs, rhs))
    report.extend(alg.check_functoriality(A, cases=cases, seed=seed, max_object=n_max))
    return report


# --- dispatch -------------------------------------------------------------------------


def builtin_algebras() -> list[alg.YBAlgebraData]:
    return [alg.super_line(), alg.braided_line()]


def run_suite(name: str, opts: Options) -> dict:
    """Run one suite; returns ``{"suite", "passed", "laws", ...}``."""
    if name in ("braid", "crossed-law", "monoid-prob", "bimonoid-prob"):
        fn = {"braid": braid_suite, "crossed-law": crossed_suite,
              "monoid-prob": monoid_suite, "bimonoid-prob": bimonoid_suite}[name]
        report = fn(opts)
        return {"suite": name, "passed": report.passed, "report": report}
    if name not in ("yang-baxter", "bimonoid-axioms"):
        raise ValueError(f"unknown suite {name!r}")
    report = Report()
    symmetric = {}
    for A in opts.algebras or builtin_algebras():
        if name == "yang-baxter":
            sub = yang_baxter_suite(A, n_max=opts.max_strands or 3)
        else:
            sub = bimonoid_axioms_suite(A, cases=opts.cases or 50, seed=opts.seed,
                                        n_max=opts.max_strands or 3)
        report.extend(sub, prefix=f"{A}: ")
        symmetric[str(A)] = is_symmetric(A)
    return {"suite": name, "passed": report.passed, "report": report, "symmetric": symmetric}
