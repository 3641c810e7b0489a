"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line with its runtime."""

import io
import json
import subprocess
import sys
import time

import jsonschema
import numpy as np
import pytest

from braidprob import algebra as alg
from braidprob.bimonoid import delta, mu
from braidprob.braid import BraidWord
from braidprob.checks import Options, bimonoid_suite, braid_suite, crossed_suite, generator_rules, monoid_suite
from braidprob.cli import OUTPUT_SCHEMA, main

from oracles import Matrices


@pytest.fixture
def criterion(capsys):
    def run(number, title, budget, body):
        start = time.perf_counter()
        ok, detail = body()
        elapsed = time.perf_counter() - start
        ok_time = elapsed < budget
        status = "PASS" if ok and ok_time else "FAIL"
        with capsys.disabled():
            print(f"\n{status} criterion {number}: {title} ({elapsed:.1f} s, budget {budget} s)"
                  + ("" if ok else f" -- {detail}"))
        assert ok, detail
        assert ok_time, f"took {elapsed:.1f} s, budget {budget} s"
    return run


def _suite(report):
    return report.passed, "; ".join(str(law) for law in report.failures())


def test_criterion_1_braid_word_problem(criterion):
    def body():
        s = BraidWord.from_indices
        basics = (s(3, (1, 2, 1)) == s(3, (2, 1, 2)) and s(4, (1, 3)) == s(4, (3, 1))
                  and s(2, (1,)) != s(2, (-1,)))
        report = braid_suite(Options(max_strands=5, max_length=10, cases=500))
        ok, detail = _suite(report)
        return basics and ok, detail
    criterion(1, "braid word problem", 10, body)


def test_criterion_2_crossed_law(criterion):
    criterion(2, "crossed law square and multiplicativity", 60,
              lambda: _suite(crossed_suite(Options(max_strands=4, max_length=3))))


def test_criterion_3_braided_monoid_prob(criterion):
    criterion(3, "monoid PROB is a braided category", 60,
              lambda: _suite(monoid_suite(Options(max_strands=3, max_length=2))))


def test_criterion_4_distributive_law(criterion):
    def body():
        rules = generator_rules()
        report = bimonoid_suite(Options(max_strands=3, max_length=2))
        names = {law.name for law in report.laws}
        required = {"span lifts agree with the pullback of finite sets",
                    "left- and right-nested factorizations give equal spans"}
        ok, detail = _suite(report)
        return rules.passed and ok and required <= names, detail or f"laws: {sorted(names)}"
    criterion(4, "distributive law rules, pullbacks and confluence", 300, body)


def _delta_mu_oracle(A):
    m = Matrices(A.field.p if isinstance(A.field, alg.PrimeField) else None)
    lists = lambda a: a.tolist()  # noqa: E731
    I = m.eye(A.dimension)
    return m.chain(m.kron(lists(A.mul), lists(A.mul)), m.kron(I, lists(A.R), I),
                   m.kron(lists(A.comul), lists(A.comul)))


def test_criterion_5_bimonoid_semantics(criterion):
    def body():
        problems = []
        for A, size in ((alg.braided_line(), 9), (alg.super_line(), 4)):
            report = alg.check_bimonoid(A)
            if not report.passed:
                problems.append(f"{A}: {report}")
            if not alg.check_ybe(A.R, A.dimension, A.field):
                problems.append(f"{A}: Yang-Baxter")
            lhs = alg.evaluate(delta() @ mu(), A)
            if lhs.shape != (size, size) or lhs.tolist() != _delta_mu_oracle(A):
                problems.append(f"{A}: d . m")
        line = alg.braided_line()
        square = alg.evaluate(BraidWord.from_indices(2, (1, 1)), line)
        if np.array_equal(square, line.identity(2)):
            problems.append("braided line is symmetric")
        return not problems, "; ".join(problems)
    criterion(5, "bimonoid laws, Yang-Baxter and d . m for both algebras", 30, body)


def test_criterion_6_functoriality(criterion):
    def body():
        reports = [alg.check_functoriality(A, cases=50, seed=1729, max_object=3)
                   for A in (alg.super_line(), alg.braided_line())]
        counts = [len([law for law in r.laws if law.name.startswith("composition")]) for r in reports]
        ok = all(r.passed for r in reports) and counts == [50, 50]
        return ok, "; ".join(str(law) for r in reports for law in r.failures()) or str(counts)
    criterion(6, "evaluation is functorial on 50 random pairs", 60, body)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out=out, err=err), out.getvalue()


def test_criterion_7_cli_contract(criterion, tmp_path):
    def body():
        problems = []
        path = tmp_path / "braided_line.json"
        alg.dump_algebra(alg.braided_line(), path)

        if _cli("equal", "s(1,2) . s(1,2)'", "id 2") != (0, "true\n"):
            problems.append("equal")
        code, out = _cli("span", "m", "m")
        if code or out.splitlines() != ["span 2 <- 4 -> 2", "left: (m + m) . s(2,4)", "right: m + m"]:
            problems.append("span m m")
        code, out = _cli("check", "yang-baxter", "--algebra", str(path))
        if code or not out.rstrip().endswith("yang-baxter: PASS"):
            problems.append("check yang-baxter")
        code, out = _cli("normalize", "d . m")
        if code or not out.startswith("2 -> 2 through 4\n") or "s(2,4)" not in out:
            problems.append("normalize d . m")
        code, out = _cli("normalize", "e . u")
        if code or not out.startswith("0 -> 0 through 0\n"):
            problems.append("normalize e . u")

        invocations = [("normalize", "d . m"), ("compose", "d", "m"), ("equal", "m", "m . s(1,2)"),
                       ("span", "m", "m"), ("eval", "--algebra", str(path), "d . m"),
                       ("check", "yang-baxter", "--algebra", str(path)), ("normalize", "m . m")]
        for argv in invocations:
            _, out = _cli("--format", "json", *argv)
            try:
                jsonschema.validate(json.loads(out), OUTPUT_SCHEMA)
            except (ValueError, jsonschema.ValidationError) as exc:
                problems.append(f"schema {argv}: {exc}")

        seeded = [sys.executable, "-m", "braidprob", "--format", "json", "check", "bimonoid-axioms",
                  "--seed", "42"]
        runs = [subprocess.run(seeded, capture_output=True).stdout for _ in range(2)]
        if runs[0] != runs[1] or not runs[0]:
            problems.append("seeded runs differ")
        return not problems, "; ".join(problems)
    criterion(7, "CLI examples, JSON schema and seeded determinism", 60, body)
