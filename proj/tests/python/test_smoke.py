"""Smoke tests for the python bindings: exact values in, exact strings out."""

import os

import pytest

kpoly = pytest.importorskip("kpoly")


def corpus_root():
    return os.environ.get("KPOLY_CORPUS", "corpus")


def test_exact_integration():
    assert kpoly.integrate_uni("2u^3-6u^2-18u+30", "0", "1") == "39/2"
    assert kpoly.integrate_uni("8(2-u)^3", "1", "2") == "2"
    assert kpoly.integrate_chamber("(2+u-v)^2", "0", "1", "u", "2+u") == "8/3"


def test_sign_classification():
    assert kpoly.sign_on_interval("2-u", "0", "2") == "nonnegative"
    assert kpoly.sign_on_interval("u-1", "0", "2") == "mixed"
    assert kpoly.sign_on_interval("u^2-10u+22", "1", "2") == "nonnegative"


def test_pfaffians_and_relations():
    pf = kpoly.pfaffians()
    assert len(pf) == 5
    assert "x1*y1*z2" in pf[4]
    relations = kpoly.pfaffian_relations()
    assert len(relations) == 3
    holds = [ok for _, ok in relations]
    assert holds == [False, True, True]


def test_corpus_verifies():
    corpus = kpoly.Corpus(corpus_root())
    outcomes = corpus.verify()
    assert len(outcomes) >= 24
    by_name = {o["name"]: o for o in outcomes}
    assert all(o["ok"] for o in outcomes), [
        o["name"] for o in outcomes if not o["ok"]
    ]
    assert by_name["2.22/div-Q"]["values"]["S"] == "43/60"
    assert by_name["2.22/div-Q"]["values"]["beta"] == "17/60"
    assert by_name["3.13/div-E"]["values"]["beta"] == "1/10"
    assert by_name["3.12/flag-Pi2-L2"]["values"]["S_WC"] == "2885/4032"
    assert sorted(corpus.families) == ["2.22", "3.12", "3.13", "4.13"]


def test_oracle_equivalence_sample():
    corpus = kpoly.Corpus(corpus_root())
    assert corpus.oracle(samples=3, seed=7) == []


def test_report_renders():
    corpus = kpoly.Corpus(corpus_root())
    text = corpus.report(machine=True)
    assert "family=2.22" in text
    assert "beta=17/60" in text
