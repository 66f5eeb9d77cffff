"""Smoke tests for the _braidtk extension module."""

import json

import pytest

import _braidtk as bt


BETA = bt.BraidWord(6, [1, 3, 5, 2, 4, 1, 3, 2, 1])
GAMMA = bt.BraidWord(6, [2, 4, 3, 5, 2, 4, 1, 3, 2])


def test_permutation_basics():
    p = bt.Permutation.parse("(1324)")
    assert len(p) == 4
    assert p.image == [3, 4, 2, 1]
    assert p.cycles() == "(1324)"
    assert p.inverse().cycles() == "(1423)"
    assert p.inversions() == 5
    assert p.is_n_cycle()
    assert bt.Permutation([1, 2, 3]).cycles() == "()"
    with pytest.raises(Exception):
        bt.Permutation.parse("(12)(3)", 2)


def test_braid_word_basics():
    w = bt.BraidWord.parse("n=3 1 2 1")
    assert w.strands == 3
    assert w.letters == [1, 2, 1]
    assert len(w) == 3
    assert str(w) == "n=3 1 2 1"
    assert w.positive()
    assert not w.inverse().positive()
    assert (w * w.inverse()).letters == [1, 2, 1, -1, -2, -1]
    assert bt.braid_power(w, 2).letters == [1, 2, 1, 1, 2, 1]
    assert bt.writhe(w.inverse()) == -3


def test_permutation_braid_round_trip():
    p = bt.Permutation.parse("(1324)")
    w = bt.permutation_to_braid(p)
    assert w.letters == [2, 1, 3, 2, 1]
    assert bt.word_to_permutation(w) == p
    assert bt.is_permutation_braid(w)
    assert not bt.is_permutation_braid(bt.BraidWord(3, [1, 1]))
    assert bt.delta(4).letters == [1, 2, 1, 3, 2, 1]


def test_normal_form():
    nf = bt.normal_form(bt.BraidWord.parse("n=3 1 2 1 2"))
    assert nf.inf == 1
    assert nf.sup() == 2
    assert nf.canonical_length() == 1
    assert nf.factors == [[1, 3, 2]]
    assert bt.equal_in_group(nf.to_word(), bt.BraidWord.parse("n=3 2 1 2 2"))
    blob = nf.to_json()
    assert blob["inf"] == 1 and blob["n"] == 3

    neg = bt.normal_form(bt.BraidWord.parse("n=3 1 -2"))
    assert neg.inf == -1
    assert neg.canonical_length() == 2


def test_conjugacy():
    a = bt.BraidWord.parse("n=3 1")
    b = bt.BraidWord.parse("n=3 2")
    ok, witness = bt.are_conjugate(a, b)
    assert ok
    conj = witness.inverse() * a * witness
    assert bt.equal_in_group(conj, b)

    ok, witness = bt.are_conjugate(BETA, GAMMA)
    assert not ok and witness is None

    ss = bt.summit_set(BETA)
    assert (ss["inf"], ss["sup"], ss["size"]) == (0, 1, 38)
    assert bt.summit_set(GAMMA)["size"] == 2


def test_invariants():
    assert bt.burau_char_poly(BETA) == (
        "t^9*x^5 + t^7*x^4 + t^5*x^3 + t^4*x^2 + t^2*x + 1"
    )
    terms = bt.burau_char_poly_terms(bt.BraidWord(2, [1]))
    assert terms == [[1, 1, 1], [1, 0, 0]]
    assert bt.alexander_of_closure(BETA) == "t^2 - t + 1 - t^-1 + t^-2"
    assert bt.torus_knot_alexander(2, 5) == bt.alexander_of_closure(BETA)
    assert bt.genus_of_positive_closure(BETA) == 2
    knot = bt.identify_knot(BETA)
    assert knot["name"] == "T(2,5)" and knot["genus"] == 2
    assert bt.closure_component_count(bt.braid_power(BETA, 2)) == 2
    halves = [bt.delete_strands(bt.braid_power(BETA, 2), keep) for keep in
              ([1, 2, 5], [3, 4, 6])]
    assert [bt.identify_knot(h)["name"] for h in halves] == ["T(2,3)", "T(2,3)"]


def test_census_and_classify():
    rows = bt.enumerate_ncycle_braids(4)
    assert len(rows) == 6
    assert rows[0] == {"permutation": "(1234)", "word": "n=4 3 2 1", "crossings": 3}
    entries = bt.census(3)
    assert [(e["permutation"], e["word"], e["crossings"]) for e in entries] == [
        ("(123)", "n=3 2 1", 2),
        ("(132)", "n=3 1 2", 2),
    ]
    assert entries[0]["knot"]["name"] == "unknot"

    c = bt.classify(5)
    assert c["n"] == 5 and c["class_count"] == 3
    buckets = {r["crossings"]: r["classes"] for r in c["reports"]}
    assert {k: [cl["size"] for cl in v] for k, v in buckets.items()} == {
        4: [8], 6: [10], 8: [6]
    }
    assert {k: v[0]["knot"]["name"] for k, v in buckets.items()} == {
        4: "unknot", 6: "T(2,3)", 8: "T(2,5)"
    }
    assert buckets[8][0]["representative"]["permutation"] == "(13425)"
    assert len(buckets[8][0]["members"]) == 6

    assert [bt.unknot_count(n) for n in range(2, 7)] == [1, 2, 4, 8, 16]


def test_statement_checks():
    for fn in (bt.verify_theorem_1, bt.verify_theorem_2, bt.verify_theorem_4,
               bt.verify_theorem_6):
        ok, log = fn(4)
        assert ok and "PASS" in log

    assert bt.beta_family(6, 2).letters == [1, 2, 2, 2, 3, 4, 5]
    with pytest.raises(Exception):
        bt.beta_family(6, 6)


def test_nonconjugate_pair_demo():
    d = bt.nonconjugate_pair_demo()
    assert d["beta"] == "n=6 1 3 5 2 4 1 3 2 1"
    assert d["gamma"] == "n=6 2 4 3 5 2 4 1 3 2"
    assert not d["conjugate"]
    assert d["beta_knot"] == d["gamma_knot"] == "T(2,5)"
    assert d["beta_char_poly"] != d["gamma_char_poly"]
    assert d["beta_square_components"] == ["T(2,3)", "T(2,3)"]
    assert d["gamma_square_components"] == ["unknot", "unknot"]
    assert d["all_checks"]
    assert "conjugate: false" in d["report"]


def test_property_suites():
    ok, log = bt.run_property_suites(1)
    assert ok and "PASS" in log


def test_json_round_trip():
    nf = bt.normal_form(BETA)
    assert json.loads(json.dumps(nf.to_json())) == nf.to_json()
