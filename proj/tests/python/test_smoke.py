import json

import pytest

import lkq


def test_parse_roundtrip():
    assert lkq.parse("?{p, ~~p}") == "?{p, ~~p}"
    assert lkq.parse("p -> q /\\ r") == "(p -> (q /\\ r))"
    with pytest.raises(ValueError):
        lkq.parse("?{p, p}")


def test_defeat_goldens():
    verdicts = [
        lkq.is_defeated(s)
        for s in [
            ". | p /\\ q |- <{{p}}> r",
            ". | p |- <{{p /\\ q}}> r",
            ". | p |- <{{p \\/ q}}> r",
            ". | p \\/ q |- <{{p}}> r",
            ". | ?{p, ~p} |- <{{p},{~p}}> r",
            ". | ?{p, ~p} |- <{{p, ~p}}> r",
        ]
    ]
    assert verdicts == [True, False, True, False, False, True]


def test_semantics():
    assert lkq.evokes(["p \\/ q"], "?{p, q}")
    assert not lkq.evokes(["p"], "?{p, q}")
    assert lkq.implies_regular("?{p, q \\/ r}", [], "?{p, q, r}")
    assert not lkq.implies_regular("?{p, q}", [], "?{r, s}")


def test_prove_and_check():
    v = lkq.prove(". | p /\\ q |- <{}> q \\/ r")
    assert v["verdict"] == "Proof"
    tree = v["derivation"]
    assert json.loads(tree)["rule"]
    assert lkq.validate(tree) == []
    assert lkq.classify(tree)["proof"]
    assert lkq.is_analytic(tree)
    assert lkq.eliminate_cut(tree) == tree


def test_regular_implication_uses_qr2():
    v = lkq.prove_regular_implication("?{p, q \\/ r}", [], "?{p, q, r}")
    assert v["verdict"] == "Proof"
    assert "QR2" in lkq.render_tree(v["derivation"])
    assert lkq.prove_regular_implication("?{p, q \\/ r}", [], "?{p, q, r}", use_qr2=False)["verdict"] != "Proof"


def test_recorded_background_blocks_disjunctive_evocation():
    goal = ". | p \\/ q |- <{{p},{q}}> ?{p, q}"
    assert lkq.prove(goal)["verdict"] == "NotDerivable"
    assert lkq.prove(goal, policy="optional")["verdict"] == "Proof"


def test_pmce():
    assert lkq.is_pmce_axiom("|- ?{p \\/ q, ~p}")
    assert lkq.lk_correlate("p \\/ q |- ?{p, q}") == ". | (p \\/ q) |- <{{p},{q}}> ?{p, q}"
    assert lkq.apply_pmce_rule("R3", ["|- ?{q -> p, q -> r}"]) == "q |- ?{p, r}"
    with pytest.raises(lkq.PmceViolation):
        lkq.apply_pmce_rule("R4", [". |- ?{p, q}"], question="?{q, r}")


def test_invalid_derivation_raises():
    bad = json.dumps({"rule": "Axiom", "conclusion": ". | p |- <{}> q", "annotation": {}, "premises": []})
    with pytest.raises(lkq.InvalidDerivation):
        lkq.eliminate_cut(bad)
