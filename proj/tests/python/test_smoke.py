import json

import pytest

import morgankit as mk


def test_decide():
    assert mk.derivable("~~~p => ~p", "g3sdm")
    assert not mk.derivable("p => ~~p", "g3sdm")
    assert mk.derivable("~(~p & ~q) => p | q", "g3dm")
    assert not mk.derivable("p -> q -> p => p", "g3ip")
    assert mk.derivable("p -> q -> p => p", "g3cp")


def test_parse_error():
    with pytest.raises(mk.ParseError):
        mk.derivable("p => (q")
    with pytest.raises(ValueError):
        mk.derivable("p' => p")


def test_prove_and_check():
    assert mk.prove("p => ~~p") is None
    text = mk.prove("p & q => p")
    assert text.splitlines()[-1] == "p & q => p   [&=>]"
    proof = mk.prove("~p => ~p", format="json")
    assert proof["schema"] == "morgan-kit/proof/v1"
    assert mk.check_proof(proof) == (True, "")
    assert "prooftree" in mk.render(proof, "latex")
    proof["root"]["height"] = 7
    ok, why = mk.check_proof(json.loads(json.dumps(proof)))
    assert not ok and why


def test_heights():
    assert mk.min_height("~p => ~p") == 3
    assert not mk.derivable_within_height("~p => ~p", 2)
    assert mk.min_height("p => ~~p") is None


def test_interpolate():
    r = mk.interpolate("p ; q => p")
    assert r["interpolant"] == "p" and r["verified"]
    assert mk.interpolate("q ; p => p")["interpolant"] == "*F"


def test_translate():
    assert mk.translate("p | q", "f") == "~~(~~p | ~~q)"
    assert mk.translate("~(p & q)", "h") == "p' | q'"
    assert mk.translate("~~~p", "k") == "p'"
    assert mk.translate("*p, q => *r", "t") == "q & ~p => ~r"


def test_algebra():
    assert len(mk.enumerate_algebras("dm", 2)) == 1
    assert len(mk.enumerate_algebras("sdm", 4)) == 15
    assert mk.valid("~(p & q) => ~p | ~q", "dm")
    w = mk.refute("p => ~~p", "sdm", 3)
    assert w is not None and w["algebra"]["schema"] == "morgan-kit/algebra/v1"
    assert mk.refute("p => p", "sdm", 4) is None


def test_embedding_and_corpus():
    a = mk.corpus("g3dm", seed=3, count=20, max_weight=18)
    assert a == mk.corpus("g3dm", seed=3, count=20, max_weight=18)
    r = mk.check_embedding("dm-to-cl-h", a)
    assert r["total"] == 20 and r["agreements"] == 20
    r = mk.check_embedding("sdm-to-int-k", ["~p => ~(p & q)"])
    assert r["agreements"] == 0
