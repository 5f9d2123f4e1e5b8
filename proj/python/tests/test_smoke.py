import pytest

import cartbicat as cb


def test_catalog_and_models():
    ids = [i for i, _ in cb.law_catalog()]
    assert "frobenius" in ids and len(ids) == len(set(ids))
    assert "rel" in cb.suite_models()


def test_terms():
    assert cb.arity("cp ; (id[1] * dc)", 1) == (1, 1)
    assert cb.arity("cp", 2) == (2, 4)
    with pytest.raises(cb.ParseError):
        cb.normalise("cp ;")


def test_eval_rel():
    res = cb.evaluate("rel", "cp ; cc", width=1)["results"][0]
    assert res["arity"] == [1, 1] or res["arity"] == {"inputs": 1, "outputs": 1}
    assert res["morphism"] == "1"


def test_order_erel():
    r = cb.order("erel", "id[1]", "dc ; cd")
    assert r["lhs_leq_rhs"] and not r["rhs_leq_lhs"]


def test_homsets_erel():
    h = cb.homsets("erel", bound=2)
    assert [h[(2, y)] for y in range(3)] == [2, 5, 15]


def test_laws_rel():
    r = cb.run_laws("rel", bound=2, cases=["comonoid", "frobenius", "bone-law"])
    assert r["summary"]["ok"]
    status = {c["id"]: c["status"] for c in r["cases"]}
    assert status["frobenius"] == "pass"
    assert status["bone-law"] == "fail"


def test_reconstruct_erel():
    assert cb.reconstruct("erel", "span-s", bound=1)["isomorphism"]


def test_usage_error():
    with pytest.raises(cb.CliError):
        cb.evaluate("nosuchmodel", "id")
