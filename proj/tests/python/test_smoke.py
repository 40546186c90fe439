import copy

import pytest

import rank2qi


def test_arithmetic():
    assert rank2qi.norm("-1-6i") == "37"
    assert rank2qi.is_gaussian_prime("-1-6i")
    assert not rank2qi.is_gaussian_prime("5")
    assert rank2qi.primary_associate("2+i") == ("-1+2i", 3)
    f = rank2qi.factor("5")
    assert [p["prime"] for p in f["factors"]] == [{"re": "-1", "im": "-2"}, {"re": "-1", "im": "2"}]


def test_symbols():
    assert rank2qi.euler_symbol("i", "-1-6i") == -1
    assert rank2qi.euler_symbol("1+i", "-1-6i") == 1
    assert rank2qi.mn_invariants("-25-2i") == (1, 1)
    with pytest.raises(ValueError):
        rank2qi.euler_symbol("2", "5")
    with pytest.raises(ValueError):
        rank2qi.norm("1+2j")


def test_torsion_and_selmer():
    assert rank2qi.torsion("i")["group"] == "Z2xZ4"
    assert rank2qi.torsion("-1+2i")["group"] == "Z2xZ2"
    rep = rank2qi.selmer("negsquare", ["-1+26i", "-1-6i", "31-6i", "31+26i"])
    assert rep["dim"] == "2"
    assert [c["label"] for c in rep["candidates"]] == ["1", "p1*p2*p3*p4", "i*p1*p3", "i*p2*p4"]


def test_search_certify_verify():
    hits = rank2qi.search(40, 40, shards=2)
    assert hits[0]["beta"] == {"re": "15", "im": "10"} and hits[0]["k"] == "16"
    assert hits == rank2qi.search(40, 40, shards=1)

    cert = rank2qi.certify("15+10i", 16)
    assert cert["rank_upper"] == "2"
    assert rank2qi.verify(cert) == (True, [])

    tampered = copy.deepcopy(cert)
    tampered["L"][0] = "0000"
    ok, failures = rank2qi.verify(tampered)
    assert not ok and failures

    with pytest.raises(rank2qi.FormatError):
        rank2qi.verify("{not json")


def test_certify_failures():
    with pytest.raises(rank2qi.CertificationError) as e:
        rank2qi.certify("15+10i", 0)
    assert e.value.reason == "primes not distinct"
    with pytest.raises(rank2qi.CertificationError) as e:
        rank2qi.certify("15", 16)
    assert e.value.reason == "not genuine"


def test_density():
    d = rank2qi.density(100, shards=2)
    assert d["total"] > 0 and 0 < d["target"] < d["associates"]
