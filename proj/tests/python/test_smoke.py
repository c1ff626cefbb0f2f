import pytest

import cmprime

ORDER20 = "n=5; gens=(1,5,4,2,3);(2,3,4,5)"
A3 = "n=3; gens=(1,2,3)"
G225 = "n=5; gens=[-1,-2,3,4,5];[2,1,3,4,5];[2,3,4,5,1]"


def test_analyze_order20():
    r = cmprime.analyze(ORDER20)
    assert r["secondary_degrees"] == [0, 4, 5, 6, 7, 8]
    assert r["deficiency"] == "2"
    assert r["bad_primes"] == [2]
    assert r["schema"] == 1
    assert "timings" not in r


def test_analyze_a3_is_cohen_macaulay_everywhere():
    r = cmprime.analyze(A3)
    assert r["deficiency"] == "1"
    assert r["bad_primes"] == []
    assert r["index"] == 2


def test_secondary_degrees():
    assert cmprime.secondary_degrees(G225) == [0, 5]
    assert cmprime.secondary_degrees(ORDER20) == [0, 4, 5, 6, 7, 8]


def test_verify():
    bad = cmprime.verify(ORDER20, 2)
    assert bad["is_good"] is False
    assert bad["witness"]["degree"] >= 1
    good = cmprime.verify(ORDER20, 5)
    assert good["is_good"] is True
    assert "witness" not in good


def test_oracle_agrees():
    o = cmprime.oracle(ORDER20)
    assert o["evaluated"] == o["symbolic"] == "2"


def test_roundtrip_is_identity():
    r = cmprime.analyze(ORDER20, verify=True)
    assert cmprime.roundtrip(r) == r


def test_point_choice_does_not_change_deficiency():
    values = {cmprime.analyze(ORDER20, point=z)["deficiency"]
              for z in ([1, 2, 3, 4, 5], [1, 2, 4, 8, 16], [2, 3, 5, 7, 11])}
    assert values == {"2"}


def test_errors():
    with pytest.raises(cmprime.CmprimeError, match="duplicate index"):
        cmprime.analyze("n=3; gens=(1,1,2)")
    with pytest.raises(cmprime.CmprimeError):
        cmprime.verify(G225, 2)
