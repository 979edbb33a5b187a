import json
from pathlib import Path

import pytest

houghton = pytest.importorskip("houghton")

FIXTURES = Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def fixture(name):
    return json.loads((FIXTURES / name).read_text())


def test_unequal_shift_classification():
    c = houghton.validate(fixture("gtilde2_bijection.json"))
    assert c["is_bijective"]
    assert not c["in_Gn"]
    assert c["phi"] == [1, -1]
    assert houghton.apply(fixture("gtilde2_bijection.json"), (6, 5, 1)) == (8, 6, 1)


def test_translation_arithmetic():
    t12 = houghton.compose(fixture("t1.json"), fixture("t2.json"))
    assert t12["m"] == [[1, 1], [1, 1]]
    assert houghton.grade(t12) == 2
    d = houghton.decompose(fixture("t1t1t2.json"))
    assert len(d["vrays"]) == 3 and len(d["hrays"]) == 3


def test_errors_carry_codes():
    with pytest.raises(houghton.HoughtonError) as e:
        houghton.invert(fixture("t1.json"))
    assert e.value.code == "NotBijective"
    with pytest.raises(houghton.HoughtonError) as e:
        houghton.validate(fixture("collide.json"))
    assert e.value.code == "NotInjective"


def test_inverse_round_trip():
    for seed in range(10):
        g = houghton.random_element("Gtilde", 2, seed)
        one = houghton.compose(g, houghton.invert(g))
        assert one == houghton.translation([0, 0])


def test_sigma_homology():
    p = houghton.sigma_nk_homology(2, 4)
    assert [d["betti"] for d in p["degrees"]] == [0, 5]


def test_verify():
    r = houghton.verify("lemma-3.6", 50, 7)
    assert r["passed"]
    assert "grade-step" in houghton.suite_names()
    with pytest.raises(houghton.HoughtonError):
        houghton.verify("no-such")
