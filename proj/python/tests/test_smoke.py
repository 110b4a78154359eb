from fractions import Fraction

import pytest

import topq


def test_catalog_betti():
    assert topq.betti("point") == [1]
    assert topq.betti("octahedron") == [1, 0, 1]
    assert topq.betti("torus") == [1, 2, 1]
    assert topq.cobetti("genus2") == [1, 4, 1]


def test_names():
    assert "hexagon" in topq.complex_names()
    assert "wrap2" in topq.map_names()
    assert "axioms" in topq.suite_names()


def test_degree_of_wrap():
    assert topq.degree("wrap2") == 2
    assert topq.degree("octa_antipodal") == -1


def test_coincidence_wrap_pair():
    r = topq.coincidence("wrap2", "wrap1", witness=True)
    assert Fraction(r["lambda"]) == -1
    assert r["consistent"] is True
    assert r["witness"]["status"] == "found"


def test_constant_pair_makes_no_claim():
    r = topq.coincidence("const_w0", "const_w1", witness=True)
    assert Fraction(r["lambda"]) == 0
    assert r["witness"]["status"] == "none-lambda-zero-no-claim"


def test_non_orientable_raises():
    with pytest.raises(topq.TopqError) as info:
        topq.duality("rp2")
    assert info.value.kind == "NonOrientable"


def test_verify_suite_passes():
    r = topq.verify("euler", seed=7)
    assert r["pass"] is True
    assert r == topq.verify("euler", seed=7)
