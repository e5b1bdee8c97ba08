from fractions import Fraction

import pytest

import padicforms as pf


def test_parse():
    assert pf.parse_poly("t^2 - 12*t + 27") == [27, -12, 1]
    assert pf.parse_poly("1/3 + t") == [Fraction(1, 3), 1]
    with pytest.raises(pf.ParseError, match="offset 2"):
        pf.parse_poly("t^")


def test_newton():
    cert = pf.newton("t^2+3*t+9", prime=3)
    assert cert["schema"] == pf.SCHEMA
    assert len(cert["edges"]) == 1
    assert cert["edges"][0]["slope"] == "-1/1"
    assert [v[0] for v in cert["vertices"]] == [0, 2]


def test_hilbert_and_isotropy():
    assert pf.hilbert("3", "2", prime=3)["value"] == -1
    assert pf.isotropy(["1", "1", "3", "3"], prime=3)["isotropic"] is False
    assert pf.isotropy(["1", "3", "2", "6"], prime=3)["isotropic"] is True


def test_predicate():
    no = pf.predicate("1/t", prime=3, gamma="2")
    assert no["value"] is False
    assert no["anisotropy"]["vt_f"] == 1
    yes = pf.predicate("t", prime=3)
    assert yes["value"] is True
    assert pf.verify(yes)["valid"]


def test_construct_and_verify():
    cert = pf.construct_s("t^2-3", prime=3, gamma="2")
    assert cert["s"] == "t^2 + 3*t - 3"
    assert cert["corollary"]["isotropic"] is True
    assert pf.verify(cert)["valid"]
    cert["direct"][0]["lhs"] = -cert["direct"][0]["lhs"]
    assert not pf.verify(cert)["valid"]


def test_corpus_and_elliptic():
    rep = pf.corpus("check-recip", prime=2, seed=7, cases=100)
    assert rep["passes"] == 100
    pt = pf.elliptic_point("3", prime=3)
    assert pt["residual_valuation"] == "inf" or pt["residual_valuation"] >= 40


def test_errors():
    with pytest.raises(pf.Error):
        pf.elliptic_point("1/3", prime=3)
    with pytest.raises(pf.Error):
        pf.corpus("no-such-law", prime=3)
