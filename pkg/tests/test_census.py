import pytest

from cosetgeom.census import (CENSUS_IDS, UnknownId, census_entry,
                              list_census)
from cosetgeom.words import parse_presentation


def test_seven_entries_in_order():
    entries = list_census()
    assert [e.id for e in entries] == list(CENSUS_IDS)
    assert len(entries) == 7


def test_unknown_id():
    with pytest.raises(UnknownId):
        census_entry("k7")


def test_presentations_roundtrip():
    for e in list_census():
        assert parse_presentation(str(e.presentation)) == e.presentation
        assert e.presentation.relators


def test_kleinian_metadata():
    k4 = census_entry("k4")
    assert (k4.p, k4.q, k4.d) == (2, 4, 1)
    assert k4.gamma == "-1+i"
    assert k4.covolume == "0.45798"
    k1 = census_entry("k1")
    assert k1.gamma == "(-3+sqrt(3)i)/2"
    assert k1.covolume == "0.33831"
    k19 = census_entry("k19")
    assert (k19.p, k19.q, k19.d, k19.gamma) == (4, 6, 3, "-1")
    assert census_entry("k5").covolume == "0.91596"
    assert census_entry("k2").covolume == "0.67664"


def test_large_entries_have_no_kleinian_metadata():
    for id in ("g1", "g2"):
        e = census_entry(id)
        assert e.p is None and e.q is None and e.gamma is None


def test_k19_relator_count():
    assert len(census_entry("k19").presentation.relators) == 6


def test_distinguished_subgroups():
    h1 = census_entry("g1").subgroup("h1")
    assert len(h1.generators) == 2
    h2 = census_entry("g2").subgroup("h2")
    assert str(h2.generators[0]) == "y"
    with pytest.raises(KeyError):
        census_entry("g1").subgroup("h9")
    assert census_entry("k1").subgroups == ()


def test_known_results_have_published_divergence_records():
    k1 = census_entry("k1")
    at6 = next(r for r in k1.known_results if r.index == 6)
    assert at6.count == 4 and at6.published_count == 5
    k4 = census_entry("k4")
    at4 = next(r for r in k4.known_results if r.index == 4)
    assert at4.count == 4 and at4.raw_count == 7


def test_json_dump_shape():
    d = census_entry("k4").to_json_dict()
    assert d["id"] == "k4"
    assert "presentation" in d and "known_results" in d
    assert all("index" in r and "count" in r for r in d["known_results"])
