import json
import os

import pytest

import ramsey_workbench as rw


def test_rigid_surjections():
    maps = rw.rigid_surjections(3, 2)
    assert maps == [[0, 0, 1], [0, 1, 0], [0, 1, 1]]
    assert rw.is_rigid_surjection([0, 0, 1], 2)
    assert not rw.is_rigid_surjection([1, 0, 0], 2)
    assert rw.induced_order([2, 0, 1, 0], 3) == [2, 0, 1]


def test_neat_terms():
    sig = json.dumps({"symbols": [{"name": "g", "arity": 2}]})
    terms = rw.neat_terms(sig, 2, 6)
    assert terms[:2] == ["x1", "x2"]
    assert "g(x1,x2)" in terms


def test_chain_arrow_and_search():
    cert = json.loads(rw.check_arrow_chains(3, 3, 2, 2, 1))
    assert cert["verdict"] == "FAILS"
    assert cert["refuting_coloring"] == [0, 0, 1]
    hit = rw.gr_search(2, 2, 2)
    assert hit is not None
    n, cert_json = hit
    assert n == 2
    assert json.loads(cert_json)["verdict"] == "HOLDS"


@pytest.fixture(scope="module")
def catalog():
    path = os.environ.get("RW_CATALOG", "catalog")
    return rw.Catalog(path)


def test_catalog_queries(catalog):
    assert "semilattice" in catalog.variety_names()
    assert catalog.free_size("semilattice", 3) == 7
    assert catalog.ordered_free_min_terms("semilattice", 2) == ["x1", "x2", "g(x1,x2)"]
    assert catalog.rigid_epis("sl3_ord", "sl2_ord") == [[0, 0, 1], [0, 1, 1]]


def test_catalog_transport(catalog):
    out = json.loads(catalog.transport("semilattice", 3, "sl2_ord", "sl3_ord", 2, 2))
    assert out["certificate"]["verdict"] == "HOLDS"
    assert out["transported_all"] is True


def test_catalog_segment_induction(catalog):
    out = json.loads(catalog.segment_induction("semilattice", "sl2_ord", 2, [0, 1, 1], 3))
    assert out["verdict"] == "HOLDS"
    assert out["colors_used"] <= out["bound"]


def test_verify_suite_subset():
    results = rw.verify_suite("chains")
    assert results, "no checks ran"
    assert all(passed for _, passed, _ in results)
