import pytest

import ghznl


def test_fixture_inventory():
    names = ghznl.fixture_names()
    assert "s5" in names and "n26" in names and "s8_cert_c" in names
    assert len(names) == 16


def test_five_state_certification():
    s5 = ghznl.fixture("s5")
    assert s5["t"] == 1 and len(s5["states"]) == 5
    report = ghznl.certify(s5)
    assert report["verdict"] == "certified"
    assert report["betas"] == {"A|BC": "4/5", "B|CA": "4/5", "C|AB": "3/5"}


def test_single_cut_value():
    assert ghznl.beta(ghznl.fixture("s5"), "C|AB") == "3/5"


def test_certificate_verification():
    out = ghznl.verify_certificate(ghznl.fixture("s5"), ghznl.fixture("s5_cert_c"))
    assert out["feasible"] and out["matches_claim"]
    assert out["computed_value"] == "3/5"


def test_counting_bound():
    assert ghznl.cardinality_bound(3, 2) == "27/2"
    report = ghznl.bound(ghznl.fixture("n26"))
    assert report["certified"] and report["bound"] == "27/2" and report["size"] == 26


def test_protocol_hint():
    quad = {"t": 1, "states": [[0], [7], [3], [4]]}
    result = ghznl.lattice_protocol(quad)
    assert result["distinguishing_cut"] == "B|CA"


def test_greedy_search_on_basis():
    basis = ghznl.fixture("ghz_basis")
    report = ghznl.search_min_subsets(basis)
    assert report["complete"]
    assert len(report["found"]) == 1
    assert len(report["found"][0]["indices"]) == 5


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        ghznl.certify({"t": 1, "states": []})
