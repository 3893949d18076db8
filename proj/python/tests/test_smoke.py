import csv
import io

import pytest

import dihedral_semigroups as ds


def test_orders():
    assert ds.order(3, "right") == 6
    assert ds.order(3, "left") == 9
    assert ds.order(36, "right") == 63
    assert ds.order(36, "left") == 90
    report = ds.order_report(15)
    assert (report["p_order"], report["lambda_order"]) == (75, 75)
    assert report["iso"] == "not_isomorphic"


def test_closure_matches_formula():
    for m in range(3, 30):
        for side in ("right", "left"):
            expected = ds.order(m, side)
            assert ds.closure_size(m, side) == expected
            assert len(ds.close_pairs(m, side)) == expected
    assert ds.closure_size(12, "left", oracle="raw") == ds.order(12, "left")


def test_decompose():
    parts = ds.decompose(8, "right")
    assert [(p["container"], p["size"]) for p in parts] == [
        ("C(0,1)", 4),
        ("C(6,1)", 4),
        ("C(4,2)", 2),
    ]


def test_orbit_and_central_series():
    p = ds.orbit_profile(-2, 15)
    assert (p["index"], p["period"], p["order"]) == (1, 4, 4)
    assert ds.orbit_profile(2, 12)["order"] is None
    assert ds.central_series_orders(16)[-1] == 32


def test_isomorphism():
    assert ds.iso_search(8, "right", 8, "left")["status"] == "isomorphic_with_witness"
    assert ds.iso_search(15, "right", 15, "left")["status"] == "not_isomorphic"
    assert ds.iso_prime_criterion(5)
    assert not ds.iso_prime_criterion(15)


def test_table_csv_round_trip():
    rows = ds.table(3, 20)
    parsed = list(csv.DictReader(io.StringIO(ds.table_csv(3, 20))))
    assert len(parsed) == len(rows) == 18
    for row, text in zip(rows, parsed):
        assert int(text["p_order"]) == row["p_order"]
        assert text["verified"] == row["verified"] == "pairs_verified"


def test_claims():
    assert all(c["passed"] for c in ds.verify_claims())


def test_errors():
    with pytest.raises(ValueError):
        ds.order(2)
    with pytest.raises(ValueError):
        ds.order(5, "up")
    with pytest.raises(ds.ResourceError):
        ds.closure_size(200, "right", oracle="raw")
    with pytest.raises(ValueError):
        ds.table(10, 3)
