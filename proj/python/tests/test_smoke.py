import pytest

import symcc


def test_structure_constants():
    assert symcc.structure_constants("1^1", "1^1") == {"1^2": 2, "2^1": 1}


def test_product_of_labels():
    terms = symcc.product(["s; 1^1", "t;"])
    assert terms == [("1*s + 1*t", "1^1", 1)]


def test_count_m():
    assert symcc.count_m([1, 1, 1, 1], [2, 2]) == 6


def test_series_degree_one():
    s = symcc.series(1, {"s": 1}, max_degree=2)
    assert s[1] == [("0", "1^1", -1), ("1*s", "", -1)]
    assert len(s) == 3


def test_series_inverse_round_trip():
    s = symcc.series(2, {"s": 1}, max_degree=3, genus=1, shifted=True)
    assert s[0] == [("0", "", 1)]


def test_degrees_and_index_check():
    d = symcc.infer_degrees(0, 3)
    assert d[(1,)] == -2
    assert d[(1, 1, 1)] == -4
    assert symcc.index_check(2, 2, {"s": 1, "t": 2}, 5)


def test_acyclicity():
    rep = symcc.acyclicity(2, 2, {}, 4)
    assert rep["verdict"] == "acyclic_off_KF"
    assert rep["certificate"] == ("0", "2^2")
    assert symcc.acyclicity(2, 2, {}, 5)["certificate"] is None
    assert symcc.critical_point(2, 2, {"s": 1}, "x + y") == "1*s + 2*x + 2*y"


def test_errors():
    with pytest.raises(symcc.ArgumentError):
        symcc.structure_constants("1^x", "1^1")
    with pytest.raises(symcc.PreconditionError):
        symcc.critical_point(0, 1, {}, "0")
    with pytest.raises(ValueError):
        symcc.series(1, {"s": 2})


def test_selftest():
    ok, text = symcc.selftest()
    assert ok, text
