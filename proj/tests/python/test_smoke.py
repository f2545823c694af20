import math
from fractions import Fraction

import pytest

import multsub


def test_counts():
    assert multsub.count_subgroups(8) == 5
    assert multsub.count_subgroup_isoclasses(8) == 3
    assert multsub.count_subgroups(360) == 236
    assert isinstance(multsub.count_subgroups(2**40 + 15), int)


def test_against_oracle():
    for n in range(1, 60):
        assert multsub.count_subgroups(n) == len(multsub.enumerate_subgroups_oracle(n))
        assert multsub.count_subgroup_isoclasses(n) == multsub.classify_isoclasses_oracle(n)


def test_structure():
    assert multsub.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert multsub.sylow_partition(8, 2) == [1, 1]
    assert multsub.conjugate([3, 1]) == [2, 1, 1]
    assert multsub.gaussian_binomial(4, 2, 2) == 35
    assert multsub.subgroup_count(2, [2, 1]) == 8


def test_errors():
    with pytest.raises(ValueError):
        multsub.count_subgroups(0)
    with pytest.raises(ValueError):
        multsub.s_h(3)
    assert issubclass(multsub.Error, Exception)


def test_rationals():
    assert multsub.H(4) == Fraction(1, 4)
    assert multsub.s_h(6) == 15
    assert len(multsub.two_to_one_maps(4)) == 6


def test_tables_and_stats():
    t = multsub.FunctionTable.build(10**4)
    assert t.bound == 10**4
    assert t.totient(10) == 4
    assert multsub.D(1e4, t) == pytest.approx(2.787353242522207, rel=1e-12)
    rows = multsub.moments([1, 2], 1e4, t, 1.0)
    assert [r["h"] for r in rows] == [1, 2]
    rep = multsub.distribution_report(1e4, "I", t)
    assert 0 <= rep["ks_distance"] <= 1
    assert rep["normalization"][0] == pytest.approx(math.log(2) / 2)


def test_constants_and_extremal():
    a0 = multsub.compute_A0(10**6)
    assert abs(a0["value"] + math.log(2) / 2 - 0.72109) < 2e-5
    t = multsub.FunctionTable.build(100)
    rec = multsub.scan_max(100, "G", t)
    assert rec["n"] == 80
    g = multsub.construct_G_extremal(1e6)
    assert g["n"] == 1247 and g["bound_holds"]
