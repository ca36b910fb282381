"""Smoke tests for the pymobility extension module."""

import json
import math

import pytest

import pymobility as pm


@pytest.fixture
def doubling():
    return pm.MovementProfile([10, 20, 40], [20, 40, 80])


def test_profile_basics(doubling):
    assert len(doubling) == 3
    stats = pm.summary(doubling)
    assert stats["mu_u"] == pytest.approx(70 / 3)
    assert stats["mu_v"] == pytest.approx(140 / 3)

    ranks = pm.transform_status(doubling, "rank")
    assert ranks.u == pytest.approx([1 / 3, 2 / 3, 1.0])

    bigger = pm.replicate(doubling, 3)
    assert len(bigger) == 9


def test_invalid_profiles_raise():
    with pytest.raises(pm.MobilityError):
        pm.MovementProfile([1, 2], [1, 2, 3])
    with pytest.raises(pm.MobilityError):
        pm.evaluate(pm.MovementProfile([1, -2], [1, 2]), "S1", alpha=0.5)


def test_reference_values(doubling):
    assert pm.evaluate(doubling, "S1", alpha=0.0) == pytest.approx(0.0, abs=1e-12)
    assert pm.evaluate(doubling, "A2", gamma=1) == pytest.approx(15.0)
    assert pm.evaluate(doubling, "FO1") == pytest.approx(70 / 3)
    assert pm.evaluate(doubling, "RG1", alpha=1.0) == pytest.approx(math.log(2))
    assert pm.evaluate(doubling, "T1", alpha=0.0, var="n-1") == pytest.approx(
        116.667, abs=1e-3
    )
    assert math.isinf(pm.evaluate(doubling, "A1", alpha=1.0))


def test_decompositions():
    exchange = pm.MovementProfile([10, 20, 40], [20, 40, 10])
    seg = pm.decompose_seg(exchange, "absolute")
    assert seg["components"]["structural"]["value"] == pytest.approx(0.0, abs=1e-12)
    assert seg["components"]["exchange"]["value"] == pytest.approx(50 / 9)
    assert seg["residual"] == pytest.approx(0.0, abs=1e-10)

    updown = pm.decompose_updown(exchange, "absolute", gamma=1)
    assert updown["total"] == pytest.approx(50 / 9)
    assert updown["between"] == pytest.approx(0.0, abs=1e-12)

    split = pm.decompose_s1_subgroups(exchange, 0.0, [0, 0, 1])
    assert split["residual"] == pytest.approx(0.0, abs=1e-10)


def test_inequality_bridge():
    x = [10.0, 20.0, 40.0]
    assert pm.gini(x, "absolute") == pytest.approx(20 / 3)
    assert pm.extended_gini(x, 1, "absolute") == pytest.approx(10 / 3)
    assert pm.generalized_entropy(x, 1.0) == pytest.approx(0.1431, abs=1e-3)
    assert pm.kolm(x, 0.0) == pytest.approx(700 / 9)
    assert pm.reduce_mobility(x, "A2", gamma=1) == pytest.approx(10 / 3)
    assert pm.reduce_mobility(x, "S1", alpha=1.0) == pytest.approx(
        pm.generalized_entropy(x, 1.0)
    )


def test_paper_table():
    table = pm.paper_table(4)
    assert table["columns"] == ["1a", "1b", "1c", "1d", "1e", "1f", "1g"]
    assert table["rows"]["A2"][0] == "15.000"
    assert table["rows"]["T1"][6] == "2066.667"


def test_property_report_deterministic():
    a = json.loads(pm.property_report_json(trials=40, seed=5))
    b = json.loads(pm.property_report_json(trials=40, seed=5))
    assert a == b
    assert len(a["measures"]) == 16
    s1 = next(row for row in a["measures"] if row["measure"] == "S1")
    assert s1["cells"]["monotonicity2"] == "check"
    assert s1["cells"]["scale"] == "check"
