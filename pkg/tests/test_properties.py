import json

import pytest

from prodspec import properties as props
from prodspec.dsl import parse
from prodspec.errors import ResourceLimitError
from prodspec.properties import (
    PROPERTIES,
    Property,
    RunConfig,
    aggregate,
    expect,
    replay,
    ring_of,
    run_property,
)


def no_three_torsion(inst, cfg):
    expect(ring_of(inst["ring"]).size % 3 != 0, f"{inst['ring']} has order divisible by 3")


def always_too_big(inst, cfg):
    raise ResourceLimitError("pretend the ring is huge")


@pytest.fixture
def register(monkeypatch):
    def add(prop):
        monkeypatch.setitem(PROPERTIES, prop.id, prop)
        return prop
    return add


def products_generator(rng, cfg):
    return {"ring": " x ".join(f"Z/{rng.choice([6, 9, 12, 15, 4])}" for _ in range(rng.randint(2, 4)))}


def test_expected_registry():
    assert list(PROPERTIES) == [
        "spec-oracle", "tame-structure", "wild-empty", "ultrafilter-embedding", "filter-quotient-iso",
        "domain-embedding", "zero-dim", "nilpotency-growth", "components", "avoidance-qb",
        "induced-hom", "lying-over", "parser-roundtrip",
    ]


def test_failing_property_is_minimized_and_replays(register):
    register(Property("fake-three", "no 3-torsion", products_generator, no_three_torsion, trials=50, max_size=10 ** 6))
    rep = run_property("fake-three", RunConfig(seed=5))
    assert rep.status == "fail" and rep.failed
    cx = rep.counterexample
    # shrinking stops at a two-factor product whose order is still divisible by 3
    factors = parse(cx["instance"]["ring"]).factors
    assert len(factors) == 2 and sorted(f.n for f in factors) in ([2, 3], [3, 3])
    assert replay("fake-three", cx) == cx["message"]
    assert "original" in cx


def test_vacuous_status(register):
    register(Property("fake-vacuous", "nothing to see", products_generator, lambda i, c: None,
                      trials=5, max_size=100, vacuous="no instance can exist"))
    rep = run_property("fake-vacuous")
    assert rep.status == "vacuous" and "no instance can exist" in rep.notes


def test_resource_aborts_are_reported(register):
    register(Property("fake-abort", "aborts", products_generator, always_too_big, trials=4, max_size=100))
    rep = run_property("fake-abort")
    assert rep.checked == 0 and len(rep.aborted) == 4
    assert rep.to_dict()["aborted"][0]["reason"] == "pretend the ring is huge"


def test_same_seed_same_report():
    a = run_property("spec-oracle", RunConfig(seed=11, trials=40)).to_dict(wall_time=False)
    b = run_property("spec-oracle", RunConfig(seed=11, trials=40)).to_dict(wall_time=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_different_seeds_draw_different_instances():
    prop = PROPERTIES["spec-oracle"]
    first = [i for i in props.instances(prop, props.resolve_config(prop, RunConfig(seed=1, trials=30)))]
    second = [i for i in props.instances(prop, props.resolve_config(prop, RunConfig(seed=2, trials=30)))]
    assert first[:4] == second[:4]  # fixed instances lead
    assert first[4:] != second[4:]


def test_report_schema():
    rep = run_property("parser-roundtrip", RunConfig(seed=0, trials=10))
    d = rep.to_dict()
    assert d["schema"] == 1 and d["propertyId"] == "parser-roundtrip"
    assert {"seed", "trials", "checked", "status", "wallTimeMs"} <= set(d)
    agg = aggregate([rep], 0)
    assert agg["status"] == "pass" and agg["reports"] == [d]


def test_avoidance_reports_cover_cap():
    rep = run_property("avoidance-qb", RunConfig(seed=0, trials=5, max_cover=3))
    assert rep.status == "pass"
    assert any("up to 3 ideals" in n for n in rep.notes)


def test_unknown_property():
    with pytest.raises(KeyError):
        run_property("nope")
