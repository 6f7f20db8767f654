"""The property sweep itself: completeness, reporting, and the ability to
catch a deliberately broken involution."""

import json

import pytest

import asmc.neutral
from asmc import NeutralPair, verify_suite
from asmc.verify import PROPERTIES, _Pool, run_property


def test_sweep_passes_at_small_order():
    report = verify_suite(4)
    assert report.ok
    assert all(r.counterexample is None for r in report.results)
    assert all(r.checked > 0 for r in report.results)


def test_registry_has_at_least_fifteen_properties():
    assert len(PROPERTIES) >= 15
    names = [name for name, _, _ in PROPERTIES]
    assert len(set(names)) == len(names)


def test_text_report_lists_every_property():
    report = verify_suite(3)
    text = report.to_text()
    for name, _, _ in PROPERTIES:
        assert name in text
    assert f"{len(PROPERTIES)}/{len(PROPERTIES)} properties passed" in text


def test_json_report_parses():
    report = verify_suite(3)
    payload = json.loads(report.to_json())
    assert payload["ok"] is True
    assert len(payload["properties"]) == len(PROPERTIES)


def test_cap_guard():
    from asmc import CapExceeded

    with pytest.raises(CapExceeded):
        verify_suite(9)


@pytest.fixture
def broken_charge_flip(monkeypatch):
    """An off-by-one charge flip, installed in place of the real one."""

    def off_by_one(pair):
        sums = pair.sums
        return NeutralPair(pair.matrix, sums.c - sums.ell - pair.charge + 1)

    monkeypatch.setattr(asmc.neutral, "flip_charge", off_by_one)


def test_mutated_charge_flip_is_caught(broken_charge_flip):
    pool = _Pool(cap=5)
    result = run_property("charge-flip-involution", pool, range(3, 6))
    assert not result.ok
    assert "matrix rows" in result.counterexample  # a concrete witness

    swap = run_property("charge-swap", pool, range(3, 6))
    assert not swap.ok
    assert "matrix rows" in swap.counterexample


def test_mutation_does_not_leak_between_tests():
    pool = _Pool(cap=4)
    assert run_property("charge-flip-involution", pool, range(3, 5)).ok
