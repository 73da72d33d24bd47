import json
from dataclasses import replace

import pytest

from pinwheel_forge.catalog import (
    CATALOG,
    catalog_lookup,
    catalog_names,
    dumps,
    loads,
    pinwheel_from_json,
    pinwheel_to_json,
)
from pinwheel_forge.pinwheel import handle_trade, push_through, validate_pinwheel

EXPECTED_NAMES = {
    "cp2", "cp2_k1", "s2xs2", *(f"cp2_k{k}" for k in range(2, 10)),
    "q2_model", "q3_model", "q4_model", "q6_model", "q7_model", "q9_model",
}

SURGERED = {"cp2_k2": 3, "cp2_k3": 3, "cp2_k4": 2, "cp2_k6": 1, "cp2_k7": 1, "cp2_k9": 1}


def test_names():
    assert set(catalog_names()) == EXPECTED_NAMES


def test_unknown_name():
    with pytest.raises(KeyError, match="unknown catalog entry"):
        catalog_lookup("cp2_k10")


@pytest.mark.parametrize("name", sorted(EXPECTED_NAMES))
def test_every_entry_validates(name):
    assert validate_pinwheel(catalog_lookup(name)).ok


@pytest.mark.parametrize("name", [n for n in sorted(EXPECTED_NAMES) if n.startswith("cp2") or n == "s2xs2"])
def test_euler_sums(name):
    p = catalog_lookup(name)
    expected = 4 if name == "s2xs2" else 3 + (0 if name == "cp2" else int(name.split("_k")[1]))
    assert p.target.euler == expected
    if p.components:
        assert p.euler_sum() == expected


@pytest.mark.parametrize("name, pairs", sorted(SURGERED.items()))
def test_surgered_pair_counts(name, pairs):
    assert catalog_lookup(name).surgered_pairs == pairs


def test_incomplete_entries():
    flagged = {n for n, p in CATALOG.items() if p.incomplete}
    assert {"cp2_k5", "cp2_k8", "cp2_k9"} <= flagged
    assert all(not catalog_lookup(n).incomplete for n in ("cp2", "cp2_k4", "s2xs2"))


def test_s2xs2_entry():
    p = catalog_lookup("s2xs2")
    assert p.k == 4
    assert all((c.s.self_int, c.t.self_int) == (0, 0) for c in p.components)
    assert p.certification.kind == "matrix"


def test_four_point_blowup_entry():
    p = catalog_lookup("cp2_k4")
    assert sorted(c.euler for c in p.components) == [1, 2, 4]
    assert p.euler_sum() == 7


def test_q3_model():
    p = catalog_lookup("q3_model")
    assert p.k == 3
    assert (p.target.b1, p.target.b_plus, p.target.b_minus) == (6, 7, 9)


def test_matrix_entries_close_up():
    for p in CATALOG.values():
        if p.certification is not None and p.certification.kind == "matrix" and p.components:
            report = validate_pinwheel(p)
            assert any(i.name == "monodromy" and i.ok for i in report.items), p.name


@pytest.mark.parametrize("name", sorted(EXPECTED_NAMES))
def test_json_round_trip(name):
    p = catalog_lookup(name)
    doc = pinwheel_to_json(p)
    assert json.loads(json.dumps(doc)) == doc
    back = pinwheel_from_json(doc)
    # meridians are recorded by moves, not stored
    assert back.components == tuple(replace(c, meridian=None) for c in p.components)
    assert back.target == p.target and back.certification == p.certification
    assert loads(dumps(p)) == back


def test_moves_preserve_euler_and_target():
    p = catalog_lookup("s2xs2")
    traded = handle_trade(p)
    assert traded.euler_sum() == p.euler_sum() and traded.target == p.target
    q = catalog_lookup("cp2_k6")
    moved = q
    # K0 first: once pushed it satisfies the trading condition for L
    for i, c in enumerate(q.components):
        if c.push_through_eligible:
            moved = push_through(moved, i)
    assert moved.euler_sum() == q.euler_sum() and moved.target == q.target
    assert sum(c.meridian == "mu" for c in moved.components) == 2
