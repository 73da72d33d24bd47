import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pinwheel_forge.pinwheel import monodromy_check, validate_pinwheel
from pinwheel_forge.torus_actions import (
    OrbitData,
    OrbitDataError,
    barycentric_pinwheel,
    classify_action,
    parse_orbit_data,
    random_orbit_data,
    sphere_geometry,
    validate_orbit_data,
)

EXAMPLE = "(1,-1);(0,1);(1,-1);(2,-1)"


def det2(u, v):
    return u[0] * v[1] - v[0] * u[1]


def oracle_self_ints(pairs):
    """Triple products of the neighbouring determinants, written out directly."""
    k = len(pairs)
    out = []
    for i in range(k):
        prev, cur, nxt = pairs[i - 1], pairs[i], pairs[(i + 1) % k]
        out.append(det2(prev, cur) * det2(cur, nxt) * det2(prev, nxt))
    return out


def oracle_rank_signature(gram):
    ev = np.linalg.eigvalsh(np.array(gram, dtype=float))
    pos, neg = int((ev > 1e-9).sum()), int((ev < -1e-9).sum())
    return pos + neg, pos - neg


orbit_data = st.builds(
    lambda seed, k: random_orbit_data(random.Random(seed), k),
    st.integers(0, 2 ** 32), st.integers(3, 8),
)


# --- parsing and validation --------------------------------------------------

def test_parse_round_trip():
    d = parse_orbit_data(EXAMPLE)
    assert d.pairs == ((1, -1), (0, 1), (1, -1), (2, -1))
    assert parse_orbit_data(str(d)) == d


@pytest.mark.parametrize("text", ["", "(1,2", "(a,b)", "(1,0) junk"])
def test_parse_errors(text):
    with pytest.raises(OrbitDataError):
        parse_orbit_data(text)


def test_example_is_valid():
    assert validate_orbit_data(parse_orbit_data(EXAMPLE)).ok


def test_gcd_failure_is_named():
    report = validate_orbit_data(parse_orbit_data("(2,4);(1,0)"))
    assert "gcd[0]" in [i.name for i in report.failures()]


def test_determinant_failure_is_named():
    report = validate_orbit_data(parse_orbit_data("(1,0);(2,1);(1,0)"))
    assert [i.name for i in report.failures()] == ["det[0]"]


def test_invalid_data_rejected_by_geometry():
    with pytest.raises(OrbitDataError):
        sphere_geometry(parse_orbit_data("(1,0);(2,1);(1,0)"))


# --- geometry and classification --------------------------------------------

def test_example_geometry():
    d = parse_orbit_data(EXAMPLE)
    config = sphere_geometry(d)
    assert config.self_ints == (-2, 0, 2, 0)
    assert list(config.self_ints) == oracle_self_ints(d.pairs)
    assert config.b2 == 2


def test_example_classification():
    result = classify_action(parse_orbit_data(EXAMPLE))
    assert (result.s2xs2_count, result.cp2_count, result.cp2bar_count) == (1, 0, 0)
    assert str(result) == "1 x S2xS2"


def test_two_fixed_points_is_s4():
    assert classify_action(parse_orbit_data("(1,0);(0,1)")).kind == "S4"


def test_three_pair_adjacents_are_units():
    for seed in range(50):
        d = random_orbit_data(random.Random(seed), 3)
        assert set(sphere_geometry(d).adjacents) <= {-1, 1}


def test_projective_plane_fan():
    # counter-clockwise fan of CP2; with adjacent sign -D the form reads as -1
    result = classify_action(parse_orbit_data("(1,0);(0,1);(-1,-1)"))
    assert result.cp2_count + result.cp2bar_count == 1


@settings(max_examples=200)
@given(orbit_data)
def test_gram_rank_is_k_minus_two(d):
    config = sphere_geometry(d)
    rank, _ = oracle_rank_signature(config.gram())
    assert rank == d.k - 2
    assert list(config.self_ints) == oracle_self_ints(d.pairs)


@settings(max_examples=200)
@given(orbit_data)
def test_classification_matches_eigen_oracle(d):
    result = classify_action(d)
    rank, sig = oracle_rank_signature(sphere_geometry(d).gram())
    inv = result.invariants()
    assert inv.b_plus + inv.b_minus == rank
    assert inv.b_plus - inv.b_minus == sig


@settings(max_examples=150)
@given(orbit_data, st.integers(0, 7))
def test_classification_rotation_invariant(d, shift):
    assert str(classify_action(d.rotated(shift))) == str(classify_action(d))


@settings(max_examples=150)
@given(orbit_data)
def test_reversal_flips_orientation_only(d):
    fwd, back = classify_action(d), classify_action(d.reversed())
    assert fwd.s2xs2_count == back.s2xs2_count
    assert (fwd.cp2_count, fwd.cp2bar_count) == (back.cp2bar_count, back.cp2_count)


@settings(max_examples=150)
@given(orbit_data)
def test_self_intersection_parity(d):
    config = sphere_geometry(d)
    k = d.k
    for i in range(k):
        left, right = d.det(i - 1, i), d.det(i, (i + 1) % k)
        if left == right and d.det(i - 1, (i + 1) % k) % 2 == 0:
            assert config.self_ints[i] % 2 == 0


# --- barycentric pinwheel ----------------------------------------------------

def test_example_barycentric():
    p = barycentric_pinwheel(parse_orbit_data(EXAMPLE))
    assert [abs(c.s.self_int) for c in p.components] == [2, 0, 2, 0]
    assert [c.name for c in p.components] == ["F_2-complement", "F_0-complement"] * 2
    assert validate_pinwheel(p).ok


def test_square_fan_gives_four_b0():
    p = barycentric_pinwheel(parse_orbit_data("(1,0);(0,1);(-1,0);(0,-1)"))
    assert p.gluing_parameters() == [0, 0, 0, 0]
    assert all(c.euler == 1 for c in p.components)
    assert monodromy_check(p.gluing_parameters()).kind == "PlusId"


def test_barycentric_needs_three_points():
    with pytest.raises(OrbitDataError):
        barycentric_pinwheel(parse_orbit_data("(1,0);(0,1)"))


@settings(max_examples=300)
@given(orbit_data)
def test_barycentric_always_validates(d):
    p = barycentric_pinwheel(d)
    assert validate_pinwheel(p).ok
    assert p.euler_sum() == p.target.euler == d.k


def test_sampler_is_seeded():
    a = [random_orbit_data(random.Random(7), k) for k in range(3, 7)]
    b = [random_orbit_data(random.Random(7), k) for k in range(3, 7)]
    assert a == b
    assert all(isinstance(d, OrbitData) and validate_orbit_data(d).ok for d in a)
