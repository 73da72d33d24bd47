import itertools
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pinwheel_forge.laurent import LaurentPoly, parse_laurent
from pinwheel_forge.swkit import (
    CURVE_NULLHOMOLOGOUS,
    NULLHOMOLOGOUS,
    AdjConstraint,
    CharClass,
    ConfinementWarning,
    OddLattice,
    canonical_genus_feasibility,
    class_from_standard,
    distinguishing_invariant,
    enumerate_basic_classes,
    format_class,
    minimality_check,
    mms_family,
    mms_scalar_values,
    parse_class,
    standard_constraints,
    surgery_h1,
)

K3 = [AdjConstraint(parse_class(s, 4), g) for s, g in [
    ("h - e1", 2), ("h - e2", 2), ("h - e3", 2), ("e1", 1), ("e2", 1), ("e3", 1), ("h", 3),
]]
K2 = [AdjConstraint(parse_class(s, 3), g) for s, g in [
    ("h - e1", 2), ("h - e2", 2), ("e1", 1), ("h", 3),
]]


def brute_force(rank, constraints, c_square, bound):
    """Scan every integer vector in the box, in standard coordinates."""
    found = set()
    for v in itertools.product(range(-bound, bound + 1), repeat=rank):
        if any(x % 2 == 0 for x in v):
            continue
        square = v[0] ** 2 - sum(x * x for x in v[1:])
        if square != c_square:
            continue
        ok = True
        for c in constraints:
            s = c.surface_class
            pair = v[0] * s[0] - sum(x * y for x, y in zip(v[1:], s[1:]))
            self_square = s[0] ** 2 - sum(x * x for x in s[1:])
            if abs(pair) + self_square > 2 * c.genus - 2:
                ok = False
                break
        if ok:
            found.add(tuple(v))
    return found


def standard_set(classes):
    return {k.standard() for k in classes}


# --- classes -----------------------------------------------------------------

def test_class_text_round_trip():
    std = parse_class("3h - e1 - e2 - e3")
    assert std == (3, -1, -1, -1)
    assert format_class(std) == "3h - e1 - e2 - e3"
    assert str(class_from_standard(std)) == "3h - e1 - e2 - e3"
    assert parse_class("h", 3) == (1, 0, 0)


@pytest.mark.parametrize("text", ["3h e1", "3x", "h - e0", "h + e5"])
def test_class_parse_errors(text):
    with pytest.raises(ValueError):
        parse_class(text, 4)


def test_char_class_must_be_odd():
    with pytest.raises(ValueError):
        CharClass((3, 2, 1))


def test_square_and_sign():
    k = class_from_standard((3, -1, -1, -1))
    assert k.square() == 6
    assert (-k).standard() == (-3, 1, 1, 1)


# --- enumeration -------------------------------------------------------------

def test_three_point_case():
    found = enumerate_basic_classes(OddLattice(4), K3, 6)
    assert standard_set(found) == {(3, -1, -1, -1), (-3, 1, 1, 1)}
    assert standard_set(found) == brute_force(4, K3, 6, 5)


def test_two_point_case():
    found = enumerate_basic_classes(OddLattice(3), K2, 7)
    assert standard_set(found) == {(3, -1, -1), (-3, 1, 1)}
    assert standard_set(found) == brute_force(3, K2, 7, 5)


def test_standard_constraints_match_three_point_set():
    assert set(standard_constraints(4)) == set(K3)


def test_wrong_parity_square_is_empty():
    # characteristic squares are congruent to the signature mod 8
    assert enumerate_basic_classes(OddLattice(4), K3, 5) == []


def test_enumeration_errors():
    with pytest.raises(ValueError):
        enumerate_basic_classes(OddLattice(4), [], 6)
    with pytest.raises(ValueError):
        enumerate_basic_classes(OddLattice(4), K3, 6, bound=0)


def test_confinement_warning():
    with pytest.warns(ConfinementWarning):
        enumerate_basic_classes(OddLattice(3), [AdjConstraint((0, 1, 0), 1)], -1)


def test_shipped_cases_do_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error", ConfinementWarning)
        enumerate_basic_classes(OddLattice(4), K3, 6)
        enumerate_basic_classes(OddLattice(3), K2, 7)


def random_constraints(rank):
    vec = st.tuples(*[st.integers(-2, 2)] * rank)
    return st.lists(st.builds(AdjConstraint, vec, st.integers(0, 4)), min_size=1, max_size=5)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda r: st.tuples(
    st.just(r), random_constraints(r), st.integers(-6, 10), st.integers(1, 3))))
def test_matches_brute_force(case):
    rank, constraints, c_square, bound = case
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConfinementWarning)
        found = enumerate_basic_classes(OddLattice(rank), constraints, c_square, bound)
    assert standard_set(found) == brute_force(rank, constraints, c_square, bound)
    assert found == sorted(found, key=lambda k: k.coeffs)
    lat = OddLattice(rank)
    for k in found:
        assert all(x % 2 for x in k.coeffs)
        assert (k.square() - lat.signature) % 8 == 0
    assert standard_set(found) == {(-k).standard() for k in found}


# --- minimality --------------------------------------------------------------

def test_minimal_pair():
    k = class_from_standard((3, -1, -1, -1))
    report = minimality_check([k, -k])
    assert report.minimal
    assert 24 in report.difference_squares


def test_exceptional_pair_is_flagged():
    plus = class_from_standard((3, -1, -1, -1, 1))
    minus = class_from_standard((3, -1, -1, -1, -1))
    report = minimality_check([plus, minus])
    assert report.status == "PossiblyNonminimal"
    assert -4 in report.difference_squares
    a, b = report.witness
    diff = [x - y for x, y in zip(a.standard(), b.standard())]
    assert diff[0] ** 2 - sum(x * x for x in diff[1:]) == -4


def test_negation_closure_is_enforced():
    k = class_from_standard((1, 1))
    assert minimality_check([k]).difference_squares == minimality_check([k, -k]).difference_squares


# --- surgery families --------------------------------------------------------

def test_family_examples():
    zero = LaurentPoly()
    assert mms_family(zero, parse_laurent("t^-1 - t"), 3) == parse_laurent("3*t^-1 - 3*t")
    f = parse_laurent("2*t^3 - 5 + 2*t^-3")
    assert mms_family(f, parse_laurent("t"), 0) == f
    one = LaurentPoly.constant(1)
    assert mms_family(one, one, 4) == LaurentPoly.constant(5)
    assert mms_scalar_values(4)[(1, 1)] == 5


def test_distinguishing_invariant_examples():
    assert distinguishing_invariant(parse_laurent("2*t^3 - 5 + 2*t^-3")) == 5
    assert distinguishing_invariant(LaurentPoly()) == 0
    f0 = parse_laurent("t^-1 - t")
    values = [distinguishing_invariant(mms_family(LaurentPoly(), f0, n)) for n in range(1, 101)]
    assert values == list(range(1, 101))


laurent = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly.from_dict)


@given(laurent, laurent, st.integers(-50, 50))
def test_family_is_affine(f_inf, f_zero, n):
    assert mms_family(f_inf, f_zero, n + 1) - mms_family(f_inf, f_zero, n) == f_zero


@settings(max_examples=50)
@given(laurent, laurent.filter(bool))
def test_invariant_eventually_increasing(f_inf, f_zero):
    values = [distinguishing_invariant(mms_family(f_inf, f_zero, n)) for n in range(1, 101)]
    tail = values[20:]
    assert all(a < b for a, b in zip(tail, tail[1:]))


@given(laurent)
def test_laurent_text_round_trip(f):
    assert parse_laurent(str(f)) == f


@pytest.mark.parametrize("text", ["", "t^", "t ^ x", "+", "2 3"])
def test_laurent_parse_errors(text):
    with pytest.raises(ValueError):
        parse_laurent(text)


def test_surgery_h1_examples():
    assert surgery_h1([], 3, 1, NULLHOMOLOGOUS) == [3]
    assert surgery_h1([], 1, 5, CURVE_NULLHOMOLOGOUS) == []
    assert surgery_h1([2], 1, 1, NULLHOMOLOGOUS) == [2]
    assert surgery_h1([], 0, 1, NULLHOMOLOGOUS) == [0]


def test_surgery_h1_rejections():
    with pytest.raises(ValueError):
        surgery_h1([], 2, 4, NULLHOMOLOGOUS)
    with pytest.raises(ValueError):
        surgery_h1([], 2, 1, CURVE_NULLHOMOLOGOUS)
    with pytest.raises(ValueError):
        surgery_h1([], 1, 1, "knotted")


# --- genus feasibility -------------------------------------------------------

@pytest.mark.parametrize("k, s, feasible", [(3, 3, True), (8, 1, False), (7, 1, True), (2, 3, True)])
def test_feasibility_examples(k, s, feasible):
    report = canonical_genus_feasibility(k, s)
    assert report.feasible is feasible
    assert report.required_genus == 10 - k
    assert report.lower_bound == 1 + 2 * s


def test_feasibility_range():
    with pytest.raises(ValueError):
        canonical_genus_feasibility(10, 1)
    with pytest.raises(ValueError):
        canonical_genus_feasibility(3, 0)


def test_feasibility_monotone():
    for k in range(2, 10):
        for s in range(1, 6):
            here = canonical_genus_feasibility(k, s).feasible
            if k < 9:
                assert here or not canonical_genus_feasibility(k + 1, s).feasible
            assert here or not canonical_genus_feasibility(k, s + 1).feasible
