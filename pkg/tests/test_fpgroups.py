import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pinwheel_forge.fpgroups import (
    Presentation,
    PresentationSyntaxError,
    Word,
    abelianization,
    build_family_presentation,
    commutator,
    default_max_cosets,
    family_text,
    format_presentation,
    parse_presentation,
    parse_word,
    todd_coxeter,
    verify_trivial,
)

GENS = ("a", "b", "c")
syllables = st.lists(st.tuples(st.sampled_from(GENS), st.integers(-3, 3)), max_size=12)


def letters_reduce(letters):
    """Stack-based free reduction on unit letters; an independent oracle."""
    out = []
    for g, e in letters:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return out


def unit_letters(sylls):
    for g, e in sylls:
        for _ in range(abs(e)):
            yield g, 1 if e > 0 else -1


def cyclically_reduce(letters):
    letters = list(letters)
    while len(letters) >= 2 and letters[0] == (letters[-1][0], -letters[-1][1]):
        letters = letters[1:-1]
    return letters


def cyclic_conjugates(letters):
    letters = cyclically_reduce(letters)
    return {tuple(letters[i:] + letters[:i]) for i in range(max(len(letters), 1))}


# --- words -------------------------------------------------------------------

@given(syllables)
def test_reduction_matches_stack_oracle(sylls):
    w = Word(tuple(sylls))
    assert list(w.letters()) == letters_reduce(unit_letters(sylls))


@given(syllables)
def test_reduction_idempotent_and_shrinking(sylls):
    w = Word(tuple(sylls))
    assert Word(w.syllables) == w
    assert len(w) <= sum(abs(e) for _, e in sylls)


@given(syllables, syllables)
def test_group_laws(x, y):
    u, v = Word(tuple(x)), Word(tuple(y))
    assert u * u.inverse() == Word.identity()
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u ** 3 == u * u * u
    assert u ** -2 == u.inverse() * u.inverse()


@given(syllables)
def test_print_parse_round_trip(sylls):
    w = Word(tuple(sylls))
    assert parse_word(str(w), GENS) == w


def test_commutator_conventions():
    a, b = Word.gen("a"), Word.gen("b")
    assert str(commutator(a, b)) == "a b a^-1 b^-1"
    assert str(commutator(a, b, "inverse_first")) == "a^-1 b^-1 a b"
    with pytest.raises(ValueError):
        commutator(a, b, "sideways")


# --- presentation text -------------------------------------------------------

def test_parse_commutator():
    p = parse_presentation("gens: a b ; rels: [a,b]")
    assert [str(r) for r in p.relators] == ["a b a^-1 b^-1"]


def test_parse_power():
    p = parse_presentation("gens: a ; rels: a^3")
    assert [str(r) for r in p.relators] == ["a^3"]


def test_degenerate_commutator_reduces():
    p = parse_presentation("gens: a b ; rels: a[b^-1,b^-1]")
    assert [str(r) for r in p.relators] == ["a"]


def test_comments_and_newlines():
    text = "# header\ngens: a b ;\nrels:\n  a^2,  # first\n  b^3\n"
    assert format_presentation(parse_presentation(text)) == "gens: a b ; rels: a^2, b^3"


@pytest.mark.parametrize("text, line, column", [
    ("gens: a ; rels: a^", 1, 19),
    ("gens: a ; rels: b", 1, 17),
    ("gens: a ;\nrels: [a,a", 2, 11),
    ("gens a ; rels: a", 1, 1),
    ("gens: a ; rels: a )", 1, 19),
])
def test_syntax_errors_carry_location(text, line, column):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_undeclared_generator_in_constructor():
    with pytest.raises(ValueError):
        Presentation(("a",), (Word.gen("b"),))


def test_presentation_round_trip():
    p = build_family_presentation(3, 2)
    assert parse_presentation(format_presentation(p)) == p


# --- abelianization and enumeration -----------------------------------------

def test_abelianization_examples():
    assert abelianization(parse_presentation("gens: a b ; rels: [a,b]")) == [0, 0]
    assert abelianization(parse_presentation("gens: a ; rels: a^3")) == [3]
    assert abelianization(build_family_presentation(3, 1)) == []


def test_abelianization_oracle_for_k3():
    # hand reduction: exponent sums of the k=3 relators give the identity on a_i, b_i
    p = build_family_presentation(3, 1)
    rows = [[r.exponent_sum(g) for g in p.generators] for r in p.relators]
    nonzero = [row for row in rows if any(row)]
    assert sorted(map(tuple, nonzero)) == sorted(
        tuple(int(i == j) for j in range(6)) for i in range(6)
    )


@pytest.mark.parametrize("m", range(1, 13))
def test_cyclic_groups(m):
    assert str(todd_coxeter(parse_presentation(f"gens: a ; rels: a^{m}"))) == f"finite({m})"


@pytest.mark.parametrize("text, order", [
    ("gens: a b ; rels: a, b", 1),
    ("gens: a b ; rels: a^2, b^3, (a b)^3", 12),
    ("gens: a b ; rels: a^2, b^3, (a b)^4", 24),
    ("gens: a b ; rels: a^2, b^3, (a b)^5", 60),
    ("gens: a b ; rels: a^3, b^3, [a,b]^3, [[a,b],a], [[a,b],b]", 27),
])
def test_known_orders(text, order):
    assert todd_coxeter(parse_presentation(text)).order == order


def test_limit_gives_inconclusive():
    p = parse_presentation("gens: a b ; rels: [a,b]")
    result = todd_coxeter(p, max_cosets=50)
    assert result.status == "inconclusive" and result.cosets_used <= 50


def test_verdicts():
    assert str(verify_trivial(parse_presentation("gens: a b ; rels: [a,b]"))) == "NontrivialH1(0, 0)"
    perfect = verify_trivial(parse_presentation("gens: a b ; rels: a^2, b^3, (a b)^5"))
    assert perfect.status == "NontrivialPerfect"
    assert verify_trivial(parse_presentation("gens: a ; rels: a")).status == "Trivial"


def test_infinite_perfect_group_stays_inconclusive():
    # Higman's group is infinite with trivial abelianization
    p = parse_presentation(
        "gens: a b c d ; rels: a^-1 b a b^-2, b^-1 c b c^-2, c^-1 d c d^-2, d^-1 a d a^-2"
    )
    assert verify_trivial(p, max_cosets=2000).status == "Inconclusive"


def test_env_limit(monkeypatch):
    monkeypatch.setenv("PINWHEEL_FORGE_MAX_COSETS", "123")
    assert default_max_cosets() == 123
    monkeypatch.delenv("PINWHEEL_FORGE_MAX_COSETS")
    assert default_max_cosets() == 1_000_000


def test_enumeration_is_deterministic():
    p = build_family_presentation(2, 3, 1)
    runs = {str(todd_coxeter(p, 5000)) + f"/{todd_coxeter(p, 5000).cosets_used}" for _ in range(3)}
    assert len(runs) == 1
    q = parse_presentation("gens: a b ; rels: [a,b]")
    assert todd_coxeter(q, 300) == todd_coxeter(q, 300)


# --- surgery families --------------------------------------------------------

def test_k3_shape():
    p = build_family_presentation(3, 1)
    assert p.generators == ("a0", "a1", "a2", "b0", "b1", "b2")
    assert len(p.relators) == 15


def test_k2_shape():
    p = build_family_presentation(2, 1, 0)
    assert p.generators == ("a0", "a1", "a2", "b0", "b1", "b2", "y0")
    text = family_text(2, 1, 0)
    for block in ("# A\n", "# A-hat\n", "# I0\n"):
        assert block in text


def test_k7_shape():
    p = build_family_presentation(7, 5)
    assert p.generators == ("a", "b", "mu0", "mu1")
    expected = parse_presentation("gens: a b mu0 mu1 ; rels: a[b^-1,b^-1], b [b,a^-1]^-5, mu0 [a,b]^-1")
    for r in expected.relators:
        assert r in p.relators


def test_k4_has_meridian():
    p = build_family_presentation(4, 1, 0)
    assert "mu" in p.generators
    assert parse_word("mu [a2,b2]^-1", p.generators) in p.relators


@pytest.mark.parametrize("bad", [dict(k=5, n=1), dict(k=3, n=0), dict(k=2, n=1)])
def test_family_parameter_errors(bad):
    with pytest.raises(ValueError):
        build_family_presentation(**bad)


FAMILY_CASES = [
    (k, n, kappa)
    for k in (2, 3, 4, 7)
    for n in range(1, 6)
    for kappa in (range(-2, 3) if k in (2, 4) else [None])
]


@pytest.mark.parametrize("k, n, kappa", FAMILY_CASES)
@pytest.mark.parametrize("convention", ["standard", "inverse_first"])
def test_families_are_simply_connected(k, n, kappa, convention):
    verdict = verify_trivial(build_family_presentation(k, n, kappa, convention=convention), 10 ** 6)
    assert verdict.status == "Trivial"
    assert verdict.enumeration.order == 1


@pytest.mark.parametrize("k, n, kappa", [c for c in FAMILY_CASES if c[0] in (2, 4)])
def test_expanded_and_generator_modes_agree(k, n, kappa):
    macro = verify_trivial(build_family_presentation(k, n, kappa, macro=True))
    spelled = verify_trivial(build_family_presentation(k, n, kappa, macro=False))
    assert macro.status == spelled.status == "Trivial"
    assert build_family_presentation(k, n, kappa, macro=False).generators[-2:] == ("xi", "eta")


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("kappa", range(-2, 3))
def test_twisted_relator_forms_agree(n, kappa):
    text = family_text(2, n, kappa)
    twisted = "b1[a1^-1,b2]" if n == 1 else f"b1([a1^-1,b2])^{n}"
    assert twisted in text
    rewritten = text.replace(twisted, f"b1^-1 [b2,a1^-1]^{n}")
    p, q = parse_presentation(text), parse_presentation(rewritten)
    # the two relators are inverse up to cyclic rotation in the free group
    r_old = next(r for r in p.relators if r not in q.relators)
    r_new = next(r for r in q.relators if r not in p.relators)
    assert tuple(r_new.letters()) in cyclic_conjugates(list(r_old.inverse().letters()))
    assert todd_coxeter(p).order == todd_coxeter(q).order == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.integers(-2, 2), st.sampled_from([2, 4]))
def test_family_text_is_stable(n, kappa, k):
    assert family_text(k, n, kappa) == family_text(k, n, kappa)
    assert build_family_presentation(k, n, kappa) == parse_presentation(family_text(k, n, kappa))


def test_runs_do_not_share_state():
    first = [str(verify_trivial(build_family_presentation(3, n))) for n in range(1, 4)]
    again = [str(verify_trivial(build_family_presentation(3, n))) for n in reversed(range(1, 4))]
    assert first == list(reversed(again)) == ["Trivial"] * 3
