import random
import pytest
from hypothesis import given, strategies as st

from asreg import extremal
from asreg.diamond import (CapExceededError, InputError, Rule, complete, find_ambiguities,
                           from_rules, ideal_member, normal_form, normal_words)
from asreg.hilbert import normal_word_count
from asreg.ncpoly import GeneratorTable, MonomialOrder, NcPoly, format_word, parse_poly

XY = GeneratorTable.standard("x", "y")
ORDER = MonomialOrder.from_names(XY, "deglex", ("x", "y"))
X, Y = 0, 1


def P(text):
    return parse_poly(text, XY)


@pytest.fixture(scope="module")
def ext():
    return extremal.system(gens=XY)


def test_single_rule_normal_form():
    s = from_rules([Rule((X, X, Y), P("y*x^2"))], ORDER, 6)
    assert normal_form(P("x^2*y"), s) == P("y*x^2")


def test_reduces_further(ext):
    assert normal_form(P("x^2*y^3"), ext) == P("y^3*x^2")


def test_zero_is_fixed(ext):
    assert normal_form(NcPoly.zero(XY), ext) == NcPoly.zero(XY)


def test_cap_exceeded(ext):
    with pytest.raises(CapExceededError):
        normal_form(NcPoly.monomial(XY, (X,) * 16), ext)


def test_overlap_x2y3():
    rules = [Rule((X, X, Y), P("y*x^2")), Rule((X, Y, Y, Y), P("y^3*x"))]
    witnesses = {a.witness for a in find_ambiguities(rules, 8)}
    assert (X, X, Y, Y, Y) in witnesses


def test_overlap_w3_w2(ext):
    rules = list(ext.rules)
    witnesses = {a.witness for a in find_ambiguities(rules, 10)}
    assert (X, Y, X, Y, X, Y, Y, Y) in witnesses


def test_no_self_overlap_for_x2y():
    assert find_ambiguities([Rule((X, X, Y), P("y*x^2"))], 10) == []


def test_inclusion_ambiguity_found():
    rules = [Rule((X, Y, X), P("y^3")), Rule((Y,), P("x"))]
    kinds = {a.kind for a in find_ambiguities(rules, 5)}
    assert "inclusion" in kinds


def test_ambiguity_order_is_deterministic(ext):
    ambs = find_ambiguities(list(ext.rules), 15)
    keys = [(len(a.witness), a.witness) for a in ambs]
    assert keys == sorted(keys)


def test_extremal_completion(ext):
    leads = {format_word(r.lead, XY) for r in ext.rules}
    assert leads == {"x^2*y", "x*y^3", "x*y*x*y*x*y^2", "x*y*x*y^2*x*y^2"}
    assert ext.degree_cap == 15 and ext.ambiguities_checked > 0


def test_fourth_rule_is_c_times_b(ext):
    # W4 = C*B with B = x*y^2 and C = x*y*x*y^2
    b, c = (X, Y, Y), (X, Y, X, Y, Y)
    assert c + b in ext.leads


def test_rules_tails_below_leads(ext):
    for r in ext.rules:
        for w in r.tail.words():
            assert ORDER.key(w) < ORDER.key(r.lead)


def test_interreduced(ext):
    leads = ext.leads
    for r in ext.rules:
        for w in r.tail.words():
            assert ext.is_normal(w)
        for other in leads:
            if other != r.lead:
                assert not any(r.lead[i:i + len(other)] == other
                               for i in range(len(r.lead) - len(other) + 1))


def test_commutative_plane():
    s = complete([P("x*y - y*x")], ORDER, 10)
    assert len(s.rules) == 1
    assert normal_word_count(s, 10).as_list() == [d + 1 for d in range(11)]


def test_heisenberg_enveloping():
    g = GeneratorTable(("x", "y", "z"), (1, 1, 2))
    rels = [parse_poly(t, g) for t in ("x*y - y*x - z", "x*z - z*x", "y*z - z*y")]
    s = complete(rels, MonomialOrder(g, "deglex", (0, 1, 2)), 10)
    # normal words are z^a y^b x^c
    for d in range(1, 8):
        for w in normal_words(s, d):
            assert list(w) == sorted(w, reverse=True)


def test_inhomogeneous_relation_rejected():
    with pytest.raises(InputError):
        complete([P("x + y^2")], ORDER, 5)


def test_zero_relation_rejected():
    with pytest.raises(InputError):
        complete([NcPoly.zero(XY)], ORDER, 5)


def test_ideal_member(ext):
    r = extremal.r_poly(XY)
    y = P("y")
    x = P("x")
    rel = x * y * r * y - y * r * y * x
    assert ideal_member(rel * y + y * rel, ext)
    assert not ideal_member(x, ext)
    assert ideal_member(P("x^2*y - y*x^2"), ext)


def test_reduce_matches_normal_form(ext):
    p = P("x^3*y^4*x - y*x*y*x*y^3 + 2*x*y*x*y*x*y^2*x")
    assert ext.reduce(p) == normal_form(p, ext)


# ---------- properties ----------

words = st.lists(st.integers(0, 1), min_size=0, max_size=9).map(tuple)
coeffs = st.integers(-3, 3).filter(bool)
polys = st.dictionaries(words, coeffs, max_size=5).map(lambda d: NcPoly(XY, d))


_EXT = extremal.system(gens=XY)


@given(polys)
def test_nf_idempotent(p):
    n = normal_form(p, _EXT)
    assert normal_form(n, _EXT) == n
    assert all(_EXT.is_normal(w) for w in n.words())


@given(polys, polys, st.integers(-3, 3))
def test_nf_linear(p, q, c):
    lhs = normal_form(p + q.scale(c), _EXT)
    assert lhs == normal_form(p, _EXT) + normal_form(q, _EXT).scale(c)


@given(polys, st.integers(0, 10 ** 6))
def test_nf_strategy_independent(p, seed):
    assert normal_form(p, _EXT, rng=random.Random(seed)) == normal_form(p, _EXT)


RELATION_SETS = [
    [extremal.RELATIONS[0], extremal.RELATIONS[1], extremal.RELATIONS[2]],
    ["x*y - y*x", "x^3 - y^3"],
    ["x^2*y - y*x^2", "x*y^2 - y^2*x"],
    ["x*y*x - y*x*y", "x^2 - y^2"],
]


@given(st.sampled_from(RELATION_SETS), st.randoms(use_true_random=False))
def test_completion_permutation_invariant(rels, rnd):
    polys_ = [P(r) for r in rels]
    shuffled = list(polys_)
    rnd.shuffle(shuffled)
    scaled = [p.scale(rnd.choice([1, -1, 2])) for p in shuffled]
    base = complete(polys_, ORDER, 9)
    other = complete(scaled, ORDER, 9)
    assert set(base.rules) == set(other.rules)
