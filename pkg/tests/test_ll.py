import itertools
import random
from collections import Counter
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from webmodels.families import Mat, Multiset, Tagged, Vec, atoms, identity, mat_apply
from webmodels.ll import (TruncCfg, bang_mat, bang_space, bang_web, der_mat, dig_mat, flip_entry, law_equal,
                          linarrow_space, one_space, promote, run_ll_suite, seely2_mat, struct_mat, tensor_space,
                          with_space)
from webmodels.pcr import OMEGA, UsageError, carrier
from webmodels.report import LawReport
from webmodels.spaces import MODELS, make_space, member_hom, Certified

R = carrier("rat")


def mfact(elems):
    out = 1
    for k in Counter(elems).values():
        out *= factorial(k)
    return out


def brute_bang(s, m, p):
    """(!s)_{m,p}: sum over multisets r of pairs projecting to m and p of p!/r! times the product."""
    total = F(0)
    seen = set()
    for perm in itertools.permutations(p.elems):
        r = tuple(sorted(zip(m.elems, perm), key=repr))
        if r in seen:
            continue
        seen.add(r)
        prod = F(1)
        for a, b in r:
            prod *= s[(a, b)]
        total += F(mfact(p.elems), mfact(r)) * prod
    return total


def test_promote_example():
    X = make_space("pcoh", 1)
    x = Vec(X.web, X.pcr, {0: F(1, 2)})
    got = promote(x, bang_web(X, 2))
    assert got.entries == {Multiset(): 1, Multiset([0]): F(1, 2), Multiset([0, 0]): F(1, 4)}


def test_coherence_bang_web_is_clique_multisets():
    X = make_space("coh", {"web": 3, "graph": [(0, 1), (1, 2)]})
    want = {Multiset(c) for k in range(3) for c in itertools.combinations_with_replacement(range(3), k)
            if all(a == b or abs(a - b) == 1 for a, b in itertools.combinations(c, 2))}
    assert set(bang_web(X, 2)) == want
    rep = run_ll_suite("coh", sizes=(3,), cfg=TruncCfg(2), samples=1)
    assert rep.ok


def test_bang_web_degree_bound():
    X = make_space("pcoh", 2)
    for d in range(4):
        w = bang_web(X, d)
        assert len(w) == sum(k + 1 for k in range(d + 1))  # multisets of size k on 2 labels
        assert all(len(m) <= d for m in w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_bang_mat_matches_brute_force(seed):
    rng = random.Random(seed)
    X, Y = make_space("kothe", rng.randint(1, 2)), make_space("kothe", rng.randint(1, 2))
    s = Mat(X.web, Y.web, R, {(a, b): F(rng.randint(-3, 3), rng.randint(1, 3)) for a in X.web for b in Y.web})
    bx, by = bang_web(X, 3), bang_web(Y, 3)
    bs = bang_mat(s, bx, by)
    for m in bx:
        for p in by:
            want = brute_bang(s, m, p) if len(m) == len(p) else 0
            assert bs[(m, p)] == want


def test_bang_of_identity_is_identity():
    for model in MODELS:
        X = make_space(model, 2)
        bx = bang_web(X, 3)
        assert bang_mat(identity(X.web, X.model.signed), bx, bx) == identity(bx, X.model.signed)


def test_der_and_dig_orientation():
    X = make_space("pcoh", 2)
    bX = bang_space(X, 2)
    bbX = bang_web(bX, 2)
    dig = dig_mat(bX.web, bbX, R)
    assert dig.dom == bX.web and dig.cod == bbX
    x = Vec(X.web, R, {0: F(1, 2), 1: F(1, 3)})
    xb = promote(x, bX.web)
    assert mat_apply(der_mat(bX.web, X.web, R), xb) == x
    assert mat_apply(dig, xb) == promote(xb, bbX)


def test_der_is_a_morphism():
    X = make_space("pcoh", 1)
    bX = bang_space(X, 2)
    assert member_hom(bX, X, der_mat(bX.web, X.web, X.pcr)) == Certified()


def test_seely_tags():
    X, Y = make_space("rel", 1), make_space("rel", 1)
    bx, by, bxy = bang_web(X, 2), bang_web(Y, 2), bang_web(with_space(X, Y), 2)
    s2 = seely2_mat(bx, by, bxy, R)
    m = Multiset([0])
    assert s2[((m, m), Multiset([Tagged(1, 0), Tagged(2, 0)]))] == 1


def test_units_and_arrows():
    one = one_space("pcoh")
    assert len(tensor_space(one, one).web) == 1
    X, Y = make_space("pcoh", 2), make_space("pcoh", 3)
    assert len(linarrow_space(X, Y).web) == 6
    with pytest.raises(UsageError):
        TruncCfg(bang_degree=-1)
    with pytest.raises(UsageError):
        struct_mat("nope", [X])


def test_law_equal_verdicts():
    rep = LawReport("t")
    X = make_space("coh", {"web": 2, "graph": []})
    s = Mat(X.web, X.web, X.pcr, {(0, 0): OMEGA, (1, 0): OMEGA})
    x = Vec(X.web, X.pcr, {0: OMEGA, 1: OMEGA})
    assert law_equal(rep, "lhs-undefined", mat_apply(s, x), x) == "undefined-sum"
    assert law_equal(rep, "rhs-undefined", x, mat_apply(s, x)) == "fail"
    assert law_equal(rep, "region-misses", x, x, region=lambda k: False) == "fail"
    y = Vec(X.web, X.pcr, {0: OMEGA})
    assert law_equal(rep, "differ", x, y) == "fail"
    assert rep.cases[-1].witness["entry"] == 1


@pytest.mark.parametrize("model", sorted(MODELS))
def test_ll_suite_small(model):
    rep = run_ll_suite(model, sizes=(1, 2), cfg=TruncCfg(2), samples=1)
    assert rep.ok, [(c.case_id, c.witness) for c in rep.failures[:3]]


@pytest.mark.parametrize("kind", ["dig", "der", "seely2", "seely2_inv"])
@pytest.mark.parametrize("model", ["pcoh", "coh", "kothe"])
def test_mutations_are_caught(kind, model):
    suite = "ll.seely" if kind.startswith("seely") else "ll.comonad"
    rep = run_ll_suite(model, sizes=(2,), cfg=TruncCfg(2), samples=1, suites=(suite,), mutations={kind: None})
    assert rep.failures
    assert "entry" in rep.failures[0].witness or "rhs undefined" in rep.failures[0].witness


def test_flip_entry_toggles():
    s = identity(atoms(2), R)
    flipped, key = flip_entry(s, (0, 0))
    assert flipped[(0, 0)] == 0 and key == (0, 0)
    assert flip_entry(flipped, (0, 0))[0] == s
