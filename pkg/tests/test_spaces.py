import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from webmodels.families import Mat, Vec, atoms, basis, diagonal
from webmodels.ll import additive_space
from webmodels.pcr import OMEGA, carrier
from webmodels.spaces import (Certified, MODELS, Refuted, all_graphs, dual, is_covering, make_space, member_hom,
                              member_point, member_semimod, orth_rel, point_generators, predual_conditions,
                              random_matrix, run_lemma_suite, run_predual_suite, same_space, linarrow_conditions)

C = carrier("coh")


def v(space, vals):
    return Vec(space.web, space.pcr, dict(enumerate(vals)))


def coherent(graph, a, b):
    return a == b or graph.has_edge(a, b)


def girard_morphism(X, Y, s):
    """Linear maps of coherence spaces through their trace (independent of pairings)."""
    trace = [k for k in s.entries]
    for (a, b), (a2, b2) in itertools.product(trace, repeat=2):
        if coherent(X.graph, a, a2):
            if not coherent(Y.graph, b, b2):
                return False
            if b == b2 and a != a2:
                return False
    return True


# --- orthogonality and membership ---------------------------------------------------------

def test_pcoh_orthogonality():
    X = make_space("pcoh", 2)
    assert orth_rel(X.pcr, v(X, [F(1, 2), F(1, 2)]), v(X, [1, 1]))


def test_coherence_orthogonality_is_overlap_at_most_one():
    web = atoms(3)
    for xs in itertools.product([0, OMEGA], repeat=3):
        for ys in itertools.product([0, OMEGA], repeat=3):
            x, y = Vec(web, C, dict(enumerate(xs))), Vec(web, C, dict(enumerate(ys)))
            overlap = sum(1 for a, b in zip(xs, ys) if a is OMEGA and b is OMEGA)
            assert orth_rel(C, x, y) == (overlap <= 1)


def test_zero_orthogonal_to_everything():
    for m in MODELS:
        X = make_space(m, 2)
        for y in X.Q:
            assert orth_rel(X.pcr, Vec(X.web, X.pcr), y)


def test_membership_examples():
    P1 = make_space("pcoh", 1)
    assert isinstance(member_point(P1, v(P1, [F(3, 2)])), Refuted)
    assert member_point(P1, v(P1, [1])) == Certified()
    empty = make_space("coh", {"web": 2, "graph": []})
    verdict = member_point(empty, v(empty, [OMEGA, OMEGA]))
    assert isinstance(verdict, Refuted)
    edge = make_space("coh", {"web": 2, "graph": [(0, 1)]})
    assert member_point(edge, v(edge, [OMEGA, OMEGA])) == Certified()
    for m in MODELS:
        X = make_space(m, 3)
        assert member_point(X, Vec(X.web, X.pcr)) == Certified()


def test_rel_every_boolean_vector_is_a_point():
    X = make_space("rel", 3)
    for bits in itertools.product([0, 1], repeat=3):
        assert member_point(X, v(X, [F(b) for b in bits])) == Certified()


def test_kothe_semimodule_membership():
    X = make_space("kothe", 2)
    x = Vec(X.web, X.model.signed, {0: F(-1, 2), 1: F(1, 3)})
    assert member_semimod(X, x) == Certified()


def test_hom_membership():
    P1 = make_space("pcoh", 1)
    for r in (F(0), F(1, 2), F(1), F(3, 2), F(2)):
        s = Mat(P1.web, P1.web, P1.pcr, {(0, 0): r})
        assert (member_hom(P1, P1, s) == Certified()) == (r <= 1)
    for m in MODELS:
        X, Y = make_space(m, 2), make_space(m, 3)
        assert member_hom(X, Y, Mat(X.web, Y.web, X.pcr)) == Certified()


def test_coverings():
    web = atoms(3)
    q = carrier("nonneg")
    assert is_covering([basis(web, q, a) for a in web], web)
    assert is_covering([diagonal(web, q)], web)
    assert not is_covering([Vec(web, q)], web)


def test_dual_is_an_involution():
    for m in MODELS:
        X = make_space(m, 2)
        assert same_space(dual(dual(X)), X)
        assert dual(X).P == X.Q and dual(X).Q == X.P


def test_pcoh_singleton_points_are_unit_interval():
    X = make_space("pcoh", 1)
    assert X.P == X.Q == [basis(X.web, X.pcr, 0)]
    assert {g[0] for g in point_generators(X)} == {F(0), F(1)}


def test_coherence_points_are_cliques():
    for n in (1, 2, 3):
        for edges in all_graphs(n):
            X = make_space("coh", {"web": n, "graph": edges})
            pts = {frozenset(p.entries) for p in point_generators(X)}
            cliques = {frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)
                       if all(X.graph.has_edge(a, b) for a, b in itertools.combinations(c, 2))}
            assert pts == cliques


def test_plus_points_inside_with_points():
    X, Y = make_space("pcoh", 2), make_space("pcoh", 1)
    plus, wth = additive_space("plus", [X, Y]), additive_space("with", [X, Y])
    for g in point_generators(plus):
        assert member_point(wth, g) == Certified()
    # and the inclusion is strict
    both = Vec(wth.web, wth.pcr, {lab: F(1) for lab in wth.web})
    assert member_point(wth, both) == Certified()
    assert isinstance(member_point(plus, both), Refuted)


# --- characterizations -----------------------------------------------------------------------

@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_predual_conditions_match_trace_condition(n, m):
    for ex in all_graphs(n):
        for ey in all_graphs(m):
            X = make_space("coh", {"web": n, "graph": ex})
            Y = make_space("coh", {"web": m, "graph": ey})
            cells = [(a, b) for a in X.web for b in Y.web]
            for bits in itertools.product([0, OMEGA], repeat=len(cells)):
                s = Mat(X.web, Y.web, C, dict(zip(cells, bits)))
                conds = predual_conditions(X, Y, s)
                assert set(conds) == {girard_morphism(X, Y, s)}


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10_000))
def test_pcoh_cube_morphisms_are_column_bounded(n, m, seed):
    # X = [0,1]^n, Y = [0,1]^m: s is a morphism iff every column sums to at most 1
    rng = random.Random(seed)
    X, Y = make_space("pcoh", n), make_space("pcoh", m)
    s = random_matrix(X, Y, rng)
    want = all(sum((s[(a, b)] for a in X.web), F(0)) <= 1 for b in Y.web)
    assert set(predual_conditions(X, Y, s)) == {want}
    assert set(linarrow_conditions(X, Y, s)) == {want}


@pytest.mark.parametrize("model", sorted(MODELS))
def test_lemma_suite(model):
    rep = run_lemma_suite(model, instances=60, seed=3)
    assert rep.ok, rep.failures[:3]


@pytest.mark.parametrize("model", ["coh", "rel"])
def test_predual_exhaustive_small(model):
    rep = run_predual_suite(model, max_web=2, exhaustive=True)
    assert rep.ok and rep.counts()["pass"] > 20


def test_exhaustive_needs_finite_carrier():
    with pytest.raises(Exception):
        run_predual_suite("pcoh", exhaustive=True)
