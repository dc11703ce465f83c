import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from webmodels.families import Vec, atoms, identity, mat_apply, mat_compose, vec_sum
from webmodels.ll import TruncCfg
from webmodels.pcr import OMEGA, carrier, is_defined
from webmodels.spaces import MODELS, Certified, Refuted, make_space, member_point, member_semimod
from webmodels.summability import (cbar_mat, curry_mat, d_space, d_web, iota_mat, mbar_mat, pi_mat,
                                   run_summability_suite, s_space, s_web, sigma_mat, tau_mat, uncurry_mat,
                                   witness_vec)

R = carrier("rat")


def test_d_space_points():
    D = d_space(2, "pcoh")
    assert member_point(D, Vec(D.web, D.pcr, {0: 1, 1: 1})) == Certified()
    assert isinstance(member_point(D, Vec(D.web, D.pcr, {0: F(3, 2)})), Refuted)
    K = d_space(2, "kothe")
    for a, b in [(F(-7), F(3, 2)), (F(100), F(-1, 9))]:
        assert member_semimod(K, Vec(K.web, R, {0: a, 1: b})) == Certified()
    Fin = d_space(2, "fin")
    for bits in [(0, 0), (0, 1), (1, 0), (1, 1)]:
        assert member_point(Fin, Vec(Fin.web, Fin.pcr, {0: F(bits[0]), 1: F(bits[1])})) == Certified()


def test_s_space_points_are_summable_families():
    X = make_space("pcoh", 1)
    SX = s_space(X, 2)
    assert set(SX.web) == {(0, 0), (1, 0)}
    half = Vec(X.web, X.pcr, {0: F(1, 2)})
    one = Vec(X.web, X.pcr, {0: F(1)})
    assert member_point(SX, witness_vec([half, half], X.web, X.pcr)) == Certified()
    assert isinstance(member_point(SX, witness_vec([one, one], X.web, X.pcr)), Refuted)


def test_coherence_summable_iff_supports_compatible():
    X = make_space("coh", {"web": 2, "graph": [(0, 1)]})
    SX = s_space(X, 2)
    x0 = Vec(X.web, X.pcr, {0: OMEGA})
    x1 = Vec(X.web, X.pcr, {1: OMEGA})
    assert member_point(SX, witness_vec([x0, x1], X.web, X.pcr)) == Certified()
    assert isinstance(member_point(SX, witness_vec([x0, x0], X.web, X.pcr)), Refuted)
    assert not is_defined(vec_sum([x0, x0], X.web, X.pcr))


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_projection_injection_and_sum(N):
    web = atoms(2)
    for i in range(N):
        for j in range(N):
            got = mat_compose(pi_mat(j, N, web, R), iota_mat(i, N, web, R))
            if i == j:
                assert got == identity(web, R)
            else:
                assert not got.entries
        assert mat_compose(sigma_mat(N, web, R), iota_mat(i, N, web, R)) == identity(web, R)


def test_cbar_column():
    cb = cbar_mat(3, R)
    assert {k[1] for k in cb.entries if k[0] == 2} == {(0, 2), (1, 1), (2, 0)}
    assert all(v == 1 for v in cb.entries.values())


def test_mbar_is_diagonal():
    mb = mbar_mat(3, R)
    assert set(mb.entries) == {((i, i), i) for i in range(3)}


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_tau_adds_indices(seed, N):
    # tau on a doubly indexed family: component k collects every (j, i) with i + j = k
    rng = random.Random(seed)
    web = atoms(1)
    ssw = s_web(N, s_web(N, web))
    x = Vec(ssw, R, {lab: F(rng.randint(-3, 3)) for lab in ssw})
    got = mat_apply(tau_mat(N, web, R), x)
    for k in range(N):
        want = sum((x[(j, (i, 0))] for j in range(N) for i in range(N) if i + j == k), F(0))
        assert got[(k, 0)] == want


def test_witness_round_trip():
    X = make_space("kothe", 2)
    xs = [Vec(X.web, R, {0: F(-1, 2)}), Vec(X.web, R, {1: F(3)}), Vec(X.web, R)]
    w = witness_vec(xs, X.web, R)
    for i, x in enumerate(xs):
        assert mat_apply(pi_mat(i, 3, X.web, R), w) == x
    assert mat_apply(sigma_mat(3, X.web, R), w) == vec_sum(xs, X.web, R)


def test_curry_uncurry_round_trip():
    rng = random.Random(1)
    from webmodels.families import Mat
    Z, X = atoms(2), atoms(2)
    f = Mat(Z, s_web(3, X), R, {(z, (i, a)): F(rng.randint(-2, 2)) for z in Z for i in range(3) for a in X})
    assert curry_mat(uncurry_mat(f, 3), 3, X) == f


def test_d_web_needs_positive_bound():
    with pytest.raises(Exception):
        d_web(0)


@pytest.mark.parametrize("model", sorted(MODELS))
def test_suite_small(model):
    rep = run_summability_suite(model, cfg=TruncCfg(s_bound=3), sizes=(1,), samples=1)
    assert rep.ok, [(c.case_id, c.witness) for c in rep.failures[:3]]


def test_pcoh_one_web_n4():
    X = make_space("pcoh", 1)
    assert run_summability_suite("pcoh", X=X, cfg=TruncCfg(s_bound=4)).ok


def test_weighted_relations_biproducts():
    rep = run_summability_suite("wrel", cfg=TruncCfg(s_bound=3), sizes=(1,), samples=1)
    bip = [c for c in rep.cases if c.case_id.startswith("sum.biproduct")]
    assert bip and all(c.status == "pass" for c in bip)


def test_biproducts_skipped_on_incomplete_rigs():
    rep = run_summability_suite("pcoh", cfg=TruncCfg(s_bound=2), sizes=(1,), samples=1)
    assert not [c for c in rep.cases if c.case_id.startswith("sum.biproduct")]


@pytest.mark.parametrize("kind", ["sigma", "tau", "mbar", "cbar"])
def test_mutations_are_caught(kind):
    rep = run_summability_suite("pcoh", cfg=TruncCfg(s_bound=3), sizes=(1,), samples=1, mutations={kind: None})
    assert rep.failures
