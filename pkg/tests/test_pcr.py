import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from webmodels.pcr import (BUILTIN_CARRIERS, INF, OMEGA, Alternating, Constant, Defined, Geometric, SamplerCfg,
                           Undefined, UsageError, abs_val, carrier, family, inverse, is_defined, is_invertible,
                           leq, literal, mul, nat_embed, pa_counterexamples, parse_literal, run_pcm_suite,
                           try_sum)


def brute_coh_sum(values):
    # at most one w may appear
    k = sum(1 for v in values if v is OMEGA)
    return Undefined() if k > 1 else Defined(OMEGA if k else F(0))


# --- sums -----------------------------------------------------------------------

def test_coherence_w_plus_w_undefined():
    assert not is_defined(try_sum(carrier("coh"), [OMEGA, OMEGA]))


@pytest.mark.parametrize("tag", BUILTIN_CARRIERS)
def test_empty_sum_is_zero(tag):
    assert try_sum(carrier(tag), []) == Defined(F(0))


def test_alternating_tail_not_summable_in_rationals():
    assert not is_defined(try_sum(carrier("rat"), family([], Alternating(F(-1)))))


def test_finite_cancelling_pair_sums_to_zero():
    assert try_sum(carrier("rat"), [F(-1), F(1)]) == Defined(F(0))


def test_geometric_tail():
    assert try_sum(carrier("rat"), family([F(1)], Geometric(F(1), F(-1, 2)))) == Defined(F(1) + F(2, 3))
    assert not is_defined(try_sum(carrier("nonneg"), family([], Geometric(F(1), F(1)))))
    assert not is_defined(try_sum(carrier("finrat"), family([], Constant(F(1)))))


def test_tails_rejected_on_finite_only_carriers():
    with pytest.raises(UsageError):
        try_sum(carrier("coh"), family([], Constant(OMEGA)))


@given(st.lists(st.sampled_from([F(0), OMEGA]), max_size=6))
def test_coherence_sum_matches_brute_force(values):
    assert try_sum(carrier("coh"), values) == brute_coh_sum(values)


@given(st.lists(st.fractions(min_value=0, max_value=10, max_denominator=7), max_size=8), st.randoms())
def test_nonneg_sum_is_order_independent(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert try_sum(carrier("nonneg"), values) == try_sum(carrier("nonneg"), shuffled) == Defined(sum(values, F(0)))


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=5), max_size=8))
def test_finite_rational_families_always_sum(values):
    assert try_sum(carrier("rat"), values) == Defined(sum(values, F(0)))


# --- products, inverses, order --------------------------------------------------------

def test_products():
    assert mul(carrier("coh"), OMEGA, OMEGA) is OMEGA
    assert mul(carrier("rat"), F(-1, 2), F(2, 3)) == F(-1, 3)


def test_inf_times_zero_forced_by_distributivity():
    # a . (empty sum) = empty sum of a . x forces a . 0 = 0; check every triple over {0, 1, inf}
    pcr = carrier("extnonneg")
    vals = [F(0), F(1), INF]
    assert mul(pcr, INF, F(0)) == 0
    for a in vals:
        for n in range(3):
            for xs in itertools.product(vals, repeat=n):
                lhs = mul(pcr, a, try_sum(pcr, list(xs)).value)
                rhs = try_sum(pcr, [mul(pcr, a, x) for x in xs]).value
                assert lhs == rhs


def test_invertibility():
    assert is_invertible(carrier("nonneg"), F(1, 2)) and inverse(carrier("nonneg"), F(1, 2)) == 2
    assert is_invertible(carrier("coh"), OMEGA) and inverse(carrier("coh"), OMEGA) is OMEGA
    for tag in BUILTIN_CARRIERS:
        assert not is_invertible(carrier(tag), F(0))


def test_absolute_values():
    assert abs_val(carrier("rat"), F(-3, 4)) == F(3, 4)
    assert abs_val(carrier("finrat"), F(5)) == 1
    assert abs_val(carrier("rat"), F(0)) == 0
    with pytest.raises(UsageError):
        abs_val(carrier("nonneg"), F(1))


def test_preorder():
    assert leq(carrier("nonneg"), F(1, 3), F(1, 2))
    assert not leq(carrier("coh"), OMEGA, F(0))
    assert leq(carrier("rat"), F(5), F(-1))


def test_preorder_coherence_matches_brute_force():
    pcr = carrier("coh")
    vals = [F(0), OMEGA]
    for a, b in itertools.product(vals, repeat=2):
        exists = any(is_defined(s) and s.value == b for z in vals for s in [try_sum(pcr, [a, z])])
        assert leq(pcr, a, b) == exists


def test_nat_embed():
    assert nat_embed(carrier("rat"), 3) == Defined(F(3))
    assert not is_defined(nat_embed(carrier("coh"), 2))
    for tag in BUILTIN_CARRIERS:
        assert nat_embed(carrier(tag), 0) == Defined(F(0))


def test_literals_round_trip():
    for v in (F(0), F(-3, 4), F(7), INF, OMEGA):
        assert parse_literal(literal(v)) == v or parse_literal(literal(v)) is v
    with pytest.raises(UsageError):
        parse_literal("w", carrier("rat"))


# --- the axiom battery ----------------------------------------------------------------------

def test_coherence_battery_passes():
    rep = run_pcm_suite(carrier("coh"), SamplerCfg(families=200))
    assert rep.ok and rep.counts()["pass"] > 200


def test_rational_is_not_strong_and_pa_witness_found():
    witness = family([], Alternating(F(-1)))
    rep = run_pcm_suite(carrier("rat"), SamplerCfg(families=50), extra_families=[witness])
    assert rep.ok
    pa = [c for c in rep.cases if c.case_id == "pa"][0].witness
    assert pa["note"] == "not strong" and pa["witness"] is not None
    assert pa_counterexamples(carrier("rat"), [witness])


def test_wrong_strong_flag_caught_by_positivity():
    pcr = carrier("rat", strong=True)
    rep = run_pcm_suite(pcr, SamplerCfg(families=20), extra_families=[family([F(-1), F(1)])])
    assert any(c.case_id.startswith("positive") for c in rep.failures)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(BUILTIN_CARRIERS), st.integers(0, 1000))
def test_battery_any_seed(tag, seed):
    assert run_pcm_suite(carrier(tag), SamplerCfg(families=20, seed=seed)).ok
