"""Acceptance battery: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import time
from fractions import Fraction as F

import pytest

from webmodels.ll import TruncCfg, run_ll_suite
from webmodels.pcr import (BUILTIN_CARRIERS, Alternating, SamplerCfg, carrier, family, is_defined,
                           pa_counterexamples, run_pcm_suite, try_sum)
from webmodels.spaces import MODELS, Q_CERTIFIED_MODELS, run_lemma_suite, run_predual_suite
from webmodels.summability import run_summability_suite
from webmodels.taylor import run_taylor_suite

ALL_MODELS = sorted(MODELS)


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")
        return ok
    return emit


def _summary(reports):
    fails = [(r.suite, c.case_id, c.witness) for r in reports for c in r.failures]
    passed = sum(r.counts()["pass"] for r in reports)
    undef = sum(r.counts()["undefined-sum"] for r in reports)
    return fails, f"{passed} pass, {len(fails)} fail, {undef} undefined-sum"


def crit1():
    alt = family([], Alternating(F(-1)))
    reports, problems = [], []
    for tag in BUILTIN_CARRIERS:
        pcr = carrier(tag)
        extra = [alt] if pcr.allows_tails and tag in ("rat", "finrat") else []
        rep = run_pcm_suite(pcr, SamplerCfg(families=500), extra_families=extra)
        reports.append(rep)
        pa_cases = [c for c in rep.cases if c.case_id.startswith("pa/")]
        if pcr.strong != bool(pa_cases):
            problems.append(f"{tag}: PA obligations {'missing' if pcr.strong else 'present'}")
        for c in rep.cases:
            if c.case_id == "pa" and pcr.strong:
                problems.append(f"{tag}: flagged not strong")
    rat = carrier("rat")
    if is_defined(try_sum(rat, alt)) or not pa_counterexamples(rat, [alt]):
        problems.append("Alternating(-1) is not a PA counterexample")
    fails, text = _summary(reports)
    return not fails and not problems, text + (f"; {problems}" if problems else ""), fails


def crit2():
    reports = [run_lemma_suite(m, instances=200, seed=0, max_web=3) for m in Q_CERTIFIED_MODELS]
    fails, text = _summary(reports)
    return not fails, f"{len(reports)} models, " + text, fails


def crit3():
    reports = [run_predual_suite(m, instances=200, seed=0, max_web=3) for m in ("pcoh", "coh", "rel", "fin")]
    reports += [run_predual_suite(m, max_web=3, exhaustive=True) for m in ("coh", "rel")]
    fails, text = _summary(reports)
    return not fails, "sampled pcoh/coh/rel/fin, exhaustive coh/rel, " + text, fails


def crit4():
    reports = [run_ll_suite(m, sizes=(1, 2, 3), cfg=TruncCfg(bang_degree=3), samples=2) for m in ALL_MODELS]
    fails, text = _summary(reports)
    return not fails, "webs <= 3, d = 3, " + text, fails


def crit5():
    reports, problems = [], []
    for m in ALL_MODELS:
        for N in (2, 3, 4):
            rep = run_summability_suite(m, cfg=TruncCfg(s_bound=N), seed=N, sizes=(1, 2), samples=1)
            reports.append(rep)
            if m == "wrel":
                bip = [c for c in rep.cases if c.case_id.startswith("sum.biproduct")]
                if not bip or any(c.status != "pass" for c in bip):
                    problems.append(f"wrel N={N}: biproduct collapse")
    fails, text = _summary(reports)
    return not fails and not problems, "N in 2..4, " + text + (f"; {problems}" if problems else ""), fails


def crit6():
    reports = [run_taylor_suite(m, sizes=(1, 2), cfg=TruncCfg(bang_degree=3, s_bound=3), samples=2)
               for m in ("pcoh", "fin", "kothe")]
    fails, text = _summary(reports)
    return not fails, "pcoh/fin/kothe, webs <= 2, d = 3, N = 3, " + text, fails


def crit7():
    missed = []
    runs = 0
    for model in ("pcoh", "coh", "kothe", "rel"):
        for seed in range(3):
            trials = [
                ("dig", run_ll_suite(model, sizes=(2,), cfg=TruncCfg(2), seed=seed, samples=1,
                                     suites=("ll.comonad",), mutations={"dig": None})),
                ("seely2", run_ll_suite(model, sizes=(2,), cfg=TruncCfg(2), seed=seed, samples=1,
                                        suites=("ll.seely",), mutations={"seely2": None})),
                ("hbar", run_taylor_suite(model, sizes=(1,), cfg=TruncCfg(2, 3), seed=seed, samples=1,
                                          suites=("taylor.coalgebra",), mutations={"hbar": None})),
            ]
            for kind, rep in trials:
                runs += 1
                if not any(c.witness and "entry" in c.witness for c in rep.failures):
                    missed.append(f"{model}/{kind}/seed{seed}")
    return not missed, f"{runs - len(missed)}/{runs} mutations flagged with an entry witness", missed


CRITERIA = [crit1, crit2, crit3, crit4, crit5, crit6, crit7]


@pytest.mark.parametrize("n", range(1, 8))
def test_criterion(n, verdict):
    t = time.perf_counter()
    ok, detail, fails = CRITERIA[n - 1]()
    verdict(n, ok, f"{detail}; {time.perf_counter() - t:.1f}s")
    assert ok, fails[:5]


if __name__ == "__main__":
    for n, crit in enumerate(CRITERIA, 1):
        t = time.perf_counter()
        ok, detail, _ = crit()
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail}; {time.perf_counter() - t:.1f}s)")
