"""Command line entry point: scenarios, suite registry, artifact files and reports.

A scenario is a JSON object; every key is optional:

    {"model": "pcoh", "webs": [1, 2], "bang_degree": 2, "s_bound": 2, "seed": 0,
     "suites": ["ll.comonad", "sum.ss"] | "all", "samples": 1, "families": 100,
     "instances": 50, "mutations": {"dig": null}, "report": "out.json"}

``mutations`` maps a structure matrix kind to the entry to flip (a pair of
labels in their JSON form) or to null for a seeded choice.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field, fields, asdict
from fractions import Fraction
from pathlib import Path

from .families import Mat, label_from_json
from .ll import TruncCfg, run_ll_suite
from .pcr import SamplerCfg, UsageError, run_pcm_suite
from .report import LawReport
from .spaces import MODELS, SpaceRepr, get_model, run_lemma_suite, run_predual_suite
from .summability import run_summability_suite
from .taylor import run_taylor_suite

__all__ = ["LawReport", "Scenario", "SUITES", "run_scenario", "run_suites", "emit_report",
           "save_space", "load_space", "save_matrix", "load_matrix", "main"]

LL_SUITES = ("ll.monoidal", "ll.comonad", "ll.seely")
SUM_SUITES = ("sum.ss", "sum.bimonad", "sum.bimonoid", "sum.representable")
TAYLOR_SUITES = ("taylor.coalgebra", "taylor.functor", "taylor.series")
SUITES = ("pcr.pcm", "spaces.lemmas", "spaces.predual") + LL_SUITES + SUM_SUITES + TAYLOR_SUITES

MUTATION_KINDS = {
    "ll": ("der", "dig", "bang", "seely2", "seely2_inv"),
    "sum": ("pi", "sigma", "tau", "theta", "mbar", "cbar"),
    "taylor": ("hbar",),
}


@dataclass
class Scenario:
    model: str = "pcoh"
    webs: list = field(default_factory=lambda: [1, 2])
    bang_degree: int = 2
    s_bound: int = 2
    seed: int = 0
    suites: list = field(default_factory=lambda: list(SUITES))
    samples: int = 1
    families: int = 100
    instances: int = 50
    mutations: dict = field(default_factory=dict)
    report: str = None

    def validate(self):
        if self.model not in MODELS:
            raise UsageError(f"unknown model {self.model!r}; known: {', '.join(MODELS)}")
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite id(s) {', '.join(unknown)}; known: {', '.join(SUITES)}")
        known_kinds = {k for ks in MUTATION_KINDS.values() for k in ks}
        bad = [k for k in self.mutations if k not in known_kinds]
        if bad:
            raise UsageError(f"unknown mutation kind(s) {', '.join(bad)}")
        if not self.webs or any(not isinstance(n, int) or n < 1 for n in self.webs):
            raise UsageError("webs must be a non-empty list of positive integers")
        for name in ("samples", "families", "instances"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be positive")
        self.cfg  # validates the truncation
        return self

    @property
    def cfg(self):
        return TruncCfg(bang_degree=self.bang_degree, s_bound=self.s_bound)

    @classmethod
    def from_dict(cls, data, where="scenario"):
        if not isinstance(data, dict):
            raise UsageError(f"{where}: expected an object at top level")
        names = {f.name: f for f in fields(cls)}
        kw = {}
        for key, val in data.items():
            if key not in names:
                raise UsageError(f"{where}: unknown key {key!r}")
            kw[key] = val
        if kw.get("suites") == "all":
            kw["suites"] = list(SUITES)
        for key in ("bang_degree", "s_bound", "seed", "samples", "families", "instances"):
            if key in kw and (not isinstance(kw[key], int) or isinstance(kw[key], bool)):
                raise UsageError(f"{where}: {key!r} must be an integer")
        if "suites" in kw and not isinstance(kw["suites"], list):
            raise UsageError(f"{where}: 'suites' must be a list or \"all\"")
        if "mutations" in kw and not isinstance(kw["mutations"], dict):
            raise UsageError(f"{where}: 'mutations' must be an object")
        return cls(**kw)


def _mutation_key(val):
    if val is None:
        return None
    if not (isinstance(val, list) and len(val) == 2):
        raise UsageError("a mutation entry is null or a pair of labels")
    return (label_from_json(val[0]), label_from_json(val[1]))


def _mutations(sc, group):
    return {k: _mutation_key(v) for k, v in sc.mutations.items() if k in MUTATION_KINDS[group]}


def run_suites(sc):
    """Run every suite of a validated scenario; one report per suite group, in a fixed order."""
    m = get_model(sc.model)
    sizes = tuple(sc.webs)
    out = []
    if "pcr.pcm" in sc.suites:
        rep = LawReport("pcr.pcm")
        carriers = [m.positive] + ([m.signed] if m.signed is not m.positive else [])
        for pcr in carriers:
            rep.extend(run_pcm_suite(pcr, SamplerCfg(families=sc.families, seed=sc.seed)), prefix=f"{pcr.tag}/")
        out.append(rep)
    if "spaces.lemmas" in sc.suites:
        out.append(run_lemma_suite(sc.model, sc.instances, sc.seed, max(sizes)))
    if "spaces.predual" in sc.suites:
        out.append(run_predual_suite(sc.model, sc.instances, sc.seed, max(sizes)))
    picked = tuple(s for s in LL_SUITES if s in sc.suites)
    if picked:
        out.append(run_ll_suite(sc.model, sizes, sc.cfg, sc.seed, picked, _mutations(sc, "ll"), sc.samples))
    picked = tuple(s for s in SUM_SUITES if s in sc.suites)
    if picked:
        out.append(run_summability_suite(sc.model, None, sc.cfg, sc.seed, sizes, picked, sc.samples,
                                         _mutations(sc, "sum")))
    picked = tuple(s for s in TAYLOR_SUITES if s in sc.suites)
    if picked:
        out.append(run_taylor_suite(sc.model, sizes, sc.cfg, sc.seed, picked, sc.samples, _mutations(sc, "taylor")))
    return out


# --- reports ----------------------------------------------------------------------------------

def _jsonable(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(map(str, o))
    return str(o)


def structured(reports, scenario=None, timing=True):
    data = {
        "ok": all(r.ok for r in reports),
        "suites": [r.to_dict(timing=timing) for r in reports],
    }
    if scenario is not None:
        data["scenario"] = asdict(scenario)
    return json.dumps(data, indent=1, sort_keys=True, default=_jsonable) + "\n"


def emit_report(reports, fmt="text", scenario=None):
    """Render reports; undefined-sum verdicts are listed apart from failures."""
    if fmt == "structured":
        return structured(reports, scenario)
    if fmt != "text":
        raise UsageError(f"unknown format {fmt!r}")
    lines = []
    for r in reports:
        c = r.counts()
        lines.append(f"{r.suite}: {c['pass']} pass, {c['fail']} fail, {c['undefined-sum']} undefined-sum")
    for r in reports:
        for case in r.failures:
            lines.append(f"FAIL {case.case_id}: {json.dumps(case.witness, sort_keys=True, default=_jsonable)}")
    for r in reports:
        for case in r.by_status("undefined-sum"):
            lines.append(f"UNDEFINED {case.case_id}")
    lines.append("all pass" if all(r.ok for r in reports) else "FAILURES")
    return "\n".join(lines) + "\n"


# --- artifacts --------------------------------------------------------------------------------

def _write(obj, path):
    Path(path).write_text(json.dumps(obj.to_json(), indent=1, sort_keys=True) + "\n")


def _read(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None


def _schema(path, data, keys):
    if not isinstance(data, dict) or not set(keys) <= set(data):
        missing = sorted(set(keys) - set(data)) if isinstance(data, dict) else keys
        raise UsageError(f"{path}: schema violation, missing {', '.join(missing)}")


def save_space(X, path):
    _write(X, path)


def load_space(path):
    data = _read(path)
    _schema(path, data, ("model", "web", "P", "Q", "q_certified"))
    return SpaceRepr.from_json(data)


def save_matrix(s, path):
    _write(s, path)


def load_matrix(path, pcr=None):
    data = _read(path)
    _schema(path, data, ("dom", "cod", "carrier", "entries"))
    return Mat.from_json(data, pcr)


# --- entry points -----------------------------------------------------------------------------

def load_scenario(path):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    return Scenario.from_dict(data, where=str(path)).validate()


def _finish(sc, fmt, out):
    reports = run_suites(sc)
    out.write(emit_report(reports, fmt, sc))
    if sc.report:
        Path(sc.report).write_text(structured(reports, sc))
    return 0 if all(r.ok for r in reports) else 1


def run_scenario(path, fmt="text", out=None):
    """Run a scenario file; 0 when every case passes, 1 on failure, 2 on a usage error."""
    out = out or sys.stdout
    try:
        sc = load_scenario(path)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return _finish(sc, fmt, out)


def bundled_scenario(name):
    return Path(__file__).parent / "scenarios" / f"{name}.json"


def _parser():
    ap = argparse.ArgumentParser(prog="webmodels", description="Exact law checking for web models of linear logic.")
    ap.add_argument("--scenario", help="scenario JSON file, or the name of a bundled scenario")
    ap.add_argument("--suite", nargs="+", metavar="ID", help=f"suite ids: {', '.join(SUITES)}")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--model", help=f"one of {', '.join(MODELS)}")
    ap.add_argument("--bang-degree", type=int)
    ap.add_argument("--s-bound", type=int)
    ap.add_argument("--report", help="write the structured report here")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.scenario:
            path = Path(args.scenario)
            if not path.exists() and bundled_scenario(args.scenario).exists():
                path = bundled_scenario(args.scenario)
            sc = load_scenario(path)
        else:
            sc = Scenario()
        overrides = {"suites": args.suite, "seed": args.seed, "model": args.model,
                     "bang_degree": args.bang_degree, "s_bound": args.s_bound, "report": args.report}
        for key, val in overrides.items():
            if val is not None:
                setattr(sc, key, val)
        sc.validate()
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return _finish(sc, args.format, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
