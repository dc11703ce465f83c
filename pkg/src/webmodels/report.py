"""Law reports: per-case outcomes with replayable witnesses."""

import time

STATUSES = ("pass", "fail", "undefined-sum")


class Case:
    __slots__ = ("case_id", "status", "witness", "timing")

    def __init__(self, case_id, status, witness=None, timing=0.0):
        if status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        self.case_id = case_id
        self.status = status
        self.witness = witness
        self.timing = timing

    def to_dict(self):
        out = {"case": self.case_id, "status": self.status, "timing": round(self.timing, 6)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class LawReport:
    def __init__(self, suite):
        self.suite = suite
        self.cases = []
        self._clock = time.perf_counter()

    def record(self, case_id, status, witness=None):
        now = time.perf_counter()
        self.cases.append(Case(case_id, status, witness, now - self._clock))
        self._clock = now
        return status

    def check(self, case_id, ok, witness=None):
        # witnesses are kept for failures only, to keep reports small
        return self.record(case_id, "pass" if ok else "fail", None if ok else witness)

    def extend(self, other, prefix=""):
        for c in other.cases:
            c.case_id = prefix + c.case_id
            self.cases.append(c)

    def by_status(self, status):
        return [c for c in self.cases if c.status == status]

    @property
    def failures(self):
        return self.by_status("fail")

    @property
    def ok(self):
        return not self.failures

    def counts(self):
        return {s: len(self.by_status(s)) for s in STATUSES}

    def to_dict(self, timing=True):
        cases = [c.to_dict() for c in self.cases]
        if not timing:
            for c in cases:
                c.pop("timing")
        return {"suite": self.suite, "counts": self.counts(), "cases": cases}

    def __repr__(self):
        c = self.counts()
        return f"LawReport({self.suite}: {c['pass']} pass, {c['fail']} fail, {c['undefined-sum']} undefined-sum)"
