"""Sparse partial linear algebra over finite webs.

Labels are structured: atoms (ints and strings), pairs (plain tuples),
``Tagged`` labels for additive webs and ``Multiset`` labels for exponential
webs.  Every operation that needs a sum may return ``Undefined``; the first
undefined entry poisons the whole result and is kept as the witness.
"""

from collections import Counter, defaultdict
from math import factorial

from .pcr import Defined, Undefined, UsageError, is_defined, literal, parse_literal, carrier as make_carrier

STAR = "*"


class Tagged:
    """Label ``(i, a)`` of a disjoint union, kept apart from pairs."""

    __slots__ = ("tag", "label", "_hash")

    def __init__(self, tag, label):
        self.tag = tag
        self.label = label
        self._hash = hash(("tagged", tag, label))

    def __eq__(self, other):
        return isinstance(other, Tagged) and other.tag == self.tag and other.label == self.label

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.tag}.{self.label!r}"


class Multiset:
    """A finite multiset of labels, stored as a canonically sorted tuple."""

    __slots__ = ("elems", "key", "_hash")

    def __init__(self, elems=()):
        keyed = sorted(((label_key(e), e) for e in elems), key=lambda p: p[0])
        self.elems = tuple(e for _, e in keyed)
        self.key = (4, len(self.elems), tuple(k for k, _ in keyed))
        self._hash = hash(self.key)

    def __eq__(self, other):
        return isinstance(other, Multiset) and other.key == self.key

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __add__(self, other):
        return Multiset(self.elems + other.elems)

    def __repr__(self):
        return "[" + ", ".join(repr(e) for e in self.elems) + "]"

    @property
    def degree(self):
        return len(self.elems)

    def counts(self):
        return Counter(self.elems)

    def support(self):
        return set(self.elems)

    def factorial(self):
        """m! : the product of the factorials of the multiplicities."""
        out = 1
        for k in self.counts().values():
            out *= factorial(k)
        return out

    def map(self, f):
        return Multiset(f(e) for e in self.elems)


def label_key(label):
    """Total order on structured labels."""
    if isinstance(label, Multiset):
        return label.key
    if isinstance(label, bool):
        return (0, int(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(label_key(x) for x in label))
    if isinstance(label, Tagged):
        return (3, label.tag, label_key(label.label))
    raise UsageError(f"unsupported label {label!r}")


def label_to_json(label):
    if isinstance(label, (int, str)):
        return label
    if isinstance(label, tuple):
        return {"pair": [label_to_json(x) for x in label]}
    if isinstance(label, Tagged):
        return {"tag": label.tag, "of": label_to_json(label.label)}
    if isinstance(label, Multiset):
        return {"mset": [label_to_json(x) for x in label.elems]}
    raise UsageError(f"unsupported label {label!r}")


def label_from_json(data):
    if isinstance(data, (int, str)):
        return data
    if "pair" in data:
        return tuple(label_from_json(x) for x in data["pair"])
    if "tag" in data:
        return Tagged(data["tag"], label_from_json(data["of"]))
    if "mset" in data:
        return Multiset(label_from_json(x) for x in data["mset"])
    raise UsageError(f"bad label record {data!r}")


class Web:
    """A finite set of labels in canonical order.

    ``trunc`` records how a truncated web was cut down, e.g.
    ``{"degree": 3}`` for an exponential or ``{"bound": 4}`` for a sum index.
    """

    __slots__ = ("labels", "index", "trunc", "_hash")

    def __init__(self, labels, trunc=None, presorted=False):
        if not presorted:
            labels = sorted(set(labels), key=label_key)
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.trunc = dict(trunc or {})
        self._hash = hash(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self.index

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Web) and other._hash == self._hash and other.labels == self.labels

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Web({list(self.labels)!r})"

    def to_json(self):
        out = {"labels": [label_to_json(lab) for lab in self.labels]}
        if self.trunc:
            out["trunc"] = dict(self.trunc)
        return out

    @classmethod
    def from_json(cls, data):
        return cls([label_from_json(x) for x in data["labels"]], data.get("trunc"))


def atoms(n):
    return Web(range(n))


ONE_WEB = Web([STAR])
EMPTY_WEB = Web([])


_PRODUCTS = {}


def product_web(w1, w2):
    # lexicographic order on pairs of sorted webs is already canonical
    key = (w1, w2)
    web = _PRODUCTS.get(key)
    if web is None:
        if len(_PRODUCTS) > 4096:
            _PRODUCTS.clear()
        web = _PRODUCTS[key] = Web([(a, b) for a in w1 for b in w2], presorted=True)
    return web


def _clean(pcr, entries):
    return {k: v for k, v in entries.items() if not pcr.is_zero(v)}


class Vec:
    """Sparse web-indexed family; absent labels are 0."""

    __slots__ = ("web", "pcr", "entries")

    def __init__(self, web, pcr, entries=None):
        self.web = web
        self.pcr = pcr
        self.entries = _clean(pcr, dict(entries or {}))
        for lab in self.entries:
            if lab not in web:
                raise UsageError(f"label {lab!r} is not in the web")

    def __getitem__(self, label):
        return self.entries.get(label, self.pcr.zero)

    def __eq__(self, other):
        return isinstance(other, Vec) and other.web == self.web and other.entries == self.entries

    def __hash__(self):
        return hash((self.web, frozenset(self.entries.items())))

    def __repr__(self):
        inner = ", ".join(f"{lab!r}: {literal(v)}" for lab, v in self.items())
        return "{" + inner + "}"

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: label_key(kv[0]))

    def support(self):
        return set(self.entries)

    def to_json(self):
        return {
            "web": self.web.to_json(),
            "carrier": self.pcr.tag,
            "entries": [[label_to_json(lab), literal(v)] for lab, v in self.items()],
        }

    @classmethod
    def from_json(cls, data, pcr=None):
        pcr = _carrier_for(data, pcr)
        web = Web.from_json(data["web"])
        return cls(web, pcr, {label_from_json(k): parse_literal(v, pcr) for k, v in data["entries"]})


class Mat:
    """Sparse matrix indexed by (input label, output label)."""

    __slots__ = ("dom", "cod", "pcr", "entries")

    def __init__(self, dom, cod, pcr, entries=None, check=True):
        self.dom = dom
        self.cod = cod
        self.pcr = pcr
        self.entries = _clean(pcr, dict(entries or {}))
        if check:
            for a, b in self.entries:
                if a not in dom or b not in cod:
                    raise UsageError(f"entry {(a, b)!r} is outside the webs")

    def __getitem__(self, key):
        return self.entries.get(key, self.pcr.zero)

    def __eq__(self, other):
        return (isinstance(other, Mat) and other.dom == self.dom and other.cod == self.cod
                and other.entries == self.entries)

    def __hash__(self):
        return hash((self.dom, self.cod, frozenset(self.entries.items())))

    def __repr__(self):
        return f"Mat({len(self.dom)}x{len(self.cod)}, {len(self.entries)} entries)"

    def items(self):
        return sorted(self.entries.items(), key=lambda kv: (label_key(kv[0][0]), label_key(kv[0][1])))

    def column(self, b):
        return {a: v for (a, bb), v in self.entries.items() if bb == b}

    def row(self, a):
        return {b: v for (aa, b), v in self.entries.items() if aa == a}

    def to_json(self):
        return {
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "carrier": self.pcr.tag,
            "entries": [[[label_to_json(a), label_to_json(b)], literal(v)] for (a, b), v in self.items()],
        }

    @classmethod
    def from_json(cls, data, pcr=None):
        pcr = _carrier_for(data, pcr)
        dom, cod = Web.from_json(data["dom"]), Web.from_json(data["cod"])
        entries = {}
        for (a, b), v in data["entries"]:
            entries[(label_from_json(a), label_from_json(b))] = parse_literal(v, pcr)
        return cls(dom, cod, pcr, entries)


def _carrier_for(data, pcr):
    if pcr is None:
        return make_carrier(data["carrier"])
    if data["carrier"] != pcr.tag:
        raise UsageError(f"carrier tag {data['carrier']!r} does not match {pcr.tag!r}")
    return pcr


def _same_carrier(p, q):
    if p != q:
        raise UsageError(f"carrier mismatch: {p.tag} vs {q.tag}")


# --- constructors ---------------------------------------------------------------

def basis(web, pcr, label):
    return Vec(web, pcr, {label: pcr.one})


def diagonal(web, pcr):
    """The all-ones vector."""
    return Vec(web, pcr, {a: pcr.one for a in web})


def zero_vec(web, pcr):
    return Vec(web, pcr)


def identity(web, pcr):
    return Mat(web, web, pcr, {(a, a): pcr.one for a in web}, check=False)


def zero_mat(dom, cod, pcr):
    return Mat(dom, cod, pcr)


def kronecker(dom, cod, pcr, f):
    """0/1 matrix with a one at (a, f(a)) whenever f(a) lands in cod."""
    entries = {}
    for a in dom:
        b = f(a)
        if b is not None and b in cod:
            entries[(a, b)] = pcr.one
    return Mat(dom, cod, pcr, entries, check=False)


# --- operations -------------------------------------------------------------------

def scalar_product(x, y):
    """Sum of the pointwise products."""
    _same_carrier(x.pcr, y.pcr)
    if x.web != y.web:
        raise UsageError("scalar product of vectors on different webs")
    pcr = x.pcr
    small, big = (x, y) if len(x.entries) <= len(y.entries) else (y, x)
    terms = [pcr.mul(v, big.entries[a]) for a, v in small.entries.items() if a in big.entries]
    total = pcr.add(terms)
    return Undefined("scalar product") if total is None else Defined(total)


def mat_apply(s, x):
    """(s . x)_b = sum_a s_{a,b} x_a."""
    _same_carrier(s.pcr, x.pcr)
    if s.dom != x.web:
        raise UsageError("matrix domain does not match the vector web")
    pcr = s.pcr
    acc = defaultdict(list)
    xe = x.entries
    for (a, b), v in s.entries.items():
        w = xe.get(a)
        if w is not None:
            acc[b].append(pcr.mul(v, w))
    out = {}
    for b in sorted(acc, key=label_key):
        total = pcr.add(acc[b])
        if total is None:
            return Undefined({"entry": label_to_json(b)})
        out[b] = total
    return Vec(s.cod, pcr, out)


def mat_compose(t, s):
    """t . s, with (t . s)_{a,c} = sum_b s_{a,b} t_{b,c}."""
    _same_carrier(t.pcr, s.pcr)
    if s.cod != t.dom:
        raise UsageError("middle webs do not match")
    pcr = s.pcr
    by_mid = defaultdict(list)
    for (b, c), w in t.entries.items():
        by_mid[b].append((c, w))
    acc = defaultdict(list)
    mul = pcr.mul
    for (a, b), v in s.entries.items():
        for c, w in by_mid.get(b, ()):
            acc[(a, c)].append(mul(v, w))
    out = {}
    for key, terms in acc.items():
        total = terms[0] if len(terms) == 1 else pcr.add(terms)
        if total is None:
            return Undefined({"entry": [label_to_json(key[0]), label_to_json(key[1])]})
        out[key] = total
    return Mat(s.dom, t.cod, pcr, out, check=False)


def compose(*mats):
    """compose(t, s, r) = t . s . r, stopping at the first undefined product."""
    out = mats[-1]
    for m in reversed(mats[:-1]):
        if not is_defined(out):
            return out
        out = mat_compose(m, out)
    return out


def tensor(x, y):
    """Tensor of two vectors or of two matrices."""
    _same_carrier(x.pcr, y.pcr)
    pcr = x.pcr
    mul = pcr.mul
    if isinstance(x, Vec) and isinstance(y, Vec):
        web = product_web(x.web, y.web)
        return Vec(web, pcr, {(a, b): mul(u, v) for a, u in x.entries.items() for b, v in y.entries.items()})
    if isinstance(x, Mat) and isinstance(y, Mat):
        entries = {((a, a2), (b, b2)): mul(u, v)
                   for (a, b), u in x.entries.items() for (a2, b2), v in y.entries.items()}
        return Mat(product_web(x.dom, y.dom), product_web(x.cod, y.cod), pcr, entries, check=False)
    raise UsageError("tensor needs two vectors or two matrices")


def transpose(s):
    return Mat(s.cod, s.dom, s.pcr, {(b, a): v for (a, b), v in s.entries.items()}, check=False)


def reindex(phi, x, web):
    """Push x forward along an injection phi (a dict or function) into web."""
    f = phi.get if isinstance(phi, dict) else phi
    images = {a: f(a) for a in x.web}
    targets = list(images.values())
    if len(set(targets)) != len(targets):
        raise UsageError("reindexing map is not injective")
    return Vec(web, x.pcr, {images[a]: v for a, v in x.entries.items()})


def abs_vec(x):
    pos = x.pcr.positive
    return Vec(x.web, pos, {a: x.pcr.abs_val(v) for a, v in x.entries.items()})


def abs_mat(s):
    pos = s.pcr.positive
    return Mat(s.dom, s.cod, pos, {k: s.pcr.abs_val(v) for k, v in s.entries.items()}, check=False)


def vec_sum(vectors, web=None, pcr=None):
    """Pointwise sum of a finite family of vectors."""
    if vectors:
        web, pcr = vectors[0].web, vectors[0].pcr
    acc = defaultdict(list)
    for v in vectors:
        for a, val in v.entries.items():
            acc[a].append(val)
    out = {}
    for a, vals in acc.items():
        total = pcr.add(vals)
        if total is None:
            return Undefined({"entry": label_to_json(a)})
        out[a] = total
    return Vec(web, pcr, out)


def mat_sum(mats, dom=None, cod=None, pcr=None):
    """Pointwise sum of a finite family of matrices."""
    if mats:
        dom, cod, pcr = mats[0].dom, mats[0].cod, mats[0].pcr
    acc = defaultdict(list)
    for m in mats:
        for k, val in m.entries.items():
            acc[k].append(val)
    out = {}
    for k, vals in acc.items():
        total = pcr.add(vals)
        if total is None:
            return Undefined({"entry": [label_to_json(k[0]), label_to_json(k[1])]})
        out[k] = total
    return Mat(dom, cod, pcr, out, check=False)


def scale(r, x):
    pcr = x.pcr
    if isinstance(x, Vec):
        return Vec(x.web, pcr, {a: pcr.mul(r, v) for a, v in x.entries.items()})
    return Mat(x.dom, x.cod, pcr, {k: pcr.mul(r, v) for k, v in x.entries.items()}, check=False)


def vec_as_mat(x):
    """x as a matrix from the unit web."""
    return Mat(ONE_WEB, x.web, x.pcr, {(STAR, a): v for a, v in x.entries.items()}, check=False)


def mat_as_vec(s):
    """A matrix as a vector on the product of its webs."""
    return Vec(product_web(s.dom, s.cod), s.pcr, dict(s.entries))


def vec_as_arrow(x, dom, cod):
    """Read a vector on dom x cod as a matrix."""
    return Mat(dom, cod, x.pcr, dict(x.entries))


def restrict(x, web):
    """Keep the entries of x whose labels lie in web."""
    return Vec(web, x.pcr, {a: v for a, v in x.entries.items() if a in web})


def change_carrier(x, pcr):
    if isinstance(x, Vec):
        return Vec(x.web, pcr, dict(x.entries))
    return Mat(x.dom, x.cod, pcr, dict(x.entries), check=False)
