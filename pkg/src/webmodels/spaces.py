"""Spaces given by a web and two generator lists.

A space carries a predual ``P`` (its points are the biorthogonal of ``P``)
and a dual predual ``Q`` (its points are the orthogonal of ``Q``).  The flags
``p_exact`` and ``q_exact`` say which of the two descriptions is known to be
exact; membership tests against ``Q`` are only certified when ``q_exact``.
"""

import itertools
import random
from fractions import Fraction

import networkx as nx

from .families import Vec, Web, atoms, basis, diagonal, label_key, scalar_product, abs_vec
from .pcr import (Bool, Coherence, ExtendedNonneg, FinitaryBool, FinitaryRational, NonnegRational, Rational,
                  UsageError, Defined, Undefined, is_defined, literal)


def _unit_interval(a):
    return a <= 1


class Model:
    """A built-in web model.

    ``positive`` is the rig the points live in (with its ball); ``signed`` is
    the rig morphisms and semimodule elements live in.  ``points_kind`` tells
    the oracles how points can be enumerated: ``finite`` (finite carrier),
    ``polytope`` (rational points cut out by linear inequalities) or
    ``everything`` (every vector is a point at finite webs).
    """

    def __init__(self, model_id, positive, signed=None, points_kind="everything", description=""):
        self.id = model_id
        self.positive = positive
        self.signed = signed or positive
        self.points_kind = points_kind
        self.description = description

    @property
    def absolute(self):
        return self.signed is not self.positive

    def __repr__(self):
        return f"Model({self.id})"


MODELS = {
    "rel": Model("rel", Bool(), points_kind="finite", description="relational model over the boolean rig"),
    "wrel": Model("wrel", ExtendedNonneg(), description="weighted relations over the completed nonnegative rationals"),
    "pcoh": Model("pcoh", NonnegRational(ball=_unit_interval, ball_name="[0,1]"), points_kind="polytope",
                  description="probabilistic coherence spaces"),
    "coh": Model("coh", Coherence(), points_kind="finite", description="coherence spaces over {0, w}"),
    "fin": Model("fin", FinitaryBool(), FinitaryRational(), points_kind="finite",
                 description="finiteness spaces; semimodules over the finitary rationals"),
    "kothe": Model("kothe", NonnegRational(), Rational(),
                   description="Kothe-style sequence spaces; semimodules over the rationals"),
}

Q_CERTIFIED_MODELS = tuple(MODELS)


def get_model(model):
    if isinstance(model, Model):
        return model
    try:
        return MODELS[model]
    except KeyError:
        raise UsageError(f"unknown model {model!r}") from None


# --- verdicts ---------------------------------------------------------------------

class Certified:
    def __repr__(self):
        return "Certified"

    def __eq__(self, other):
        return isinstance(other, Certified)

    def __hash__(self):
        return hash("certified")

    refuted = False


class ProbeSound:
    refuted = False

    def __init__(self, n_probes):
        self.n_probes = n_probes

    def __repr__(self):
        return f"ProbeSound({self.n_probes})"

    def __eq__(self, other):
        return isinstance(other, ProbeSound) and other.n_probes == self.n_probes

    def __hash__(self):
        return hash(("probe", self.n_probes))


class Refuted:
    refuted = True

    def __init__(self, witness, reason=""):
        self.witness = witness
        self.reason = reason

    def __repr__(self):
        return f"Refuted({self.witness!r}{', ' + self.reason if self.reason else ''})"

    def __eq__(self, other):
        return isinstance(other, Refuted)

    def __hash__(self):
        return hash("refuted")


# --- spaces -------------------------------------------------------------------------

class SpaceRepr:
    def __init__(self, web, P, Q, model, p_exact=True, q_exact=True, p_dominated=False, q_dominated=False,
                 graph=None, name=""):
        self.web = web
        self.P = list(P)
        self.Q = list(Q)
        self.model = get_model(model)
        self.p_exact = p_exact
        self.q_exact = q_exact
        # every point lies below some generator of P (resp. Q for the dual)
        self.p_dominated = p_dominated
        self.q_dominated = q_dominated
        self.graph = graph
        self.name = name

    @property
    def pcr(self):
        return self.model.positive

    @property
    def q_certified(self):
        return self.q_exact

    def __repr__(self):
        return (f"SpaceRepr({self.name or self.model.id}, |web|={len(self.web)}, |P|={len(self.P)}, "
                f"|Q|={len(self.Q)}, q_certified={self.q_certified})")

    def to_json(self):
        return {
            "model": self.model.id,
            "name": self.name,
            "web": self.web.to_json(),
            "P": [v.to_json()["entries"] for v in self.P],
            "Q": [v.to_json()["entries"] for v in self.Q],
            "q_certified": self.q_exact,
            "p_exact": self.p_exact,
            "p_dominated": self.p_dominated,
            "q_dominated": self.q_dominated,
            "graph": None if self.graph is None else sorted(
                sorted([_lab_json(a), _lab_json(b)], key=str) for a, b in self.graph.edges),
        }

    @classmethod
    def from_json(cls, data):
        from .families import label_from_json
        model = get_model(data["model"])
        web = Web.from_json(data["web"])
        pcr = model.positive

        def vecs(rows):
            return [Vec.from_json({"web": data["web"], "carrier": pcr.tag, "entries": r}, pcr) for r in rows]

        graph = None
        if data.get("graph") is not None:
            graph = nx.Graph()
            graph.add_nodes_from(web)
            graph.add_edges_from((label_from_json(a), label_from_json(b)) for a, b in data["graph"])
        return cls(web, vecs(data["P"]), vecs(data["Q"]), model, data.get("p_exact", True), data["q_certified"],
                   data.get("p_dominated", False), data.get("q_dominated", False), graph, data.get("name", ""))


def _lab_json(label):
    from .families import label_to_json
    return label_to_json(label)


def same_space(X, Y):
    """Structural equality: web, generators, flags."""
    return (X.web == Y.web and X.model.id == Y.model.id and X.P == Y.P and X.Q == Y.Q
            and X.p_exact == Y.p_exact and X.q_exact == Y.q_exact)


# --- orthogonality -------------------------------------------------------------------

def orth_rel(pcr, x, y):
    """x and y are orthogonal: the scalar product is defined and in the ball."""
    out = scalar_product(x, y)
    return is_defined(out) and pcr.in_ball(out.value)


def _orth(x, y):
    return orth_rel(x.pcr, x, y)


def is_covering(F, web):
    """Every label carries an invertible entry in some vector of F."""
    for a in web:
        if not any(f.pcr.is_invertible(f[a]) for f in F):
            return False
    return True


def dual(X):
    graph = None
    if X.graph is not None:
        graph = nx.complement(X.graph)
    return SpaceRepr(X.web, X.Q, X.P, X.model, X.q_exact, X.p_exact, X.q_dominated, X.p_dominated,
                     graph, name=f"({X.name})^perp" if X.name else "")


def extra_probes(X, rng=None, n=8):
    """Elements of the orthogonal of the points used when Q is not certified."""
    out = []
    if X.graph is not None:
        out.extend(coherence_vectors(X.web, X.model.positive, anticliques(X.graph)))
    if X.model.points_kind == "polytope" and X.P:
        rng = rng or random.Random(len(X.web))
        for _ in range(n):
            y = Vec(X.web, X.pcr, {a: Fraction(rng.randint(0, 4)) for a in X.web})
            top = max((scalar_product(p, y).value for p in X.P), default=0)
            if top > 0:
                out.append(Vec(X.web, X.pcr, {a: v / top for a, v in y.entries.items()}))
    return out


def member_point(X, x):
    """Is x a point of X?  Tests orthogonality against Q (and probes)."""
    if x.web != X.web:
        raise UsageError("vector web does not match the space")
    for q in X.Q:
        if not _orth(x, q):
            return Refuted(q, _why(x, q))
    if X.q_exact:
        return Certified()
    probes = extra_probes(X)
    for q in probes:
        if not _orth(x, q):
            return Refuted(q, _why(x, q))
    return ProbeSound(len(X.Q) + len(probes))


def _why(x, q):
    out = scalar_product(x, q)
    return "pairing undefined" if not is_defined(out) else f"pairing {literal(out.value)} outside the ball"


def hom_pairing(s, p, q):
    """<s, p (x) q> = sum over (a, b) of s_{a,b} p_a q_b, without building the tensor."""
    pcr = p.pcr
    pe, qe = p.entries, q.entries
    terms = []
    for (a, b), v in s.entries.items():
        u = pe.get(a)
        if u is not None:
            w = qe.get(b)
            if w is not None:
                terms.append(pcr.mul(pcr.mul(v, u), w))
    total = pcr.add(terms)
    return Undefined("scalar product") if total is None else Defined(total)


def member_hom(X, Y, s):
    """Is s a morphism from X to Y?  Pairs s with every p (x) q, p in P_X, q in Q_Y."""
    if s.dom != X.web or s.cod != Y.web:
        raise UsageError("matrix webs do not match the spaces")
    for p in X.P:
        for q in Y.Q:
            out = hom_pairing(s, p, q)
            if not (is_defined(out) and X.pcr.in_ball(out.value)):
                why = "pairing undefined" if not is_defined(out) else f"pairing {literal(out.value)} outside the ball"
                return Refuted((p, q), why)
    if X.p_exact and Y.q_exact:
        return Certified()
    return ProbeSound(len(X.P) * len(Y.Q))


def member_semimod(X, x):
    """Is x in the semimodule of X, i.e. is |x| a point of X?"""
    if not x.pcr.absolute:
        raise UsageError(f"{x.pcr.tag} is not an absolute rig")
    return member_point(X, abs_vec(x))


def member_hom_semimod(X, Y, s):
    from .families import abs_mat
    if not s.pcr.absolute:
        return member_hom(X, Y, s)
    return member_hom(X, Y, abs_mat(s))


# --- coherence helpers -----------------------------------------------------------------

def cliques(graph):
    return [frozenset(c) for c in nx.find_cliques(graph)] if len(graph) else []


def anticliques(graph):
    return cliques(nx.complement(graph)) if len(graph) else []


def coherence_vectors(web, pcr, sets):
    return [Vec(web, pcr, {a: pcr.one for a in s}) for s in sets]


def is_clique(graph, labels):
    labels = list(labels)
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if a != b and not graph.has_edge(a, b):
                return False
    return True


def coherence_space(web, graph, name=""):
    pcr = MODELS["coh"].positive
    singles = [frozenset([a]) for a in web]
    P = _dedupe(coherence_vectors(web, pcr, cliques(graph) + singles))
    Q = _dedupe(coherence_vectors(web, pcr, anticliques(graph) + singles))
    return SpaceRepr(web, P, Q, "coh", True, True, True, True, graph, name)


def _dedupe(vectors):
    seen, out = set(), []
    for v in vectors:
        key = tuple(sorted(v.entries, key=label_key))
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


# --- exact polytope vertices --------------------------------------------------------------

def solve(A, b):
    """Solve A x = b exactly; None when A is singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            return None
        M[col], M[pivot] = M[pivot], M[col]
        inv = 1 / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [u - f * v for u, v in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def polytope_vertices(web, generators):
    """Vertices of {x >= 0 : <g, x> <= 1 for g in generators}, as vectors."""
    labels = list(web)
    n = len(labels)
    pcr = generators[0].pcr if generators else NonnegRational()
    rows = []
    for i in range(n):
        rows.append(([1 if j == i else 0 for j in range(n)], 0, "nonneg"))
    for g in generators:
        rows.append(([g[a] for a in labels], 1, "gen"))
    found = {}
    for combo in itertools.combinations(rows, n):
        sol = solve([r[0] for r in combo], [r[1] for r in combo])
        if sol is None:
            continue
        if any(v < 0 for v in sol):
            continue
        if any(sum(c * v for c, v in zip(g[0], sol)) > 1 for g in rows if g[2] == "gen"):
            continue
        found[tuple(sol)] = Vec(web, pcr, {a: v for a, v in zip(labels, sol)})
    return [found[k] for k in sorted(found)]


# --- point oracles ------------------------------------------------------------------------

def all_vectors(web, pcr):
    values = pcr.finite_values
    labels = list(web)
    for combo in itertools.product(values, repeat=len(labels)):
        yield Vec(web, pcr, dict(zip(labels, combo)))


def orthogonal_of(vectors, web, pcr):
    """All vectors of a finite carrier orthogonal to every given vector."""
    return [y for y in all_vectors(web, pcr) if all(orth_rel(pcr, y, v) for v in vectors)]


def biorthogonal_points(X):
    """P-biorthogonal of X, enumerated exactly (finite carriers only)."""
    perp = orthogonal_of(X.P, X.web, X.pcr)
    return orthogonal_of(perp, X.web, X.pcr)


def point_generators(X, side="points"):
    """A finite set of points on which linear conditions can be decided.

    ``side="points"`` gives generators of points X computed from Q (so it
    requires q_exact); ``side="dual"`` gives generators of the points of the
    dual, computed from P.  For finite carriers the sets are all points; for
    polytopes they are the vertices; for the ``everything`` models a grid.
    """
    kind = X.model.points_kind
    gens = X.Q if side == "points" else X.P
    if kind == "finite":
        if side == "points":
            return [x for x in all_vectors(X.web, X.pcr) if all(_orth(x, q) for q in X.Q)]
        return orthogonal_of(X.P, X.web, X.pcr)
    if kind == "polytope":
        return polytope_vertices(X.web, gens)
    values = [Fraction(0), Fraction(1), Fraction(3)]
    if isinstance(X.pcr, ExtendedNonneg):
        from .pcr import INF
        values = [Fraction(0), Fraction(1), INF]
    labels = list(X.web)
    return [Vec(X.web, X.pcr, dict(zip(labels, combo))) for combo in itertools.product(values, repeat=len(labels))]


# --- construction ------------------------------------------------------------------------

def _web_of(base):
    if isinstance(base, Web):
        return base
    if isinstance(base, int):
        return atoms(base)
    return Web(base)


def make_space(model, base=1, name=""):
    """Build a base space of a model.

    ``base`` is a web size, a web, or a dict with key ``web`` and, per
    model, ``graph`` (coherence edges), ``shape`` ("cube" or "simplex") or
    ``Q`` (rows of generator entries) for PCoh.
    """
    m = get_model(model)
    data = base if isinstance(base, dict) else {"web": base}
    web = _web_of(data["web"])
    pcr = m.positive
    es = [basis(web, pcr, a) for a in web]
    if m.id == "coh":
        graph = nx.Graph()
        graph.add_nodes_from(web)
        for a, b in data.get("graph", ()):
            if a not in web or b not in web:
                raise UsageError(f"edge {(a, b)!r} is outside the web")
            if a != b:
                graph.add_edge(a, b)
        return coherence_space(web, graph, name)
    if m.id == "pcoh":
        if "Q" in data:
            labels = list(web)
            Q = [Vec(web, pcr, {a: Fraction(v) for a, v in zip(labels, row)}) for row in data["Q"]]
            if not is_covering(Q, web):
                raise UsageError("Q must be a covering")
            P = [v for v in polytope_vertices(web, Q) if v.entries]
            top = _top_of(P)
            return SpaceRepr(web, P, Q, m, True, True, top is not None, False, name=name)
        shape = data.get("shape", "cube")
        if shape == "cube":
            return SpaceRepr(web, [diagonal(web, pcr)], es, m, True, True, True, False, name=name)
        if shape == "simplex":
            return SpaceRepr(web, es, [diagonal(web, pcr)], m, True, True, False, True, name=name)
        raise UsageError(f"unknown PCoh shape {shape!r}")
    gens = es + ([diagonal(web, pcr)] if len(web) > 1 else [])
    return SpaceRepr(web, gens, gens, m, True, True, True, True, name=name)


def _top_of(vectors):
    for v in vectors:
        if all(all(v[a] >= w[a] for a in w.entries) for w in vectors):
            return v
    return None


def random_space(model, n, rng):
    """A random base space on a web of size n."""
    m = get_model(model)
    web = atoms(n)
    if m.id == "coh":
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5]
        return make_space(m, {"web": web, "graph": edges})
    if m.id == "pcoh":
        roll = rng.random()
        if roll < 0.2:
            return make_space(m, {"web": web, "shape": "cube"})
        if roll < 0.35:
            return make_space(m, {"web": web, "shape": "simplex"})
        vals = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
        rows = [[rng.choice(vals) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        for a in range(n):
            if all(r[a] == 0 for r in rows):
                rows.append([Fraction(1) if j == a else Fraction(0) for j in range(n)])
        return make_space(m, {"web": web, "Q": rows})
    return make_space(m, web)


def all_graphs(n):
    """One graph per isomorphism class on n vertices, as edge lists."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    seen, out = [], []
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        if not any(nx.is_isomorphic(g, h) for h in seen):
            seen.append(g)
            out.append(edges)
    return out


# --- characterization of morphisms -----------------------------------------------------------

def _in_ball(pcr, out):
    return is_defined(out) and pcr.in_ball(out.value)


def _apply(s, x):
    from .families import mat_apply
    return mat_apply(s, x)


def _orth_all(x, ys):
    return is_defined(x) and all(_orth(x, y) for y in ys)


def predual_conditions(X, Y, s):
    """The four equivalent conditions for s to be a morphism X -o Y.

    (1) s maps every point of X to a point of Y;
    (2) s pairs into the ball with every p (x) q, p in P_X, q in Q_Y;
    (3) s maps every p in P_X to a point of Y;
    (4) the transpose of s maps every q in Q_Y into the orthogonal of P_X.
    Points of X are enumerated by point_generators, points of Y tested
    against Q_Y; both spaces must be exact on the side used.
    """
    from .families import transpose
    pts = point_generators(X, "points")
    c1 = all(_orth_all(_apply(s, x), Y.Q) for x in pts)
    c2 = all(_in_ball(X.pcr, hom_pairing(s, p, q)) for p in X.P for q in Y.Q)
    c3 = all(_orth_all(_apply(s, p), Y.Q) for p in X.P)
    st = transpose(s)
    c4 = all(_orth_all(_apply(st, q), X.P) for q in Y.Q)
    return c1, c2, c3, c4


def linarrow_conditions(X, Y, s):
    """Four equivalent descriptions of the points of X -o Y, through points only.

    (1) s . x is a point of Y for every point x of X;
    (2) <s, x (x) y> is in the ball for all points x of X and y of Y^perp;
    (3) the transpose maps points of Y^perp to points of X^perp;
    (4) s . x is defined and <s . x, y> is in the ball for all such x, y.
    """
    from .families import transpose
    xs = point_generators(X, "points")
    ys = point_generators(Y, "dual")
    c1 = all(_orth_all(_apply(s, x), ys) for x in xs)
    c2 = all(_in_ball(X.pcr, hom_pairing(s, x, y)) for x in xs for y in ys)
    st = transpose(s)
    c3 = all(_orth_all(_apply(st, y), xs) for y in ys)
    c4 = True
    for x in xs:
        sx = _apply(s, x)
        if not is_defined(sx) or not all(_in_ball(X.pcr, scalar_product(sx, y)) for y in ys):
            c4 = False
            break
    return c1, c2, c3, c4


def admits_nonmorphisms(m):
    """Whether some matrix on finite webs fails to be a morphism: a proper ball or a partial sum."""
    pcr = m.positive
    vals = pcr.finite_values or (Fraction(1, 2), Fraction(1), Fraction(3))
    return any(not pcr.in_ball(v) for v in vals) or any(pcr.add([a, b]) is None for a in vals for b in vals)


def random_matrix(X, Y, rng, density=0.5):
    """A random positive matrix, scaled so that morphisms and non-morphisms both occur."""
    from .families import Mat
    pcr = X.pcr
    if pcr.finite_values:
        vals = [v for v in pcr.finite_values if not pcr.is_zero(v)]
    elif X.model.points_kind == "polytope":
        vals = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2)]
    else:
        vals = [Fraction(1, 2), Fraction(1), Fraction(3)]
    return Mat(X.web, Y.web, pcr, {(a, b): rng.choice(vals) for a in X.web for b in Y.web if rng.random() < density})


def run_lemma_suite(model, instances=200, seed=0, max_web=3):
    """Scalar rearranging, the covering principle and the four descriptions of X -o Y."""
    from .families import mat_apply, transpose
    from .report import LawReport
    m = get_model(model)
    rng = random.Random(seed)
    report = LawReport("spaces.lemmas")
    seen = {True: 0, False: 0}
    for k in range(instances):
        X = random_space(m, rng.randint(1, max_web), rng)
        Y = random_space(m, rng.randint(1, max_web), rng)
        s = random_matrix(X, Y, rng)
        xs = point_generators(X, "points")
        ys = point_generators(Y, "dual")
        x = rng.choice(xs)
        y = rng.choice(ys)
        tag = f"spaces.lemmas/{k}"
        # scalar rearranging: <s . x, y> = <s, x (x) y> and <x, s^T . y> = <s, x (x) y> when the left is defined
        sx, sty = mat_apply(s, x), mat_apply(transpose(s), y)
        whole = hom_pairing(s, x, y)
        if is_defined(sx):
            report.check(f"{tag}/rearrange", scalar_product(sx, y) == whole,
                         {"s": s.to_json(), "x": x.to_json(), "y": y.to_json()})
        if is_defined(sty):
            report.check(f"{tag}/rearrange-transpose", scalar_product(x, sty) == whole,
                         {"s": s.to_json(), "x": x.to_json(), "y": y.to_json()})
        # covering principle: pairings against a covering all defined forces s . x defined
        if all(is_defined(hom_pairing(s, x, q)) for q in Y.Q):
            report.check(f"{tag}/covering", is_defined(sx), {"s": s.to_json(), "x": x.to_json()})
        conds = linarrow_conditions(X, Y, s)
        report.check(f"{tag}/linarrow", len(set(conds)) == 1, {"conditions": list(conds), "s": s.to_json()})
        seen[conds[0]] += 1
    # both outcomes must occur, otherwise the agreement is vacuous
    report.check("spaces.lemmas/both-outcomes", seen[True] > 0 and (seen[False] > 0 or not admits_nonmorphisms(m)),
                 dict(seen))
    return report


def run_predual_suite(model, instances=200, seed=0, max_web=3, exhaustive=False):
    """Conditions (1)-(4) of the predual characterization agree on every matrix tried."""
    from .families import Mat
    from .report import LawReport
    m = get_model(model)
    report = LawReport("spaces.predual")
    seen = {True: 0, False: 0}

    def one(tag, X, Y, s):
        conds = predual_conditions(X, Y, s)
        report.check(tag, len(set(conds)) == 1, {"conditions": list(conds), "s": s.to_json()})
        seen[conds[0]] += 1

    if exhaustive:
        if not m.positive.finite_values:
            raise UsageError(f"exhaustive runs need a finite carrier, not {m.positive.tag}")
        vals = m.positive.finite_values
        for X in _all_spaces(m, max_web):
            for Y in _all_spaces(m, max_web):
                cells = [(a, b) for a in X.web for b in Y.web]
                for combo in itertools.product(vals, repeat=len(cells)):
                    s = Mat(X.web, Y.web, m.positive, dict(zip(cells, combo)))
                    one(f"spaces.predual/{X.name}->{Y.name}/{_bits(combo)}", X, Y, s)
    else:
        rng = random.Random(seed)
        for k in range(instances):
            X = random_space(m, rng.randint(1, max_web), rng)
            Y = random_space(m, rng.randint(1, max_web), rng)
            one(f"spaces.predual/{k}", X, Y, random_matrix(X, Y, rng))
    report.check("spaces.predual/both-outcomes", seen[True] > 0 and (seen[False] > 0 or not admits_nonmorphisms(m)),
                 dict(seen))
    return report


def _bits(combo):
    return "".join("1" if v != 0 else "0" for v in combo)


def _all_spaces(m, max_web):
    """Every base space up to isomorphism on webs of size <= max_web (graphs for coherence)."""
    out = []
    for n in range(1, max_web + 1):
        if m.id == "coh":
            for k, edges in enumerate(all_graphs(n)):
                out.append(make_space(m, {"web": n, "graph": edges}, name=f"g{n}.{k}"))
        else:
            out.append(make_space(m, n, name=f"w{n}"))
    return out
