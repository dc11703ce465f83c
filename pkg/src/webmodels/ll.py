"""Linear logic connectives, the structural matrices and a truncated exponential.

Exponential webs are cut at a bang degree ``d``: a multiset is kept when it
has at most ``d`` elements and, for nested exponentials, when the sizes of
its inner multisets add up to at most ``d``.  Every law check compares two
matrices only on a stated region where both truncated sides are known to
equal their untruncated counterparts.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .families import (Mat, Multiset, STAR, Tagged, Vec, Web, ONE_WEB, EMPTY_WEB, basis, compose, identity,
                       kronecker, label_key, label_to_json, mat_apply, mat_compose, product_web,
                       tensor, transpose, vec_sum, vec_as_arrow, mat_as_vec, change_carrier)
from .pcr import Undefined, UsageError, is_defined, literal
from .report import LawReport
from .spaces import (SpaceRepr, coherence_space, dual, get_model, is_clique, make_space, member_hom,
                     point_generators, polytope_vertices, random_space)


@dataclass
class TruncCfg:
    bang_degree: int = 2
    s_bound: int = 2

    def __post_init__(self):
        if self.bang_degree < 0:
            raise UsageError("bang degree must be >= 0")
        if self.s_bound < 1:
            raise UsageError("s bound must be >= 1")


# --- multiplicatives -------------------------------------------------------------------

def _coh(graph, a, b):
    return a == b or graph.has_edge(a, b)


def tensor_space(X, Y):
    """X (x) Y: P is the tensor of the preduals; Q is only a probe set."""
    _same_model(X, Y)
    web = product_web(X.web, Y.web)
    P = [tensor(p, q) for p in X.P for q in Y.P]
    Q = [tensor(p, q) for p in X.Q for q in Y.Q]
    graph = None
    if X.graph is not None and Y.graph is not None:
        graph = nx.Graph()
        graph.add_nodes_from(web)
        labels = list(web)
        for i, (a, b) in enumerate(labels):
            for (a2, b2) in labels[i + 1:]:
                if _coh(X.graph, a, a2) and _coh(Y.graph, b, b2):
                    graph.add_edge((a, b), (a2, b2))
    dominated = X.p_dominated and Y.p_dominated and len(X.P) == 1 and len(Y.P) == 1
    return SpaceRepr(web, P, Q, X.model, X.p_exact and Y.p_exact, False, dominated, False, graph,
                     name=f"{X.name or 'X'}*{Y.name or 'Y'}")


def linarrow_space(X, Y):
    """X -o Y, built as the dual of X (x) Y^perp."""
    return dual(tensor_space(X, dual(Y)))


def _same_model(*spaces):
    ids = {S.model.id for S in spaces}
    if len(ids) > 1:
        raise UsageError(f"spaces come from different models: {sorted(ids)}")


def one_space(model):
    m = get_model(model)
    if m.id == "coh":
        g = nx.Graph()
        g.add_node(STAR)
        return coherence_space(ONE_WEB, g, "1")
    e = basis(ONE_WEB, m.positive, STAR)
    return SpaceRepr(ONE_WEB, [e], [e], m, True, True, True, True, name="1")


def bot_space(model):
    return dual(one_space(model))


def top_space(model):
    m = get_model(model)
    z = Vec(EMPTY_WEB, m.positive)
    graph = nx.Graph() if m.id == "coh" else None
    return SpaceRepr(EMPTY_WEB, [z], [z], m, True, True, True, True, graph, name="T")


# --- additives ---------------------------------------------------------------------------

def additive_web(spaces):
    return Web(Tagged(i, a) for i, X in enumerate(spaces, 1) for a in X.web)


def _inj_vec(i, x, web):
    return Vec(web, x.pcr, {Tagged(i, a): v for a, v in x.entries.items()})


def additive_space(kind, spaces):
    """The with (kind="with") or plus (kind="plus") of a list of spaces."""
    if not spaces:
        return top_space("rel") if kind == "with" else dual(top_space("rel"))
    _same_model(*spaces)
    m = spaces[0].model
    web = additive_web(spaces)
    if kind not in ("with", "plus"):
        raise UsageError(f"unknown additive {kind!r}")
    gens = "Q" if kind == "with" else "P"
    other = "P" if kind == "with" else "Q"
    union = [_inj_vec(i, v, web) for i, X in enumerate(spaces, 1) for v in getattr(X, gens)]
    combos = []
    for choice in itertools.product(*[getattr(X, other) for X in spaces]):
        combos.append(vec_sum([_inj_vec(i, v, web) for i, v in enumerate(choice, 1)], web, m.positive))
    combos = [c for c in combos if is_defined(c)]
    graph = None
    if all(X.graph is not None for X in spaces):
        graph = nx.Graph()
        graph.add_nodes_from(web)
        for i, X in enumerate(spaces, 1):
            graph.add_edges_from((Tagged(i, a), Tagged(i, b)) for a, b in X.graph.edges)
        if kind == "with":
            labels = list(web)
            graph.add_edges_from((a, b) for a in labels for b in labels if a.tag < b.tag)
    if kind == "with":
        exact = all(X.q_exact for X in spaces)
        return SpaceRepr(web, combos, union, m, all(X.p_exact for X in spaces), exact,
                         all(X.p_dominated for X in spaces), False, graph, name="&")
    return SpaceRepr(web, union, combos, m, all(X.p_exact for X in spaces), False,
                     False, all(X.q_dominated for X in spaces), graph, name="+")


def with_space(X, Y):
    return additive_space("with", [X, Y])


def plus_space(X, Y):
    return additive_space("plus", [X, Y])


def inj_mat(i, spaces, pcr=None):
    """inj_i : X_i -o (+) X, entries delta_ij delta_aa'."""
    pcr = pcr or spaces[0].model.signed
    web = additive_web(spaces)
    return kronecker(spaces[i - 1].web, web, pcr, lambda a: Tagged(i, a))


def proj_mat(i, spaces, pcr=None):
    """proj_i : (&) X -o X_i."""
    pcr = pcr or spaces[0].model.signed
    web = additive_web(spaces)
    return kronecker(web, spaces[i - 1].web, pcr, lambda t: t.label if t.tag == i else None)


def pairing_vec(xs, web):
    """The tuple <x_1, ..., x_n> as a vector on an additive web."""
    return vec_sum([_inj_vec(i, x, web) for i, x in enumerate(xs, 1)], web, xs[0].pcr)


# --- exponential ----------------------------------------------------------------------------

def label_degree(label):
    if isinstance(label, Multiset):
        return sum(label_degree(e) for e in label.elems)
    return 1


def _multisets(labels, degs, max_size, budget):
    """Multisets over labels with at most max_size elements and total degree <= budget."""
    order = sorted(range(len(labels)), key=lambda i: (degs[i], label_key(labels[i])))
    out = []

    def rec(start, size, left, acc):
        out.append(tuple(acc))
        if size == max_size:
            return
        for j in range(start, len(order)):
            i = order[j]
            if degs[i] > left:
                break
            acc.append(labels[i])
            rec(j, size + 1, left - degs[i], acc)
            acc.pop()

    rec(0, 0, budget, [])
    return out


def _sum_closure(X, limit=64):
    """Closure of P under defined pairwise sums, capped."""
    from .families import vec_sum as vsum
    found = {frozenset(p.entries.items()): p for p in X.P}
    frontier = list(found.values())
    while frontier and len(found) < limit:
        new = []
        items = list(found.values())
        for p in frontier:
            for q in items:
                s = vsum([p, q], X.web, X.pcr)
                if is_defined(s):
                    key = frozenset(s.entries.items())
                    if key not in found:
                        found[key] = s
                        new.append(s)
        frontier = new
    return list(found.values())


def admissible_test(X):
    """Predicate on supports: is there a point invertible on this support?"""
    if X.graph is not None:
        graph = X.graph
        return lambda supp: is_clique(graph, supp)
    base = getattr(X, "bang_of", None)
    if base is not None:
        # x^! is invertible on a set of multisets iff x is invertible on the union of their supports
        inner = admissible_test(base)
        return lambda supp: inner(set().union(*(m.support() for m in supp)) if supp else set())
    closure = _sum_closure(X)
    inv = [frozenset(a for a, v in c.entries.items() if c.pcr.is_invertible(v)) for c in closure]
    return lambda supp: any(set(supp) <= s for s in inv)


def bang_web(X, d):
    labels = list(X.web)
    degs = [label_degree(a) for a in labels]
    ok = admissible_test(X)
    msets = [Multiset(m) for m in _multisets(labels, degs, d, d) if ok(set(m))]
    return Web(msets, {"degree": d})


def promote(x, web):
    """x^! on a truncated exponential web: (x^!)_m is the product over m."""
    pcr = x.pcr
    out = {}
    for m in web:
        val = pcr.one
        for a in m.elems:
            v = x.entries.get(a)
            if v is None:
                val = None
                break
            val = pcr.mul(val, v)
        if val is not None:
            out[m] = val
    return Vec(web, pcr, out)


def _label_bounds(X):
    """Per-label upper bounds on point entries, when available."""
    kind = X.model.points_kind
    if kind != "polytope":
        return {a: Fraction(1) for a in X.web}
    if X.q_exact and len(X.web) <= 4:
        verts = polytope_vertices(X.web, X.Q)
    elif X.p_dominated:
        verts = X.P
    else:
        return None
    return {a: max((v[a] for v in verts), default=Fraction(0)) for a in X.web}


def bang_space(X, cfg):
    d = cfg.bang_degree if isinstance(cfg, TruncCfg) else int(cfg)
    web = bang_web(X, d)
    P = [promote(p, web) for p in X.P]
    bounds = _label_bounds(X)
    Q = []
    if bounds is not None:
        pcr = X.pcr
        for m in web:
            u = Fraction(1)
            for a in m.elems:
                u *= bounds[a] if bounds[a] > 0 else 1
            Q.append(Vec(web, pcr, {m: pcr.one if X.model.points_kind != "polytope" else 1 / u}))
    graph = None
    if X.graph is not None:
        graph = nx.Graph()
        graph.add_nodes_from(web)
        labels = list(web)
        for i, m in enumerate(labels):
            for m2 in labels[i + 1:]:
                if is_clique(X.graph, m.support() | m2.support()):
                    graph.add_edge(m, m2)
    exact = X.p_exact and (X.model.points_kind == "everything" or X.p_dominated or X.graph is not None)
    out = SpaceRepr(web, P, Q, X.model, exact, False, X.p_dominated, False, graph, name=f"!{X.name}")
    out.bang_of = X
    return out


def bang_mat(s, dom, cod):
    """!s between two exponential webs (Fig. entries summed over enumerations)."""
    pcr = s.pcr
    cols = {}
    for (a, b), v in s.entries.items():
        cols.setdefault(b, []).append((a, v))
    acc = {}
    for mb in cod:
        choices = [cols.get(b, ()) for b in mb.elems]
        for seq in itertools.product(*choices):
            m = Multiset(a for a, _ in seq)
            if m not in dom:
                continue
            val = pcr.one
            for _, v in seq:
                val = pcr.mul(val, v)
            acc.setdefault((m, mb), []).append(val)
    out = {}
    for key, terms in acc.items():
        total = pcr.add(terms)
        if total is None:
            return Undefined({"entry": [label_to_json(key[0]), label_to_json(key[1])]})
        out[key] = total
    return Mat(dom, cod, pcr, out, check=False)


# --- structural matrices ------------------------------------------------------------------------

def lam_mat(web, pcr):
    return kronecker(product_web(ONE_WEB, web), web, pcr, lambda p: p[1])


def rho_mat(web, pcr):
    return kronecker(product_web(web, ONE_WEB), web, pcr, lambda p: p[0])


def alpha_mat(wx, wy, wz, pcr):
    dom = product_web(product_web(wx, wy), wz)
    cod = product_web(wx, product_web(wy, wz))
    return kronecker(dom, cod, pcr, lambda p: (p[0][0], (p[0][1], p[1])))


def sym_mat(wx, wy, pcr):
    return kronecker(product_web(wx, wy), product_web(wy, wx), pcr, lambda p: (p[1], p[0]))


def ev_mat(wx, wy, pcr):
    """ev : ((X -o Y) (x) X) -o Y, ev_{((a,b),a'),b'} = delta_aa' delta_bb'."""
    arrow = product_web(wx, wy)
    dom = product_web(arrow, wx)
    return kronecker(dom, wy, pcr, lambda p: p[0][1] if p[0][0] == p[1] else None)


def cur_mat(s, wx, wy):
    """cur(s)_{a,(b,c)} = s_{(a,b),c}: a pure reshaping of the entries."""
    wz = s.cod
    cod = product_web(wy, wz)
    return Mat(wx, cod, s.pcr, {(ab[0], (ab[1], c)): v for (ab, c), v in s.entries.items()}, check=False)


def der_mat(bweb, web, pcr):
    return kronecker(bweb, web, pcr, lambda m: m.elems[0] if len(m) == 1 else None)


def dig_mat(bweb, bbweb, pcr):
    """dig : !X -o !!X, with a one at (m1 + ... + mk, [m1, ..., mk])."""
    entries = {}
    for M in bbweb:
        m = Multiset(e for inner in M.elems for e in inner.elems)
        if m in bweb:
            entries[(m, M)] = pcr.one
    return Mat(bweb, bbweb, pcr, entries, check=False)


def seely0_mat(pcr, top_bang_web):
    return Mat(ONE_WEB, top_bang_web, pcr, {(STAR, Multiset()): pcr.one})


def seely0_inv_mat(pcr, top_bang_web):
    return Mat(top_bang_web, ONE_WEB, pcr, {(Multiset(), STAR): pcr.one})


def _shift(k, m):
    return m.map(lambda a: Tagged(k, a))


def seely2_mat(bx, by, bxy, pcr):
    """seely2 : !X (x) !Y -o !(X & Y), one at ((m1, m2), 1.m1 + 2.m2)."""
    entries = {}
    for m1 in bx:
        for m2 in by:
            m = _shift(1, m1) + _shift(2, m2)
            if m in bxy:
                entries[((m1, m2), m)] = pcr.one
    return Mat(product_web(bx, by), bxy, pcr, entries, check=False)


def seely2_inv_mat(bx, by, bxy, pcr):
    return transpose(seely2_mat(bx, by, bxy, pcr))


def monoidal_mat(bx, by, bxy, pcr):
    """The lax monoidal map !X (x) !Y -o !(X (x) Y): one at (m1, m2), p when p projects to m1, m2."""
    entries = {}
    for p in bxy:
        m1 = Multiset(a for a, _ in p.elems)
        m2 = Multiset(b for _, b in p.elems)
        if m1 in bx and m2 in by:
            entries[((m1, m2), p)] = pcr.one
    return Mat(product_web(bx, by), bxy, pcr, entries, check=False)


STRUCT_KINDS = ("lambda", "rho", "alpha", "sigma", "ev", "cur", "der", "dig", "seely0", "seely0_inv",
                "seely2", "seely2_inv")


def struct_mat(kind, spaces, cfg=None, s=None):
    """Structural matrix of the given kind between the webs of the given spaces."""
    cfg = cfg or TruncCfg()
    pcr = spaces[0].model.signed if spaces else None
    d = cfg.bang_degree
    if kind == "lambda":
        return lam_mat(spaces[0].web, pcr)
    if kind == "rho":
        return rho_mat(spaces[0].web, pcr)
    if kind == "alpha":
        return alpha_mat(*(S.web for S in spaces[:3]), pcr)
    if kind == "sigma":
        return sym_mat(spaces[0].web, spaces[1].web, pcr)
    if kind == "ev":
        return ev_mat(spaces[0].web, spaces[1].web, pcr)
    if kind == "cur":
        return cur_mat(s, spaces[0].web, spaces[1].web)
    if kind == "der":
        return der_mat(bang_web(spaces[0], d), spaces[0].web, pcr)
    if kind == "dig":
        bX = bang_space(spaces[0], d)
        return dig_mat(bX.web, bang_web(bX, d), pcr)
    if kind in ("seely0", "seely0_inv"):
        tw = bang_web(top_space(spaces[0].model if spaces else "rel"), d)
        pcr = pcr or get_model("rel").signed
        return seely0_mat(pcr, tw) if kind == "seely0" else seely0_inv_mat(pcr, tw)
    if kind in ("seely2", "seely2_inv"):
        X, Y = spaces[:2]
        bx, by = bang_web(X, d), bang_web(Y, d)
        bxy = bang_web(with_space(X, Y), d)
        return (seely2_mat if kind == "seely2" else seely2_inv_mat)(bx, by, bxy, pcr)
    raise UsageError(f"unknown structural matrix {kind!r}")


# --- law checking -----------------------------------------------------------------------

def flip_entry(mat, key=None, seed=0):
    """Copy of mat with one entry flipped between 0 and 1."""
    pcr = mat.pcr
    entries = dict(mat.entries)
    if key is None:
        rng = random.Random(seed)
        if entries and rng.random() < 0.5:
            key = sorted(entries, key=lambda k: (label_key(k[0]), label_key(k[1])))[rng.randrange(len(entries))]
        else:
            key = (rng.choice(mat.dom.labels), rng.choice(mat.cod.labels))
    if key in entries:
        del entries[key]
    else:
        entries[key] = pcr.one
    return Mat(mat.dom, mat.cod, pcr, entries, check=False), key


def _lit(v):
    return literal(v)


def _key_json(key):
    if isinstance(key, tuple) and len(key) == 2:
        return [label_to_json(key[0]), label_to_json(key[1])]
    return label_to_json(key)


def _shape(x):
    return (x.dom, x.cod) if isinstance(x, Mat) else (x.web,)


def law_equal(report, case, lhs, rhs, region=None, context=None):
    """Record whether two vectors or matrices agree on a region.

    An undefined left side makes the case pass vacuously (status
    ``undefined-sum``); an undefined right side under a defined left side
    is a failure.  The region must meet the support of one of the sides, so
    that a law cannot pass by comparing nothing.
    """
    if not is_defined(lhs):
        return report.record(case, "undefined-sum", {"lhs": lhs.witness, **(context or {})})
    if not is_defined(rhs):
        return report.record(case, "fail", {"rhs undefined": rhs.witness, **(context or {})})
    if _shape(lhs) != _shape(rhs):
        return report.record(case, "fail", {"shape": [repr(w)[:120] for w in _shape(lhs) + _shape(rhs)],
                                            **(context or {})})
    zero = lhs.pcr.zero
    keys = set(lhs.entries) | set(rhs.entries)
    if region is not None:
        keys = {k for k in keys if region(k)}
    if not keys and (lhs.entries or rhs.entries):
        return report.record(case, "fail", {"vacuous": "region misses both supports", **(context or {})})
    for k in sorted(keys, key=lambda k: repr(k)):
        a, b = lhs.entries.get(k, zero), rhs.entries.get(k, zero)
        if not (a == b or (lhs.pcr.is_zero(a) and lhs.pcr.is_zero(b))):
            return report.record(case, "fail", {"entry": _key_json(k), "lhs": _lit(a), "rhs": _lit(b),
                                                **(context or {})})
    return report.record(case, "pass")


def check_member(report, case, verdict, context=None):
    if verdict.refuted:
        w = verdict.witness
        return report.record(case, "fail", {"refuted by": repr(w)[:200], "reason": verdict.reason, **(context or {})})
    return report.record(case, "pass", None)


def sample_point(X, rng):
    """A point of X, picked among exact generators and scaled down."""
    gens = [g for g in point_generators(X, "points")] if X.q_exact else list(X.P)
    gens = gens or [Vec(X.web, X.pcr)]
    x = rng.choice(gens)
    if X.model.points_kind == "polytope":
        # convex combination with another generator
        y = rng.choice(gens)
        t = Fraction(rng.randint(0, 4), 4)
        return Vec(X.web, X.pcr, {a: t * x[a] + (1 - t) * y[a] for a in X.web})
    return x


def sample_signed(X, rng, point):
    """Lift a point to the signed rig by choosing random signs (absolute models)."""
    m = X.model
    if not m.absolute:
        return point
    pcr = m.signed
    out = {}
    for a, v in point.entries.items():
        if pcr.tag == "finrat":
            out[a] = Fraction(rng.choice([-3, -1, 1, 2]))
        else:
            out[a] = v * rng.choice([-1, 1])
    return Vec(point.web, pcr, out)


def sample_morphism(X, Y, rng, tries=30):
    """A matrix that is a morphism from X to Y (not refuted)."""
    pcr = X.model.positive
    kind = X.model.points_kind
    for _ in range(tries):
        entries = {}
        for a in X.web:
            for b in Y.web:
                if rng.random() < 0.5:
                    if kind == "polytope":
                        entries[(a, b)] = Fraction(rng.randint(1, 4), rng.randint(2, 8))
                    elif pcr.finite_values:
                        entries[(a, b)] = pcr.one
                    else:
                        entries[(a, b)] = Fraction(rng.randint(1, 3))
        s = Mat(X.web, Y.web, pcr, entries)
        if not member_hom(X, Y, s).refuted:
            return s
    return Mat(X.web, Y.web, pcr)


def _space_for(model, n, rng):
    return random_space(model, n, rng) if get_model(model).id in ("coh",) else make_space(model, n)


def _bang_region(d):
    """Outputs of !!!X whose flattening keeps at most d inner multisets."""
    def ok(key):
        col = key[1] if isinstance(key, tuple) else key
        return sum(len(M) for M in col.elems) <= d
    return ok


def run_ll_suite(model, sizes=(1, 2, 3), cfg=None, seed=0, suites=("ll.monoidal", "ll.comonad", "ll.seely"),
                 mutations=None, samples=3):
    """Check the identities of the linear logic structure as exact matrix equations."""
    cfg = cfg or TruncCfg(bang_degree=3)
    m = get_model(model)
    rng = random.Random(seed)
    report = LawReport("ll")
    mutations = mutations or {}

    def mut(kind, mat):
        if kind in mutations and is_defined(mat):
            flipped, key = flip_entry(mat, mutations[kind], seed)
            return flipped
        return mat

    for n in sizes:
        for rep in range(samples):
            X = _space_for(m, n, rng)
            Y = _space_for(m, max(1, (n + rep) % 3 + 1), rng)
            tag = f"n{n}.{rep}"
            if "ll.monoidal" in suites:
                _monoidal(report, m, X, Y, rng, f"ll.monoidal/{tag}")
            if "ll.comonad" in suites:
                _comonad(report, m, X, Y, cfg, rng, f"ll.comonad/{tag}", mut)
            if "ll.seely" in suites:
                _seely(report, m, X, Y, cfg, rng, f"ll.seely/{tag}", mut)
    return report


def _pt(X, rng):
    return sample_signed(X, rng, sample_point(X, rng))


def full_point(X):
    """A point with an invertible entry at every label, when one exists."""
    pcr = X.pcr
    kind = X.model.points_kind
    if kind == "everything":
        return Vec(X.web, pcr, {a: pcr.one for a in X.web})
    gens = point_generators(X, "points") if X.q_exact else list(X.P)
    if kind == "polytope":
        gens = [g for g in gens if g.entries] or gens
        k = len(gens)
        return Vec(X.web, pcr, {a: sum((g[a] for g in gens), Fraction(0)) / k for a in X.web})
    best = max(gens, key=lambda g: len(g.entries))
    return best


def action_points(X, rng, cap=8):
    """Points for the action laws: a sample, a full-support point, and every
    point when the carrier is finite and there are few of them."""
    pts = [_pt(X, rng), sample_signed(X, rng, full_point(X))]
    if X.model.points_kind == "finite":
        gens = point_generators(X, "points")
        if len(gens) <= cap:
            pts.extend(sample_signed(X, rng, g) for g in gens)
    return pts


def _hom(X, Y, rng):
    s = sample_morphism(X, Y, rng)
    if X.model.absolute:
        s = Mat(s.dom, s.cod, X.model.signed,
                {k: (v if X.model.signed.tag != "finrat" else Fraction(1)) * rng.choice([-1, 1])
                 for k, v in s.entries.items()})
    return s


def _monoidal(report, m, X, Y, rng, tag):
    pcr = m.signed
    one = one_space(m)
    Z = _space_for(m, 2, rng)
    x, y, z = _pt(X, rng), _pt(Y, rng), _pt(Z, rng)
    r = _pt(one, rng)
    rx = Vec(X.web, pcr, {a: pcr.mul(r[STAR], v) for a, v in x.entries.items()})
    law_equal(report, f"{tag}/lambda-action", mat_apply(lam_mat(X.web, pcr), tensor(r, x)), rx)
    law_equal(report, f"{tag}/rho-action", mat_apply(rho_mat(X.web, pcr), tensor(x, r)), rx)
    law_equal(report, f"{tag}/alpha-action", mat_apply(alpha_mat(X.web, Y.web, Z.web, pcr), tensor(tensor(x, y), z)),
              tensor(x, tensor(y, z)))
    law_equal(report, f"{tag}/sigma-action", mat_apply(sym_mat(X.web, Y.web, pcr), tensor(x, y)), tensor(y, x))
    law_equal(report, f"{tag}/sigma-involutive",
              mat_compose(sym_mat(Y.web, X.web, pcr), sym_mat(X.web, Y.web, pcr)), identity(product_web(X.web, Y.web), pcr))
    law_equal(report, f"{tag}/lambda-iso", mat_compose(lam_mat(X.web, pcr), transpose(lam_mat(X.web, pcr))),
              identity(X.web, pcr))
    # triangle: (X (x) lambda) . alpha = rho (x) Y
    lhs = mat_compose(tensor(identity(X.web, pcr), lam_mat(Y.web, pcr)), alpha_mat(X.web, ONE_WEB, Y.web, pcr))
    law_equal(report, f"{tag}/triangle", lhs, tensor(rho_mat(X.web, pcr), identity(Y.web, pcr)))
    # pentagon on four spaces
    W = one
    a1 = tensor(alpha_mat(X.web, Y.web, Z.web, pcr), identity(W.web, pcr))
    a2 = alpha_mat(X.web, product_web(Y.web, Z.web), W.web, pcr)
    a3 = tensor(identity(X.web, pcr), alpha_mat(Y.web, Z.web, W.web, pcr))
    b1 = alpha_mat(product_web(X.web, Y.web), Z.web, W.web, pcr)
    b2 = alpha_mat(X.web, Y.web, product_web(Z.web, W.web), pcr)
    law_equal(report, f"{tag}/pentagon", compose(a3, a2, a1), compose(b2, b1))
    # hexagon: alpha . sigma . alpha = (Y (x) sigma) . alpha . (sigma (x) Z)
    lhs = compose(alpha_mat(Y.web, Z.web, X.web, pcr), sym_mat(X.web, product_web(Y.web, Z.web), pcr),
                  alpha_mat(X.web, Y.web, Z.web, pcr))
    rhs = compose(tensor(identity(Y.web, pcr), sym_mat(X.web, Z.web, pcr)), alpha_mat(Y.web, X.web, Z.web, pcr),
                  tensor(sym_mat(X.web, Y.web, pcr), identity(Z.web, pcr)))
    law_equal(report, f"{tag}/hexagon", lhs, rhs)
    # tensor of matrices acts componentwise
    s, t = _hom(X, Y, rng), _hom(Y, Z, rng)
    law_equal(report, f"{tag}/tensor-action", mat_apply(tensor(s, t), tensor(x, y)),
              _tensor_or_undef(mat_apply(s, x), mat_apply(t, y)))
    # closed structure
    sv = mat_as_vec(s)
    law_equal(report, f"{tag}/ev-action", mat_apply(ev_mat(X.web, Y.web, pcr), tensor(sv, x)), mat_apply(s, x))
    u = _hom(tensor_space(X, Y), Z, rng)
    u = Mat(product_web(X.web, Y.web), Z.web, pcr, dict(u.entries))
    cu = cur_mat(u, X.web, Y.web)
    cux = mat_apply(cu, x)
    lhs = mat_apply(vec_as_arrow(cux, Y.web, Z.web), y) if is_defined(cux) else cux
    law_equal(report, f"{tag}/cur-action", lhs, mat_apply(u, tensor(x, y)))
    law_equal(report, f"{tag}/ev-cur", compose(ev_mat(Y.web, Z.web, pcr), tensor(cu, identity(Y.web, pcr))), u)
    # membership of structural matrices (certified when the flags allow)
    XY = tensor_space(X, Y)
    check_member(report, f"{tag}/member-sigma", member_hom(XY, tensor_space(Y, X),
                                                           change_carrier(sym_mat(X.web, Y.web, m.signed), m.positive)))
    check_member(report, f"{tag}/member-lambda",
                 member_hom(tensor_space(one, X), X, change_carrier(lam_mat(X.web, pcr), m.positive)))
    check_member(report, f"{tag}/member-ev",
                 member_hom(tensor_space(linarrow_space(X, Y), X), Y, change_carrier(ev_mat(X.web, Y.web, pcr), m.positive)))
    check_member(report, f"{tag}/member-id", member_hom(X, X, identity(X.web, m.positive)))
    # composition of morphisms stays a morphism
    s2, t2 = sample_morphism(X, Y, rng), sample_morphism(Y, Z, rng)
    ts = mat_compose(t2, s2)
    if is_defined(ts):
        check_member(report, f"{tag}/composition", member_hom(X, Z, ts))
    else:
        report.record(f"{tag}/composition", "fail", {"composite undefined": ts.witness})


def _tensor_or_undef(a, b):
    if not is_defined(a):
        return a
    if not is_defined(b):
        return b
    return tensor(a, b)


def _comonad(report, m, X, Y, cfg, rng, tag, mut):
    pcr = m.signed
    d = cfg.bang_degree
    bX, bY = bang_space(X, d), bang_space(Y, d)
    bbX = bang_space(bX, d)
    bbbX_web = bang_web(bbX, d)
    der = mut("der", der_mat(bX.web, X.web, pcr))
    dig = mut("dig", dig_mat(bX.web, bbX.web, pcr))
    s = _hom(X, Y, rng)
    bs = mut("bang", bang_mat(s, bX.web, bY.web))
    for k, x in enumerate(action_points(X, rng)):
        xb = promote(x, bX.web)
        law_equal(report, f"{tag}/der-action.{k}", mat_apply(der, xb), x)
        law_equal(report, f"{tag}/dig-action.{k}", mat_apply(dig, xb), promote(xb, bbX.web))
        sx = mat_apply(s, x)
        law_equal(report, f"{tag}/bang-action.{k}", mat_apply(bs, xb), promote(sx, bY.web) if is_defined(sx) else sx)
    law_equal(report, f"{tag}/bang-id", bang_mat(identity(X.web, pcr), bX.web, bX.web), identity(bX.web, pcr))
    Z = _space_for(m, 2, rng)
    bZ = bang_space(Z, d)
    t = _hom(Y, Z, rng)
    ts = mat_compose(t, s)
    law_equal(report, f"{tag}/bang-functor", _bang_or_undef(ts, bX.web, bZ.web),
              _compose_or_undef(bang_mat(t, bY.web, bZ.web), bs))
    # comonad laws
    der_bX = der_mat(bbX.web, bX.web, pcr)
    law_equal(report, f"{tag}/der-dig", mat_compose(der_bX, dig), identity(bX.web, pcr))
    bang_der = bang_mat(der, bbX.web, bX.web)
    law_equal(report, f"{tag}/bangder-dig", _compose_or_undef(bang_der, dig), identity(bX.web, pcr))
    dig_bX = dig_mat(bbX.web, bbbX_web, pcr)
    bang_dig = bang_mat(dig, bbX.web, bbbX_web)
    law_equal(report, f"{tag}/dig-dig", _compose_or_undef(bang_dig, dig), mat_compose(dig_bX, dig),
              region=_bang_region(d))
    # naturality
    law_equal(report, f"{tag}/der-natural", _compose_or_undef(der_mat(bY.web, Y.web, pcr), bs),
              mat_compose(s, der))
    bbY = bang_space(bY, d)
    law_equal(report, f"{tag}/dig-natural", _compose_or_undef(dig_mat(bY.web, bbY.web, pcr), bs),
              _compose_or_undef(_bang_or_undef(bs, bbX.web, bbY.web), dig))
    # membership
    check_member(report, f"{tag}/member-der", member_hom(bX, X, change_carrier(der_mat(bX.web, X.web, pcr), m.positive)))
    check_member(report, f"{tag}/member-dig", member_hom(bX, bbX, change_carrier(dig_mat(bX.web, bbX.web, pcr), m.positive)))


def _bang_or_undef(s, dom, cod):
    return bang_mat(s, dom, cod) if is_defined(s) else s


def _compose_or_undef(t, s):
    if not is_defined(t):
        return t
    if not is_defined(s):
        return s
    return mat_compose(t, s)


def _seely(report, m, X, Y, cfg, rng, tag, mut):
    pcr = m.signed
    d = cfg.bang_degree
    XY = with_space(X, Y)
    bx, by, bxy = bang_web(X, d), bang_web(Y, d), bang_web(XY, d)
    s2 = mut("seely2", seely2_mat(bx, by, bxy, pcr))
    s2i = mut("seely2_inv", seely2_inv_mat(bx, by, bxy, pcr))
    low = lambda k: len(k[0]) + len(k[1]) <= d  # noqa: E731
    pairs = list(itertools.product(action_points(X, rng), action_points(Y, rng)))
    if len(pairs) > 64:
        pairs = rng.sample(pairs, 64)
    for k, (x, y) in enumerate(pairs):
        pair = pairing_vec([x, y], XY.web)
        xy = tensor(promote(x, bx), promote(y, by))
        law_equal(report, f"{tag}/seely2-action.{k}", mat_apply(s2, xy), promote(pair, bxy))
        # (m1, m2) with more than d elements in total has no image in the truncated !(X & Y)
        law_equal(report, f"{tag}/seely2-inv-action.{k}", mat_apply(s2i, promote(pair, bxy)),
                  Vec(xy.web, pcr, {lab: v for lab, v in xy.entries.items() if low(lab)}))
    # on the truncated webs the round trip is the identity on rows of total degree <= d and zero elsewhere
    pw = product_web(bx, by)
    low_id = Mat(pw, pw, pcr, {(k, k): pcr.one for k in pw if low(k)}, check=False)
    law_equal(report, f"{tag}/seely2-inv-seely2", mat_compose(s2i, s2), low_id)
    law_equal(report, f"{tag}/seely2-seely2-inv", mat_compose(s2, s2i), identity(bxy, pcr))
    tw = bang_web(top_space(m), d)
    s0, s0i = seely0_mat(pcr, tw), seely0_inv_mat(pcr, tw)
    law_equal(report, f"{tag}/seely0-iso", mat_compose(s0i, s0), identity(ONE_WEB, pcr))
    law_equal(report, f"{tag}/seely0-inv-iso", mat_compose(s0, s0i), identity(tw, pcr))
    one = one_space(m)
    r = _pt(one, rng)
    law_equal(report, f"{tag}/seely0-action", mat_apply(s0i, mat_apply(s0, r)), r)
    # the lax monoidal map agrees with its construction from seely2 and dig (rows whose image stays in degree d)
    XT = tensor_space(X, Y)
    bxt = bang_web(XT, d)
    bXY = bang_space(XY, d)
    bbxy = bang_web(bXY, d)
    f = mat_compose(tensor(der_mat(bx, X.web, pcr), der_mat(by, Y.web, pcr)), s2i)
    route = compose(bang_mat(f, bbxy, bxt), dig_mat(bxy, bbxy, pcr), s2) if is_defined(f) else f
    law_equal(report, f"{tag}/monoidal-from-seely", monoidal_mat(bx, by, bxt, pcr), route,
              region=lambda k: len(k[0][0]) + len(k[0][1]) <= d)
    check_member(report, f"{tag}/member-seely2",
                 member_hom(tensor_space(bang_space(X, d), bang_space(Y, d)), bang_space(XY, d),
                            change_carrier(seely2_mat(bx, by, bxy, pcr), m.positive)))
