"""The analytic coalgebra on D and the Taylor functor on the Kleisli category of !.

A Kleisli morphism X => Y is a matrix !X -o Y on the truncated webs.  Its
Taylor expansion T s : !S X -o S Y is given by the closed form

    (T s)_{[(i1,a1)..(ik,ak)], (j,b)} = [i1 + ... + ik = j] * ([a1..ak]! / [(i1,a1)..(ik,ak)]!) * s_{[a1..ak], b}

and, independently, by the composite S s . Sdl where Sdl : !S X -o S !X is
the curried form of !ev . mu . (!S X (x) hbar).  The two are compared
wherever the closed form is defined.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .families import (Mat, Multiset, STAR, Vec, ONE_WEB, compose, identity, mat_apply, mat_compose,
                       tensor, change_carrier, label_to_json)
from .ll import (TruncCfg, bang_mat, bang_space, bang_web, check_member, cur_mat, der_mat, dig_mat, ev_mat,
                 flip_entry, full_point, law_equal, monoidal_mat, promote, sample_morphism, sample_point,
                 sample_signed, tensor_space, _space_for)
from .pcr import Undefined, is_defined, nat_embed
from .report import LawReport
from .spaces import get_model, member_hom
from .summability import (cbar_mat, d_space, mbar_mat, p0_mat, s_functor, s_space, s_web,
                          unit_mat, witness_vec)


@dataclass
class KleisliMor:
    """A matrix !X -o Y together with its spaces and truncation."""
    dom: object
    cod: object
    mat: object
    cfg: TruncCfg


def coalgebra_mat(cfg, model="pcoh"):
    """hbar : D -o !D with hbar_{i, [i1..in]} = [i = i1 + ... + in]."""
    m = get_model(model)
    N, d = cfg.s_bound, cfg.bang_degree
    D = d_space(N, m)
    bd = bang_web(D, d)
    pcr = m.signed
    entries = {(sum(n.elems), n): pcr.one for n in bd if sum(n.elems) < N}
    return Mat(D.web, bd, pcr, entries, check=False)


def unit_coalgebra_mat(pcr, d):
    """The coalgebra (e_*)^! : 1 -o !1."""
    b1 = _bang_one_web(d)
    return Mat(ONE_WEB, b1, pcr, {(STAR, n): pcr.one for n in b1}, check=False)


def _bang_one_web(d):
    from .families import Web
    return Web([Multiset([STAR] * k) for k in range(d + 1)], {"degree": d})


def multiset_ratio(p):
    """[a1..ak]! / [(i1,a1)..(ik,ak)]!, an integer."""
    m = Multiset(a for _, a in p.elems)
    num, den = m.factorial(), p.factorial()
    assert num % den == 0
    return num // den


def taylor_mat(s, X, Y, cfg):
    """Closed-form Taylor expansion of s : !X -o Y, as a matrix !S X -o S Y.

    Returns Undefined when a needed integer ratio has no image in the rig
    while the matching entry of s is nonzero.
    """
    N, d = cfg.s_bound, cfg.bang_degree
    pcr = s.pcr
    SX = s_space(X, cfg)
    bsx = bang_web(SX, d)
    cod = s_web(N, Y.web)
    cols = {}
    for (m, b), v in s.entries.items():
        cols.setdefault(m, []).append((b, v))
    entries = {}
    for p in bsx:
        j = sum(i for i, _ in p.elems)
        if j >= N:
            continue
        m = Multiset(a for _, a in p.elems)
        row = cols.get(m)
        if not row:
            continue
        ratio = nat_embed(pcr, multiset_ratio(p))
        if not is_defined(ratio):
            return Undefined({"ratio": multiset_ratio(p), "row": label_to_json(p)})
        for b, v in row:
            entries[(p, (j, b))] = pcr.mul(ratio.value, v)
    return Mat(bsx, cod, pcr, entries, check=False)


def sdl_mat(X, cfg, pcr=None, h=None):
    """Sdl : !S X -o S !X, the curried form of !ev . mu . (!S X (x) hbar)."""
    N, d = cfg.s_bound, cfg.bang_degree
    pcr = pcr or X.model.signed
    D = d_space(N, X.model)
    SX = s_space(X, cfg)
    bsx = bang_space(SX, d)
    bd = bang_web(D, d)
    h = h if h is not None else coalgebra_mat(cfg, X.model)
    h = change_carrier(h, pcr)
    sxd = tensor_space(SX, D)
    bsxd = bang_web(sxd, d)
    mu = monoidal_mat(bsx.web, bd, bsxd, pcr)
    bev = bang_mat(ev_mat(D.web, X.web, pcr), bsxd, bang_web(X, d))
    body = compose(bev, mu, tensor(identity(bsx.web, pcr), h)) if is_defined(bev) else bev
    if not is_defined(body):
        return body
    return cur_mat(body, bsx.web, D.web)


def taylor_route(s, X, Y, cfg, h=None):
    """T s as S s . Sdl."""
    sdl = sdl_mat(X, cfg, s.pcr, h)
    if not is_defined(sdl):
        return sdl
    return mat_compose(s_functor(s, cfg.s_bound), sdl)


def kleisli_bang_compose(t, s, X, cfg):
    """t o s = t . !s . dig for s : !X -o Y and t : !Y -o Z."""
    if not is_defined(t):
        return t
    if not is_defined(s):
        return s
    d = cfg.bang_degree
    bX = bang_space(X, d)
    bbx = bang_web(bX, d)
    bs = bang_mat(s, bbx, t.dom)
    if not is_defined(bs):
        return bs
    return compose(t, bs, dig_mat(bX.web, bbx, s.pcr))


def der_functor(f, X, cfg):
    """The Kleisli morphism f . der."""
    return mat_compose(f, der_mat(bang_web(X, cfg.bang_degree), X.web, f.pcr))


def kleisli_s_compose(g, f, cfg):
    """g o f = tau . S g . f for f : X -o S Y and g : Y -o S Z (Cauchy product)."""
    from .summability import tau_mat, _peel
    N = cfg.s_bound
    zw = _peel(g.cod, N)
    sg = s_functor(g, N)
    return compose(tau_mat(N, zw, f.pcr), sg, f)


def taylor_apply_series(f, X, Y, xs, cfg):
    """Components of T f applied to the promotion of the sequence xs."""
    N = cfg.s_bound
    T = taylor_mat(f, X, Y, cfg)
    if not is_defined(T):
        return T
    w = witness_vec(xs, X.web, f.pcr)
    out = mat_apply(T, promote(w, T.dom))
    if not is_defined(out):
        return out
    return [Vec(Y.web, f.pcr, {b: v for (j, b), v in out.entries.items() if j == k}) for k in range(N)]


def series_oracle(f, X, Y, xs, cfg):
    """Brute force: substitute z = x_0 + e x_1 + e^2 x_2 + ... into the polynomial of f
    and read the coefficients of e^0 .. e^(N-1)."""
    N = cfg.s_bound
    pcr = f.pcr
    z = {a: [x[a] for x in xs] for a in X.web}
    acc = {}
    for (m, b), v in f.entries.items():
        poly = [pcr.one] + [pcr.zero] * (N - 1)
        for a in m.elems:
            poly = _poly_mul(pcr, poly, z[a], N)
            if poly is None:
                return Undefined({"monomial": label_to_json(m)})
        for k in range(N):
            acc.setdefault((k, b), []).append(pcr.mul(v, poly[k]))
    comps = [dict() for _ in range(N)]
    for (k, b), terms in acc.items():
        total = pcr.add(terms)
        if total is None:
            return Undefined({"component": k, "label": label_to_json(b)})
        comps[k][b] = total
    return [Vec(Y.web, pcr, c) for c in comps]


def _poly_mul(pcr, p, q, N):
    out = []
    for k in range(N):
        total = pcr.add([pcr.mul(p[i], q[k - i]) for i in range(k + 1)])
        if total is None:
            return None
        out.append(total)
    return out


# --- suite -----------------------------------------------------------------------------------

def sample_kleisli(X, Y, cfg, rng, density=0.5, constant=True):
    """A random matrix !X -o Y (not necessarily a morphism of spaces)."""
    m = X.model
    pcr = m.signed
    bx = bang_web(X, cfg.bang_degree)
    if m.absolute:
        vals = ([Fraction(-2), Fraction(-1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 4)]
                if pcr.tag == "rat" else [Fraction(-2), Fraction(-1), Fraction(1), Fraction(3)])
    elif pcr.finite_values:
        vals = [v for v in pcr.finite_values if not pcr.is_zero(v)]
    else:
        vals = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)]
    entries = {}
    for mm in bx:
        if not constant and len(mm) == 0:
            continue
        for b in Y.web:
            if rng.random() < density:
                entries[(mm, b)] = rng.choice(vals)
    return Mat(bx, Y.web, pcr, entries, check=False)


def run_taylor_suite(model, sizes=(1, 2), cfg=None, seed=0,
                     suites=("taylor.coalgebra", "taylor.functor", "taylor.series"), samples=2, mutations=None):
    cfg = cfg or TruncCfg(bang_degree=3, s_bound=3)
    m = get_model(model)
    rng = random.Random(seed)
    report = LawReport("taylor")
    mutations = mutations or {}
    h = coalgebra_mat(cfg, m)
    if "hbar" in mutations:
        h = flip_entry(h, mutations["hbar"], seed)[0]
    if "taylor.coalgebra" in suites:
        _coalgebra(report, m, cfg, h, rng, f"taylor.coalgebra/N{cfg.s_bound}d{cfg.bang_degree}")
    for n in sizes:
        for r in range(samples):
            X = _space_for(m, n, rng)
            Y = _space_for(m, 1 + (n + r) % 2, rng)
            tag = f"n{n}.{r}"
            if "taylor.functor" in suites:
                _functor(report, m, X, Y, cfg, rng, f"taylor.functor/{tag}", h)
            if "taylor.series" in suites:
                _series(report, m, X, Y, cfg, rng, f"taylor.series/{tag}")
    return report


def _coalgebra(report, m, cfg, h, rng, tag):
    N, d = cfg.s_bound, cfg.bang_degree
    pcr = m.signed
    D = d_space(N, m)
    bD = bang_space(D, d)
    bbd = bang_web(bD, d)
    # the defining action, (hbar . x)_n = x_{sum n}, on a point with full support
    x = sample_signed(D, rng, full_point(D))
    expect = Vec(bD.web, pcr, {n: x[sum(n.elems)] for n in bD.web if sum(n.elems) < N})
    law_equal(report, f"{tag}/action", mat_apply(h, x), expect)
    delta = Vec(D.web, m.positive, {i: m.positive.one for i in D.web})
    law_equal(report, f"{tag}/diagonal", mat_apply(change_carrier(h, m.positive), delta), promote(delta, bD.web),
              region=lambda n: sum(n.elems) < N)
    # !-coalgebra laws
    law_equal(report, f"{tag}/der", mat_compose(der_mat(bD.web, D.web, pcr), h), identity(D.web, pcr))
    bh = bang_mat(h, bD.web, bbd)
    law_equal(report, f"{tag}/dig", mat_compose(dig_mat(bD.web, bbd, pcr), h),
              mat_compose(bh, h) if is_defined(bh) else bh)
    # analytic conditions: the bimonoid maps of D are coalgebra morphisms
    one = _bang_one_web(d)
    h1 = unit_coalgebra_mat(pcr, d)
    u = unit_mat(N, pcr)
    law_equal(report, f"{tag}/unit", mat_compose(h, u), mat_compose(bang_mat(u, one, bD.web), h1),
              region=lambda k: sum(k[1].elems) < N)
    i0 = Mat(ONE_WEB, D.web, pcr, {(STAR, 0): pcr.one})
    law_equal(report, f"{tag}/iota0", mat_compose(h, i0), mat_compose(bang_mat(i0, one, bD.web), h1))
    p0 = p0_mat(N, pcr)
    law_equal(report, f"{tag}/p0", mat_compose(h1, p0), mat_compose(bang_mat(p0, bD.web, one), h))
    DD = tensor_space(D, D)
    bdd = bang_web(DD, d)
    hh = compose(monoidal_mat(bD.web, bD.web, bdd, pcr), tensor(h, h))
    mb = mbar_mat(N, pcr)
    law_equal(report, f"{tag}/mbar", mat_compose(h, mb), mat_compose(bang_mat(mb, bdd, bD.web), hh))
    cb = cbar_mat(N, pcr)
    law_equal(report, f"{tag}/cbar", mat_compose(hh, cb), mat_compose(bang_mat(cb, bD.web, bdd), h))
    check_member(report, f"{tag}/member-hbar", member_hom(D, bD, change_carrier(h, m.positive)))


def _functor(report, m, X, Y, cfg, rng, tag, h):
    N, d = cfg.s_bound, cfg.bang_degree
    pcr = m.signed
    SX, SY = s_space(X, cfg), s_space(Y, cfg)
    Z = _space_for(m, 1 + rng.randrange(2), rng)
    s = sample_kleisli(X, Y, cfg, rng)
    t = sample_kleisli(Y, Z, cfg, rng)
    Ts = taylor_mat(s, X, Y, cfg)
    route = taylor_route(s, X, Y, cfg, h)
    if is_defined(Ts):
        law_equal(report, f"{tag}/closed-form-vs-route", route, Ts)
        bad = [k for k in Ts.entries if sum(i for i, _ in k[0].elems) != k[1][0]]
        report.check(f"{tag}/grading", not bad, {"entry": repr(bad[:1])})
    else:
        report.record(f"{tag}/closed-form-vs-route", "undefined-sum", {"closed form": Ts.witness,
                                                                       "route defined": is_defined(route)})
    # identity
    bX = bang_space(X, d)
    der_x = der_mat(bX.web, X.web, pcr)
    bSX = bang_space(SX, d)
    law_equal(report, f"{tag}/T-id", taylor_mat(der_x, X, X, cfg), der_mat(bSX.web, SX.web, pcr))
    # functoriality in the Kleisli category
    ts = kleisli_bang_compose(t, s, X, cfg)
    Tt = taylor_mat(t, Y, Z, cfg)
    lhs = taylor_mat(ts, X, Z, cfg) if is_defined(ts) else ts
    rhs = kleisli_bang_compose(Tt, Ts, SX, cfg) if is_defined(Ts) and is_defined(Tt) else Undefined("T")
    law_equal(report, f"{tag}/T-compose", lhs, rhs)
    # Kleisli identities and associativity (the inner morphism has no constant term)
    law_equal(report, f"{tag}/kleisli-left-id", kleisli_bang_compose(der_mat(bang_web(Y, d), Y.web, pcr), s, X, cfg), s)
    law_equal(report, f"{tag}/kleisli-right-id", kleisli_bang_compose(s, der_x, X, cfg), s)
    s0 = sample_kleisli(X, Y, cfg, rng, constant=False)
    W = _space_for(m, 1, rng)
    u = sample_kleisli(Z, W, cfg, rng)
    ut = kleisli_bang_compose(u, t, Y, cfg)
    ts0 = kleisli_bang_compose(t, s0, X, cfg)
    law_equal(report, f"{tag}/kleisli-assoc", kleisli_bang_compose(ut, s0, X, cfg),
              kleisli_bang_compose(u, ts0, X, cfg))
    # linear morphisms
    f = change_carrier(sample_morphism(X, Y, rng), pcr)
    g = change_carrier(sample_morphism(Y, Z, rng), pcr)
    law_equal(report, f"{tag}/der-functor", kleisli_bang_compose(der_functor(g, Y, cfg), der_functor(f, X, cfg), X, cfg),
              der_functor(mat_compose(g, f), X, cfg))
    law_equal(report, f"{tag}/T-der", taylor_mat(der_functor(f, X, cfg), X, Y, cfg),
              der_functor(s_functor(f, N), SX, cfg))
    # membership of T s for a morphism s
    sm = sample_morphism(bX, Y, rng)
    Tm = taylor_mat(sm, X, Y, cfg)
    if is_defined(Tm):
        check_member(report, f"{tag}/member-T", member_hom(bSX, SY, Tm))
    else:
        report.record(f"{tag}/member-T", "undefined-sum", {"closed form": Tm.witness})


def _series(report, m, X, Y, cfg, rng, tag):
    N = cfg.s_bound
    pcr = m.signed
    f = sample_kleisli(X, Y, cfg, rng)
    x = sample_signed(X, rng, sample_point(X, rng))
    zero = Vec(X.web, pcr)
    cases = [[x] + [zero] * (N - 1),
             [sample_signed(X, rng, sample_point(X, rng)) for _ in range(N)],
             [x, sample_signed(X, rng, full_point(X))] + [zero] * (N - 2)]
    for k, xs in enumerate(cases):
        got = taylor_apply_series(f, X, Y, xs, cfg)
        want = series_oracle(f, X, Y, xs, cfg)
        if not is_defined(got) or not is_defined(want):
            status_ok = not is_defined(got) and not is_defined(want)
            report.record(f"{tag}/oracle{k}", "undefined-sum" if status_ok else "fail",
                          {"taylor": is_defined(got), "oracle": is_defined(want)})
            continue
        for j in range(N):
            law_equal(report, f"{tag}/oracle{k}.{j}", got[j], want[j])
    # constant sequences: component 0 is f applied to x, the rest vanish
    got = taylor_apply_series(f, X, Y, cases[0], cfg)
    if is_defined(got):
        bx = f.dom
        law_equal(report, f"{tag}/constant", got[0], mat_apply(f, promote(x, bx)))
        report.check(f"{tag}/constant-rest", all(not g.entries for g in got[1:]))
    # linear f: component j is g . x_j
    g = change_carrier(sample_morphism(X, Y, rng), pcr)
    xs = cases[1]
    got = taylor_apply_series(der_functor(g, X, cfg), X, Y, xs, cfg)
    for j in range(N):
        law_equal(report, f"{tag}/linear.{j}", got[j] if is_defined(got) else got, mat_apply(g, xs[j]))
