import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from webmodels.families import (Mat, Multiset, Tagged, Vec, Web, abs_mat, abs_vec, atoms, compose, identity,
                                kronecker, label_from_json, label_to_json, mat_apply, mat_compose, reindex,
                                scalar_product, tensor, transpose, zero_mat)
from webmodels.pcr import OMEGA, Defined, UsageError, carrier, is_defined

Q = carrier("nonneg")
R = carrier("rat")
C = carrier("coh")


def vec(n, pcr, vals):
    return Vec(atoms(n), pcr, dict(enumerate(vals)))


def mat(rows, pcr):
    return Mat(atoms(len(rows)), atoms(len(rows[0])), pcr,
               {(a, b): v for a, row in enumerate(rows) for b, v in enumerate(row)})


def rand_mat(rng, n, m, pcr=R):
    return mat([[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)] for _ in range(n)], pcr)


def brute_compose(t, s):
    # (t . s)_{a,c} = sum_b s_{a,b} t_{b,c}
    return {(a, c): sum((s[(a, b)] * t[(b, c)] for b in s.cod), F(0)) for a in s.dom for c in t.cod}


def test_scalar_products():
    assert scalar_product(vec(2, Q, [F(1, 2), F(1, 2)]), vec(2, Q, [1, 1])) == Defined(F(1))
    assert scalar_product(vec(2, Q, [1, 0]), vec(2, Q, [0, 1])) == Defined(F(0))
    assert not is_defined(scalar_product(vec(2, C, [OMEGA, OMEGA]), vec(2, C, [OMEGA, OMEGA])))


def test_apply():
    x = vec(3, R, [F(1), F(-2), F(1, 3)])
    assert mat_apply(identity(atoms(3), R), x) == x
    assert mat_apply(zero_mat(atoms(3), atoms(2), R), x) == Vec(atoms(2), R)
    s = mat([[OMEGA], [OMEGA]], C)
    assert not is_defined(mat_apply(s, vec(2, C, [OMEGA, OMEGA])))


def test_compose_small():
    h = F(1, 2)
    t = mat([[h, h], [h, h]], Q)
    assert mat_compose(t, t) == t
    assert mat_compose(t, identity(atoms(2), Q)) == t


def test_permutations_compose():
    w = atoms(3)
    p = kronecker(w, w, R, lambda a: (a + 1) % 3)
    q = kronecker(w, w, R, lambda a: (a * 2) % 3)
    assert mat_compose(q, p) == kronecker(w, w, R, lambda a: ((a + 1) % 3 * 2) % 3)


@given(st.integers(0, 10_000))
def test_compose_matches_brute_force(seed):
    rng = random.Random(seed)
    n, m, k = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
    s, t = rand_mat(rng, n, m), rand_mat(rng, m, k)
    got = mat_compose(t, s)
    want = brute_compose(t, s)
    assert all(got[key] == v for key, v in want.items())


@given(st.integers(0, 10_000))
def test_compose_is_associative(seed):
    rng = random.Random(seed)
    a, b, c, d = (rng.randint(1, 3) for _ in range(4))
    r, s, t = rand_mat(rng, a, b), rand_mat(rng, b, c), rand_mat(rng, c, d)
    assert mat_compose(t, mat_compose(s, r)) == mat_compose(mat_compose(t, s), r) == compose(t, s, r)


def test_tensor():
    e = vec(2, Q, [1, 0])
    f = vec(2, Q, [0, 1])
    assert tensor(e, f).entries == {(0, 1): 1}
    assert tensor(vec(2, Q, [F(1, 2), F(1, 2)]), vec(1, Q, [F(1, 3)])).entries == {(0, 0): F(1, 6), (1, 0): F(1, 6)}
    assert not tensor(e, Vec(atoms(2), Q)).entries


@given(st.integers(0, 10_000))
def test_transpose_involution_and_abs(seed):
    rng = random.Random(seed)
    s = rand_mat(rng, 3, 4)
    assert transpose(transpose(s)) == s
    x = vec(2, R, [F(rng.randint(-3, 3)), F(rng.randint(-3, 3))])
    y = vec(2, R, [F(rng.randint(-3, 3)), F(rng.randint(-3, 3))])
    assert abs_vec(tensor(x, y)) == tensor(abs_vec(x), abs_vec(y))
    assert abs_mat(s).entries == {k: abs(v) for k, v in s.entries.items()}


def test_rank_one_transpose():
    x, y = vec(2, Q, [1, F(1, 2)]), vec(3, Q, [F(1, 3), 0, 2])
    xy = Mat(x.web, y.web, Q, {(a, b): u * v for a, u in x.entries.items() for b, v in y.entries.items()})
    yx = Mat(y.web, x.web, Q, {(b, a): u * v for a, u in x.entries.items() for b, v in y.entries.items()})
    assert transpose(xy) == yx


def test_reindex_pads_and_preserves_pairings():
    x = vec(2, Q, [F(1, 2), F(1, 3)])
    big = atoms(3)
    pushed = reindex({0: 2, 1: 0}, x, big)
    assert pushed.entries == {2: F(1, 2), 0: F(1, 3)}
    y = vec(2, Q, [F(2), F(5)])
    assert scalar_product(pushed, reindex({0: 2, 1: 0}, y, big)) == scalar_product(x, y)


def test_abs_of_vector():
    assert abs_vec(vec(2, R, [F(-1, 2), F(1, 3)])) == vec(2, R, [F(1, 2), F(1, 3)])


def test_multiset_canonical():
    assert Multiset([2, 0, 2]) == Multiset([2, 2, 0])
    assert Multiset([0, 0, 1]).factorial() == 2


@pytest.mark.parametrize("label", [3, "a", (1, "b"), Tagged(2, (0, 1)), Multiset([Multiset([0]), Multiset([])])])
def test_label_json_round_trip(label):
    assert label_from_json(json.loads(json.dumps(label_to_json(label)))) == label


def test_matrix_json_round_trip_and_carrier_mismatch():
    s = mat([[F(-1, 2), 0], [F(3), F(1, 7)]], R)
    data = json.loads(json.dumps(s.to_json()))
    assert Mat.from_json(data) == s
    with pytest.raises(UsageError):
        Mat.from_json(data, carrier("nonneg"))


def test_web_rejects_outside_labels():
    with pytest.raises(UsageError):
        Vec(atoms(2), Q, {5: F(1)})
    assert Web([2, 0, 1]).labels == (0, 1, 2)
