"""
Taylor expansion with signed coefficients
=========================================

A power series f : !X -o Y lifts to T f : !S X -o S Y.  Feeding it the
sequence (x, u, 0, ...) returns f(x), its derivative along u, and so on.
"""

import random
from fractions import Fraction as F

from webmodels.families import Vec
from webmodels.ll import TruncCfg
from webmodels.spaces import make_space
from webmodels.taylor import run_taylor_suite, sample_kleisli, series_oracle, taylor_apply_series, taylor_mat, taylor_route

####################################################################
# A random series with negative rational coefficients on the Koethe-style model.

cfg = TruncCfg(bang_degree=3, s_bound=3)
X, Y = make_space("kothe", 2), make_space("kothe", 1)
f = sample_kleisli(X, Y, cfg, random.Random(1))
print(f.entries)

####################################################################
# The closed form and the categorical route give the same matrix.

print(taylor_mat(f, X, Y, cfg) == taylor_route(f, X, Y, cfg))

####################################################################
# Components of T f on (x, u, 0), against direct polynomial substitution.

x = Vec(X.web, X.model.signed, {0: F(-1, 2), 1: F(1, 3)})
u = Vec(X.web, X.model.signed, {0: F(1)})
zero = Vec(X.web, X.model.signed)
print(taylor_apply_series(f, X, Y, [x, u, zero], cfg))
print(series_oracle(f, X, Y, [x, u, zero], cfg))

####################################################################
# The full Taylor battery.

print(run_taylor_suite("kothe", sizes=(1,), cfg=cfg, samples=1))
