"""
Summable sequences as a space
=============================

S X collects the sequences of X whose sum is again a point.  It is the space
of linear maps out of D, truncated to indices 0..N-1.
"""

from fractions import Fraction as F

from webmodels.families import Vec, mat_apply
from webmodels.ll import TruncCfg
from webmodels.spaces import make_space, member_point
from webmodels.summability import pi_mat, run_summability_suite, s_space, sigma_mat, witness_vec

####################################################################
# Two halves sum to a point of [0, 1]; two ones do not.

X = make_space("pcoh", 1)
SX = s_space(X, 2)
half, one = Vec(X.web, X.pcr, {0: F(1, 2)}), Vec(X.web, X.pcr, {0: F(1)})
print(member_point(SX, witness_vec([half, half], X.web, X.pcr)))
print(member_point(SX, witness_vec([one, one], X.web, X.pcr)))

####################################################################
# Projections read the terms back; sigma adds them up.

w = witness_vec([half, half], X.web, X.pcr)
print(mat_apply(pi_mat(1, 2, X.web, X.pcr), w), mat_apply(sigma_mat(2, X.web, X.pcr), w))

####################################################################
# Bimonad, bimonoid and representability laws at N = 4.

print(run_summability_suite("pcoh", cfg=TruncCfg(s_bound=4), sizes=(1,), samples=1))
