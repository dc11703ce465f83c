"""
The exponential on truncated webs
=================================

Points of !X are promotions x^!, indexed by finite multisets.  We truncate at
a bang degree and check the comonad laws as exact matrix equations.
"""

from fractions import Fraction as F

from webmodels.families import Vec, mat_apply
from webmodels.ll import TruncCfg, bang_space, bang_web, der_mat, dig_mat, promote, run_ll_suite
from webmodels.spaces import make_space

####################################################################
# A probabilistic coherence space on one point, and the promotion of 1/2.

X = make_space("pcoh", 1)
x = Vec(X.web, X.pcr, {0: F(1, 2)})
print(promote(x, bang_web(X, 3)))

####################################################################
# On a coherence space the exponential web only keeps multisets whose support
# is a clique: here the path 0 - 1 - 2 forbids [0, 2].

P = make_space("coh", {"web": 3, "graph": [(0, 1), (1, 2)]})
print(list(bang_web(P, 2)))

####################################################################
# Dereliction reads off the degree-one part; digging splits a multiset.

bX = bang_space(X, 2)
bbX = bang_web(bX, 2)
xb = promote(x, bX.web)
print(mat_apply(der_mat(bX.web, X.web, X.pcr), xb) == x)
print(mat_apply(dig_mat(bX.web, bbX, X.pcr), xb) == promote(xb, bbX))

####################################################################
# The whole battery of monoidal, comonad and Seely identities.

print(run_ll_suite("pcoh", sizes=(1, 2), cfg=TruncCfg(2), samples=1))
