"""
Partial sums over a rig
=======================

Every model is parameterised by a rig whose infinite sums may be undefined.
This script shows the verdicts a sum can take and why some rigs are not strong.
"""

from fractions import Fraction as F

from webmodels.pcr import OMEGA, Alternating, Geometric, carrier, family, pa_counterexamples, try_sum

####################################################################
# In the coherence rig {0, w}, adding w to itself has no value.

coh = carrier("coh")
print(try_sum(coh, [OMEGA, 0]), try_sum(coh, [OMEGA, OMEGA]))

####################################################################
# Rationals sum a family when the absolute values do.  A geometric tail with
# ratio -1/2 converges; the alternating tail (-1, 1, -1, ...) does not.

rat = carrier("rat")
print(try_sum(rat, family([F(1)], Geometric(F(1), F(-1, 2)))))
alt = family([], Alternating(F(-1)))
print(try_sum(rat, alt))

####################################################################
# Grouping the alternating tail in pairs gives blocks that each sum to 0, and
# the family of block sums is summable.  The whole family is not, so the rig
# is not strong.

for fam, how in pa_counterexamples(rat, [alt]):
    print("blocks sum, whole family does not:", how)
