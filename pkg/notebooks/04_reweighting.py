# coding: utf-8

# # Changing the marking on a single ray
#
# Multiplying the lattice vector on one ray by k leaves the fan alone but
# changes the stack.  The pushforward of R'^-m then only depends on which
# block of k consecutive values m falls in.

# %%

from stackyk import corpus
from stackyk.mor import codim1_reweight, push_codim1, push_codim1_series_check

m = codim1_reweight(corpus.projective_line(), 0, 3)
print(m.base.source.rays, m.base.alpha)

# %%

xb = m.target_ring.xbar(0)
for e in range(1, 10):
    value = push_codim1(m, e)
    power = next(p for p in range(1, 5) if value == xb**p)
    print(e, value.to_str(), f"= xb0^{power}")

# %%

check = push_codim1_series_check(m, 9)
print("series identity to t^9:", check.ok)
