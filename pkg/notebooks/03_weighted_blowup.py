# coding: utf-8

# # Pushing forward along a weighted blowup
#
# Blowing up P^2 at the cone {0, 1} with weights (2, 3) inserts the ray
# 2 v_0 + 3 v_1.  We pull classes back, push R^-l forward in closed form, and
# compare against an independent Hilbert-series computation.

# %%

from stackyk import corpus
from stackyk.mor import (
    pullback,
    push_class,
    push_hilbert_oracle,
    push_R_inverse_power,
    push_theorem_check,
    weighted_blowup,
)

b = weighted_blowup(corpus.projective_plane(), (0, 1), (2, 3))
print("new ray", b.base.source.rays[b.new_ray], "cones", b.base.source.max_cones)
print("alpha", b.base.alpha)

# %% [markdown]
# Pullback multiplies each center variable by a power of the exceptional one.

# %%

src, tgt = b.source_ring, b.target_ring
print(pullback(b.base, tgt.x(0)) == src.x(0) * src.x(b.new_ray) ** 2)
print(pullback(b.base, tgt.x(1)) == src.x(1) * src.x(b.new_ray) ** 3)

# %%

for l in range(6):
    closed = push_R_inverse_power(b, l)
    agrees = l == 0 or closed == push_hilbert_oracle(b, l)
    print(l, closed.to_str(), agrees)

# %% [markdown]
# The generating series of all these pushforwards has a closed form.

# %%

check = push_theorem_check(b, 8)
print("series identity:", check.ok)
for k, (a, c) in enumerate(zip(check.lhs, check.rhs)):
    print(f"t^{k}: {a.to_str()}   vs   {c.to_str()}")

# %% [markdown]
# Any source class can be pushed: pullbacks come back unchanged.

# %%

c = tgt.x(0) * 2 - tgt.xbar(1)
print(push_class(b, pullback(b.base, c)) == c)
print(push_class(b, src.x(b.new_ray)).to_str())
