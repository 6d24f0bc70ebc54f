# coding: utf-8

# # Stacky fans, cones and the Box
#
# A stacky fan is a simplicial fan together with a chosen lattice vector on
# every ray.  Here we build a few, look at which ones are complete, and list
# the twisted points that live in the Box.

# %%

from stackyk import corpus
from stackyk.fan import (
    StackyFan,
    box_of_fan,
    degree_of,
    minimal_nonfaces,
    quotient_fan,
    validate_fan,
)

# %% [markdown]
# Fans can be written directly or loaded from the same dictionaries the CLI
# reads.  `validate_fan` never raises; it collects every problem it finds.

# %%

p112 = corpus.weighted_p112()
print(p112.rays, p112.max_cones, "complete:", p112.is_complete)

bad = validate_fan({"rank": 2, "rays": [[1, 0], [1, 1], [1, 2]], "max_cones": [[0, 1, 2]]})
for line in bad.diagnostics:
    print("  ", line)

# %% [markdown]
# Minimal non-faces are the index sets that are not cones but whose proper
# subsets all are.  They feed the K-theory relations later on.

# %%

for fan in (corpus.projective_plane(), corpus.two_quadrants()):
    print(fan.name, minimal_nonfaces(fan))

# %% [markdown]
# The degree of a lattice point is the sum of its coefficients in the
# smallest cone that contains it.  On P(1,1,2) the point (0,-1) sits halfway
# between rays 0 and 2.

# %%

print(degree_of(p112, (0, -1)), degree_of(p112, (3, 1)))

# %%

for b in box_of_fan(p112):
    print(b.point, "cone", b.cone, "coefficients", [str(a) for a in b.coefficients], "degree", b.degree)

# %% [markdown]
# A stacky line with marking k on one ray has k Box elements, with
# coefficients 0, 1/k, ..., (k-1)/k.

# %%

line = corpus.stacky_line(4)
print(sorted([str(a) for a in b.coefficients] for b in box_of_fan(line)))

# %% [markdown]
# Quotient fans: collapsing the span of a cone.  Quotienting P^2 by one ray
# leaves a copy of P^1.

# %%

q = quotient_fan(corpus.projective_plane(), (0,))
print(q.fan.rays, q.rays, q.fan.is_complete)

# %%

skew = StackyFan(2, [(1, 0), (1, 3), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
print(len(box_of_fan(skew)), "box elements on a skew fan")
print("degrees:", [str(b.degree) for b in box_of_fan(skew)])
