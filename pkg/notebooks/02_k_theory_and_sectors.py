# coding: utf-8

# # K-theory rings and their sector decomposition
#
# The K-theory of a toric stack is a quotient of a Laurent polynomial ring.
# We compute it with Groebner bases and compare its dimension with the
# graded dimension of SR-cohomology, computed one Box element at a time.

# %%

from stackyk import corpus
from stackyk.kth import k_dimension, k_presentation
from stackyk.srco import chern_table, graded_dim_formula_check, sr_dimension, sr_truncated_oracle

# %% [markdown]
# On P^1 both line bundles agree, and (1 - x)^2 vanishes.

# %%

pres = k_presentation(corpus.projective_line())
x = pres.x(0)
print(pres.x(1) == x, ((1 - x) ** 2).to_str(), (1 - x).to_str())
print("inverse of x0:", x.inverse().to_str())

# %% [markdown]
# Dimensions over the rationals for the whole corpus.

# %%

for name, factory in corpus.CORPUS.items():
    fan = factory()
    graded, sectors = sr_dimension(fan)
    print(f"{name:14s} K: {k_dimension(fan)}  SR: {sum(graded.values())}  sectors: {len(sectors)}")

# %% [markdown]
# The two-quadrant fan is not complete, yet its K-theory is still finite:
# three dimensions, two of them in degree one.

# %%

graded, _ = sr_dimension(corpus.two_quadrants())
print({str(d): c for d, c in graded.items()})

# %% [markdown]
# Each row of the Chern table is one Box element: its rotation numbers and
# the dimension of its sector.  The table refuses to build if the total
# disagrees with the K-theory dimension.

# %%

for row in chern_table(corpus.weighted_p112()).rows:
    rot = [None if a is None else str(a) for a in row.rotations]
    print(row.box.point, rot, row.dimension)

# %% [markdown]
# Two independent checks of the graded dimensions: a direct count of lattice
# points modulo linear relations, and the generating function
# (1 - t)^rank times the sum of t^deg over lattice points.

# %%

fan = corpus.weighted_p112()
print({str(d): c for d, c in sr_truncated_oracle(fan, 4).items()})
check = graded_dim_formula_check(fan, 4)
print(check.ok, {str(d): c for d, c in check.series.items()})
