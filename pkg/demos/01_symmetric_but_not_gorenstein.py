# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Symmetric h-vector, still not Gorenstein
#
# Five points of P^3: three unit points, the origin of the chart x3 = 1, and
# the reflection of the first unit point through the origin.  The h-vector
# comes out symmetric, yet the set is not arithmetically Gorenstein.  Both deciders agree and say why.

# %%
from gorpoints import PointSet, dgo_test, hilbert_data, is_arithmetically_gorenstein
from gorpoints.exactalg import kernel
from gorpoints.pointset import power_matrix

X = PointSet([(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 1), (-1, 0, 0, 1)])
hd = hilbert_data(X)
print("HF:", hd.hf, " h-vector:", hd.h_vector, " socle degree:", hd.socle_degree)

# %% [markdown]
# The only relation among the linear forms L_i (socle degree 2, so degree
# s - 1 = 1) has zeros in positions 2 and 3.  That alone rules out
# Gorensteinness.

# %%
print("relations:", kernel(power_matrix(X, 1).T))
cert = is_arithmetically_gorenstein(X)
print(cert.verdict.value, cert.failure_reason)

# %%
# the Hilbert-function characterisation finds the same thing from the other side
res = dgo_test(X)
print(res.verdict, res.detail)

# %% [markdown]
# ## Six points with too many relations
#
# Here the relation space is a plane.  Picking one relation by hand still
# produces an apolar form, but its dual module has length 5 < 6 and the
# admissibility chain overshoots at t = 2.

# %%
from gorpoints import apolar_form, dual_module_dimension, inverse_system_generators, verify_g_admissible

Y = PointSet([(1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 1), (1, 1, 1, 1), (-1, 1, -1, 1)])
print(is_arithmetically_gorenstein(Y).failure_reason)

alpha, z = (-1, -3, -1, 2, 2, 1), (0, 0, 0, 1)
F = apolar_form(Y, alpha, z).form
print("F =", F)
print("dim <F>, apolar HF:", dual_module_dimension(F))

gens = inverse_system_generators(Y, alpha, z, tmax=3)
for t in (1, 2):
    print(verify_g_admissible(Y, gens, t=t).detail)
