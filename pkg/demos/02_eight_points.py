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
# # Eight points cut out by three quadrics
#
# Six fixed points plus two more chosen on the locus where the 10 x 8
# matrix of squares drops rank.  The union is a complete intersection, so
# it is Gorenstein with h-vector (1,3,3,1).

# %%
from fractions import Fraction

from gorpoints import (LocusProblem, PointSet, inverse_system_generators, is_arithmetically_gorenstein,
                       is_artinian_reduction, minor_equations, verify_g_admissible)
from gorpoints.exactalg import Poly, power_of_linear

fixed = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1), (-5, 1, -3, 1)]
added = [(-2, 0, 5, 1), (-2, Fraction(30, 13), 5, 19)]
X = PointSet(fixed + added)
z = (1, 1, 1, 1)

cert = is_arithmetically_gorenstein(X, z)
print(cert.verdict.value, cert.hilbert.h_vector, "dim <F> =", cert.dual_dim)
print("alpha:", [str(a) for a in cert.alpha])

# %% [markdown]
# ## The locus equations
#
# With the last two points symbolic, the 8 x 8 minors are bihomogeneous of
# bidegree (2,2) and all vanish at the chosen pair.

# %%
eqs = minor_equations(LocusProblem(PointSet(fixed), 2, 3))
print(eqs.total_minors, "minors,", len(eqs.equations), "distinct up to scalar")
print({d for e in eqs.equations for d in e.multidegree(eqs.blocks)})
print("all vanish:", not any(eqs.evaluate(added)))

# %% [markdown]
# ## A relation vector that does not quite work
#
# A tempting candidate relation for this configuration is
# (7347, 6975/13, 12555, -8277, -465, -210, -434, 26).  It is not a relation:
# the sum leaves a multiple of L_5^2 - L_1^2 - L_2^2 - L_3^2 - L_4^2 behind.
# Adding 465 (1,1,1,1,-1,0,0,0) repairs it, and the repaired vector is
# proportional to the computed one.

# %%
quoted = (7347, Fraction(6975, 13), 12555, -8277, -465, -210, -434, 26)
residual = sum((power_of_linear(p.coords, 2) * a for p, a in zip(X, quoted)), Poly.zero(4))
print("residual:", residual)
repaired = [a + 465 * d for a, d in zip(quoted, (1, 1, 1, 1, -1, 0, 0, 0))]
print("repaired:", [str(a) for a in repaired])
print("proportional to computed alpha:", cert.alpha.equals_up_to_scalar(repaired))

# %% [markdown]
# ## Generators, admissibility and the reduction round trip

# %%
gens = inverse_system_generators(X, cert.alpha, cert.z, tmax=4)
print(verify_g_admissible(X, gens).detail)
print("F_1 = F/3!:", gens.F(1) == cert.F / 6)

red = is_artinian_reduction(cert.F, X, cert.z, x_is_gorenstein=True)
print(red.liftable, red.meaning)
