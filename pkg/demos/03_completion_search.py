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
# # Searching for Gorenstein completions
#
# Fix some points, sample the rest at random, keep what the decision
# procedure certifies.  For the coordinate simplex of P^3 the fifth point
# works exactly when it avoids the four coordinate planes.

# %%
from collections import Counter

from gorpoints import LocusProblem, PointSet, complete_to_gorenstein
from gorpoints.locus import recheck

simplex = PointSet([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
problem = LocusProblem(simplex, k=1, target_s=2)
res = complete_to_gorenstein(problem, trials=100, seed=0, coordinate_range=2)
print(len(res.found), "accepted;", dict(res.rejections))

zeros = Counter(sum(1 for c in X[4].coords if c == 0) for X, _ in res.found)
print("zero coordinates among accepted points:", dict(zeros))
print("all re-verify:", all(recheck(X, problem) for X, _ in res.found))

# %% [markdown]
# ## Nine generic points of P^4
#
# Adding a tenth point never lowers HF(2) below 10, so socle degree 3 is
# out of reach and every trial is rejected before the Gorenstein test.

# %%
import random
from fractions import Fraction

rng = random.Random(8)
nine = PointSet([tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(5)) for _ in range(9)])
res = complete_to_gorenstein(LocusProblem(nine, 1, 3), trials=200, seed=8, coordinate_range=5)
print(len(res.found), "accepted;", dict(res.rejections))
