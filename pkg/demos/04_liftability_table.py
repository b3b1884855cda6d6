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
# # When generic forms cannot come from points
#
# A degree-s form in n variables needs at least C(s+n-1, s)/n summands in a
# Waring decomposition, while a Gorenstein point set lifting its apolar
# algebra has exactly as many points as that algebra is long.  Once the
# first number beats the second, the form does not lift.

# %%
from fractions import Fraction
from math import comb

from gorpoints.lifting import compressed_length, n0, nonliftable_test, waring_G

for s in range(3, 9):
    n = n0(s)
    lhs = Fraction(comb(s + n - 1, s), n)
    print(f"s={s}: n0={n}  bound {lhs} > length {compressed_length(s, n)}")

# %% [markdown]
# Odd and even degrees behave differently.  In degree 8 the inequality
# still fails at n = 7 (429 against 450) and first holds at n = 8.

# %%
print([(s, n0(s)) for s in range(3, 30, 2)])
print([(s, n0(s)) for s in range(4, 30, 2)])
print(nonliftable_test(8, 7), nonliftable_test(8, 8))

# %%
# the four exceptional cases of the generic Waring rank
print({(j, n): waring_G(j, n) for j, n in [(3, 4), (4, 2), (4, 3), (4, 4)]})
