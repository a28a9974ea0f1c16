# %% [markdown]
# Finite solutions: tables, axioms, decomposition, retraction.

# %%
from skewsol.solutions import (
    apply_r,
    disjoint_union,
    enumerate_solutions,
    is_decomposable,
    is_involutive,
    lyubashenko,
    lyubashenko3,
    multipermutation_level,
    retraction,
    twist,
    validate_ybe,
)

S = lyubashenko3()
print("lambda rows:", S.lam)
print("rho rows:   ", S.rho)
print("r(0, 0) =", apply_r(S, 0, 0))
print("braid relation:", validate_ybe(S).message, "| involutive:", is_involutive(S))

# %%
# r(x, y) = (y + 1, x) is a solution but squares to a shift
shift = lyubashenko((1, 2, 0), (0, 1, 2))
print(validate_ybe(shift).ok, is_involutive(shift))

# %%
# decomposition returns the orbit of 0 and its complement
U = disjoint_union(twist(1), lyubashenko3())
print(is_decomposable(U))
print(is_decomposable(S))

# %%
R, classes = retraction(S)
print("retraction size", R.n, "classes", classes, "level", multipermutation_level(S))

# %%
for n in (1, 2, 3):
    sols = list(enumerate_solutions(n))
    levels = [multipermutation_level(T) for T in sols]
    print(n, len(sols), "solutions;", sum(l is None for l in levels), "not retractable to a point")
