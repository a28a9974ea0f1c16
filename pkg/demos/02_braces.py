# %% [markdown]
# Skew braces over the built-in group catalog.

# %%
from skewsol.braces import (
    SkewBrace,
    associated_solution,
    enumerate_braces,
    enumerate_ideals,
    is_soluble_brace,
    quotient_brace,
    socle,
    validate_brace,
)
from skewsol.groups import group_catalog
from skewsol.solutions import validate_ybe

groups = group_catalog()
print(", ".join(f"{k}({len(t)})" for k, t in groups.items()))

# %%
for n in range(1, 8):
    print(n, sum(1 for _ in enumerate_braces(n)), "labelled braces")

# %%
B = SkewBrace.trivial(groups["S3"])
print(validate_brace(B).message)
print("ideals:", [sorted(I.members) for I in enumerate_ideals(B)])
print("strong left ideals:", [sorted(I.members) for I in enumerate_ideals(B, "strong_left_ideal")])
print("socle:", sorted(socle(B).members))

# %%
chain = is_soluble_brace(B)
print("chain (ascending):", chain.ascending())
Q, proj = quotient_brace(B, chain.ideals[1])
print("S3 / A3 has order", Q.n, "projection", proj)

# %%
# every brace gives a solution
print(all(validate_ybe(associated_solution(C)).ok for n in range(1, 7) for C in enumerate_braces(n)))

# %%
A5 = SkewBrace.trivial(groups["A5"])
print("A5 ideals:", [len(I) for I in enumerate_ideals(A5)], "soluble:", is_soluble_brace(A5) is not None)
