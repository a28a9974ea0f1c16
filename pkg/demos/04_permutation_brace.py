# %% [markdown]
# The permutation brace of a solution.

# %%
from skewsol.braces import SkewBrace, associated_solution, is_soluble_brace
from skewsol.groups import group_catalog
from skewsol.permbrace import build_perm_brace, random_witness_pairs
from skewsol.solutions import lyubashenko3, twist

PB = build_perm_brace(lyubashenko3())
print("order", PB.order, "generators", PB.generators)
print("witness words", PB.group.witnesses)
print("add == mul:", PB.brace.add == PB.brace.mul)

# %%
# lambda and rho act letter by letter on words, so word length is kept
S = associated_solution(SkewBrace.trivial(group_catalog()["S3"]))
PB = build_perm_brace(S)
g, w = 3, PB.group.witnesses[5]
print(w, "->", PB.lam_word(g, w), "and", PB.rho_word(g, w))

# %%
# different words for the same element give the same lambda value
pairs = random_witness_pairs(PB, 100, seed=7)
print(all(PB.lam_index(g, a) == PB.lam_index(g, b) for g, a, b in pairs))

# %%
print("twist(3):", build_perm_brace(twist(3)).order)
A5 = associated_solution(SkewBrace.trivial(group_catalog()["A5"]))
PB = build_perm_brace(A5)
print("trivial A5 brace: order", PB.order, "soluble:", is_soluble_brace(PB.brace) is not None)
