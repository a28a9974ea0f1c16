# %% [markdown]
# Solubility witnesses, verification and search.

# %%
from skewsol.braces import SkewBrace, associated_solution, is_soluble_brace
from skewsol.groups import group_catalog
from skewsol.io import witness_to_dict
from skewsol.solubility import (
    SolubilityWitness,
    WitnessLevel,
    attempt_witness_via_perm_brace,
    brace_chain_to_witness,
    search_witness,
    verify_witness,
)
from skewsol.solutions import lyubashenko3, twist

cat = group_catalog()
B = SkewBrace.trivial(cat["S3"])
W = brace_chain_to_witness(B, is_soluble_brace(B))
for k, lvl in enumerate(W.levels):
    print(k, "order", lvl.brace.n, "map", lvl.map, "X", lvl.i_kernel, "J", lvl.abelian_ideal)
print(verify_witness(associated_solution(B), W))

# %%
# a constant map on lyubashenko3 can only be accepted conditionally
L = lyubashenko3()
print(verify_witness(L, SolubilityWitness(L, (WitnessLevel(SkewBrace.trivial(cat["C1"]), (0, 0, 0)),))))

# %%
for name, S in [
    ("twist2", twist(2)),
    ("lyubashenko3", L),
    ("trivial A5", associated_solution(SkewBrace.trivial(cat["A5"]))),
]:
    v = search_witness(S, max_target_order=3 if S is L else 6)
    print(name, "->", v.kind, getattr(v, "reason", ""), getattr(v, "notes", ""))

# %%
res = attempt_witness_via_perm_brace(twist(3))
print(res.route, res.notes)
print(witness_to_dict(res.witness))
