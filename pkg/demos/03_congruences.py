# %% [markdown]
# Quotients of solutions and i-kernels.
#
# A congruence is a partition on which both tables descend to a
# non-degenerate solution.  An i-kernel is a block X0 with
# r(X0, Z) = Z x X0 and r(Z, X0) = X0 x Z for every block Z.

# %%
from skewsol.morphisms import (
    enumerate_congruences,
    i_kernel_blocks,
    is_i_simple,
    is_simple_solution,
    quotient_solution,
)
from skewsol.solutions import disjoint_union, lyubashenko3, twist

for name, S in [("lyubashenko3", lyubashenko3()), ("twist3", twist(3)), ("union", disjoint_union(twist(1), lyubashenko3()))]:
    print(name)
    for P in enumerate_congruences(S):
        print("   ", P.blocks, "i-kernels:", i_kernel_blocks(S, P))

# %%
S = lyubashenko3()
print("simple:", is_simple_solution(S), "i-simple:", is_i_simple(S))
print(quotient_solution(S, enumerate_congruences(S)[-1])[0])

# %%
# twist(2) passes the literal simplicity test but has i-kernels
print(is_simple_solution(twist(2)), is_i_simple(twist(2)))
