# %% [markdown]
# # Basic classes, minimality and surgery families

# %%
from pinwheel_forge.laurent import LaurentPoly, parse_laurent
from pinwheel_forge.swkit import (
    NULLHOMOLOGOUS,
    OddLattice,
    canonical_genus_feasibility,
    distinguishing_invariant,
    enumerate_basic_classes,
    minimality_check,
    mms_family,
    standard_constraints,
    surgery_h1,
)

# %% [markdown]
# On CP2 # 3 CP2bar with the usual surfaces (lines through a blown-up point,
# exceptional tori, a cubic), only one pair of classes survives adjunction.

# %%
lattice = OddLattice(4)
classes = enumerate_basic_classes(lattice, standard_constraints(4), c_square=6)
print([str(k) for k in classes])
report = minimality_check(classes)
print(report.status, report.difference_squares)

# %% [markdown]
# Surgery along a nullhomologous torus adds a linear term to the invariant, so
# the maximal coefficient tells the members apart.

# %%
f0 = parse_laurent("t^-1 - t")
for n in (1, 2, 3, 10):
    f = mms_family(LaurentPoly(), f0, n)
    print(f"n={n:>2}: {str(f):<16} max |coeff| = {distinguishing_invariant(f)}")
print(surgery_h1([], 3, 1, NULLHOMOLOGOUS))

# %%
for k in range(2, 10):
    r = canonical_genus_feasibility(k, 1)
    print(f"k={k}: need genus {r.required_genus}, one pair gives at least {r.lower_bound}: {r.feasible}")
