# %% [markdown]
# # Simply connected surgery families
#
# Each family member comes with a finite presentation.  Coset enumeration over
# the trivial subgroup either closes with one coset (a proof of triviality) or
# runs out of room and reports so.

# %%
from pinwheel_forge.fpgroups import (
    build_family_presentation,
    family_text,
    parse_presentation,
    todd_coxeter,
    verify_trivial,
)

# %%
print(family_text(3, 2))

# %%
for k, kappa in ((2, 1), (3, None), (4, -2), (7, None)):
    for n in (1, 3, 5):
        p = build_family_presentation(k, n, kappa)
        v = verify_trivial(p)
        print(f"k={k} n={n} kappa={kappa}: {v}  ({v.enumeration.cosets_used} cosets allocated)")

# %% [markdown]
# The enumerator finds finite groups too, and reports failure honestly.

# %%
print(todd_coxeter(parse_presentation("gens: a b ; rels: a^2, b^3, (a b)^5")))
print(verify_trivial(parse_presentation("gens: a b ; rels: a^2, b^3, (a b)^5")))
print(verify_trivial(parse_presentation("gens: a b ; rels: [a,b]")))
higman = "gens: a b c d ; rels: a^-1 b a b^-2, b^-1 c b c^-2, c^-1 d c d^-2, d^-1 a d a^-2"
print(verify_trivial(parse_presentation(higman), max_cosets=5000))
