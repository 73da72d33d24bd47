# %% [markdown]
# # Gluing monodromy and cyclic continued fractions
#
# A cyclic chain of pinwheel components closes up when the product of the
# gluing matrices theta(a_i) is plus or minus the identity.  This walk-through
# checks the small cases and then sweeps all length-4 sequences.

# %%
import itertools
import random
from collections import Counter

from pinwheel_forge import continued_fraction, cyclic_cf_all_zero, monodromy_check

# %%
for seq in ([-1, -1, -1], [0, 0, 0, 0], [-2, -1, -2, -1], [1, 1, 1]):
    print(f"{str(seq):18} -> {monodromy_check(seq)}")

# %% [markdown]
# Continued fractions are evaluated on the projective line, so a trailing zero
# needs no special case: it sends the tail to infinity and the two terms drop out.

# %%
print(continued_fraction([3, 1, 0]), "==", continued_fraction([3]))
print(continued_fraction([1, 0]))  # inf

# %%
verdicts = Counter()
for seq in itertools.product(range(-6, 7), repeat=4):
    if cyclic_cf_all_zero(seq):
        verdicts[monodromy_check(seq).kind] += 1
print("sequences with every cyclic fraction zero:", dict(verdicts))

# %% [markdown]
# The same holds one step longer, though here only a random sample is drawn.

# %%
rng = random.Random(0)
hits = Counter()
for _ in range(20000):
    seq = [rng.randint(-4, 4) for _ in range(5)]
    if cyclic_cf_all_zero(seq):
        hits[monodromy_check(seq).kind] += 1
print(dict(hits))
