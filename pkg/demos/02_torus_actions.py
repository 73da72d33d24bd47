# %% [markdown]
# # From orbit data to a pinwheel
#
# Orbit data of a torus action on a simply connected 4-manifold is a cyclic
# list of primitive vectors, consecutive ones forming a unimodular basis.

# %%
import random
from collections import Counter

from pinwheel_forge import barycentric_pinwheel, classify_action, parse_orbit_data, sphere_geometry
from pinwheel_forge.torus_actions import random_orbit_data

# %%
data = parse_orbit_data("(1,-1);(0,1);(1,-1);(2,-1)")
config = sphere_geometry(data)
print("self-intersections:", config.self_ints)
print("Gram matrix:")
for row in config.gram():
    print("   ", row)
print("manifold:", classify_action(data))

# %% [markdown]
# Splitting every edge of the orbit polygon in half gives one component per
# fixed point.  Its gluing sequence always closes.

# %%
p = barycentric_pinwheel(data)
for c in p.components:
    print(f"{c.name:16} S^2 = {c.s.self_int:>3}   T^2 = {c.t.self_int}")
print("gluing parameters:", p.gluing_parameters())

# %%
rng = random.Random(1)
seen = Counter()
for k in range(3, 8):
    for _ in range(200):
        d = random_orbit_data(rng, k)
        seen[str(classify_action(d))] += 1
        barycentric_pinwheel(d)  # raises if the monodromy fails to close
for name, count in seen.most_common(8):
    print(f"{count:4}  {name}")
