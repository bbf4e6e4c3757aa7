"""How many distinct generators does a cone witness really need?

Any reachable point has a representation using at most 2^d generators,
and the gadget construction is built around point sets that push
minimal supports upward.  This script measures actual minimal supports
with the exhaustive subset search.
"""

from conelab import (
    GeneratorSet,
    SsmInstance,
    decide_membership,
    min_support,
    ssm_to_pic,
)

# Warm up in two dimensions: one diagonal generator can replace two axes.
X = GeneratorSet(((1, 0), (0, 1), (1, 1)))
print("generators:", X.points)
for q in [(1, 1), (3, 2), (5, 5)]:
    k, witness = min_support(X, q)
    print(f"  target {q}: support {k}, witness {witness}")

# Parity traps force both generators into play.
X = GeneratorSet(((2, 0), (0, 2)))
print("\ngenerators:", X.points)
print("  target (2, 2):", min_support(X, (2, 2)))
print("  target (1, 1):", min_support(X, (1, 1)), "(not in the cone)")

# The gadget from items (2, 3), target 7: eight generators in Z^4.
inst = SsmInstance((2, 3), 7)
pic, gadget = ssm_to_pic(inst)
X = gadget.generator_set()
full = decide_membership(X, pic.q)
print(f"\ngadget generators ({len(X.points)} points), target {pic.q}")
print("  a first witness uses", len(full), "generators:", full)
k, witness = min_support(X, pic.q)
print("  minimal support is", k, "via", sorted(witness))

# Minimal support across a few gadget targets: the fiber labels make
# low-support representations scarce.
for items, t in [((1,), 1), ((1, 2), 4), ((2, 3), 7), ((3, 4, 5), 9)]:
    pic, gadget = ssm_to_pic(SsmInstance(items, t))
    result = min_support(gadget.generator_set(), pic.q)
    label = f"items {items}, target {t}"
    if result is None:
        print(f"{label}: target not in the cone")
    else:
        print(f"{label}: minimal support {result[0]} of {len(gadget.points)}")
