"""The two dynamic-programming deciders and what their witnesses look like.

Also shows the deterministic tie-breaking: the subset solver returns the
lexicographically smallest index set, the multiplicity solver prefers
the smallest item index at every back-step.
"""

from conelab import SsmInstance, SubsetSumInstance, ss_decide, ssm_decide

# A target reachable two ways: {2, 2} and {4}.  Index set (1, 2) wins.
inst = SubsetSumInstance((2, 2, 4), 4)
print(f"items {inst.items}, target {inst.target}")
print("  subset witness:", ss_decide(inst))

# With multiplicities the landscape changes completely.
for items, target in [((3, 5), 11), ((2,), 7), ((2, 3), 1), ((6, 10, 15), 17)]:
    mult = SsmInstance(items, target)
    witness = ssm_decide(mult)
    if witness is None:
        print(f"items {items}, target {target}: unreachable")
    else:
        combo = " + ".join(f"{lam}*{items[i - 1]}" for i, lam in witness.items())
        print(f"items {items}, target {target}: {combo}")

# The classic contrast: 11 from {3, 5} needs repetition.
print("\n3 and 5, each once, target 11:", ss_decide(SubsetSumInstance((3, 5), 11)))
print("3 and 5 with repetition, target 11:", ssm_decide(SsmInstance((3, 5), 11)))

# The deciders run over [0, t], so they are desk-scale tools; certificate
# checking, in contrast, is pure big-integer arithmetic at any size.
from conelab import ssm_certificate_ok

big = 10**30
huge = SsmInstance((big - 1, 7), big + 20)
print("\ncertificate at 30 digits:", ssm_certificate_ok(huge, {1: 1, 2: 3}))
print("off-by-one is still caught:", ssm_certificate_ok(huge, {1: 1, 2: 2}))
