"""A walk through both reductions on one small instance, end to end.

Start from the question "can items 2 and 3, each used once, hit 7?",
push it through the block encoding and the fiber gadget, and carry the
witnesses back and forth with every certificate checked on the way.
"""

from conelab import (
    SubsetSumInstance,
    SsmInstance,
    check_certificate,
    decide_membership,
    encoding_size,
    integer_points,
    lift_witness_ss_to_ssm,
    lift_witness_ssm_to_pic,
    project_witness_pic_to_ssm,
    project_witness_ssm_to_ss,
    ss_decide,
    ss_to_ssm,
    ssm_decide,
    ssm_to_pic,
)

inst = SubsetSumInstance((2, 3), 7)
print(f"subset sum: items {inst.items}, target {inst.target}")
print("  each item once:", ss_decide(inst) or "impossible (2+3=5, 2, 3)")

# The same numbers with unlimited repetition is a different question.
mult = SsmInstance(inst.items, inst.target)
witness = ssm_decide(mult)
print("  with multiplicities:", witness, "(2*2 + 1*3 = 7)")

# First reduction: force multiplicities back to 0/1 with a bit encoding.
# Each item gets a value-free twin; flag bits make each pair sum to one.
reduced, layout = ss_to_ssm(inst)
print("\nblock encoding with field widths", (layout.w1, layout.w2, layout.w3))
print("  packed items:", reduced.items, "target:", reduced.target)
print("  decision:", ssm_decide(reduced))
print("  matches the original subset-sum answer:", ssm_decide(reduced) is None)

# A second instance where the subset-sum answer is yes:
yes_inst = SubsetSumInstance((3, 5), 8)
yes_reduced, _ = ss_to_ssm(yes_inst)
subset = ss_decide(yes_inst)
lifted = lift_witness_ss_to_ssm(subset, len(yes_inst.items))
print("\nitems", yes_inst.items, "target", yes_inst.target)
print("  subset witness:", subset)
print("  lifted multiplicities:", lifted)
print("  projected back:", project_witness_ssm_to_ss(lifted, yes_reduced))

# Second reduction: multiplicities become cone membership.  The gadget
# polytope has one lattice point per 0/1 label; item labels carry their
# value in the last coordinate, every other label is free filler.
pic, gadget = ssm_to_pic(mult)
print(f"\nfiber gadget: dimension {pic.dim}, {pic.polytope.num_rows} rows, "
      f"target point {pic.q}")
print(f"  encoding size: {encoding_size(pic.polytope, pic.q)} bits")
for i, point in enumerate(gadget.points):
    print(f"  p{i} = {point}")

# The whole construction stands on this identity:
enumerated = integer_points(pic.polytope)
print("  lattice points == gadget points:", enumerated == list(gadget.points))

# Membership of the all-7 point is exactly solvability with multiplicities.
cone_witness = decide_membership(gadget.generator_set(), pic.q)
print("\ncone membership witness:", cone_witness)
print("  certified:", check_certificate(gadget.generator_set(), cone_witness, pic.q))

# The witness lifted from the multiplicity solution looks different but
# certifies just as well, and projects back to where it came from.
lifted_cone = lift_witness_ssm_to_pic(witness, mult, gadget)
print("  lifted witness:", lifted_cone)
print("  certified:", check_certificate(gadget.generator_set(), lifted_cone, pic.q))
print("  projected back:", project_witness_pic_to_ssm(lifted_cone, mult, gadget))
