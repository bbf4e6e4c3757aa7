"""Batch verification of the package's structural claims.

Two per-instance checks back every claim the reductions make:

* point-set-identity: the gadget polytope's lattice points are exactly
  the intended point set, compared by full enumeration,
* equivalence-chain: all deciders agree across both transformations and
  every witness survives lifting and projection with its certificate
  re-checked at each hop.

A small fault-injection harness can corrupt the construction in three
known ways so that audits demonstrably fail on injected bugs instead of
passing vacuously.
"""

from __future__ import annotations

from typing import Callable

from .cone import GeneratorSet, check_certificate, decide_membership
from .errors import (
    DEFAULT_EXPLOSION_CAP,
    CertificateError,
    NegativeSlack,
    PairSumViolation,
)
from .instances import SsmInstance, SubsetSumInstance, gen_family, serialize
from .polytope import Polytope, integer_points
from .reductions import (
    BlockLayout,
    lift_witness_ss_to_ssm,
    lift_witness_ssm_to_pic,
    project_witness_pic_to_ssm,
    project_witness_ssm_to_ss,
    ss_to_ssm,
    ssm_to_pic,
)
from .solvers import ss_certificate_ok, ss_decide, ssm_certificate_ok, ssm_decide

# Deliberate corruptions for audit sensitivity checks.
MUTATION_DROP_CEILINGS = "drop-ceiling-rows"
MUTATION_OVERSHOOT = "overshoot-padding"
MUTATION_NARROW_BLOCK = "narrow-value-block"
MUTATIONS = (MUTATION_DROP_CEILINGS, MUTATION_OVERSHOOT, MUTATION_NARROW_BLOCK)


def _drop_ceiling_rows(polytope: Polytope, fiber_rows: int) -> Polytope:
    # the ceiling family sits at the end of the fixed row order
    keep = polytope.num_rows - fiber_rows
    return Polytope(polytope.A[:keep], polytope.b[:keep])


def _narrowed_reduction(inst: SubsetSumInstance) -> tuple[SsmInstance, BlockLayout]:
    # shrink the value field by one bit; stored values truncate to what fits
    n, t = len(inst.items), inst.target
    layout = BlockLayout(w1=n, w2=max(1, t.bit_length() - 1), w3=n)
    mask = (1 << layout.w2) - 1
    items = tuple(
        layout.compose(2 ** (n - i), inst.items[i - 1] & mask, 2 ** (i - 1))
        for i in range(1, n + 1)
    ) + tuple(
        layout.compose(2 ** (n - i), 0, 2 ** (i - 1)) for i in range(1, n + 1)
    )
    target = layout.compose(2**n - 1, t & mask, 2**n - 1)
    return SsmInstance(items, target), layout


def _overshoot_lift(witness, inst, gadget):
    lifted = lift_witness_ssm_to_pic(witness, inst, gadget)
    top = gadget.points[-1]
    lifted[top] = lifted.get(top, 0) + 1
    return lifted


def verify_point_set_identity(
    inst: SsmInstance,
    *,
    cap: int = DEFAULT_EXPLOSION_CAP,
    mutation: str | None = None,
) -> dict:
    """Enumerate the gadget polytope and compare against the point set."""
    pic, gadget = ssm_to_pic(inst)
    polytope = pic.polytope
    if mutation == MUTATION_DROP_CEILINGS:
        polytope = _drop_ceiling_rows(polytope, len(gadget.points))
    enumerated = integer_points(polytope, cap=cap)
    expected = list(gadget.points)
    enumerated_set = set(enumerated)
    expected_set = set(expected)
    diff = [
        {"side": "enumerated", "point": [str(v) for v in pt]}
        for pt in sorted(enumerated_set - expected_set)
    ] + [
        {"side": "gadget", "point": [str(v) for v in pt]}
        for pt in sorted(expected_set - enumerated_set)
    ]
    return {
        "claim": "point-set-identity",
        "pass": enumerated == expected,
        "details": {
            "enumerated": len(enumerated),
            "expected": len(expected),
            "diff": diff,
        },
    }


def verify_equivalence_chain(
    inst: SubsetSumInstance,
    *,
    cap: int = DEFAULT_EXPLOSION_CAP,
    mutation: str | None = None,
) -> dict:
    """Run every decider across both transformations and audit witnesses.

    Two independent consistency requirements: the multiplicity view of
    the input data must agree with its cone instance, and the subset-sum
    answer must agree with the block-encoded multiplicity instance and
    with that instance's own cone instance.
    """
    lift_pic: Callable = lift_witness_ssm_to_pic
    reduce_ss = ss_to_ssm
    if mutation == MUTATION_OVERSHOOT:
        lift_pic = _overshoot_lift
    if mutation == MUTATION_NARROW_BLOCK:
        reduce_ss = _narrowed_reduction

    subset_witness = ss_decide(inst)
    ss_yes = subset_witness is not None

    mult_view = SsmInstance(inst.items, inst.target)
    mult_witness = ssm_decide(mult_view)
    ssm_yes = mult_witness is not None
    pic0, gadget0 = ssm_to_pic(mult_view)
    cone_witness0 = decide_membership(gadget0.generator_set(), pic0.q, cap=cap)
    pic_yes = cone_witness0 is not None

    reduced, _layout = reduce_ss(inst)
    reduced_witness = ssm_decide(reduced)
    reduced_yes = reduced_witness is not None
    pic1, gadget1 = ssm_to_pic(reduced)
    cone_witness1 = decide_membership(gadget1.generator_set(), pic1.q, cap=cap)
    reduced_pic_yes = cone_witness1 is not None

    consistent = (ssm_yes == pic_yes) and (ss_yes == reduced_yes == reduced_pic_yes)

    witnesses_ok = True
    problems: list[str] = []

    def flag(message: str) -> None:
        nonlocal witnesses_ok
        witnesses_ok = False
        problems.append(message)

    try:
        if subset_witness is not None:
            lifted = lift_witness_ss_to_ssm(subset_witness, len(inst.items))
            if not ssm_certificate_ok(reduced, lifted):
                flag("lifted subset witness fails the reduced certificate")
            else:
                cone_lifted = lift_pic(lifted, reduced, gadget1)
                if not check_certificate(
                    gadget1.generator_set(), cone_lifted, pic1.q
                ):
                    flag("lifted cone witness fails its certificate")
        if mult_witness is not None:
            cone_lifted = lift_pic(mult_witness, mult_view, gadget0)
            if not check_certificate(gadget0.generator_set(), cone_lifted, pic0.q):
                flag("lifted cone witness fails its certificate")
        if cone_witness0 is not None:
            back = project_witness_pic_to_ssm(cone_witness0, mult_view, gadget0)
            if not ssm_certificate_ok(mult_view, back):
                flag("projected multiplicity witness fails its certificate")
        if cone_witness1 is not None:
            back = project_witness_pic_to_ssm(cone_witness1, reduced, gadget1)
            if not ssm_certificate_ok(reduced, back):
                flag("projected multiplicity witness fails its certificate")
            else:
                subset_back = project_witness_ssm_to_ss(back, reduced)
                if not ss_certificate_ok(inst, subset_back):
                    flag("projected subset witness fails its certificate")
    except (CertificateError, PairSumViolation, NegativeSlack) as exc:
        flag(f"{type(exc).__name__}: {exc}")

    def yn(flagged: bool) -> str:
        return "yes" if flagged else "no"

    return {
        "claim": "equivalence-chain",
        "pass": consistent and witnesses_ok,
        "details": {
            "ss": yn(ss_yes),
            "ssm": yn(ssm_yes),
            "pic": yn(pic_yes),
            "reduced_ssm": yn(reduced_yes),
            "reduced_pic": yn(reduced_pic_yes),
            "consistent": consistent,
            "witnesses_ok": witnesses_ok,
            "problems": problems,
        },
    }


def run_family_audit(
    max_n: int,
    max_t: int,
    *,
    cap: int = DEFAULT_EXPLOSION_CAP,
    mutation: str | None = None,
    on_report: Callable[[SubsetSumInstance, dict, dict], None] | None = None,
) -> dict:
    """Run both checks on the exhaustive family; failures are returned data.

    The summary lists every failing instance verbatim so a failure can be
    replayed in isolation.
    """
    if mutation is not None and mutation not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutation!r}")
    instances = 0
    failures: list[dict] = []
    for inst in gen_family(max_n, max_t):
        instances += 1
        identity = verify_point_set_identity(
            SsmInstance(inst.items, inst.target), cap=cap, mutation=mutation
        )
        chain = verify_equivalence_chain(inst, cap=cap, mutation=mutation)
        if on_report is not None:
            on_report(inst, identity, chain)
        if not (identity["pass"] and chain["pass"]):
            failures.append(serialize(inst))
    return {"instances": instances, "failures": failures}
