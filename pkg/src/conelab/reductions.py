"""The two instance transformations and their witness maps.

Subset sum instances become multiplicity instances through a three-block
bit encoding that forces every item to be used zero or one times.
Multiplicity instances become point-in-cone instances through a gadget
polytope whose lattice points are one 0/1 labelled point per item plus
free filler points; the target is the all-t vector.

Both directions of each transformation carry witnesses along, and every
witness map re-checks the certificate it consumes before translating it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cone import ConeWitness, GeneratorSet, check_certificate
from .errors import CertificateError, NegativeSlack, PairSumViolation
from .instances import PointInConeInstance, SsmInstance, SubsetSumInstance, Witness
from .polytope import Point, Polytope
from .solvers import ssm_certificate_ok


# --- block encoding: subset sum -> subset sum with multiplicities ----------

@dataclass(frozen=True)
class BlockLayout:
    """Bit widths of the three fields packed into each constructed number.

    Field 3 holds the least significant bits.  Fields 1 and 3 are n bits
    wide (one slot per item); field 2 is wide enough to hold the target.
    """

    w1: int
    w2: int
    w3: int

    def __post_init__(self):
        if min(self.w1, self.w2, self.w3) < 1:
            raise ValueError("block widths must be positive")

    @property
    def off3(self) -> int:
        return 0

    @property
    def off2(self) -> int:
        return self.w3

    @property
    def off1(self) -> int:
        return self.w3 + self.w2

    @classmethod
    def for_instance(cls, n: int, target: int) -> BlockLayout:
        return cls(w1=n, w2=target.bit_length(), w3=n)

    def compose(self, v1: int, v2: int, v3: int) -> int:
        """Pack three field values; injective while each fits its width."""
        return v1 * 2**self.off1 + v2 * 2**self.off2 + v3

    def extract(self, x: int, block: int) -> int:
        """Read field 1, 2, or 3 back out of a packed number."""
        off, width = {
            1: (self.off1, self.w1),
            2: (self.off2, self.w2),
            3: (self.off3, self.w3),
        }[block]
        return (x >> off) % (1 << width)


def ss_to_ssm(
    inst: SubsetSumInstance, layout: BlockLayout | None = None
) -> tuple[SsmInstance, BlockLayout]:
    """Build the equivalent multiplicity instance over 2n packed numbers.

    Item i becomes a'_i carrying its value in the middle field; filler
    number b_i is its value-free twin.  Matching flag bits in the outer
    fields force exactly one of each pair into any solution.
    """
    items, t = inst.items, inst.target
    n = len(items)
    if layout is None:
        layout = BlockLayout.for_instance(n, t)
    primed = [
        layout.compose(2 ** (n - i), items[i - 1], 2 ** (i - 1))
        for i in range(1, n + 1)
    ]
    fillers = [
        layout.compose(2 ** (n - i), 0, 2 ** (i - 1)) for i in range(1, n + 1)
    ]
    target = layout.compose(2**n - 1, t, 2**n - 1)
    return SsmInstance(tuple(primed + fillers), target), layout


def lift_witness_ss_to_ssm(J, n: int) -> Witness:
    """Turn an index set into multiplicities: items in J, fillers outside."""
    chosen = set(J)
    if any(not 1 <= i <= n for i in chosen):
        raise ValueError("subset witness index out of range")
    witness: Witness = {}
    for i in range(1, n + 1):
        if i in chosen:
            witness[i] = 1
        else:
            witness[n + i] = 1
    return witness


def project_witness_ssm_to_ss(witness: Witness, reduced: SsmInstance) -> Witness:
    """Read the chosen index set back out of a multiplicity witness.

    The witness must certify against the reduced target, and every
    item/filler pair must sum to exactly one; for instances built by
    ss_to_ssm any valid witness does, so a violation here means the
    witness or the reduction is corrupted.
    """
    if len(reduced.items) % 2 != 0:
        raise ValueError("reduced instance must have an even number of items")
    n = len(reduced.items) // 2
    if not ssm_certificate_ok(reduced, witness):
        raise CertificateError("witness does not certify the reduced instance")
    for i in range(1, n + 1):
        pair = witness.get(i, 0) + witness.get(n + i, 0)
        if pair != 1:
            raise PairSumViolation(
                f"item/filler pair {i} sums to {pair}, expected 1"
            )
    return {i: 1 for i in range(1, n + 1) if witness.get(i, 0) == 1}


# --- fiber gadget: subset sum with multiplicities -> point in cone ---------

def gadget_dimension(n: int) -> int:
    """Label width: smallest d with 2^d >= 2n + 2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n.bit_length() + 1


def label_vector(i: int, d: int) -> Point:
    """The d-bit 0/1 encoding of i, most significant bit first."""
    return tuple((i >> (d - 1 - j)) & 1 for j in range(d))


@dataclass(frozen=True)
class GadgetPointSet:
    """The 2^d labelled points: label bits first, item value (or 0) last."""

    d: int
    points: tuple[Point, ...]

    def generator_set(self) -> GeneratorSet:
        return GeneratorSet(self.points)

    @property
    def carrier_count(self) -> int:
        """Number of points with a nonzero value coordinate (= n)."""
        return sum(1 for p in self.points if p[-1] != 0)


def ssm_to_pic(inst: SsmInstance) -> tuple[PointInConeInstance, GadgetPointSet]:
    """Build the gadget polytope, target point, and explicit point set.

    Rows come in four families, in this order: 0/1 bounds on each label
    coordinate, [0, t] bounds on the value coordinate, then per label one
    floor row and one ceiling row pinning the value coordinate to the
    item value on its own fiber while staying slack everywhere else.
    """
    items, t = inst.items, inst.target
    n = len(items)
    d = gadget_dimension(n)
    size = 2**d

    points = []
    for i in range(size):
        value = items[i - 1] if 1 <= i <= n else 0
        points.append(label_vector(i, d) + (value,))

    rows: list[tuple[int, ...]] = []
    rhs: list[int] = []
    for j in range(d):
        unit = [0] * (d + 1)
        unit[j] = -1
        rows.append(tuple(unit))
        rhs.append(0)
        unit = [0] * (d + 1)
        unit[j] = 1
        rows.append(tuple(unit))
        rhs.append(1)
    unit = [0] * (d + 1)
    unit[d] = -1
    rows.append(tuple(unit))
    rhs.append(0)
    unit = [0] * (d + 1)
    unit[d] = 1
    rows.append(tuple(unit))
    rhs.append(t)
    # off-fiber slack: t per label bit that disagrees with the point's label
    for last_coeff in (-1, 1):
        for i in range(size):
            label = points[i][:d]
            ones = sum(label)
            coeffs = tuple(t if bit else -t for bit in label) + (last_coeff,)
            rows.append(coeffs)
            rhs.append(t * ones + last_coeff * points[i][d])
    polytope = Polytope(tuple(rows), tuple(rhs))
    q = (t,) * (d + 1)
    return (
        PointInConeInstance(d + 1, polytope, q),
        GadgetPointSet(d, tuple(points)),
    )


def lift_witness_ssm_to_pic(
    witness: Witness, inst: SsmInstance, gadget: GadgetPointSet
) -> ConeWitness:
    """Spread multiplicities over complementary label pairs, then pad.

    Each item multiplicity goes on the item's point and on its bitwise
    complement, which together contribute an all-ones label; the all-ones
    point absorbs the remaining t - sum(lambda) units.
    """
    if not ssm_certificate_ok(inst, witness):
        raise CertificateError("witness does not certify the source instance")
    t = inst.target
    size = 2**gadget.d
    used = sum(witness.values())
    slack = t - used
    if slack < 0:
        raise NegativeSlack(f"multiplicities sum to {used}, exceeding t = {t}")
    lifted: dict[Point, int] = {}
    for i, lam in witness.items():
        for idx in (i, size - i - 1):
            pt = gadget.points[idx]
            lifted[pt] = lifted.get(pt, 0) + lam
    if slack:
        pt = gadget.points[size - 1]
        lifted[pt] = lifted.get(pt, 0) + slack
    return lifted


def project_witness_pic_to_ssm(
    witness: ConeWitness, inst: SsmInstance, gadget: GadgetPointSet
) -> Witness:
    """Restrict a cone witness to the value-carrying points.

    Only those points touch the value coordinate, so their multiplicities
    alone already satisfy the multiplicity equation.
    """
    t = inst.target
    q = (t,) * (gadget.d + 1)
    if not check_certificate(gadget.generator_set(), witness, q):
        raise CertificateError("cone witness does not certify the target point")
    n = len(inst.items)
    projected: Witness = {}
    for i in range(1, n + 1):
        lam = witness.get(gadget.points[i], 0)
        if lam:
            projected[i] = lam
    return projected
