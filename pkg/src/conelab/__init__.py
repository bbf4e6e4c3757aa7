"""conelab: exact integer-cone membership over polytope lattice points.

A small laboratory for one family of questions: given a bounded integer
polytope and a target point, is the target a nonnegative integer
combination of the polytope's lattice points?  The package provides the
exact decision procedures, two instance transformations that connect the
question to subset-sum problems (with witnesses carried both ways), and
a verification engine that cross-checks everything against brute force
at small scale.
"""

from .cone import (
    ConeWitness,
    GeneratorSet,
    check_certificate,
    decide_membership,
    min_support,
)
from .errors import (
    DEFAULT_EXPLOSION_CAP,
    BoxUnderivable,
    CertificateError,
    ConelabError,
    ExplosionGuard,
    NegativeInput,
    NegativeSlack,
    PairSumViolation,
    ParseError,
    SupportSearchTooLarge,
)
from .instances import (
    DEFAULT_SEED,
    PointInConeInstance,
    SsmInstance,
    SubsetSumInstance,
    Witness,
    encoding_size,
    gen_family,
    parse,
    serialize,
    validate,
)
from .polytope import Box, Point, Polytope, bounding_box, contains, integer_points
from .reductions import (
    BlockLayout,
    GadgetPointSet,
    gadget_dimension,
    label_vector,
    lift_witness_ss_to_ssm,
    lift_witness_ssm_to_pic,
    project_witness_pic_to_ssm,
    project_witness_ssm_to_ss,
    ss_to_ssm,
    ssm_to_pic,
)
from .solvers import ss_certificate_ok, ss_decide, ssm_certificate_ok, ssm_decide
from .verify import (
    MUTATIONS,
    run_family_audit,
    verify_equivalence_chain,
    verify_point_set_identity,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "BlockLayout",
    "BoxUnderivable",
    "CertificateError",
    "ConeWitness",
    "ConelabError",
    "DEFAULT_EXPLOSION_CAP",
    "DEFAULT_SEED",
    "ExplosionGuard",
    "GadgetPointSet",
    "GeneratorSet",
    "MUTATIONS",
    "NegativeInput",
    "NegativeSlack",
    "PairSumViolation",
    "ParseError",
    "Point",
    "PointInConeInstance",
    "Polytope",
    "SsmInstance",
    "SubsetSumInstance",
    "SupportSearchTooLarge",
    "Witness",
    "bounding_box",
    "check_certificate",
    "contains",
    "decide_membership",
    "encoding_size",
    "gadget_dimension",
    "gen_family",
    "integer_points",
    "label_vector",
    "lift_witness_ss_to_ssm",
    "lift_witness_ssm_to_pic",
    "min_support",
    "parse",
    "project_witness_pic_to_ssm",
    "project_witness_ssm_to_ss",
    "run_family_audit",
    "serialize",
    "ss_certificate_ok",
    "ss_decide",
    "ss_to_ssm",
    "ssm_certificate_ok",
    "ssm_decide",
    "ssm_to_pic",
    "validate",
    "verify_equivalence_chain",
    "verify_point_set_identity",
]
