"""Problem instances, validation, JSON documents, and family generators.

Three instance kinds share one wire format: JSON objects with a "kind"
tag and all numbers written as decimal strings, so values survive at
arbitrary precision no matter what reads them back.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .errors import BoxUnderivable, ParseError
from .polytope import Point, Polytope, bounding_box

DEFAULT_SEED = 0

KIND_SS = "subset-sum"
KIND_SSM = "subset-sum-mult"
KIND_PIC = "point-in-cone"

# A witness maps 1-based item indices to multiplicities >= 1; indices with
# multiplicity zero are simply absent.
Witness = dict[int, int]


@dataclass(frozen=True)
class SubsetSumInstance:
    """Positive integers a_1..a_n and a target t; each item usable once."""

    items: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(int(a) for a in self.items))
        object.__setattr__(self, "target", int(self.target))


@dataclass(frozen=True)
class SsmInstance:
    """Like SubsetSumInstance, but items may repeat any number of times."""

    items: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(int(a) for a in self.items))
        object.__setattr__(self, "target", int(self.target))


@dataclass(frozen=True)
class PointInConeInstance:
    """A bounded H-polytope and a target point in the same ambient space."""

    dim: int
    polytope: Polytope
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "q", tuple(int(v) for v in self.q))


Instance = SubsetSumInstance | SsmInstance | PointInConeInstance


def validate(instance: Instance) -> str | None:
    """Return None if all invariants hold, else name the first violation."""
    if isinstance(instance, (SubsetSumInstance, SsmInstance)):
        if not instance.items:
            return "items must be nonempty"
        if instance.target < 1:
            return "target must be >= 1"
        for i, a in enumerate(instance.items, 1):
            if a < 1:
                return f"item {i} must be >= 1"
            if a > instance.target:
                return f"item {i} violates a_i <= t"
        return None
    if isinstance(instance, PointInConeInstance):
        if instance.polytope.dim != instance.dim:
            return "polytope dimension does not match dim"
        if len(instance.q) != instance.dim:
            return "q length does not match dim"
        try:
            bounding_box(instance.polytope)
        except BoxUnderivable:
            return "polytope is not bounded (no derivable bounding box)"
        return None
    raise TypeError(f"not an instance: {instance!r}")


def encoding_size(p: Polytope, q) -> int:
    """Total bits to write A, b, and q, at 2 + bitlength(|z|) per entry.

    The two fixed bits per entry cover sign and termination; zero costs 2.
    """
    def cost(z: int) -> int:
        return 2 + abs(z).bit_length()

    total = sum(cost(v) for row in p.A for v in row)
    total += sum(cost(v) for v in p.b)
    total += sum(cost(v) for v in q)
    return total


# --- documents -------------------------------------------------------------

def _int_from(value, what: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{what} must be an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        body = value[1:] if value.startswith("-") else value
        if body.isdigit():
            return int(value)
    raise ParseError(f"{what} must be a decimal string, got {value!r}")


def _int_list_from(values, what: str) -> list[int]:
    if not isinstance(values, list):
        raise ParseError(f"{what} must be a list")
    return [_int_from(v, f"{what}[{i}]") for i, v in enumerate(values)]


def serialize(instance: Instance) -> dict:
    """Render a validated instance as a JSON-ready document."""
    violation = validate(instance)
    if violation is not None:
        raise ValueError(f"refusing to serialize invalid instance: {violation}")
    if isinstance(instance, SubsetSumInstance):
        kind = KIND_SS
    elif isinstance(instance, SsmInstance):
        kind = KIND_SSM
    else:
        return {
            "kind": KIND_PIC,
            "dim": instance.dim,
            "A": [[str(v) for v in row] for row in instance.polytope.A],
            "b": [str(v) for v in instance.polytope.b],
            "q": [str(v) for v in instance.q],
        }
    return {
        "kind": kind,
        "items": [str(a) for a in instance.items],
        "target": str(instance.target),
    }


def parse(doc) -> Instance:
    """Decode a document produced by `serialize`; inverse on valid input."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("kind")
    if kind in (KIND_SS, KIND_SSM):
        items = _int_list_from(doc.get("items"), "items")
        target = _int_from(doc.get("target"), "target")
        cls = SubsetSumInstance if kind == KIND_SS else SsmInstance
        instance: Instance = cls(tuple(items), target)
    elif kind == KIND_PIC:
        dim = _int_from(doc.get("dim"), "dim")
        rows = doc.get("A")
        if not isinstance(rows, list) or not rows:
            raise ParseError("A must be a nonempty list of rows")
        A = [_int_list_from(row, f"A[{i}]") for i, row in enumerate(rows)]
        b = _int_list_from(doc.get("b"), "b")
        q = _int_list_from(doc.get("q"), "q")
        try:
            polytope = Polytope(tuple(tuple(r) for r in A), tuple(b))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        instance = PointInConeInstance(dim, polytope, tuple(q))
    else:
        raise ParseError(f"unknown kind {kind!r}")
    violation = validate(instance)
    if violation is not None:
        raise ParseError(f"invalid instance: {violation}")
    return instance


def witness_doc(w: Witness) -> dict:
    """Index-keyed witness as a JSON-ready map of decimal strings."""
    return {str(i): str(lam) for i, lam in sorted(w.items())}


def cone_witness_doc(w: dict[Point, int]) -> dict:
    """Point-keyed witness; keys are comma-joined decimal coordinates."""
    return {",".join(str(v) for v in pt): str(lam) for pt, lam in sorted(w.items())}


# --- families --------------------------------------------------------------

def gen_family(
    max_n: int,
    max_t: int,
    *,
    count: int | None = None,
    seed: int = DEFAULT_SEED,
) -> Iterator[SubsetSumInstance]:
    """Canonical family of instances with n <= max_n and t <= max_t.

    Exhaustive by default: every multiset of items drawn from [1, t],
    nondecreasing, one instance per multiset.  With `count`, draws that
    many instances uniformly from the same family, reproducibly from
    `seed`.
    """
    if max_n < 1 or max_t < 1:
        raise ValueError("max_n and max_t must be >= 1")
    if count is None:
        for n in range(1, max_n + 1):
            for t in range(1, max_t + 1):
                for items in combinations_with_replacement(range(1, t + 1), n):
                    yield SubsetSumInstance(items, t)
        return
    rng = random.Random(seed)
    shapes = [
        (n, t, math.comb(t + n - 1, n))
        for n in range(1, max_n + 1)
        for t in range(1, max_t + 1)
    ]
    total = sum(w for _, _, w in shapes)
    for _ in range(count):
        pick = rng.randrange(total)
        for n, t, weight in shapes:
            if pick < weight:
                break
            pick -= weight
        # stars and bars: a sorted n-subset of [1, t+n-1] maps bijectively
        # onto a nondecreasing multiset over [1, t]
        chosen = sorted(rng.sample(range(1, t + n), n))
        items = tuple(chosen[i] - i for i in range(n))
        yield SubsetSumInstance(items, t)
