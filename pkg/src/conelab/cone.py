"""Membership in the integer cone of a finite nonnegative generator set.

The decision procedure is a memoized subtraction descent: starting from
the target, repeatedly subtract any generator that fits componentwise,
caching residuals that lead nowhere.  Nonnegativity makes every step
shrink the L1 norm, so the search always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DEFAULT_EXPLOSION_CAP,
    ExplosionGuard,
    NegativeInput,
    SupportSearchTooLarge,
)
from .polytope import Point

# A cone witness maps generator points to multiplicities >= 1.
ConeWitness = dict[Point, int]

SUPPORT_SEARCH_LIMIT = 24


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered, pairwise-distinct integer points spanning the cone."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(tuple(int(v) for v in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("generator points must be pairwise distinct")
        if pts and any(len(p) != len(pts[0]) for p in pts):
            raise ValueError("generator points must share one dimension")

    @property
    def dim(self) -> int | None:
        return len(self.points[0]) if self.points else None


def _require_nonnegative(X: GeneratorSet, q) -> None:
    if any(v < 0 for v in q):
        raise NegativeInput("target point has a negative coordinate")
    if any(v < 0 for p in X.points for v in p):
        raise NegativeInput("generator set has a negative coordinate")


def _check_dims(X: GeneratorSet, q) -> None:
    if X.dim is not None and X.dim != len(q):
        raise ValueError(f"target has dimension {len(q)}, generators have {X.dim}")


def _coordinate_reach(coins: list[int], limit: int) -> bytearray:
    """Sums attainable from nonnegative multiples of the given coin values."""
    reach = bytearray(limit + 1)
    reach[0] = 1
    for c in sorted({c for c in coins if c > 0}):
        if c > limit:
            continue
        for s in range(c, limit + 1):
            if reach[s - c]:
                reach[s] = 1
    return reach


def _budget_dead(r, gens, gen_l1, gen_touch, all_coords, num_gens, d) -> bool:
    """Shared-budget check run once per residual before it is expanded.

    If every generator still fitting under r consumes coordinate j, then
    at most r(j) more subtractions can ever happen, each clearing at most
    the largest fitting L1 mass; a residual heavier than that is dead.
    Only provably hopeless residuals are cut, so the search result and
    the identity of the first witness found are unaffected.
    """
    common = all_coords
    max_l1 = 0
    for gi in range(num_gens):
        x = gens[gi]
        fits = True
        for j in range(d):
            if x[j] > r[j]:
                fits = False
                break
        if fits:
            common &= gen_touch[gi]
            if gen_l1[gi] > max_l1:
                max_l1 = gen_l1[gi]
    if max_l1 == 0:
        return True  # nothing fits, no children anyway
    if common:
        l1_left = sum(r)
        bits = common
        while bits:
            j = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            if l1_left > r[j] * max_l1:
                return True
    return False


def decide_membership(
    X: GeneratorSet, q, cap: int = DEFAULT_EXPLOSION_CAP
) -> ConeWitness | None:
    """Find nonnegative integer multiplicities with sum q, or return None.

    Generators are tried in list order, zero generators are skipped, and
    the first accepting path found is returned as the witness.  Residuals
    proven hopeless are memoized; a residual is also discarded early when
    some single coordinate is unreachable even ignoring all the others.
    """
    q = tuple(int(v) for v in q)
    _check_dims(X, q)
    _require_nonnegative(X, q)
    d = len(q)
    zero = (0,) * d
    if q == zero:
        return {}
    gens = [p for p in X.points if any(p)]
    if not gens:
        return None
    reach = [_coordinate_reach([p[j] for p in gens], q[j]) for j in range(d)]
    if any(not reach[j][q[j]] for j in range(d)):
        return None

    gen_l1 = [sum(p) for p in gens]
    gen_touch = []
    for p in gens:
        mask = 0
        for j in range(d):
            if p[j]:
                mask |= 1 << j
        gen_touch.append(mask)
    all_coords = (1 << d) - 1

    failed: set[Point] = set()
    stack: list[list] = [[q, 0]]
    chosen: list[int] = []
    num_gens = len(gens)
    while stack:
        top = stack[-1]
        r, k = top
        if r == zero:
            witness: ConeWitness = {}
            for i in chosen:
                pt = gens[i]
                witness[pt] = witness.get(pt, 0) + 1
            return witness
        if k == 0 and _budget_dead(
            r, gens, gen_l1, gen_touch, all_coords, num_gens, d
        ):
            failed.add(r)
            if len(failed) > cap:
                raise ExplosionGuard(
                    f"residual memo exceeded cap of {cap} lattice points"
                )
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        pushed = False
        while k < num_gens:
            x = gens[k]
            k += 1
            fits = True
            for j in range(d):
                if x[j] > r[j]:
                    fits = False
                    break
            if not fits:
                continue
            r2 = tuple(r[j] - x[j] for j in range(d))
            if r2 in failed:
                continue
            alive = True
            for j in range(d):
                if not reach[j][r2[j]]:
                    alive = False
                    break
            if not alive:
                failed.add(r2)
                continue
            top[1] = k
            stack.append([r2, 0])
            chosen.append(k - 1)
            pushed = True
            break
        if not pushed:
            failed.add(r)
            if len(failed) > cap:
                raise ExplosionGuard(
                    f"residual memo exceeded cap of {cap} lattice points"
                )
            stack.pop()
            if chosen:
                chosen.pop()
    return None


def check_certificate(X: GeneratorSet, witness: ConeWitness, q) -> bool:
    """Exact evaluation of sum(lambda_x * x) == q; the trust anchor.

    Raises only on malformed input (keys outside X, dimension mismatch,
    negative multiplicities); on well-formed input it just answers.
    """
    q = tuple(int(v) for v in q)
    _check_dims(X, q)
    members = set(X.points)
    d = len(q)
    total = [0] * d
    for pt, lam in witness.items():
        pt = tuple(int(v) for v in pt)
        if pt not in members:
            raise ValueError(f"witness key {pt} is not a generator")
        if len(pt) != d:
            raise ValueError("witness key has wrong dimension")
        if lam < 0:
            raise ValueError("witness multiplicities must be nonnegative")
        for j in range(d):
            total[j] += lam * pt[j]
    return tuple(total) == q


def min_support(
    X: GeneratorSet, q, cap: int = DEFAULT_EXPLOSION_CAP
) -> tuple[int, ConeWitness] | None:
    """Smallest number of distinct generators that still reach q.

    Subsets are tried in increasing size, lexicographically by index
    within each size, so ties resolve deterministically.  Returns None
    exactly when the full set cannot reach q.
    """
    if len(X.points) > SUPPORT_SEARCH_LIMIT:
        raise SupportSearchTooLarge(
            f"{len(X.points)} generators exceed the subset-search limit "
            f"of {SUPPORT_SEARCH_LIMIT}"
        )
    if decide_membership(X, q, cap=cap) is None:
        return None
    for k in range(len(X.points) + 1):
        for subset in combinations(range(len(X.points)), k):
            restricted = GeneratorSet(tuple(X.points[i] for i in subset))
            witness = decide_membership(restricted, q, cap=cap)
            if witness is not None:
                return k, witness
    raise AssertionError("full generator set succeeded but no subset did")
