"""H-representation polytopes over the integers.

Exact membership tests, bounding boxes by interval propagation, and
complete lattice-point enumeration by pruned depth-first search.  All
arithmetic is on Python ints, so coefficients of any magnitude are fine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DEFAULT_EXPLOSION_CAP, BoxUnderivable, ExplosionGuard

Point = tuple[int, ...]


@dataclass(frozen=True)
class Polytope:
    """The set {x : Ax <= b} for an integer matrix A and vector b."""

    A: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.A)
        rhs = tuple(int(v) for v in self.b)
        object.__setattr__(self, "A", rows)
        object.__setattr__(self, "b", rhs)
        if not rows:
            raise ValueError("polytope needs at least one row")
        d = len(rows[0])
        if d < 1:
            raise ValueError("polytope needs at least one column")
        if any(len(row) != d for row in rows):
            raise ValueError("all rows of A must have the same length")
        if len(rhs) != len(rows):
            raise ValueError("b must have one entry per row of A")

    @property
    def num_rows(self) -> int:
        return len(self.A)

    @property
    def dim(self) -> int:
        return len(self.A[0])


@dataclass(frozen=True)
class Box:
    """Componentwise integer bounds; `empty` flags a lattice-point-free set."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]
    empty: bool = False

    @property
    def radius(self) -> int:
        """Largest absolute coordinate bound, 0 for an empty box."""
        if self.empty:
            return 0
        return max(max(abs(lo), abs(hi)) for lo, hi in zip(self.lower, self.upper))

    @property
    def volume(self) -> int:
        if self.empty:
            return 0
        v = 1
        for lo, hi in zip(self.lower, self.upper):
            v *= hi - lo + 1
        return v


def contains(p: Polytope, x) -> bool:
    """Exact test of every inequality against an integer point."""
    if len(x) != p.dim:
        raise ValueError(f"point has dimension {len(x)}, polytope has {p.dim}")
    return all(
        sum(c * v for c, v in zip(row, x)) <= beta for row, beta in zip(p.A, p.b)
    )


def bounding_box(p: Polytope) -> Box:
    """Derive an integer box containing every lattice point of `p`.

    Pure interval propagation: each row is solved for one variable against
    the current bounds of the others, iterated to a fixed point (capped at
    dim * num_rows rounds).  No LP is involved, so a polytope whose bounds
    are not syntactically recoverable raises BoxUnderivable.
    """
    d = p.dim
    lower: list[int | None] = [None] * d
    upper: list[int | None] = [None] * d
    for _ in range(d * p.num_rows):
        changed = False
        for row, beta in zip(p.A, p.b):
            support = [j for j in range(d) if row[j]]
            for k in support:
                rest = 0
                known = True
                for j in support:
                    if j == k:
                        continue
                    c = row[j]
                    bound = lower[j] if c > 0 else upper[j]
                    if bound is None:
                        known = False
                        break
                    rest += c * bound
                if not known:
                    continue
                c = row[k]
                slack = beta - rest
                if c > 0:
                    hi = slack // c
                    if upper[k] is None or hi < upper[k]:
                        upper[k] = hi
                        changed = True
                else:
                    lo = -(slack // -c)
                    if lower[k] is None or lo > lower[k]:
                        lower[k] = lo
                        changed = True
                if lower[k] is not None and upper[k] is not None and lower[k] > upper[k]:
                    return Box((0,) * d, (-1,) * d, empty=True)
        if not changed:
            break
    if any(v is None for v in lower) or any(v is None for v in upper):
        raise BoxUnderivable("some coordinate has no derivable finite bound")
    return Box(tuple(lower), tuple(upper))  # type: ignore[arg-type]


def integer_points(p: Polytope, cap: int = DEFAULT_EXPLOSION_CAP) -> list[Point]:
    """All lattice points of `p`, in lexicographic order.

    Coordinates are assigned depth-first in index order; a branch dies as
    soon as some row cannot be satisfied even by the most favourable
    completion within the bounding box.
    """
    box = bounding_box(p)
    if box.empty:
        return []
    if box.volume > cap:
        raise ExplosionGuard(f"bounding box holds {box.volume} points, cap is {cap}")
    d, m = p.dim, p.num_rows
    A, b = p.A, p.b
    lo, hi = box.lower, box.upper

    # best[r][k]: least value row r's coordinates k.. can still contribute
    best = [[0] * (d + 1) for _ in range(m)]
    for r in range(m):
        for k in range(d - 1, -1, -1):
            c = A[r][k]
            best[r][k] = best[r][k + 1] + min(c * lo[k], c * hi[k])

    out: list[Point] = []
    x = [0] * d
    fixed = [0] * m

    def descend(k: int) -> None:
        if k == d:
            out.append(tuple(x))
            return
        for v in range(lo[k], hi[k] + 1):
            x[k] = v
            for r in range(m):
                fixed[r] += A[r][k] * v
            if all(fixed[r] + best[r][k + 1] <= b[r] for r in range(m)):
                descend(k + 1)
            for r in range(m):
                fixed[r] -= A[r][k] * v

    descend(0)
    return out
