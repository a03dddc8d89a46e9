"""Convexity of wedge powers fails in three dimensions: an explicit witness.

The 84 lattice points of the simplex x + y + z <= 6 split under the linear
form 5x + 4y + 7z into 40 points below level 25, 40 above, and 4 exactly on
it.  The four level-25 points are a planar configuration whose pairwise
sums miss the doubled centre point, and that gap survives into the full
42-fold wedge power: the sum of the 40 low points plus twice the centre
lies in the hull of the wedge but not in the wedge itself.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .geometry import LinearFunctional, Point, PointConfig, _xgcd
from .wedge import SubsetSumTable

SIMPLEX_SCALE = 6
WEDGE_DEPTH = 42
LEVEL_COEFFS = (5, 4, 7)
LEVEL_VALUE = 25
LEVEL_POINTS = ((5, 0, 0), (1, 5, 0), (2, 2, 1), (0, 1, 3))


@dataclass(frozen=True)
class ColoredSimplex:
    """The 84-point simplex with its three-way split along the level plane."""

    points: PointConfig
    functional: LinearFunctional
    level: int
    low: PointConfig       # functional value below the level
    high: PointConfig      # above
    on_level: PointConfig  # exactly on it

    @property
    def plane_center(self) -> Point:
        """The on-level point that is the average of all four."""
        total = self.on_level.total()
        assert all(c % 4 == 0 for c in total)
        center = tuple(c // 4 for c in total)
        assert center in self.on_level
        return center

    @property
    def outer_triple(self) -> tuple[Point, ...]:
        return tuple(p for p in self.on_level if p != self.plane_center)


def _primitive_normal(a: Point, b: Point, c: Point) -> tuple[int, ...]:
    u = tuple(y - x for x, y in zip(a, b))
    v = tuple(y - x for x, y in zip(a, c))
    n = (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
    g = math.gcd(*(abs(x) for x in n))
    n = tuple(x // g for x in n)
    return n if n > (0, 0, 0) else tuple(-x for x in n)


def build_colored_simplex() -> ColoredSimplex:
    """Construct and cross-check the colored simplex.

    The separating form is rederived from the frozen on-level points (it is
    the primitive normal of their plane) before the split is made, and the
    split must reproduce those points and the 40/40/4 counts exactly.
    """
    points = PointConfig.of(
        [
            (x, y, z)
            for x in range(SIMPLEX_SCALE + 1)
            for y in range(SIMPLEX_SCALE + 1 - x)
            for z in range(SIMPLEX_SCALE + 1 - x - y)
        ]
    )
    if len(points) != 84:
        raise RuntimeError(f"simplex has {len(points)} points, expected 84")

    p1, p2, _, p4 = LEVEL_POINTS
    normal = _primitive_normal(p1, p2, p4)
    if normal != LEVEL_COEFFS:
        raise RuntimeError(f"plane normal {normal} does not match {LEVEL_COEFFS}")
    functional = LinearFunctional(LEVEL_COEFFS)
    if any(functional(p) != LEVEL_VALUE for p in LEVEL_POINTS):
        raise RuntimeError("a frozen on-level point is off the plane")

    low = PointConfig.of([p for p in points if functional(p) < LEVEL_VALUE])
    high = PointConfig.of([p for p in points if functional(p) > LEVEL_VALUE])
    on_level = PointConfig.of([p for p in points if functional(p) == LEVEL_VALUE])
    if (len(low), len(high), len(on_level)) != (40, 40, 4):
        raise RuntimeError(
            f"split counts {(len(low), len(high), len(on_level))} are not (40, 40, 4)"
        )
    if set(on_level.points) != set(LEVEL_POINTS):
        raise RuntimeError("on-level points differ from the frozen four")
    total = on_level.total()
    center = tuple(c // 4 for c in total)
    if any(c % 4 for c in total) or center not in on_level:
        raise RuntimeError("the on-level points do not average to one of them")
    return ColoredSimplex(points, functional, LEVEL_VALUE, low, high, on_level)


def witness_point(simplex: ColoredSimplex) -> Point:
    """Sum of the 40 low points plus twice the plane centre."""
    low_sum = simplex.low.total()
    center = simplex.plane_center
    return tuple(s + 2 * c for s, c in zip(low_sum, center))


@lru_cache(maxsize=1)
def _default_wedge_table() -> SubsetSumTable:
    simplex = build_colored_simplex()
    return SubsetSumTable(simplex.points.points, WEDGE_DEPTH)


@dataclass(frozen=True)
class Counterexample3DReport:
    counts: tuple[int, int, int]
    witness: Point
    witness_in_wedge: bool
    witness_in_hull: bool
    wedge_size: int
    slice_points: tuple[Point, ...]
    min_level_attained: int
    witness_level: int
    digest: str

    @property
    def holds(self) -> bool:
        """True when every expected assertion about the witness checks out."""
        return (
            self.counts == (40, 40, 4)
            and not self.witness_in_wedge
            and self.witness_in_hull
            and len(self.slice_points) == 6
            and self.min_level_attained == self.witness_level
        )

    def to_json(self) -> dict:
        return {
            "counts": list(self.counts),
            "witness": list(self.witness),
            "witness_in_wedge": self.witness_in_wedge,
            "witness_in_hull": self.witness_in_hull,
            "slice_size": len(self.slice_points),
            "min_level_attained": self.min_level_attained,
            "wedge_size": self.wedge_size,
            "digest": self.digest,
        }


def verify_counterexample(
    simplex: Optional[ColoredSimplex] = None,
    table: Optional[SubsetSumTable] = None,
) -> Counterexample3DReport:
    """Run the full 42-fold wedge computation and check the witness claims.

    The hull membership of the witness is certified without any linear
    programming: the witness is one third of the sum of three wedge members
    (low sum plus each pair from the outer on-level triple), and that
    identity is checked in exact integers.
    """
    if simplex is None:
        simplex = build_colored_simplex()
        if table is None:
            table = _default_wedge_table()
    if table is None:
        table = SubsetSumTable(simplex.points.points, WEDGE_DEPTH)

    witness = witness_point(simplex)
    functional = simplex.functional
    in_wedge = table.contains(WEDGE_DEPTH, witness)

    low_sum = simplex.low.total()
    generators = []
    for a, b in itertools.combinations(simplex.outer_triple, 2):
        g = tuple(s + x + y for s, x, y in zip(low_sum, a, b))
        if not table.contains(WEDGE_DEPTH, g):
            raise RuntimeError(f"expected wedge member {g} is missing")
        generators.append(g)
    combined = tuple(sum(cs) for cs in zip(*generators))
    in_hull = combined == tuple(3 * c for c in witness)

    coords = table.coords(WEDGE_DEPTH)
    values = coords @ np.asarray(functional.coeffs, dtype=np.int64)
    min_level = int(values.min())
    slice_rows = coords[values == min_level]
    slice_points = tuple(sorted(tuple(int(c) for c in row) for row in slice_rows))

    return Counterexample3DReport(
        counts=(len(simplex.low), len(simplex.high), len(simplex.on_level)),
        witness=witness,
        witness_in_wedge=in_wedge,
        witness_in_hull=in_hull,
        wedge_size=table.count(WEDGE_DEPTH),
        slice_points=slice_points,
        min_level_attained=min_level,
        witness_level=functional(witness),
        digest=table.digest(WEDGE_DEPTH),
    )


def quadrant_points_below(functional: LinearFunctional, cap: int) -> PointConfig:
    """All points of the nonnegative octant with functional value at most ``cap``.

    Strictly positive coefficients keep the answer finite.
    """
    coeffs = functional.coeffs
    if len(coeffs) != 3:
        raise ValueError("expected a functional on three coordinates")
    if any(c <= 0 for c in coeffs):
        raise ValueError("all coefficients must be strictly positive")
    if cap < 0:
        return PointConfig.of([], dim=3)
    a, b, c = coeffs
    points = [
        (x, y, z)
        for x in range(cap // a + 1)
        for y in range((cap - a * x) // b + 1)
        for z in range((cap - a * x - b * y) // c + 1)
    ]
    return PointConfig.of(points, dim=3)


def plane_coordinates(config: PointConfig) -> PointConfig:
    """Two-dimensional lattice coordinates of a coplanar 3D configuration.

    The points must span a genuine plane.  A basis of that plane's
    intersection with the integer lattice is computed from its primitive
    normal, so the resulting planar configuration is unimodularly faithful:
    lattice points of the plane correspond exactly to integer pairs.
    """
    pts = config.points
    if config.dim != 3 or len(pts) < 3:
        raise ValueError("need at least three points in ambient dimension 3")
    base = pts[0]
    normal = None
    for b, c in itertools.combinations(pts[1:], 2):
        u = tuple(y - x for x, y in zip(base, b))
        v = tuple(y - x for x, y in zip(base, c))
        n = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        if any(n):
            g = math.gcd(*(abs(x) for x in n))
            normal = tuple(x // g for x in n)
            break
    if normal is None:
        raise ValueError("points are collinear, not a plane")
    level = sum(n * c for n, c in zip(normal, base))
    if any(sum(n * c for n, c in zip(normal, p)) != level for p in pts):
        raise ValueError("points are not coplanar")

    basis = _kernel_basis(normal)
    coords = []
    for p in pts:
        diff = tuple(y - x for x, y in zip(base, p))
        coords.append(_solve_in_basis(basis, diff))
    return PointConfig.of(coords, dim=2)


def _kernel_basis(normal: Sequence[int]) -> tuple[Point, Point]:
    """A lattice basis of {v in Z^3 : normal . v = 0} for a primitive normal."""
    g01, x, y = _xgcd(normal[0], normal[1])
    g, s, t = _xgcd(g01, normal[2])
    assert g == 1, "normal must be primitive"
    pivot = (s * x, s * y, t)  # functional value 1
    images = []
    for i in range(3):
        e = tuple(int(i == j) for j in range(3))
        w = tuple(ec - normal[i] * pc for ec, pc in zip(e, pivot))
        images.append(w)
    # reduce the three spanning vectors to two by integer row elimination;
    # row operations preserve the lattice they generate
    rows = [list(w) for w in images]
    basis: list[Point] = []
    for col in range(3):
        nonzero = [r for r in rows if r[col] != 0]
        if not nonzero:
            continue
        while len(nonzero) > 1:
            nonzero.sort(key=lambda r: abs(r[col]))
            lead = nonzero[0]
            for r in nonzero[1:]:
                q = r[col] // lead[col]
                for j in range(3):
                    r[j] -= q * lead[j]
            nonzero = [r for r in nonzero if r[col] != 0]
        lead = nonzero[0]
        basis.append(tuple(lead))
        rows = [r for r in rows if r is not lead and any(r)]
        if len(basis) == 2:
            break
    assert len(basis) == 2
    return basis[0], basis[1]


def _solve_in_basis(basis: tuple[Point, Point], target: Point) -> Point:
    """Integer (a, b) with a * basis[0] + b * basis[1] == target."""
    v1, v2 = basis
    for i, j in itertools.combinations(range(3), 2):
        det = v1[i] * v2[j] - v1[j] * v2[i]
        if det == 0:
            continue
        a_num = target[i] * v2[j] - target[j] * v2[i]
        b_num = v1[i] * target[j] - v1[j] * target[i]
        if a_num % det or b_num % det:
            raise ValueError(f"{target} is not a lattice combination of the basis")
        a, b = a_num // det, b_num // det
        if all(a * x + b * y == t for x, y, t in zip(v1, v2, target)):
            return (a, b)
        raise ValueError(f"{target} is outside the plane lattice")
    raise ValueError("degenerate basis")
