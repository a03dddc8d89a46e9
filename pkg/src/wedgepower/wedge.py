"""Sums of fixed-size subsets of a lattice point set, computed exactly.

The workhorse is a layered subset-sum table: layer c holds a bitset over a
dense integer box marking every sum of c distinct points seen so far.
Feeding one point at a time and updating layers from the top down keeps
each point to a single use, and the whole update is one shifted OR on a big
integer, so the inner loop is bit-parallel.  A naive oracle that walks all
C(N, p) subsets backs it up at small sizes.
"""

import hashlib
import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

import numpy as np

from .geometry import (
    BudgetError,
    DimensionError,
    Point,
    PointConfig,
    convex_hull_2d,
    lattice_points_of_polytope,
)

NAIVE_SUBSET_LIMIT = 10_000_000


class SubsetSumTable:
    """Exactly-c subset sums of an integer point set, for all c up to ``depth``.

    Points are flattened into a dense box whose side in each coordinate is
    [min(0, depth * lo), max(0, depth * hi)], where [lo, hi] is the range of
    that coordinate over the input; the box therefore contains every sum of
    at most ``depth`` distinct points, so a shifted OR can never alias a bit
    into a neighbouring row.  Layer bitsets live in arbitrary-precision
    integers: shifting by a point's flattened offset adds that point to
    every sum of the layer below in one operation.
    """

    def __init__(self, points: Sequence[Point], depth: int, dim: Optional[int] = None):
        points = list(points)
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        if depth > len(points):
            raise ValueError("depth cannot exceed the number of points")
        if dim is None:
            if not points:
                raise ValueError("dimension required for an empty point list")
            dim = len(points[0])
        self.dim = dim
        self.depth = depth
        if points:
            lows = [min(p[d] for p in points) for d in range(self.dim)]
            highs = [max(p[d] for p in points) for d in range(self.dim)]
        else:
            lows = highs = [0] * self.dim
        self.box_lo = tuple(min(0, depth * lo) for lo in lows)
        self.box_hi = tuple(max(0, depth * hi) for hi in highs)
        shape = [hi - lo + 1 for lo, hi in zip(self.box_lo, self.box_hi)]
        strides = [1] * self.dim
        for d in range(1, self.dim):
            strides[d] = strides[d - 1] * shape[d - 1]
        self._shape = tuple(shape)
        self._strides = tuple(strides)
        self.total_cells = strides[-1] * shape[-1]

        layers = [0] * (depth + 1)
        layers[0] = 1 << self._flatten((0,) * self.dim)
        for seen, point in enumerate(points, start=1):
            offset = sum(c * s for c, s in zip(point, self._strides))
            for c in range(min(seen, depth), 0, -1):
                below = layers[c - 1]
                if below:
                    layers[c] |= (below << offset) if offset >= 0 else (below >> -offset)
        self._layers = layers

    def _flatten(self, point: Point) -> int:
        return sum((c - lo) * s for c, lo, s in zip(point, self.box_lo, self._strides))

    def _in_box(self, point: Sequence[int]) -> bool:
        return all(lo <= c <= hi for c, lo, hi in zip(point, self.box_lo, self.box_hi))

    def contains(self, size: int, point: Sequence[int]) -> bool:
        """Is ``point`` a sum of exactly ``size`` distinct input points?"""
        if not 0 <= size <= self.depth:
            return False
        pt = tuple(point)
        if not self._in_box(pt):
            return False
        return bool((self._layers[size] >> self._flatten(pt)) & 1)

    def count(self, size: int) -> int:
        return self._layers[size].bit_count()

    def coords(self, size: int) -> np.ndarray:
        """All sums of ``size`` distinct points as an (n, dim) int64 array."""
        nbytes = (self.total_cells + 7) // 8
        raw = self._layers[size].to_bytes(nbytes, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        flat = np.flatnonzero(bits[: self.total_cells]).astype(np.int64)
        out = np.empty((flat.size, self.dim), dtype=np.int64)
        for d in range(self.dim - 1, -1, -1):
            out[:, d], flat = np.divmod(flat, self._strides[d])
        for d in range(self.dim):
            out[:, d] += self.box_lo[d]
        return out

    def points_at(self, size: int) -> list[Point]:
        return [tuple(int(c) for c in row) for row in self.coords(size)]

    def digest(self, size: int) -> str:
        """Stable fingerprint of one layer, for regression comparisons."""
        h = hashlib.sha256()
        h.update(repr((self.dim, self.box_lo, self.box_hi, size)).encode())
        nbytes = (self.total_cells + 7) // 8
        h.update(self._layers[size].to_bytes(nbytes, "little"))
        return h.hexdigest()


def wedge_in_range(base: PointConfig, subset_size: int) -> bool:
    """Whether any subset of the requested size exists at all."""
    return 0 <= subset_size <= len(base)


def wedge_power(base: PointConfig, subset_size: int, method: str = "dp") -> PointConfig:
    """The set of sums of all ``subset_size``-element subsets of ``base``.

    Out-of-range sizes give the empty configuration (there are no such
    subsets); size 0 gives the origin, the empty sum.  The two methods are
    interchangeable: "dp" runs the layered bitset table, "naive" enumerates
    subsets directly and refuses beyond NAIVE_SUBSET_LIMIT of them.
    """
    if not wedge_in_range(base, subset_size):
        return PointConfig.of([], dim=base.dim)
    if method == "dp":
        table = SubsetSumTable(base.points, subset_size, dim=base.dim)
        return PointConfig.of(table.points_at(subset_size), dim=base.dim)
    if method == "naive":
        n_subsets = comb(len(base), subset_size)
        if n_subsets > NAIVE_SUBSET_LIMIT:
            raise BudgetError(
                f"naive method would enumerate {n_subsets} subsets "
                f"(limit {NAIVE_SUBSET_LIMIT}); use method='dp'"
            )
        zero = (0,) * base.dim
        sums = {
            tuple(map(sum, zip(zero, *combo)))
            for combo in itertools.combinations(base.points, subset_size)
        }
        return PointConfig.of(sums, dim=base.dim)
    raise ValueError(f"unknown method {method!r}, expected 'dp' or 'naive'")


@dataclass(frozen=True)
class ConvexityReport:
    """Outcome of a lattice-convexity check.

    ``missing`` lists the lattice points of the hull that the set does not
    contain; the set is lattice-convex exactly when it is empty.
    """

    convex: bool
    missing: PointConfig
    cardinality: int

    def to_json(self) -> dict:
        return {
            "convex": self.convex,
            "missing": [list(p) for p in self.missing],
            "cardinality": self.cardinality,
        }


def check_lattice_convex(config: PointConfig) -> ConvexityReport:
    """Is the set exactly the lattice points of its own convex hull?"""
    if config.dim > 2:
        raise DimensionError(
            "lattice-convexity decisions are limited to dimension <= 2; "
            "dimension 3 failures are established by explicit witness points"
        )
    if len(config) == 0:
        raise ValueError("cannot check an empty configuration")
    if config.dim == 1:
        lo, hi = config.points[0][0], config.points[-1][0]
        hull_points = PointConfig.of([(x,) for x in range(lo, hi + 1)], dim=1)
    else:
        hull_points = lattice_points_of_polytope(convex_hull_2d(config))
    present = set(config.points)
    missing = PointConfig.of([p for p in hull_points if p not in present], dim=config.dim)
    return ConvexityReport(len(missing) == 0, missing, len(config))


def reflect_complement(base: PointConfig, subset_size: int) -> PointConfig:
    """Sums of (N - size)-subsets, computed by reflecting the size-subsets.

    Choosing which points to leave out instead of which to keep reflects
    every sum through the total of the whole configuration.
    """
    pivot = base.total()
    wedge = wedge_power(base, subset_size)
    return PointConfig.of(
        (tuple(t - c for t, c in zip(pivot, p)) for p in wedge), dim=base.dim
    )
