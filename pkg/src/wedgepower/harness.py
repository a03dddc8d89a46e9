"""Exhaustive verification of wedge-power convexity over small grids.

Enumerates every lattice-convex subset of a rectangular grid (up to
translation), runs the full battery of convexity checks on each, and
reduces the results to a summary whose violation list is expected to stay
empty: non-convex wedge powers may appear only for the exceptional
triangles, and only at subset sizes 2 and N-2.
"""

import multiprocessing
from dataclasses import dataclass, field
from typing import Optional

from .geometry import (
    BudgetError,
    DimensionError,
    Point,
    PointConfig,
    convex_hull_2d,
    exception_index,
    lattice_points_of_polytope,
    remove_vertex,
    vertex_set,
)
from .wedge import check_lattice_convex, wedge_power

GRID_CELL_BUDGET = 25


@dataclass(frozen=True)
class GridSpec:
    """The grid [0, width] x [0, height]; cell count is capped for enumeration."""

    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 0 or self.height < 0:
            raise ValueError("grid extents must be nonnegative")
        if self.cell_count > GRID_CELL_BUDGET:
            raise BudgetError(
                f"grid has {self.cell_count} cells, enumeration budget is {GRID_CELL_BUDGET}"
            )

    @property
    def cell_count(self) -> int:
        return (self.width + 1) * (self.height + 1)

    def cells(self) -> list[Point]:
        return [(x, y) for x in range(self.width + 1) for y in range(self.height + 1)]


def is_lattice_convex(config: PointConfig) -> bool:
    return check_lattice_convex(config).convex


def enumerate_lattice_convex(grid: GridSpec) -> list[PointConfig]:
    """All lattice-convex subsets of the grid, deduplicated by translation.

    Each subset is shifted so its coordinate-wise minimum sits at the
    origin before deduplication; the result is sorted by size and then by
    point list so runs are reproducible.
    """
    cells = grid.cells()
    seen: set[tuple[Point, ...]] = set()
    out: list[PointConfig] = []
    for mask in range(1, 1 << len(cells)):
        subset = [cells[i] for i in range(len(cells)) if mask >> i & 1]
        min_x = min(p[0] for p in subset)
        min_y = min(p[1] for p in subset)
        canon = tuple(sorted((p[0] - min_x, p[1] - min_y) for p in subset))
        if canon in seen:
            continue
        seen.add(canon)
        config = PointConfig(2, canon)
        if is_lattice_convex(config):
            out.append(config)
    out.sort(key=lambda c: (len(c), c.points))
    return out


def is_p_good(config: PointConfig, subset_size: int) -> Optional[Point]:
    """A common point of the size-``subset_size`` wedges of all one-vertex deletions.

    Returns the canonically smallest witness, or None when the intersection
    over the hull vertices is empty.
    """
    if len(config) < 2:
        raise ValueError("p-goodness needs at least two points")
    if not 1 <= subset_size <= len(config) - 1:
        raise ValueError("subset size must be between 1 and N-1")
    common: Optional[set[Point]] = None
    for v in vertex_set(config):
        wedge = set(wedge_power(remove_vertex(config, v), subset_size).points)
        common = wedge if common is None else common & wedge
        if not common:
            return None
    return min(common) if common else None


def _hull_lattice_points(config: PointConfig) -> set[Point]:
    if len(config) == 0:
        return set()
    return set(lattice_points_of_polytope(convex_hull_2d(config)).points)


def union_decomposition_holds(config: PointConfig, subset_size: int) -> bool:
    """Does the hull of the wedge decompose into the hulls of the deleted-vertex wedges?

    Checked at lattice level: every lattice point of conv of the full wedge
    must lie in conv of the wedge of some one-vertex deletion.
    """
    if not 1 <= subset_size <= len(config):
        raise ValueError("subset size must be between 1 and N")
    whole = _hull_lattice_points(wedge_power(config, subset_size))
    covered: set[Point] = set()
    for v in vertex_set(config):
        covered |= _hull_lattice_points(wedge_power(remove_vertex(config, v), subset_size))
        if whole <= covered:
            return True
    return whole <= covered


@dataclass(frozen=True)
class TheoremReport:
    """Convexity verdicts for one configuration across all subset sizes."""

    base: PointConfig
    count: int
    exception_k: Optional[int]
    per_size: tuple[tuple[int, bool, tuple[Point, ...]], ...]
    verdict: str  # "conforms" or "violates"

    @property
    def nonconvex_sizes(self) -> tuple[int, ...]:
        return tuple(p for p, convex, _ in self.per_size if not convex)

    def to_json(self) -> dict:
        return {
            "base": {"dim": self.base.dim, "points": [list(p) for p in self.base]},
            "count": self.count,
            "exception_k": self.exception_k,
            "per_p": [
                {"p": p, "convex": convex, "missing": [list(m) for m in missing]}
                for p, convex, missing in self.per_size
            ],
            "verdict": self.verdict,
        }


def verify_polygon(config: PointConfig) -> TheoremReport:
    """Check lattice-convexity of every wedge power of one configuration.

    Conforming behaviour is: convex everywhere for ordinary configurations,
    and non-convex exactly at sizes 2 and N-2 for configurations equivalent
    to an exceptional triangle.
    """
    if config.dim != 2:
        raise DimensionError("verify_polygon expects a planar configuration")
    n = len(config)
    per_size = []
    for p in range(n + 1):
        report = check_lattice_convex(wedge_power(config, p))
        per_size.append((p, report.convex, report.missing.points))
    k = exception_index(config)
    failures = {p for p, convex, _ in per_size if not convex}
    expected = {2, n - 2} if k is not None else set()
    verdict = "conforms" if failures == expected else "violates"
    return TheoremReport(config, n, k, tuple(per_size), verdict)


@dataclass(frozen=True)
class Violation:
    kind: str
    config: PointConfig
    subset_size: Optional[int] = None

    def to_json(self) -> dict:
        entry = {"kind": self.kind, "points": [list(p) for p in self.config]}
        if self.subset_size is not None:
            entry["p"] = self.subset_size
        return entry


@dataclass
class GridSummary:
    grid: GridSpec
    config_count: int
    violations: list[Violation] = field(default_factory=list)
    exceptions_seen: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "grid": [self.grid.width, self.grid.height],
            "configs": self.config_count,
            "violations": [v.to_json() for v in self.violations],
            "exceptions_seen": [
                {"k": k, "count": self.exceptions_seen[k]} for k in sorted(self.exceptions_seen)
            ],
        }


def _examine_config(config: PointConfig) -> tuple[PointConfig, Optional[int], list[tuple[str, Optional[int]]]]:
    problems: list[tuple[str, Optional[int]]] = []
    report = verify_polygon(config)
    if report.verdict != "conforms":
        problems.append(("wedge-convexity", None))
    n = len(config)
    for p in range(1, n // 2 + 1):
        good = is_p_good(config, p) is not None
        if n >= 5 and not good:
            problems.append(("not-p-good", p))
        if n >= 4 and good and not union_decomposition_holds(config, p):
            problems.append(("union-decomposition", p))
    return config, report.exception_k, problems


def verify_grid(grid: GridSpec, jobs: int = 1) -> GridSummary:
    """Run verify_polygon plus the goodness and decomposition checks over a grid.

    The per-configuration work is independent, so it can be spread over
    worker processes; the summary does not depend on the worker count.
    """
    configs = enumerate_lattice_convex(grid)
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_examine_config, configs)
    else:
        results = [_examine_config(c) for c in configs]

    summary = GridSummary(grid, len(configs))
    for config, k, problems in sorted(results, key=lambda r: (len(r[0]), r[0].points)):
        if k is not None:
            summary.exceptions_seen[k] = summary.exceptions_seen.get(k, 0) + 1
        for kind, p in problems:
            summary.violations.append(Violation(kind, config, p))
    return summary
