"""Corner-cut verification: sums of d distinct quadrant points stay lattice-convex.

The nonnegative quadrant is truncated to the staircase triangle x + y <= B,
which is lattice-convex and, for B >= 2, contains the unit square, so it is
never one of the exceptional triangles.  Convexity of its d-th wedge power
then certifies that every lattice point of that wedge's hull is a sum of d
distinct quadrant points.
"""

from .geometry import PointConfig
from .wedge import ConvexityReport, check_lattice_convex, wedge_power


def truncated_quadrant(bound: int) -> PointConfig:
    """All (x, y) with x, y >= 0 and x + y <= bound."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    points = [(x, y) for x in range(bound + 1) for y in range(bound + 1 - x)]
    assert len(points) == (bound + 1) * (bound + 2) // 2
    return PointConfig.of(points, dim=2)


def verify_corner_cut(subset_size: int, bound: int) -> ConvexityReport:
    """Lattice-convexity of the ``subset_size``-th wedge power of the truncation.

    Requires bound >= 2 so the truncation contains the unit square, keeping
    it clear of the exceptional family.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    quadrant = truncated_quadrant(bound)
    if not 1 <= subset_size <= len(quadrant):
        raise ValueError(
            f"subset size must be between 1 and {len(quadrant)} for bound {bound}"
        )
    wedge = wedge_power(quadrant, subset_size)
    return check_lattice_convex(wedge)
