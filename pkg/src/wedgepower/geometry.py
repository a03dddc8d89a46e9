"""Exact integer geometry for lattice point sets in dimensions 1 to 3.

Everything here runs on plain Python integers and fractions: orientation
predicates are exact cross products, polygon scanlines intersect edges in
rational arithmetic, and hull membership is decided by an exact rational
feasibility test.  No floating point anywhere.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

Point = tuple[int, ...]


class DimensionError(ValueError):
    """Mismatched or unsupported ambient dimension."""


class BudgetError(RuntimeError):
    """A guarded operation would exceed its enumeration or memory budget."""


def _as_point(value: Iterable[int]) -> Point:
    pt = tuple(value)
    for c in pt:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"lattice point coordinates must be integers, got {c!r}")
    return pt


@dataclass(frozen=True)
class PointConfig:
    """A finite set of lattice points of one dimension, kept sorted and deduplicated.

    Equality is structural: two configurations are equal exactly when they
    contain the same points in the same ambient dimension.
    """

    dim: int
    points: tuple[Point, ...]

    @classmethod
    def of(cls, points: Iterable[Iterable[int]], dim: Optional[int] = None) -> "PointConfig":
        pts = sorted({_as_point(p) for p in points})
        if pts:
            inferred = len(pts[0])
            if dim is None:
                dim = inferred
            for p in pts:
                if len(p) != dim:
                    raise DimensionError(f"point {p} has dimension {len(p)}, expected {dim}")
        elif dim is None:
            raise DimensionError("an empty configuration needs an explicit dimension")
        if dim not in (1, 2, 3):
            raise DimensionError(f"ambient dimension must be 1, 2 or 3, got {dim}")
        return cls(dim, tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return point in set(self.points)

    def total(self) -> Point:
        """Coordinate-wise sum of all points (the reflection pivot for complements)."""
        return tuple(sum(c) for c in zip(*self.points)) if self.points else (0,) * self.dim

    def translate(self, offset: Sequence[int]) -> "PointConfig":
        off = _as_point(offset)
        if len(off) != self.dim:
            raise DimensionError("translation vector has wrong dimension")
        return PointConfig(self.dim, tuple(tuple(a + b for a, b in zip(p, off)) for p in self.points))


@dataclass(frozen=True)
class Polytope:
    """Convex hull description.

    For ``dim_intrinsic == 2`` the vertices run counterclockwise with no
    three collinear; for 1 they are the two endpoints; for 0 a single point.
    Ambient dimension 3 carries a plain vertex cloud.
    """

    dim_ambient: int
    dim_intrinsic: int
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        if not self.vertices or any(len(v) != self.dim_ambient for v in self.vertices):
            raise ValueError("vertices must be nonempty and match the ambient dimension")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices must be pairwise distinct")
        if self.dim_intrinsic == 0 and len(self.vertices) != 1:
            raise ValueError("a zero-dimensional polytope has exactly one vertex")
        if self.dim_intrinsic == 1 and len(self.vertices) != 2:
            raise ValueError("a segment has exactly two vertices")
        if self.dim_intrinsic == 2:
            ring = self.vertices
            if len(ring) < 3 or any(
                cross(ring[i - 2], ring[i - 1], ring[i]) <= 0 for i in range(len(ring))
            ):
                raise ValueError("two-dimensional vertices must turn strictly left, counterclockwise")


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> matrix @ x + translation with an integer matrix of determinant +-1.

    Such maps are exactly the affine bijections of the integer lattice.
    """

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.matrix)
        if n == 0 or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix must be square and nonempty")
        if len(self.translation) != n:
            raise ValueError("translation length must match matrix size")
        for value in (*self.translation, *(c for row in self.matrix for c in row)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"map entries must be integers, got {value!r}")
        if self.det not in (1, -1):
            raise ValueError(f"matrix determinant must be +1 or -1, got {self.det}")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> int:
        return _det(self.matrix)

    @classmethod
    def identity(cls, dim: int) -> "AffineUnimodularMap":
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)), (0,) * dim)

    @classmethod
    def from_translation(cls, offset: Sequence[int]) -> "AffineUnimodularMap":
        off = _as_point(offset)
        return cls(tuple(tuple(int(i == j) for j in range(len(off))) for i in range(len(off))), off)

    def apply(self, point: Sequence[int]) -> Point:
        pt = tuple(point)
        if len(pt) != self.dim:
            raise DimensionError("point dimension does not match map")
        return tuple(sum(row[j] * pt[j] for j in range(self.dim)) + t for row, t in zip(self.matrix, self.translation))

    def compose(self, inner: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """The map ``self(inner(x))``."""
        if inner.dim != self.dim:
            raise DimensionError("cannot compose maps of different dimensions")
        n = self.dim
        mat = tuple(
            tuple(sum(self.matrix[i][k] * inner.matrix[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return AffineUnimodularMap(mat, self.apply(inner.translation))

    def inverse(self) -> "AffineUnimodularMap":
        d = self.det
        adj = _adjugate(self.matrix)
        inv = tuple(tuple(v // d for v in row) for row in adj)
        shift = tuple(-sum(inv[i][j] * self.translation[j] for j in range(self.dim)) for i in range(self.dim))
        return AffineUnimodularMap(inv, shift)


@dataclass(frozen=True)
class LinearFunctional:
    """Integer linear form; calling it evaluates the dot product."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or not any(self.coeffs):
            raise ValueError("functional coefficients must not all be zero")

    def __call__(self, point: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, point))


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of the triangle (o, a, b); positive means a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _det(matrix: Sequence[Sequence[int]]) -> int:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    if n == 3:
        m = matrix
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    raise DimensionError("determinants supported up to 3x3")


def _adjugate(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(matrix)
    if n == 1:
        return ((1,),)
    if n == 2:
        (a, b), (c, d) = matrix
        return ((d, -b), (-c, a))
    if n == 3:
        m = matrix
        cof = [
            [
                m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
                - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3]
                for i in range(3)
            ]
            for j in range(3)
        ]
        return tuple(tuple(row) for row in cof)
    raise DimensionError("adjugates supported up to 3x3")


def convex_hull_2d(config: PointConfig) -> Polytope:
    """Strict convex hull of a planar configuration via the monotone chain.

    The result never keeps collinear hull points: a segment reports only its
    endpoints, a polygon only its corners, in counterclockwise order.
    """
    if config.dim != 2:
        raise DimensionError(f"convex_hull_2d needs dim 2, got dim {config.dim}")
    pts = list(config.points)
    if not pts:
        raise ValueError("cannot take the hull of an empty configuration")
    if len(pts) == 1:
        return Polytope(2, 0, (pts[0],))

    lower: list[Point] = []
    for p in pts:
        while len(lower) > 1 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) > 1 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 2 or all(cross(ring[0], ring[1], q) == 0 for q in ring[2:]):
        return Polytope(2, 1, (pts[0], pts[-1]))
    return Polytope(2, 2, tuple(ring))


def _segment_lattice_points(a: Point, b: Point) -> list[Point]:
    if a == b:
        return [a]
    diff = tuple(y - x for x, y in zip(a, b))
    g = math.gcd(*(abs(d) for d in diff))
    step = tuple(d // g for d in diff)
    return [tuple(x + t * s for x, s in zip(a, step)) for t in range(g + 1)]


def lattice_points_of_polytope(poly: Polytope) -> PointConfig:
    """All integer points inside or on the polytope, for ambient dimension <= 2.

    Two-dimensional hulls are scanned row by row; the x-interval of each row
    comes from exact rational edge intersections.
    """
    if poly.dim_ambient > 2:
        raise DimensionError(
            "lattice point enumeration is limited to ambient dimension <= 2; "
            "use point_in_hull for membership queries in dimension 3"
        )
    if poly.dim_intrinsic == 0:
        return PointConfig.of(poly.vertices, dim=poly.dim_ambient)
    if poly.dim_intrinsic == 1:
        a, b = poly.vertices
        return PointConfig.of(_segment_lattice_points(a, b), dim=poly.dim_ambient)

    verts = poly.vertices
    ys = [v[1] for v in verts]
    out: list[Point] = []
    for y in range(min(ys), max(ys) + 1):
        xs: list[Fraction] = []
        for a, b in zip(verts, verts[1:] + verts[:1]):
            y0, y1 = a[1], b[1]
            if y0 == y1:
                if y0 == y:
                    xs.append(Fraction(a[0]))
                    xs.append(Fraction(b[0]))
                continue
            if min(y0, y1) <= y <= max(y0, y1):
                xs.append(Fraction(a[0]) + Fraction((y - y0) * (b[0] - a[0]), y1 - y0))
        lo = math.ceil(min(xs))
        hi = math.floor(max(xs))
        out.extend((x, y) for x in range(lo, hi + 1))
    return PointConfig.of(out, dim=2)


def vertex_set(config: PointConfig) -> PointConfig:
    """The extremal points of conv(config): those not in the hull of the others."""
    if len(config) == 0:
        raise ValueError("vertex_set needs a nonempty configuration")
    if config.dim == 1:
        lo, hi = config.points[0], config.points[-1]
        return PointConfig.of({lo, hi}, dim=1)
    if config.dim == 2:
        return PointConfig.of(convex_hull_2d(config).vertices, dim=2)
    extremal = [
        p for p in config
        if len(config) == 1
        or not point_in_hull(PointConfig.of([q for q in config if q != p], dim=3), p)
    ]
    return PointConfig.of(extremal, dim=3)


def remove_vertex(config: PointConfig, vertex: Sequence[int]) -> PointConfig:
    """Drop one extremal point; rejects interior or absent points.

    Because the removed point is extremal, the remaining points are exactly
    the lattice points of their own hull whenever the input was.
    """
    v = _as_point(vertex)
    if v not in vertex_set(config):
        raise ValueError(f"{v} is not a vertex of the configuration")
    return PointConfig(config.dim, tuple(p for p in config.points if p != v))


def apply_map(transform: AffineUnimodularMap, config: PointConfig) -> PointConfig:
    if transform.dim != config.dim:
        raise DimensionError("map and configuration dimensions differ")
    return PointConfig.of((transform.apply(p) for p in config.points), dim=config.dim)


def _first_independent_triple(points: Sequence[Point]) -> Optional[tuple[Point, Point, Point]]:
    if len(points) < 3:
        return None
    a, b = points[0], points[1]
    for c in points[2:]:
        if cross(a, b, c) != 0:
            return (a, b, c)
    return None


def _line_parameters(points: Sequence[Point]) -> tuple[Point, Point, list[int]]:
    """Affine coordinates of collinear points: base point, primitive step, sorted offsets."""
    base = points[0]
    other = next(p for p in points if p != base)
    diff = tuple(b - a for a, b in zip(base, other))
    g = math.gcd(*(abs(d) for d in diff))
    step = tuple(d // g for d in diff)
    axis = 0 if step[0] != 0 else 1
    params = sorted((p[axis] - base[axis]) // step[axis] for p in points)
    origin = tuple(b + params[0] * s for b, s in zip(base, step))
    return origin, step, [t - params[0] for t in params]


def _line_frame(origin: Point, step: Point) -> AffineUnimodularMap:
    """A unimodular map sending the x-axis onto the given lattice line."""
    dx, dy = step
    g, ex, ey = _xgcd(dx, dy)
    # det of ((dx, -ey), (dy, ex)) is dx*ex + dy*ey = g = 1 for primitive steps
    return AffineUnimodularMap(((dx, -ey), (dy, ex)), origin)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _equivalent_degenerate(source: PointConfig, target: PointConfig) -> Optional[AffineUnimodularMap]:
    if len(source) == 1:
        offset = tuple(b - a for a, b in zip(source.points[0], target.points[0]))
        return AffineUnimodularMap.from_translation(offset)
    s_origin, s_step, s_params = _line_parameters(source.points)
    t_origin, t_step, t_params = _line_parameters(target.points)
    frame_s = _line_frame(s_origin, s_step)
    frame_t = _line_frame(t_origin, t_step)
    span = s_params[-1]
    candidates = []
    if s_params == t_params:
        candidates.append(frame_t.compose(frame_s.inverse()))
    if [span - t for t in reversed(s_params)] == t_params:
        flip = AffineUnimodularMap(((-1, 0), (0, 1)), (span, 0))
        candidates.append(frame_t.compose(flip).compose(frame_s.inverse()))
    for witness in candidates:
        if apply_map(witness, source) == target:
            return witness
    return None


def are_equivalent(source: PointConfig, target: PointConfig) -> Optional[AffineUnimodularMap]:
    """Search for an affine unimodular map carrying ``source`` onto ``target``.

    One affinely independent triple of the source is fixed; every ordered
    triple of the target determines at most one affine map, which is kept if
    it is integral with determinant +-1 and bijects the whole configuration.
    Collinear and singleton configurations are matched by their gap patterns
    along the line instead.
    """
    if source.dim != 2 or target.dim != 2:
        raise DimensionError("equivalence search is for planar configurations")
    if len(source) != len(target) or len(source) == 0:
        return None
    if len(vertex_set(source)) != len(vertex_set(target)):
        return None

    triple = _first_independent_triple(source.points)
    if triple is None:
        if _first_independent_triple(target.points) is not None:
            return None
        return _equivalent_degenerate(source, target)
    if _first_independent_triple(target.points) is None:
        return None

    p0, p1, p2 = triple
    u = (p1[0] - p0[0], p1[1] - p0[1])
    v = (p2[0] - p0[0], p2[1] - p0[1])
    det_a = u[0] * v[1] - u[1] * v[0]
    src_set = source.points
    tgt_sorted = target.points
    for q0, q1, q2 in itertools.permutations(target.points, 3):
        b1 = (q1[0] - q0[0], q1[1] - q0[1])
        b2 = (q2[0] - q0[0], q2[1] - q0[1])
        # M = [b1 b2] @ adj([u v]) / det([u v]), entries must divide evenly
        m00 = b1[0] * v[1] - b2[0] * u[1]
        m01 = -b1[0] * v[0] + b2[0] * u[0]
        m10 = b1[1] * v[1] - b2[1] * u[1]
        m11 = -b1[1] * v[0] + b2[1] * u[0]
        if m00 % det_a or m01 % det_a or m10 % det_a or m11 % det_a:
            continue
        mat = ((m00 // det_a, m01 // det_a), (m10 // det_a, m11 // det_a))
        if mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] not in (1, -1):
            continue
        shift = (
            q0[0] - mat[0][0] * p0[0] - mat[0][1] * p0[1],
            q0[1] - mat[1][0] * p0[0] - mat[1][1] * p0[1],
        )
        image = sorted(
            (
                mat[0][0] * p[0] + mat[0][1] * p[1] + shift[0],
                mat[1][0] * p[0] + mat[1][1] * p[1] + shift[1],
            )
            for p in src_set
        )
        if tuple(image) == tgt_sorted:
            return AffineUnimodularMap(mat, shift)
    return None


def exceptional_triangle(index: int) -> PointConfig:
    """Lattice points of the triangle conv{(0,1), (index,0), (-1,-1)}.

    These triangles, one for each index >= 1, are the only planar
    configurations whose wedge powers can fail to be lattice-convex.  The
    triangle with a given index has index+3 lattice points: its three
    corners plus index points strung along the x-axis.
    """
    if index < 1:
        raise ValueError("exceptional triangles are indexed from 1")
    corners = PointConfig.of([(0, 1), (index, 0), (-1, -1)])
    return lattice_points_of_polytope(convex_hull_2d(corners))


def exception_index(config: PointConfig) -> Optional[int]:
    """The index k if ``config`` is equivalent to the k-th exceptional triangle, else None.

    Only one k can possibly match a given configuration (the triangle with
    index k has exactly k+3 points), so a single equivalence search decides.
    """
    if config.dim != 2:
        raise DimensionError("exception detection is for planar configurations")
    k = len(config) - 3
    if k < 1:
        return None
    if are_equivalent(config, exceptional_triangle(k)) is not None:
        return k
    return None


def point_in_hull(config: PointConfig, point: Sequence[int]) -> bool:
    """Exact test for ``point`` in conv(config) via rational feasibility.

    Decides whether the point is a convex combination of the configuration
    by a phase-one simplex over Fractions with Bland's rule, so the answer
    is exact in every ambient dimension up to 3.
    """
    q = _as_point(point)
    if len(config) == 0:
        raise ValueError("point_in_hull needs a nonempty configuration")
    if len(q) != config.dim:
        raise DimensionError("query point dimension does not match configuration")
    # cheap bounding box rejection
    for d in range(config.dim):
        coords = [p[d] for p in config.points]
        if not min(coords) <= q[d] <= max(coords):
            return False
    columns = [p + (1,) for p in config.points]
    rhs = list(q) + [1]
    return _rational_feasible(columns, rhs)


def _rational_feasible(columns: Sequence[Point], rhs: Sequence[int]) -> bool:
    """Is there x >= 0 with sum_i x_i * columns[i] == rhs, over the rationals?"""
    rows = len(rhs)
    ncols = len(columns)
    tab = [[Fraction(columns[j][i]) for j in range(ncols)] for i in range(rows)]
    b = [Fraction(v) for v in rhs]
    for i in range(rows):
        if b[i] < 0:
            tab[i] = [-x for x in tab[i]]
            b[i] = -b[i]
    # phase one: minimize the sum of artificial slacks, starting basis = artificials
    obj = [sum(tab[i][j] for i in range(rows)) for j in range(ncols)]
    value = sum(b)
    basis = [ncols + i for i in range(rows)]  # artificials get indices past the real columns
    while True:
        enter = next((j for j in range(ncols) if obj[j] > 0), None)
        if enter is None:
            return value == 0
        pivot_row = None
        best = None
        for i in range(rows):
            if tab[i][enter] > 0:
                ratio = b[i] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pivot_row]):
                    best = ratio
                    pivot_row = i
        if pivot_row is None:
            return value == 0  # unbounded cannot happen in phase one
        piv = tab[pivot_row][enter]
        tab[pivot_row] = [x / piv for x in tab[pivot_row]]
        b[pivot_row] /= piv
        for i in range(rows):
            if i != pivot_row and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[pivot_row])]
                b[i] -= f * b[pivot_row]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, tab[pivot_row])]
        value -= f * b[pivot_row]
        basis[pivot_row] = enter
