"""The ambient ring model: validated configurations, membership in the
semigroup with witnesses, divisibility, monomial ideals, and (root, face)
pairs with their three relations.

A configuration is a d x n integer matrix A with nonzero columns whose cone
is strongly convex.  Points of the semigroup are nonnegative integer
combinations of the columns; all questions below reduce to exact linear
diophantine systems over the columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diophantine import (
    feasible,
    lattice_membership,
    nonnegative_kernel_basis,
    nonnegative_system,
    smith_decomposition,
)
from .errors import (
    FaceMismatch,
    GeneratorOutsideSemigroup,
    NotStronglyConvex,
    PointNotInSemigroup,
    ValidationError,
    ZeroColumn,
)
from .polyhedral import Face, SupportFunction, compute_facets, face_lattice

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


@dataclass(frozen=True)
class Configuration:
    """A validated matrix together with its cached polyhedral data.

    ``lattice_basis_change`` is a unimodular d x d matrix U; in the
    normalized coordinates U*point, the column lattice becomes the set of
    vectors divisible coordinatewise by ``scalings`` (padded with hard
    zeros below the rank).  When the column lattice is already the full
    ambient lattice, U is the identity.
    """

    matrix: Matrix
    facets: tuple[SupportFunction, ...]
    faces: tuple[Face, ...]
    lattice_basis_change: Matrix
    basis_change_inverse: Matrix
    scalings: tuple[int, ...]
    rank: int

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @property
    def ncols(self) -> int:
        return len(self.matrix[0])

    @property
    def normalized(self) -> bool:
        return self.rank == self.dimension and all(
            s == 1 for s in self.scalings
        )

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def columns(self, indices=None) -> tuple[Vector, ...]:
        if indices is None:
            indices = range(self.ncols)
        return tuple(self.column(j) for j in indices)

    @property
    def full_face(self) -> Face:
        return self.faces[-1]

    @property
    def empty_face(self) -> Face:
        return self.faces[0]


def _identity(d: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def _invert_unimodular(matrix: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix (Gauss over fractions)."""
    d = len(matrix)
    work = [
        [Fraction(matrix[i][j]) for j in range(d)]
        + [Fraction(int(i == j)) for j in range(d)]
        for i in range(d)
    ]
    for col in range(d):
        pivot = next(r for r in range(col, d) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(d):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    inverse = tuple(
        tuple(int(work[i][d + j]) for j in range(d)) for i in range(d)
    )
    return inverse


def _apply(matrix: Matrix, point: Vector) -> Vector:
    return tuple(sum(r * x for r, x in zip(row, point)) for row in matrix)


def validate_configuration(matrix) -> Configuration:
    """Check the matrix and cache its polyhedral and lattice data.

    Raises ZeroColumn on a zero column and NotStronglyConvex (with a
    nonnegative kernel certificate) when the cone contains a line.
    """
    matrix = tuple(tuple(int(x) for x in row) for row in matrix)
    if not matrix or not matrix[0]:
        raise ValidationError("the matrix must have at least one row and column")
    if len({len(row) for row in matrix}) != 1:
        raise ValidationError("all matrix rows must have the same length")
    d = len(matrix)
    n = len(matrix[0])
    for j in range(n):
        if all(matrix[i][j] == 0 for i in range(d)):
            raise ZeroColumn(j)
    lines = nonnegative_kernel_basis(matrix)
    if lines:
        raise NotStronglyConvex(lines[0])
    facets = compute_facets(matrix)
    faces = face_lattice(matrix, facets)
    u_mat, diag, _ = smith_decomposition(matrix)
    scalings = []
    for i in range(min(d, n)):
        if diag[i][i] != 0:
            scalings.append(abs(diag[i][i]))
    rank = len(scalings)
    if rank == d and all(s == 1 for s in scalings):
        u_mat = _identity(d)
        inverse = u_mat
    else:
        inverse = _invert_unimodular(u_mat)
    return Configuration(
        matrix=matrix,
        facets=facets,
        faces=faces,
        lattice_basis_change=u_mat,
        basis_change_inverse=inverse,
        scalings=tuple(scalings),
        rank=rank,
    )


def to_internal(config: Configuration, point) -> Vector:
    """Coordinates of a column-lattice point in the normalized basis.

    Raises ValidationError when the point is not in the column lattice.
    """
    point = tuple(int(x) for x in point)
    if config.normalized:
        return point
    y = _apply(config.lattice_basis_change, point)
    r = config.rank
    for i in range(r, config.dimension):
        if y[i] != 0:
            raise ValidationError(
                "point %s is not in the column lattice" % (point,)
            )
    out = []
    for i in range(r):
        q, rem = divmod(y[i], config.scalings[i])
        if rem != 0:
            raise ValidationError(
                "point %s is not in the column lattice" % (point,)
            )
        out.append(q)
    return tuple(out)


def from_internal(config: Configuration, internal) -> Vector:
    """Inverse of to_internal."""
    internal = tuple(int(x) for x in internal)
    if config.normalized:
        return internal
    if len(internal) != config.rank:
        raise ValidationError(
            "internal coordinates must have length %d" % config.rank
        )
    y = tuple(
        internal[i] * config.scalings[i] if i < config.rank else 0
        for i in range(config.dimension)
    )
    return _apply(config.basis_change_inverse, y)


def is_member(config: Configuration, point) -> Vector | None:
    """A witness u >= 0 with A*u = point, or None when point is outside NA."""
    point = tuple(int(x) for x in point)
    for f in config.facets:
        if f.value(point) < 0:
            return None
    return feasible(nonnegative_system(config.matrix, point))


def divides(config: Configuration, small, large) -> bool:
    """Semigroup divisibility: large - small lies in NA."""
    diff = tuple(int(b) - int(a) for a, b in zip(small, large))
    return is_member(config, diff) is not None


@dataclass(frozen=True)
class Monomial:
    """A semigroup element: its degree and one nonnegative witness."""

    degree: Vector
    witness: Vector


def make_monomial(config: Configuration, degree) -> Monomial:
    degree = tuple(int(x) for x in degree)
    witness = is_member(config, degree)
    if witness is None:
        raise PointNotInSemigroup(
            "degree %s is not an element of the semigroup" % (degree,)
        )
    return Monomial(degree, witness)


def degree_sort_key(degree: Vector):
    return (sum(degree), degree)


@dataclass(frozen=True)
class MonomialIdeal:
    """A minimalized list of monomial generators over a configuration.

    The zero ideal has no generators; the unit ideal has the single
    generator of degree zero.
    """

    configuration: Configuration
    generators: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g.degree) for g in self.generators)

    @property
    def generator_degrees(self) -> tuple[Vector, ...]:
        return tuple(g.degree for g in self.generators)


def monomial_ideal(config: Configuration, degrees) -> MonomialIdeal:
    """Build an ideal from generator degrees, minimalizing them.

    Raises GeneratorOutsideSemigroup for a degree not in NA.
    """
    unique = []
    for deg in degrees:
        deg = tuple(int(x) for x in deg)
        if is_member(config, deg) is None:
            raise GeneratorOutsideSemigroup(
                "generator degree %s is not in the semigroup" % (deg,)
            )
        if deg not in unique:
            unique.append(deg)
    minimal = [
        d
        for d in unique
        if not any(e != d and divides(config, e, d) for e in unique)
    ]
    minimal.sort(key=degree_sort_key)
    return MonomialIdeal(
        config, tuple(make_monomial(config, d) for d in minimal)
    )


def ideal_member(ideal: MonomialIdeal, point) -> bool:
    """Whether the monomial at ``point`` lies in the ideal.

    Raises PointNotInSemigroup when the point is not in NA at all.
    """
    point = tuple(int(x) for x in point)
    if is_member(ideal.configuration, point) is None:
        raise PointNotInSemigroup(
            "point %s is not an element of the semigroup" % (point,)
        )
    return any(
        divides(ideal.configuration, g.degree, point)
        for g in ideal.generators
    )


@dataclass(frozen=True)
class Pair:
    """A translated face monoid root + NF, recorded as (root, face)."""

    root: Vector
    face: Face


def face_for_indices(config: Configuration, indices) -> Face:
    """The canonical Face of the configuration with these column indices.

    Raises FaceMismatch when the index set is not a face.
    """
    wanted = tuple(sorted(set(int(i) for i in indices)))
    for face in config.faces:
        if face.indices == wanted:
            return face
    raise FaceMismatch(
        "column set %s is not a face of the configuration" % (wanted,)
    )


def make_pair(config: Configuration, root, face) -> Pair:
    """Validated pair constructor: root must be in NA, face must be a face."""
    root = tuple(int(x) for x in root)
    if is_member(config, root) is None:
        raise PointNotInSemigroup(
            "pair root %s is not an element of the semigroup" % (root,)
        )
    if isinstance(face, Face):
        face = face_for_indices(config, face.indices)
    else:
        face = face_for_indices(config, face)
    return Pair(root, face)


def in_translated_monoid(
    config: Configuration, point: Vector, root: Vector, face: Face
) -> bool:
    # point in root + NF, by feasibility over the face columns
    diff = tuple(p - r for p, r in zip(point, root))
    if not face.indices:
        return diff == (0,) * config.dimension
    cols = config.columns(face.indices)
    rows = tuple(
        tuple(col[i] for col in cols) for i in range(config.dimension)
    )
    return feasible(nonnegative_system(rows, diff)) is not None


def pair_prec(config: Configuration, p: Pair, q: Pair) -> bool:
    """Monoid containment: root_p + NF inside root_q + NG."""
    if not set(p.face.indices) <= set(q.face.indices):
        return False
    return in_translated_monoid(config, p.root, q.root, q.face)


def pair_overlaps(config: Configuration, p: Pair, q: Pair) -> bool:
    """Whether two pairs on one face differ by a lattice vector of the face.

    Raises FaceMismatch when the faces differ.
    """
    if p.face.indices != q.face.indices:
        raise FaceMismatch(
            "overlap is only defined for pairs on one face; got %s and %s"
            % (p.face.indices, q.face.indices)
        )
    diff = tuple(a - b for a, b in zip(p.root, q.root))
    return lattice_membership(config.columns(p.face.indices), diff)


def pair_divides(config: Configuration, p: Pair, q: Pair) -> bool:
    """Whether some NA-translate of p's monoid fits inside q's monoid."""
    if not set(p.face.indices) <= set(q.face.indices):
        return False
    # solve p.root + A*y = q.root + G*w over nonnegative y, w
    gcols = config.columns(q.face.indices)
    rows = tuple(
        tuple(config.matrix[i]) + tuple(-col[i] for col in gcols)
        for i in range(config.dimension)
    )
    rhs = tuple(b - a for a, b in zip(p.root, q.root))
    return feasible(nonnegative_system(rows, rhs)) is not None
