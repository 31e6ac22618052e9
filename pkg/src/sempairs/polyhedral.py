"""Faces of the rational cone spanned by the columns of an integer matrix.

A face is recorded by the set of column indices lying on it.  Facets carry
their primitive supporting functionals, which later modules use both to test
cone membership and to set up counting constraints.  Everything is exact
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .diophantine import kernel_basis
from .errors import OutsideCone

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


@dataclass(frozen=True)
class SupportFunction:
    """A primitive integer functional that is nonnegative on every column.

    ``facet`` lists the columns it vanishes on; for a facet functional that
    set is exactly the facet of the cone it supports.
    """

    coefficients: Vector
    facet: tuple[int, ...]

    def value(self, point: Vector) -> int:
        return sum(c * x for c, x in zip(self.coefficients, point))


@dataclass(frozen=True)
class Face:
    """A face of the cone: the sorted column indices on it, plus the
    positions (into the facet list) of every facet containing it."""

    indices: tuple[int, ...]
    containing_facets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def contains(self, other: "Face") -> bool:
        return set(other.indices) <= set(self.indices)


def matrix_rank(matrix: Matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(matrix[0]) - len(kernel_basis(matrix))


def _primitive(vector: Vector) -> Vector:
    g = 0
    for x in vector:
        g = gcd(g, x)
    if g == 0:
        return vector
    return tuple(x // g for x in vector)


def _column(matrix: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in matrix)


def _facet_normal(matrix: Matrix, subset: tuple[int, ...]) -> Vector | None:
    """The primitive functional in the column span vanishing on ``subset``.

    The wanted functionals c satisfy c = A*lam and (A on subset)^T c = 0, a
    one-dimensional space when the subset spans a hyperplane of the column
    span; returns None when no nonzero c exists.
    """
    d = len(matrix)
    n = len(matrix[0])
    rows = []
    for j in subset:
        col = _column(matrix, j)
        rows.append(
            tuple(
                sum(col[i] * matrix[i][k] for i in range(d)) for k in range(n)
            )
        )
    if rows:
        lam_basis = kernel_basis(tuple(rows))
    else:
        lam_basis = tuple(
            tuple(int(i == k) for i in range(n)) for k in range(n)
        )
    for lam in lam_basis:
        c = tuple(
            sum(matrix[i][k] * lam[k] for k in range(n)) for i in range(d)
        )
        if any(c):
            return _primitive(c)
    return None


def compute_facets(matrix: Matrix) -> tuple[SupportFunction, ...]:
    """All facet functionals of the cone spanned by the columns.

    Every facet is spanned by rank-1 many independent columns, so scanning
    column subsets of that size visits each facet at least once; the sign
    scan keeps exactly the supporting functionals.
    """
    d = len(matrix)
    n = len(matrix[0])
    r = matrix_rank(matrix)
    columns = [_column(matrix, j) for j in range(n)]
    seen: set[Vector] = set()
    facets = []
    for subset in combinations(range(n), r - 1):
        sub = tuple(tuple(matrix[i][j] for j in subset) for i in range(d))
        if subset and matrix_rank(sub) != r - 1:
            continue
        normal = _facet_normal(matrix, subset)
        if normal is None:
            continue
        values = [sum(c * x for c, x in zip(normal, col)) for col in columns]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            normal = tuple(-c for c in normal)
            values = [-v for v in values]
        else:
            continue
        if normal in seen:
            continue
        seen.add(normal)
        vanishing = tuple(j for j, v in enumerate(values) if v == 0)
        facets.append(SupportFunction(normal, vanishing))
    facets.sort(key=lambda f: (len(f.facet), f.facet))
    return tuple(facets)


def _face(indices: frozenset, facets: tuple[SupportFunction, ...]) -> Face:
    containing = tuple(
        k for k, f in enumerate(facets) if indices <= frozenset(f.facet)
    )
    return Face(tuple(sorted(indices)), containing)


def face_lattice(
    matrix: Matrix, facets: tuple[SupportFunction, ...]
) -> tuple[Face, ...]:
    """Every face of the cone: intersections of facets, plus the cone itself."""
    n = len(matrix[0])
    found = {frozenset(range(n))}
    for f in facets:
        found.add(frozenset(f.facet))
    changed = True
    while changed:
        changed = False
        for s in list(found):
            for f in facets:
                t = s & frozenset(f.facet)
                if t not in found:
                    found.add(t)
                    changed = True
    faces = [_face(s, facets) for s in found]
    faces.sort(key=lambda f: (len(f.indices), f.indices))
    return tuple(faces)


def smallest_face_containing(
    matrix: Matrix, facets: tuple[SupportFunction, ...], point: Vector
) -> Face:
    """The smallest face whose real cone contains ``point``.

    Raises OutsideCone when the point violates a facet inequality or leaves
    the linear span of the columns.
    """
    n = len(matrix[0])
    extended = tuple(row + (p,) for row, p in zip(matrix, point))
    if matrix_rank(extended) != matrix_rank(matrix):
        raise OutsideCone(
            "point %s is outside the linear span of the columns" % (point,)
        )
    members = frozenset(range(n))
    for f in facets:
        v = f.value(point)
        if v < 0:
            raise OutsideCone(
                "point %s violates the facet inequality %s"
                % (point, f.coefficients)
            )
        if v == 0:
            members &= frozenset(f.facet)
    return _face(members, facets)
