"""Exact solvers for linear diophantine systems with sign-constrained variables.

Everything here is integer arithmetic on tuples.  The two workhorses are

* a completion-style search for the coordinatewise-minimal nonnegative
  solutions of ``M x = b`` (Contejean/Devie frontier with a hard step budget),
* a transform-tracking Smith normal form, which powers integer kernels,
  lattice membership, and the elimination of free variables.

Free variables are supported where they are determined by the nonnegative
ones: ``feasible`` handles any mix (free parts are split into differences of
nonnegative parts, which preserves solvability), while ``minimal_solutions``
requires the free columns to have full column rank and otherwise raises
``UnboundedFreePart``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BudgetExceeded, UnboundedFreePart

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

NONNEGATIVE = "nonnegative"
FREE = "free"

# Frontier pops before the completion search gives up.  Generous for the
# desk-scale systems this package builds (tens of variables, small entries).
DEFAULT_STEP_BUDGET = 200_000


@dataclass(frozen=True)
class DiophantineSystem:
    """``coefficients * x = rhs`` with per-variable sign constraints.

    ``signs[j]`` is ``"nonnegative"`` or ``"free"``.
    """

    coefficients: Matrix
    rhs: Vector
    signs: tuple[str, ...]

    def __post_init__(self):
        for row in self.coefficients:
            if len(row) != len(self.signs):
                raise ValueError("row length does not match variable count")
        if len(self.rhs) != len(self.coefficients):
            raise ValueError("rhs length does not match row count")
        for s in self.signs:
            if s not in (NONNEGATIVE, FREE):
                raise ValueError("unknown sign %r" % (s,))


@dataclass(frozen=True)
class MinimalSolutionSet:
    """Antichain of solutions, minimal on the nonnegative coordinates."""

    solutions: tuple[Vector, ...]

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)


def nonnegative_system(rows, rhs) -> DiophantineSystem:
    """Convenience constructor: every variable nonnegative."""
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(rows[0]) if rows else 0
    return DiophantineSystem(rows, tuple(int(x) for x in rhs), (NONNEGATIVE,) * n)


def _dominates(a: Vector, b: Vector) -> bool:
    return all(x >= y for x, y in zip(a, b))


def _complete(rows, ncols, budget, want=None):
    """Minimal nonzero solutions of ``rows * z = 0`` over N^ncols.

    Classical completion: start from the unit vectors and extend a candidate
    z by e_j only when the residual moves toward zero (<M z, M e_j> < 0,
    which is exactly the step condition that makes the search complete:
    for any solution s > z, 0 > <Mz, M(s-z)> forces some usable j).
    Candidates are popped in graded lexicographic order, so any solution
    dominating another is popped after it; pruning against the found basis
    therefore keeps exactly the minimal nonzero solutions.

    ``want`` is an optional predicate on solutions; the first solution that
    satisfies it stops the search (used for feasibility witnesses).
    Returns ``(basis, found)``.
    """
    m = len(rows)
    cols = [tuple(rows[i][j] for i in range(m)) for j in range(ncols)]
    zero_res = (0,) * m
    heap = []
    seen = set()
    for j in range(ncols):
        z = tuple(int(i == j) for i in range(ncols))
        res = cols[j]
        heap.append((1, z, res))
        seen.add(z)
    heapq.heapify(heap)
    basis = []
    steps = 0
    while heap:
        grade, z, res = heapq.heappop(heap)
        steps += 1
        if steps > budget:
            raise BudgetExceeded(
                "completion exceeded %d steps; raise the budget" % budget
            )
        if any(_dominates(z, b) for b in basis):
            continue
        if res == zero_res:
            basis.append(z)
            if want is not None and want(z):
                return basis, z
            continue
        for j in range(ncols):
            cj = cols[j]
            if sum(r * c for r, c in zip(res, cj)) < 0:
                z2 = z[:j] + (z[j] + 1,) + z[j + 1 :]
                if z2 not in seen:
                    seen.add(z2)
                    heapq.heappush(
                        heap,
                        (grade + 1, z2, tuple(r + c for r, c in zip(res, cj))),
                    )
    return basis, None


def _hopeless_row(row, b) -> bool:
    # With all variables nonnegative, a single row already refutes the
    # system when its coefficients cannot reach the sign of the rhs.
    if b > 0 and all(c <= 0 for c in row):
        return True
    if b < 0 and all(c >= 0 for c in row):
        return True
    return False


def nonnegative_kernel_basis(rows, *, budget: int | None = None):
    """Minimal nonzero nonnegative solutions of ``rows * z = 0``.

    This is the Hilbert basis of the kernel intersected with the positive
    orthant; an empty result certifies that the cone of the columns is
    strongly convex.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        raise ValueError("need at least one row")
    n = len(rows[0])
    basis, _ = _complete(rows, n, budget or DEFAULT_STEP_BUDGET)
    return tuple(sorted(basis, key=lambda z: (sum(z), z)))


def _split_signs(system):
    nn = [j for j, s in enumerate(system.signs) if s == NONNEGATIVE]
    fr = [j for j, s in enumerate(system.signs) if s == FREE]
    return nn, fr


def minimal_solutions(system: DiophantineSystem, *, budget: int | None = None) -> MinimalSolutionSet:
    """Coordinatewise-minimal solutions (on the nonnegative coordinates).

    A homogeneous system returns ``{0}``: the zero vector is the unique
    minimal element of the solution set.  Inhomogeneous systems are
    homogenized with one auxiliary coordinate t and solutions are read off
    the completion basis at t = 1.  Transfer of minimality both ways:
    if x is minimal for Mx=b then (x,1) is minimal for the homogenized
    system (a smaller (y,1) contradicts minimality of x; a smaller (y,0)
    gives the smaller solution x-y), and conversely a minimal (x,1)
    projects to a minimal x.
    """
    budget = budget or DEFAULT_STEP_BUDGET
    nn, fr = _split_signs(system)
    n = len(system.signs)
    if all(b == 0 for b in system.rhs):
        return MinimalSolutionSet(((0,) * n,))
    if not fr:
        for row, b in zip(system.coefficients, system.rhs):
            if _hopeless_row(row, b):
                return MinimalSolutionSet(())
        hrows = [row + (-b,) for row, b in zip(system.coefficients, system.rhs)]
        basis, _ = _complete(hrows, n + 1, budget)
        sols = sorted(
            (z[:-1] for z in basis if z[-1] == 1), key=lambda z: (sum(z), z)
        )
        return MinimalSolutionSet(tuple(sols))
    return _minimal_solutions_with_free(system, nn, fr, budget)


def _matmul_vec(rows, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in rows)


def _minimal_solutions_with_free(system, nn, fr, budget):
    # Eliminate the free variables with a Smith form of their column block.
    # Full column rank means every free variable is determined by the
    # nonnegative ones, which is the supported regime.
    m = len(system.coefficients)
    f = len(fr)
    mf = tuple(tuple(row[j] for j in fr) for row in system.coefficients)
    mn = tuple(tuple(row[j] for j in nn) for row in system.coefficients)
    U, D, V = smith_decomposition(mf)
    diag = [D[i][i] for i in range(min(m, f))]
    rank = sum(1 for d in diag if d != 0)
    if rank < f:
        raise UnboundedFreePart(
            "free variables are not determined by the nonnegative ones"
        )
    T = tuple(_matmul_vec(U, tuple(row[j] for row in mn)) for j in range(len(nn)))
    # T as columns; rebuild row-major for convenience.
    Trows = tuple(tuple(T[j][i] for j in range(len(nn))) for i in range(m))
    c = _matmul_vec(U, system.rhs)

    rows2 = []
    rhs2 = []
    aux_rows = []  # i with diag[i] > 1, in order of the appended variable pairs
    for i in range(f):
        if diag[i] > 1:
            aux_rows.append(i)
    for i in range(f):
        if diag[i] > 1:
            # T_i x + d*(s+ - s-) = c_i with s determined by x when feasible.
            pos = aux_rows.index(i)
            extra = [0] * (2 * len(aux_rows))
            extra[2 * pos] = diag[i]
            extra[2 * pos + 1] = -diag[i]
            rows2.append(Trows[i] + tuple(extra))
            rhs2.append(c[i])
        # diag[i] == 1 rows put no constraint on x: z_i is an integer always.
    for i in range(f, m):
        rows2.append(Trows[i] + (0,) * (2 * len(aux_rows)))
        rhs2.append(c[i])

    if rows2:
        inner = minimal_solutions(
            nonnegative_system(rows2, rhs2), budget=budget
        )
        projected = sorted({z[: len(nn)] for z in inner}, key=lambda z: (sum(z), z))
    else:
        projected = [(0,) * len(nn)]
    # Minimal lifted solutions can project to comparable points; keep the
    # antichain (the canonical lift of any minimal projection is minimal,
    # so nothing is lost).
    keep = [
        p
        for p in projected
        if not any(q != p and _dominates(p, q) for q in projected)
    ]

    out = []
    for x in keep:
        z = []
        ok = True
        for i in range(f):
            num = c[i] - sum(Trows[i][j] * x[j] for j in range(len(nn)))
            if num % diag[i] != 0:
                ok = False
                break
            z.append(num // diag[i])
        if not ok:
            # Can only happen for diag == 1 rows, which always divide; guard
            # anyway for the impossible case.
            continue
        xf = _matmul_vec(V, tuple(z))
        full = [0] * len(system.signs)
        for pos, j in enumerate(nn):
            full[j] = x[pos]
        for pos, j in enumerate(fr):
            full[j] = xf[pos]
        out.append(tuple(full))
    return MinimalSolutionSet(tuple(sorted(out, key=lambda z: (sum(z), z))))


def feasible(system: DiophantineSystem, *, budget: int | None = None):
    """A single solution (witness tuple) or None.

    Mixed systems split every free variable into a difference of two
    nonnegative ones, which changes nothing about solvability; all-free
    systems are solved exactly over the integers via the Smith form.
    """
    budget = budget or DEFAULT_STEP_BUDGET
    nn, fr = _split_signs(system)
    n = len(system.signs)
    if all(b == 0 for b in system.rhs):
        return (0,) * n
    if not fr:
        for row, b in zip(system.coefficients, system.rhs):
            if _hopeless_row(row, b):
                return None
        hrows = [row + (-b,) for row, b in zip(system.coefficients, system.rhs)]
        _, found = _complete(hrows, n + 1, budget, want=lambda z: z[-1] == 1)
        return found[:-1] if found is not None else None
    if not nn:
        sol = _integer_solve(system.coefficients, system.rhs)
        return sol
    # Mixed: x_free = s+ - s-.
    rows2 = []
    for row in system.coefficients:
        r = [row[j] for j in nn]
        for j in fr:
            r.extend((row[j], -row[j]))
        rows2.append(tuple(r))
    w = feasible(nonnegative_system(rows2, system.rhs), budget=budget)
    if w is None:
        return None
    full = [0] * n
    for pos, j in enumerate(nn):
        full[j] = w[pos]
    base = len(nn)
    for pos, j in enumerate(fr):
        full[j] = w[base + 2 * pos] - w[base + 2 * pos + 1]
    return tuple(full)


# ---------------------------------------------------------------------------
# integer linear algebra


def smith_decomposition(matrix):
    """Return ``(U, D, V)`` with ``U * M * V = D`` in Smith normal form.

    U and V are unimodular (products of elementary integer operations);
    the diagonal of D is nonnegative and each entry divides the next.
    """
    matrix = tuple(tuple(int(x) for x in row) for row in matrix)
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    D = [list(row) for row in matrix]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_sub(i, j, q):  # row_i -= q * row_j
        D[i] = [a - q * b for a, b in zip(D[i], D[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_sub(j, k, q):  # col_j -= q * col_k
        for r in range(m):
            D[r][j] -= q * D[r][k]
        for r in range(n):
            V[r][j] -= q * V[r][k]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(j, k):
        for r in range(m):
            D[r][j], D[r][k] = D[r][k], D[r][j]
        for r in range(n):
            V[r][j], V[r][k] = V[r][k], V[r][j]

    def row_negate(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the working submatrix becomes the pivot
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])
        while True:
            if D[t][t] < 0:
                row_negate(t)
            shrunk = False
            for i in range(m):
                if i != t and D[i][t]:
                    q = D[i][t] // D[t][t]
                    row_sub(i, t, q)
                    if D[i][t]:
                        row_swap(i, t)  # strictly smaller pivot
                        shrunk = True
                        break
            if shrunk:
                continue
            for j in range(n):
                if j != t and D[t][j]:
                    q = D[t][j] // D[t][t]
                    col_sub(j, t, q)
                    if D[t][j]:
                        col_swap(j, t)
                        shrunk = True
                        break
            if shrunk:
                continue
            # pivot must divide everything that is left
            p = D[t][t]
            offender = None
            for i in range(t + 1, m):
                if any(D[i][j] % p for j in range(t + 1, n)):
                    offender = i
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)  # pull the bad row into the pivot row
        t += 1

    return (
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in D),
        tuple(tuple(r) for r in V),
    )


def kernel_basis(matrix):
    """Basis of the integer kernel ``{x : M x = 0}`` as a tuple of vectors.

    With U M V = D, x is in the kernel iff the first rank coordinates of
    V^-1 x vanish, so the trailing columns of V are a lattice basis.
    """
    matrix = tuple(tuple(row) for row in matrix)
    if not matrix:
        raise ValueError("need at least one row")
    n = len(matrix[0])
    _, D, V = smith_decomposition(matrix)
    rank = sum(
        1 for i in range(min(len(D), n)) if i < len(D) and D[i][i] != 0
    )
    return tuple(
        tuple(V[r][j] for r in range(n)) for j in range(rank, n)
    )


def _integer_solve(rows, rhs):
    """One integer solution of ``rows * x = rhs`` or None."""
    rows = tuple(tuple(r) for r in rows)
    if not rows:
        return None
    n = len(rows[0])
    m = len(rows)
    U, D, V = smith_decomposition(rows)
    c = _matmul_vec(U, rhs)
    z = [0] * n
    for i in range(m):
        d = D[i][i] if i < min(m, n) else 0
        if d:
            if c[i] % d:
                return None
            z[i] = c[i] // d
        elif c[i] != 0:
            return None
    return _matmul_vec(V, tuple(z))


def lattice_membership(generators, point) -> bool:
    """Whether ``point`` lies in the integer span of ``generators``."""
    point = tuple(int(x) for x in point)
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        return all(x == 0 for x in point)
    d = len(point)
    rows = tuple(tuple(g[i] for g in gens) for i in range(d))
    return _integer_solve(rows, point) is not None
