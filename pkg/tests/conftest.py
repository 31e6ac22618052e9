"""Shared fixtures: the six running configurations and their oracles."""

from __future__ import annotations

import pytest

from oracles import SemigroupOracle

# Names describe the ring, not the source: columns are exponent vectors.
MATRICES = {
    # k[x, y]
    "poly2": ((1, 0), (0, 1)),
    # k[x, xy, xy^2], normal, not a polynomial ring
    "normal2": ((1, 1, 1), (0, 1, 2)),
    # k[z, xz, yz, xyz], 3d, normal, overlaps happen
    "normal3": ((0, 1, 0, 1), (0, 0, 1, 1), (1, 1, 1, 1)),
    # k[y^2, z^2, x, xy, xz, xyz] in that column order, 3d, not normal
    "nonnormal3": (
        (0, 0, 1, 1, 1, 1),
        (2, 0, 0, 1, 0, 1),
        (0, 2, 0, 0, 1, 1),
    ),
    # k[xy, xy^2, x^2, x^3], 2d, not normal (holes on the x-axis)
    "twisted2": ((1, 1, 2, 3), (1, 2, 0, 0)),
    # k[x^2, y, xy], 2d, not normal (odd x-axis points missing)
    "evenx2": ((2, 0, 1), (0, 1, 1)),
}

# Integer column combinations producing the standard basis: proof that the
# column lattice is all of Z^d for every fixture (coefficients by column).
LATTICE_WITNESSES = {
    "poly2": (((1, 0),), ((0, 1),)),
    "normal2": (((1, 0, 0),), ((-1, 1, 0),)),
    "normal3": (((-1, 1, 0, 0),), ((-1, 0, 1, 0),), ((1, 0, 0, 0),)),
    "nonnormal3": (
        ((0, 0, 1, 0, 0, 0),),
        ((0, 0, -1, 1, 0, 0),),
        ((0, 0, -1, 0, 1, 0),),
    ),
    "twisted2": (((0, 0, -1, 1),), ((-1, 1, 0, 0),)),
    "evenx2": (((0, -1, 1),), ((0, 1, 0),)),
}


@pytest.fixture(scope="session")
def matrices():
    return MATRICES


@pytest.fixture(scope="session")
def oracles():
    return {name: SemigroupOracle(m) for name, m in MATRICES.items()}
