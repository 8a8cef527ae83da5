"""Catalog of the built-in encodings used by the experiment drivers.

Chain orderings and the distance-two auxiliary-qubit construction are built
programmatically; the compact and superfast codes load from the definition
files shipped under data/encodings.
"""

from __future__ import annotations

import numpy as np

from .encodings import (
    Encoding,
    build_gaqm,
    build_jordan_wigner,
    grid_geometry,
    load_builtin,
)
from .pauli_algebra import SignedPauli


def snake_ordering(width: int, height: int) -> list[int]:
    """Row-major boustrophedon ordering of a width x height grid."""
    order = []
    for y in range(height):
        row = [y * width + x for x in range(width)]
        order += row if y % 2 == 0 else row[::-1]
    return order


# Block ordering for the 12-mode lattice: the left 2x3 block followed by the
# right block, phrased as (x, y) visits.
_BLOCK_ORDER_4X3 = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 1), (1, 0),
                    (2, 0), (2, 1), (2, 2), (3, 2), (3, 0), (3, 1)]


def jw_3x3() -> Encoding:
    return build_jordan_wigner(snake_ordering(3, 3), geometry=grid_geometry(3, 3),
                               name="jw-3x3")


def jw1_4x3() -> Encoding:
    ordering = [y * 4 + x for x, y in _BLOCK_ORDER_4X3]
    return build_jordan_wigner(ordering, geometry=grid_geometry(4, 3), name="jw1-4x3")


def jw2_4x3() -> Encoding:
    return build_jordan_wigner(snake_ordering(4, 3), geometry=grid_geometry(4, 3),
                               name="jw2-4x3")


# The 25-qubit auxiliary-qubit code over the 12-mode lattice: three chain-row
# parities followed by the exchange strings of two block walks; the auxiliary
# X/Z layer ties the walk-end qubits back through the first row parity.
_AQ_WALK_LEFT = [(0, 0), (1, 0), (1, 1), (0, 1), (0, 2), (1, 2)]
_AQ_WALK_RIGHT = [(2, 0), (2, 1), (2, 2), (3, 2), (3, 1), (3, 0)]


def gaqm_4x3() -> Encoding:
    base = jw2_4x3()
    n = 12

    def mode(xy):
        return xy[1] * 4 + xy[0]

    def row_parity(row):
        z = sum(1 << c for c in range(4 * row, 4 * row + 4))
        return SignedPauli(n, 0, z, 0)

    t_strings = [row_parity(r) for r in range(3)]
    for walk in (_AQ_WALK_LEFT, _AQ_WALK_RIGHT):
        for a, b in zip(walk, walk[1:]):
            t_strings.append(base.edge_op(mode(a), mode(b)))
    m_matrix = np.eye(13, dtype=np.uint8)
    m_matrix[0, 7] = 1   # covers the left walk's final auxiliary qubit
    m_matrix[0, 12] = 1  # covers the right walk's final auxiliary qubit
    return build_gaqm(base, t_strings, m_matrix, name="gaqm-4x3")


_BUILDERS = {
    "jw-3x3": jw_3x3,
    "jw1-4x3": jw1_4x3,
    "jw2-4x3": jw2_4x3,
    "gaqm-4x3": gaqm_4x3,
    "compact-3x3": lambda: load_builtin("compact_3x3"),
    "compact-4x3": lambda: load_builtin("compact_4x3"),
    "compact-2x3x2": lambda: load_builtin("compact_2x3x2"),
    "gse-3x3": lambda: load_builtin("gse_3x3"),
    "gse-4x3": lambda: load_builtin("gse_4x3"),
    "gse-2x3x2": lambda: load_builtin("gse_2x3x2"),
    "gse-34": lambda: load_builtin("gse_34"),
    "gse-42": lambda: load_builtin("gse_42"),
}

CATALOG = tuple(sorted(_BUILDERS))


def get_encoding(name: str) -> Encoding:
    """Build or load a catalog encoding by id; file paths also work."""
    if name in _BUILDERS:
        return _BUILDERS[name]()
    from .encodings import load_encoding
    return load_encoding(name)
