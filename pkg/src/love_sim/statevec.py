"""Dense state-vector kernels for the logical space.

Basis convention: qubit 0 is the most significant bit of the basis index,
matching a Kronecker product ordered qubit 0 first.  Vectors are complex128
numpy arrays of length 2**n.  Pauli application never materializes a matrix:
it is an index permutation plus a sign pattern.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .pauli_algebra import SignedPauli


@lru_cache(maxsize=64)
def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.uint64)


def _index_mask(qubit_mask: int, n: int) -> int:
    """Map a qubit-indexed bit mask to basis-index bit positions."""
    m = 0
    for q in range(n):
        if (qubit_mask >> q) & 1:
            m |= 1 << (n - 1 - q)
    return m


def basis_state(n: int, bits: int = 0) -> np.ndarray:
    """Computational basis state; bit q of `bits` set means qubit q is |1>."""
    v = np.zeros(1 << n, dtype=np.complex128)
    v[_index_mask(bits, n)] = 1.0
    return v


def apply_pauli(p: SignedPauli, vec: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
    """Return P|vec> as a new array (or into `out`, which must not alias vec)."""
    n = p.n_qubits
    if vec.shape[0] != (1 << n):
        raise ValueError("vector length does not match qubit count")
    idx = _indices(n)
    xm = np.uint64(_index_mask(p.x_mask, n))
    zm = np.uint64(_index_mask(p.z_mask, n))
    src = idx ^ xm
    signs = 1.0 - 2.0 * (np.bitwise_count(src & zm) & np.uint64(1)).astype(np.float64)
    phase = 1j ** p.phase_exp
    if out is None:
        out = np.empty_like(vec)
    np.multiply(vec[src], phase * signs, out=out)
    return out


def pauli_expectation(p: SignedPauli, vec: np.ndarray) -> complex:
    """<vec| P |vec> without normalizing."""
    return complex(np.vdot(vec, apply_pauli(p, vec)))


def apply_projector(p: SignedPauli, sign: int, vec: np.ndarray) -> np.ndarray:
    """Return the unnormalized (I + sign*P)/2 |vec>."""
    return 0.5 * (vec + sign * apply_pauli(p, vec))


def stabilizer_state(targets: list[tuple[SignedPauli, int]], seed_vec: np.ndarray) -> np.ndarray:
    """Project `seed_vec` onto the joint +/-1 eigenspace of the given Paulis.

    `targets` pairs each operator with the wanted eigenvalue sign.  Raises if
    the projection annihilates the seed.
    """
    v = seed_vec
    for op, sign in targets:
        v = apply_projector(op, sign, v)
    norm = np.linalg.norm(v)
    if norm < 1e-12:
        raise ValueError("seed state is orthogonal to the target stabilizer state")
    return v / norm
