"""Shared dense-matrix oracles for the test suite.

Everything here builds explicit complex matrices from first principles
(Kronecker products of 2x2 Paulis) so the bit-mask implementation is always
checked against an independent realization.
"""

import numpy as np
import pytest

from love_sim.pauli_algebra import SignedPauli

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
LETTER_MATS = {"I": I2, "X": X2, "Y": Y2, "Z": Z2}

PLUS_STATES = {
    "X": np.array([1, 1], dtype=complex) / np.sqrt(2),
    "Y": np.array([1, 1j], dtype=complex) / np.sqrt(2),
    "Z": np.array([1, 0], dtype=complex),
}


def dense(p: SignedPauli) -> np.ndarray:
    """Matrix form of a SignedPauli: i**phase * kron of X^x Z^z factors."""
    m = np.array([[1]], dtype=complex)
    for q in range(p.n_qubits):
        xb = (p.x_mask >> q) & 1
        zb = (p.z_mask >> q) & 1
        factor = (X2 if xb else I2) @ (Z2 if zb else I2)
        m = np.kron(m, factor)
    return (1j ** p.phase_exp) * m


def dense_from_label(label: str) -> np.ndarray:
    """Matrix form built from the letter string, bypassing SignedPauli."""
    s = label.strip()
    coeff = 1.0 + 0j
    while s and s[0] in "+-i":
        if s[0] == "-":
            coeff *= -1
        elif s[0] == "i":
            coeff *= 1j
        s = s[1:]
    m = np.array([[coeff]], dtype=complex)
    for ch in s:
        m = np.kron(m, LETTER_MATS[ch])
    return m


def dense_sum(pauli_sum) -> np.ndarray:
    m = np.zeros((1 << pauli_sum.n_qubits,) * 2, dtype=complex)
    for coeff, op in pauli_sum.terms():
        m += coeff * dense(op)
    return m


def insert_product_legs(phi: np.ndarray, legs: list[tuple[int, np.ndarray]]) -> np.ndarray:
    """Tensor single-qubit legs into a state at given original positions.

    `phi` lives on the qubits not listed in `legs`; the result orders qubits
    0..n-1 with `legs` occupying their stated positions.
    """
    n_kept = int(np.log2(phi.shape[0]))
    n = n_kept + len(legs)
    leg_positions = [pos for pos, _ in legs]
    kept_positions = [q for q in range(n) if q not in leg_positions]
    tensor = np.array([[1.0]], dtype=complex).reshape(())
    for _, vec in legs:
        tensor = np.tensordot(tensor, vec, axes=0) if tensor.shape else vec
    full = np.tensordot(tensor, phi.reshape((2,) * n_kept), axes=0) if n_kept else tensor
    # full is ordered [legs..., kept...]; permute into original qubit order
    order = leg_positions + kept_positions
    perm = [order.index(q) for q in range(n)]
    return np.transpose(full.reshape((2,) * n), perm).reshape(-1)


def rng_seeded(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240811)
