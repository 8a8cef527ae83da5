"""Pauli algebra against dense 2^n oracles and algebraic properties."""

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from love_sim.pauli_algebra import (
    CLIFFORD_GATES,
    INVERSE_GATE,
    PauliError,
    SignedPauli,
    commutes,
    conjugate_by_clifford,
    insert_qubit,
    mul,
    remove_qubit,
    weight,
)

from conftest import dense, dense_from_label

GATE_UNITARIES = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.diag([1, 1j]).astype(complex),
    "SDG": np.diag([1, -1j]).astype(complex),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
}
for _axis, _mat in (("X", np.array([[0, 1], [1, 0]], dtype=complex)),
                    ("Y", np.array([[0, -1j], [1j, 0]], dtype=complex))):
    for _sign, _tag in ((1, "90"), (-1, "90DG")):
        theta = _sign * np.pi / 2
        GATE_UNITARIES[f"R{_axis}{_tag}"] = (
            np.cos(theta / 2) * np.eye(2) - 1j * np.sin(theta / 2) * _mat
        )


def all_unsigned(n):
    for x in range(1 << n):
        for z in range(1 << n):
            yield SignedPauli(n, x, z, 0)


def random_pauli(rng, n):
    return SignedPauli(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)),
                       int(rng.integers(4)))


class TestLabels:
    def test_round_trip_examples(self):
        for label in ["+XZIY", "-iXZIY", "+iY", "-Z", "+IIII", "+X"]:
            assert SignedPauli.from_label(label).to_label() == label

    def test_label_matches_dense(self):
        for label in ["-iXZIY", "+iYY", "-XYZ", "+I"]:
            p = SignedPauli.from_label(label)
            assert np.allclose(dense(p), dense_from_label(label))

    @given(st.integers(0, 3), st.lists(st.sampled_from("IXYZ"), min_size=1, max_size=8))
    def test_round_trip_random(self, prefix, letters):
        label = ["+", "+i", "-", "-i"][prefix] + "".join(letters)
        assert SignedPauli.from_label(label).to_label() == label

    def test_bad_inputs(self):
        with pytest.raises(PauliError):
            SignedPauli.from_label("+XQ")
        with pytest.raises(PauliError):
            SignedPauli(2, 5, 0, 0)


class TestMul:
    def test_single_qubit_table(self):
        x = SignedPauli.from_label("X")
        y = SignedPauli.from_label("Y")
        assert mul(x, y).to_label() == "+iZ"

    def test_identity(self):
        p = SignedPauli.from_label("-iXZ")
        ident = SignedPauli.identity(2)
        assert mul(p, ident) == p
        assert mul(ident, p) == p

    def test_two_qubit_against_dense(self):
        a = SignedPauli.from_label("+YX")
        b = SignedPauli.from_label("+ZZ")
        assert np.allclose(dense(mul(a, b)), dense(a) @ dense(b))

    def test_dense_equivalence_all_three_qubit(self):
        mats = {p.key(): dense(p) for p in all_unsigned(3)}
        paulis = list(all_unsigned(3))
        for a in paulis:
            for b in paulis:
                prod = mul(a, b)
                expect = mats[a.key()] @ mats[b.key()]
                assert np.allclose(dense(prod), expect)

    def test_length_mismatch(self):
        with pytest.raises(PauliError):
            mul(SignedPauli.identity(2), SignedPauli.identity(3))

    def test_associative_exhaustive_two_qubits(self):
        paulis = list(all_unsigned(2))
        for a, b, c in itertools.product(paulis, repeat=3):
            assert mul(mul(a, b), c) == mul(a, mul(b, c))

    def test_associative_random_sixteen_qubits(self, rng):
        for _ in range(300):
            a, b, c = (random_pauli(rng, 16) for _ in range(3))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))

    def test_square_is_plus_minus_identity(self, rng):
        for _ in range(200):
            a = random_pauli(rng, 9)
            sq = mul(a, a)
            assert sq.x_mask == 0 and sq.z_mask == 0
            assert sq.phase_exp in (0, 2)

    def test_adjoint(self, rng):
        for _ in range(100):
            a = random_pauli(rng, 5)
            assert np.allclose(dense(a.adjoint()), dense(a).conj().T)


class TestCommutes:
    def test_same_qubit_anticommute(self):
        assert not commutes(SignedPauli.from_label("X"), SignedPauli.from_label("Z"))

    def test_double_flip_commutes(self):
        assert commutes(SignedPauli.from_label("XX"), SignedPauli.from_label("ZZ"))

    def test_random_six_qubit_against_dense(self, rng):
        for _ in range(200):
            a, b = random_pauli(rng, 6), random_pauli(rng, 6)
            ab = dense(a) @ dense(b)
            ba = dense(b) @ dense(a)
            assert commutes(a, b) == np.allclose(ab, ba)

    def test_commute_xor_anticommute(self, rng):
        for _ in range(300):
            a, b = random_pauli(rng, 7), random_pauli(rng, 7)
            ab, ba = mul(a, b), mul(b, a)
            if commutes(a, b):
                assert ab == ba
            else:
                assert ab == ba.negate()


class TestConjugation:
    def test_cnot_propagates_control_x(self):
        p = SignedPauli.from_label("+XI")
        assert conjugate_by_clifford(p, "CNOT", (0, 1)).to_label() == "+XX"

    def test_h_exchanges_x_and_z(self):
        assert conjugate_by_clifford(SignedPauli.from_label("X"), "H", (0,)).to_label() == "+Z"

    def test_ry90_on_z_against_dense(self):
        p = SignedPauli.from_label("Z")
        got = conjugate_by_clifford(p, "RY90", (0,))
        u = GATE_UNITARIES["RY90"]
        assert np.allclose(dense(got), u @ dense(p) @ u.conj().T)

    @pytest.mark.parametrize("gate", CLIFFORD_GATES)
    def test_all_gates_against_dense(self, gate):
        arity = 2 if gate == "CNOT" else 1
        u_small = GATE_UNITARIES[gate]
        for qubits in itertools.permutations(range(3), arity):
            # build the full-size unitary by routing each basis matrix element
            u_full = np.zeros((8, 8), dtype=complex)
            for idx in range(8):
                for jdx in range(8):
                    bits_i = [(idx >> (2 - q)) & 1 for q in range(3)]
                    bits_j = [(jdx >> (2 - q)) & 1 for q in range(3)]
                    sub_i = sum(bits_i[q] << (arity - 1 - k) for k, q in enumerate(qubits))
                    sub_j = sum(bits_j[q] << (arity - 1 - k) for k, q in enumerate(qubits))
                    rest_match = all(
                        bits_i[q] == bits_j[q] for q in range(3) if q not in qubits
                    )
                    if rest_match:
                        u_full[idx, jdx] = u_small[sub_i, sub_j]
            for p in all_unsigned(3):
                got = conjugate_by_clifford(p, gate, qubits)
                assert np.allclose(dense(got), u_full @ dense(p) @ u_full.conj().T), (
                    f"{gate} on {qubits} failed for {p.to_label()}"
                )

    def test_inverse_gates_round_trip(self, rng):
        for _ in range(100):
            p = random_pauli(rng, 4)
            for gate in CLIFFORD_GATES:
                qubits = (1, 3) if gate == "CNOT" else (2,)
                q = conjugate_by_clifford(p, gate, qubits)
                back = conjugate_by_clifford(q, INVERSE_GATE[gate], qubits)
                assert back == p

    def test_preserves_commutation(self, rng):
        for _ in range(200):
            p, q = random_pauli(rng, 5), random_pauli(rng, 5)
            gate = ("CNOT", (1, 4))
            pc = conjugate_by_clifford(p, *gate)
            qc = conjugate_by_clifford(q, *gate)
            assert commutes(pc, qc) == commutes(p, q)

    def test_errors(self):
        p = SignedPauli.identity(3)
        with pytest.raises(PauliError):
            conjugate_by_clifford(p, "TOFFOLI", (0, 1))
        with pytest.raises(PauliError):
            conjugate_by_clifford(p, "H", (5,))


class TestWeightAndRemoval:
    def test_weight_identity(self):
        assert weight(SignedPauli.identity(4)) == 0

    def test_weight_chain_edge_operator(self):
        assert weight(SignedPauli.from_label("YXII")) == 2

    def test_remove_leading_letter(self):
        assert remove_qubit(SignedPauli.from_label("+ZX"), 0).to_label() == "+X"

    def test_remove_identity_keeps_phase(self):
        p = SignedPauli.from_label("-iXIY")
        assert remove_qubit(p, 1).to_label() == "-iXY"

    def test_remove_out_of_range(self):
        with pytest.raises(PauliError):
            remove_qubit(SignedPauli.identity(2), 2)

    @given(st.integers(0, 5), st.integers(0, 3),
           st.lists(st.sampled_from("IXYZ"), min_size=1, max_size=6))
    def test_insert_then_remove(self, pos, prefix, letters):
        label = ["+", "+i", "-", "-i"][prefix] + "".join(letters)
        p = SignedPauli.from_label(label)
        pos = pos % (p.n_qubits + 1)
        for letter in "IXZ":
            assert remove_qubit(insert_qubit(p, pos, letter), pos) == p
