"""Exact signed Pauli-string arithmetic in symplectic bit representation.

A signed Pauli string on n qubits is stored as a pair of n-bit masks
(x_mask, z_mask) plus a global power of i.  Bit q of x_mask/z_mask set
means qubit q carries an X/Z factor; (1,1) is Y.  Internally the operator
is ``i**phase_exp * X^x Z^z`` with Y == i*X*Z per qubit, so multiplication
and commutation reduce to bit arithmetic.  All operations are exact and
side-effect free.

Text form: an optional sign prefix among ``+ - +i -i`` followed by letters
in ``IXYZ``, qubit 0 leftmost, e.g. ``-iXZIY``.
"""

from __future__ import annotations

from dataclasses import dataclass

_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_TO_LETTER = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {"+": 0, "": 0, "+i": 1, "i": 1, "-": 2, "-i": 3}

CLIFFORD_GATES = ("CNOT", "H", "S", "SDG", "RX90", "RX90DG", "RY90", "RY90DG")


def _parity(mask: int) -> int:
    return bin(mask).count("1") & 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class PauliError(ValueError):
    """Malformed input to a Pauli operation (length mismatch, bad label...)."""


@dataclass(frozen=True)
class SignedPauli:
    """Phase-tracked n-qubit Pauli string.

    The represented operator is ``i**phase_exp * prod_q X_q^{x_q} Z_q^{z_q}``.
    """

    n_qubits: int
    x_mask: int
    z_mask: int
    phase_exp: int = 0

    def __post_init__(self):
        if self.n_qubits < 0:
            raise PauliError("negative qubit count")
        full = (1 << self.n_qubits) - 1
        if self.x_mask & ~full or self.z_mask & ~full:
            raise PauliError("mask exceeds qubit count")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(n_qubits: int) -> "SignedPauli":
        return SignedPauli(n_qubits, 0, 0, 0)

    @staticmethod
    def single(n_qubits: int, qubit: int, letter: str, sign: int = 1) -> "SignedPauli":
        """One non-identity letter at `qubit`, identity elsewhere."""
        if not 0 <= qubit < n_qubits:
            raise PauliError(f"qubit {qubit} out of range for {n_qubits} qubits")
        x, z = _LETTER_TO_BITS[letter]
        phase = (x & z) + (0 if sign == 1 else 2)
        return SignedPauli(n_qubits, x << qubit, z << qubit, phase)

    @staticmethod
    def from_label(label: str) -> "SignedPauli":
        """Parse text form, e.g. ``-iXZIY`` (qubit 0 leftmost)."""
        s = label.strip()
        prefix = ""
        while s and s[0] in "+-i":
            prefix += s[0]
            s = s[1:]
        if prefix not in _PREFIX_PHASE:
            raise PauliError(f"bad sign prefix in {label!r}")
        x = z = n_y = 0
        for q, ch in enumerate(s):
            if ch not in _LETTER_TO_BITS:
                raise PauliError(f"bad Pauli letter {ch!r} in {label!r}")
            xb, zb = _LETTER_TO_BITS[ch]
            x |= xb << q
            z |= zb << q
            n_y += xb & zb
        return SignedPauli(len(s), x, z, (_PREFIX_PHASE[prefix] + n_y) % 4)

    # -- inspection ---------------------------------------------------

    def letter(self, qubit: int) -> str:
        return _BITS_TO_LETTER[((self.x_mask >> qubit) & 1, (self.z_mask >> qubit) & 1)]

    @property
    def n_y(self) -> int:
        return _popcount(self.x_mask & self.z_mask)

    @property
    def coefficient(self) -> complex:
        """Scalar in front of the conventional letter string (i**k with k displayed)."""
        return 1j ** ((self.phase_exp - self.n_y) % 4)

    def to_label(self) -> str:
        letters = "".join(self.letter(q) for q in range(self.n_qubits))
        return _PHASE_PREFIX[(self.phase_exp - self.n_y) % 4] + letters

    def __str__(self) -> str:
        return self.to_label()

    def key(self) -> tuple[int, int]:
        """Unsigned-string key (x_mask, z_mask)."""
        return (self.x_mask, self.z_mask)

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def is_hermitian(self) -> bool:
        """True when the operator squares to +I (real sign, no stray i)."""
        return (self.phase_exp - self.n_y) % 2 == 0

    def sign(self) -> int:
        """+1 or -1 for a Hermitian string; error otherwise."""
        disp = (self.phase_exp - self.n_y) % 4
        if disp == 0:
            return 1
        if disp == 2:
            return -1
        raise PauliError(f"{self.to_label()} carries an imaginary prefix")

    def adjoint(self) -> "SignedPauli":
        phase = (-self.phase_exp + 2 * _parity(self.x_mask & self.z_mask)) % 4
        return SignedPauli(self.n_qubits, self.x_mask, self.z_mask, phase)

    def negate(self) -> "SignedPauli":
        return SignedPauli(self.n_qubits, self.x_mask, self.z_mask, self.phase_exp + 2)


def weight(p: SignedPauli) -> int:
    """Number of non-identity tensor factors."""
    return _popcount(p.x_mask | p.z_mask)


def mul(a: SignedPauli, b: SignedPauli) -> SignedPauli:
    """Exact group product a*b."""
    if a.n_qubits != b.n_qubits:
        raise PauliError(f"length mismatch: {a.n_qubits} vs {b.n_qubits}")
    # X^x1 Z^z1 * X^x2 Z^z2 = (-1)^{z1.x2} X^{x1^x2} Z^{z1^z2}
    phase = (a.phase_exp + b.phase_exp + 2 * _parity(a.z_mask & b.x_mask)) % 4
    return SignedPauli(a.n_qubits, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, phase)


def commutes(a: SignedPauli, b: SignedPauli) -> bool:
    """True iff ab == ba (parity of the symplectic form)."""
    if a.n_qubits != b.n_qubits:
        raise PauliError(f"length mismatch: {a.n_qubits} vs {b.n_qubits}")
    return (_parity(a.x_mask & b.z_mask) ^ _parity(a.z_mask & b.x_mask)) == 0


def remove_qubit(p: SignedPauli, index: int) -> SignedPauli:
    """Drop one qubit position, keeping the stored i-power.

    For I/X/Z positions the printed prefix is unchanged; a removed Y folds
    its internal i into the prefix of the remainder.
    """
    if not 0 <= index < p.n_qubits:
        raise PauliError(f"qubit {index} out of range")
    low = (1 << index) - 1
    x = (p.x_mask & low) | ((p.x_mask >> (index + 1)) << index)
    z = (p.z_mask & low) | ((p.z_mask >> (index + 1)) << index)
    return SignedPauli(p.n_qubits - 1, x, z, p.phase_exp)


def insert_qubit(p: SignedPauli, index: int, letter: str = "I") -> SignedPauli:
    """Inverse of remove_qubit: splice a letter in at `index`."""
    if not 0 <= index <= p.n_qubits:
        raise PauliError(f"insert position {index} out of range")
    xb, zb = _LETTER_TO_BITS[letter]
    low = (1 << index) - 1
    x = (p.x_mask & low) | (xb << index) | ((p.x_mask >> index) << (index + 1))
    z = (p.z_mask & low) | (zb << index) | ((p.z_mask >> index) << (index + 1))
    return SignedPauli(p.n_qubits + 1, x, z, (p.phase_exp + (xb & zb)) % 4)


# -- Clifford conjugation ---------------------------------------------
#
# For each gate we record the images of the generators X_q and Z_q on the
# touched qubits, as (x_bits, z_bits, phase_exp) triples local to the gate.
# Conjugation is a group homomorphism, so the image of X^x Z^z is the
# ordered product of generator images.
#
# Conventions (verified against dense matrices in the test suite):
#   H:        X->Z,  Z->X
#   S:        X->Y,  Z->Z          (S = diag(1, i))
#   RX90  = exp(-i pi/4 X):  Y->Z,  Z->-Y
#   RY90  = exp(-i pi/4 Y):  Z->X,  X->-Z
#   CNOT (control, target):  Xc->XcXt, Zc->Zc, Xt->Xt, Zt->ZcZt

def _img(label: str) -> tuple[int, int, int]:
    p = SignedPauli.from_label(label)
    return (p.x_mask, p.z_mask, p.phase_exp)


_GATE_TABLE: dict[str, tuple[tuple[int, int, int], ...]] = {
    # single-qubit gates: (image of X, image of Z)
    "H": (_img("Z"), _img("X")),
    "S": (_img("Y"), _img("Z")),
    "SDG": (_img("-Y"), _img("Z")),
    "RX90": (_img("X"), _img("-Y")),
    "RX90DG": (_img("X"), _img("Y")),
    "RY90": (_img("-Z"), _img("X")),
    "RY90DG": (_img("Z"), _img("-X")),
    # CNOT: (image of X0, Z0, X1, Z1) with qubit 0 = control, 1 = target
    "CNOT": (_img("XX"), _img("ZI"), _img("IX"), _img("ZZ")),
}

_GATE_ARITY = {name: (2 if name == "CNOT" else 1) for name in _GATE_TABLE}

INVERSE_GATE = {
    "H": "H", "S": "SDG", "SDG": "S", "CNOT": "CNOT",
    "RX90": "RX90DG", "RX90DG": "RX90", "RY90": "RY90DG", "RY90DG": "RY90",
}


def conjugate_by_clifford(p: SignedPauli, gate: str, qubits: tuple[int, ...]) -> SignedPauli:
    """Return g p g^dagger for a named Clifford gate acting on `qubits`."""
    if gate not in _GATE_TABLE:
        raise PauliError(f"unknown Clifford gate {gate!r}")
    qubits = tuple(qubits)
    if len(qubits) != _GATE_ARITY[gate]:
        raise PauliError(f"{gate} expects {_GATE_ARITY[gate]} qubits, got {len(qubits)}")
    if len(set(qubits)) != len(qubits):
        raise PauliError("repeated qubit index")
    for q in qubits:
        if not 0 <= q < p.n_qubits:
            raise PauliError(f"qubit {q} out of range")

    images = _GATE_TABLE[gate]
    k = len(qubits)
    # local product of generator images, in canonical X..Z.. order per qubit
    lx = lz = 0
    lphase = 0
    for j, q in enumerate(qubits):
        for half, bit in ((0, (p.x_mask >> q) & 1), (1, (p.z_mask >> q) & 1)):
            if bit:
                gx, gz, gp = images[2 * j + half] if k == 2 else images[half]
                lphase = (lphase + gp + 2 * _parity(lz & gx)) % 4
                lx ^= gx
                lz ^= gz
    # splice the local result back into the full string
    x, z = p.x_mask, p.z_mask
    for j, q in enumerate(qubits):
        x &= ~(1 << q)
        z &= ~(1 << q)
        x |= ((lx >> j) & 1) << q
        z |= ((lz >> j) & 1) << q
    return SignedPauli(p.n_qubits, x, z, (p.phase_exp + lphase) % 4)
