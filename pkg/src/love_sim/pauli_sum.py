"""Linear combinations of signed Pauli strings and of fermionic ladder terms.

PauliSum stores (coefficient, string) pairs in a canonical form: each stored
string is Hermitian with printed prefix ``+`` (any i-power is folded into the
coefficient), and no two entries share the same unsigned string.  FermionSum
is the fermionic-side companion: terms are tuples of (mode, is_dagger) flags.

Text form, one term per line, used by the CLI::

    <coefficient>\t<pauli-label>
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .pauli_algebra import PauliError, SignedPauli, mul

_ZERO_TOL = 1e-12


def _canonical(op: SignedPauli) -> tuple[complex, SignedPauli]:
    """Split op into (displayed coefficient, prefix-free Hermitian string)."""
    coeff = op.coefficient
    return coeff, SignedPauli(op.n_qubits, op.x_mask, op.z_mask, op.n_y)


@dataclass
class PauliSum:
    """Sum of coefficient-weighted Pauli strings on a fixed qubit count."""

    n_qubits: int
    _terms: dict[tuple[int, int], complex] = field(default_factory=dict)

    @staticmethod
    def from_terms(terms, n_qubits: int | None = None) -> "PauliSum":
        terms = list(terms)
        if n_qubits is None:
            if not terms:
                raise PauliError("cannot infer qubit count from an empty sum")
            n_qubits = terms[0][1].n_qubits
        s = PauliSum(n_qubits)
        for coeff, op in terms:
            s.add(coeff, op)
        return s

    def add(self, coeff: complex, op: SignedPauli) -> None:
        if op.n_qubits != self.n_qubits:
            raise PauliError("term length mismatch")
        extra, _ = _canonical(op)
        key = op.key()
        self._terms[key] = self._terms.get(key, 0.0) + coeff * extra

    def compress(self, tol: float = _ZERO_TOL) -> "PauliSum":
        self._terms = {k: c for k, c in self._terms.items() if abs(c) > tol}
        return self

    def terms(self) -> list[tuple[complex, SignedPauli]]:
        """Canonical (coefficient, Hermitian string) pairs, deterministic order."""
        out = []
        for (x, z) in sorted(self._terms):
            op = SignedPauli(self.n_qubits, x, z, bin(x & z).count("1"))
            out.append((self._terms[(x, z)], op))
        return out

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    def l1_norm(self) -> float:
        return float(sum(abs(c) for c in self._terms.values()))

    def scaled(self, factor: complex) -> "PauliSum":
        s = PauliSum(self.n_qubits)
        s._terms = {k: factor * c for k, c in self._terms.items()}
        return s

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if other.n_qubits != self.n_qubits:
            raise PauliError("qubit-count mismatch")
        s = PauliSum(self.n_qubits)
        s._terms = dict(self._terms)
        for k, c in other._terms.items():
            s._terms[k] = s._terms.get(k, 0.0) + c
        return s

    def __matmul__(self, other: "PauliSum") -> "PauliSum":
        """Operator product, expanded and collected."""
        if other.n_qubits != self.n_qubits:
            raise PauliError("qubit-count mismatch")
        s = PauliSum(self.n_qubits)
        for ca, a in self.terms():
            for cb, b in other.terms():
                s.add(ca * cb, mul(a, b))
        return s.compress()

    def is_hermitian(self, tol: float = 1e-9) -> bool:
        return all(abs(c.imag) < tol for c in self._terms.values())

    @staticmethod
    def identity(n_qubits: int, coeff: complex = 1.0) -> "PauliSum":
        s = PauliSum(n_qubits)
        s.add(coeff, SignedPauli.identity(n_qubits))
        return s

    # -- text form ------------------------------------------------------

    def to_lines(self) -> list[str]:
        lines = []
        for coeff, op in self.terms():
            c = coeff if abs(coeff.imag) > _ZERO_TOL else coeff.real
            lines.append(f"{c!r}\t{op.to_label()}")
        return lines

    @staticmethod
    def from_lines(lines) -> "PauliSum":
        terms = []
        for raw in lines:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            coeff_str, label = line.split("\t")
            terms.append((complex(coeff_str), SignedPauli.from_label(label)))
        return PauliSum.from_terms(terms)


@dataclass(frozen=True)
class FermionSum:
    """Sum of products of fermionic ladder operators.

    Each term is (coefficient, ops) with ops a tuple of (mode, is_dagger)
    pairs applied left to right, e.g. a^dag_1 a_2 is ((1, True), (2, False)).
    """

    n_modes: int
    terms: tuple[tuple[complex, tuple[tuple[int, bool], ...]], ...]

    @staticmethod
    def from_terms(n_modes: int, terms) -> "FermionSum":
        packed = []
        for coeff, ops in terms:
            ops = tuple((int(m), bool(d)) for m, d in ops)
            for m, _ in ops:
                if not 0 <= m < n_modes:
                    raise PauliError(f"mode {m} out of range")
            packed.append((complex(coeff), ops))
        return FermionSum(n_modes, tuple(packed))

    def hermitian_conjugate(self) -> "FermionSum":
        conj = []
        for coeff, ops in self.terms:
            flipped = tuple((m, not d) for m, d in reversed(ops))
            conj.append((coeff.conjugate(), flipped))
        return FermionSum(self.n_modes, tuple(conj))

    def __add__(self, other: "FermionSum") -> "FermionSum":
        if other.n_modes != self.n_modes:
            raise PauliError("mode-count mismatch")
        return FermionSum(self.n_modes, self.terms + other.terms)
