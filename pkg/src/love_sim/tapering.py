"""Qubit removal for stabilizer conditions, with syndrome-aware signs.

Given r commuting, independent generators squaring to +I, each round picks
the first nontrivial position of the current generator, conditionally
multiplies every remaining string by it, and deletes that qubit.  The
result for a string p is its logical action on the trivial-syndrome block;
a per-round multiplication mask turns that into the action on any syndrome
block via a single inner product, and an anticommutation mask gives the
syndrome flips p causes.

Sign bookkeeping: the sign of the logical operator applying to a state in
syndrome block lambda is ``(-1)**<mult_mask, lambda>`` where lambda is the
block the operator acts on (the pre-flip syndrome).  Multiplication masks
are expressed in the basis of the *input* generator list, so negating input
generator j flips exactly the strings whose mask bit j is set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import gf2
from .pauli_algebra import PauliError, SignedPauli, commutes, mul, remove_qubit, weight
from .pauli_sum import PauliSum

# (u, v, w) triple assigned to each pivot letter u
UVW = {"X": ("X", "Y", "Z"), "Y": ("Y", "X", "Z"), "Z": ("Z", "Y", "X")}


class TaperingError(PauliError):
    """Invalid generator list (dependent, anticommuting, or not involutory)."""


@dataclass(frozen=True)
class TaperRound:
    """One elimination round, stored in the shrinking coordinates of its turn."""

    gen: SignedPauli       # working generator eliminated this round
    pivot: int             # qubit removed, in the coordinates of this round
    uvw: tuple[str, str, str]
    combo_mask: int        # input generators whose product this working gen is
    removed_original: int  # same qubit in the original physical indexing


@dataclass(frozen=True)
class TaperingContext:
    n_qubits: int
    original_gens: tuple[SignedPauli, ...]
    rounds: tuple[TaperRound, ...]
    processed_gens: tuple[SignedPauli, ...]  # full-length eliminated combinations

    @property
    def r(self) -> int:
        return len(self.rounds)

    @property
    def n_logical(self) -> int:
        return self.n_qubits - self.r

    @property
    def removed_qubits(self) -> tuple[int, ...]:
        return tuple(rd.removed_original for rd in self.rounds)


@dataclass(frozen=True)
class TaperRecord:
    """Logical form of one Pauli string plus its syndrome bookkeeping masks."""

    logical: SignedPauli   # action on the trivial-syndrome block
    mult_mask: int         # bit j: input generator j was multiplied in
    anticommute_mask: int  # bit j: string anticommutes with input generator j


def _check_generators(gens: list[SignedPauli], n: int) -> None:
    for g in gens:
        if g.n_qubits != n:
            raise TaperingError("generator length mismatch")
        if mul(g, g).phase_exp != 0:
            raise TaperingError(f"generator {g} does not square to +I")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not commutes(gens[i], gens[j]):
                raise TaperingError(
                    f"generators {i} and {j} anticommute: {gens[i]} vs {gens[j]}")
    if gf2.rank([(g.x_mask << n) | g.z_mask for g in gens]) != len(gens):
        raise TaperingError("dependent generator list")


def build_context(gens, n_qubits: int | None = None) -> TaperingContext:
    """Run the elimination rounds on the generator list alone."""
    gens = list(gens)
    if n_qubits is None:
        if not gens:
            raise TaperingError("cannot infer qubit count from empty generator list")
        n_qubits = gens[0].n_qubits
    _check_generators(gens, n_qubits)

    work = list(gens)
    combos = [1 << j for j in range(len(gens))]
    remaining = list(range(n_qubits))
    rounds: list[TaperRound] = []

    while work:
        s = work.pop(0)
        combo = combos.pop(0)
        if s.is_identity():
            raise TaperingError("generator became trivial mid-run (dependent list)")
        pivot = next(q for q in range(s.n_qubits) if s.letter(q) != "I")
        u, v, w = UVW[s.letter(pivot)]
        rounds.append(TaperRound(s, pivot, (u, v, w), combo, remaining[pivot]))
        del remaining[pivot]
        for i, g in enumerate(work):
            if g.letter(pivot) in (u, v):
                work[i] = mul(g, s)
                combos[i] ^= combo
            work[i] = remove_qubit(work[i], pivot)

    processed = tuple(
        reduce(mul, (gens[j] for j in range(len(gens)) if (rd.combo_mask >> j) & 1))
        for rd in rounds
    )
    return TaperingContext(n_qubits, tuple(gens), rounds, processed)


def taper_one(p: SignedPauli, ctx: TaperingContext) -> TaperRecord:
    """Taper a single string against a prebuilt context."""
    if p.n_qubits != ctx.n_qubits:
        raise TaperingError("string length mismatch")
    anti = 0
    for j, g in enumerate(ctx.original_gens):
        if not commutes(p, g):
            anti |= 1 << j
    work = p
    mult = 0
    for rd in ctx.rounds:
        if work.letter(rd.pivot) in rd.uvw[:2]:
            work = mul(work, rd.gen)
            mult ^= rd.combo_mask
        work = remove_qubit(work, rd.pivot)
    return TaperRecord(work, mult, anti)


def taper(strings, gens) -> tuple[list[TaperRecord], TaperingContext]:
    """Logical representations of `strings` under the generator list.

    Deterministic for fixed inputs; with an empty generator list the records
    are the inputs unchanged.
    """
    strings = list(strings)
    n = strings[0].n_qubits if strings else None
    ctx = build_context(gens, n_qubits=n)
    return [taper_one(p, ctx) for p in strings], ctx


class TaperCache:
    """Memoized taper_one keyed by the signed symplectic triple."""

    def __init__(self, ctx: TaperingContext):
        self.ctx = ctx
        self._seen: dict[tuple[int, int, int], TaperRecord] = {}

    def __call__(self, p: SignedPauli) -> TaperRecord:
        key = (p.x_mask, p.z_mask, p.phase_exp)
        rec = self._seen.get(key)
        if rec is None:
            rec = taper_one(p, self.ctx)
            self._seen[key] = rec
        return rec


def syndrome_sign(record: TaperRecord, syndrome: int, r: int | None = None) -> int:
    """Sign of the logical operator on the block it acts on.

    `syndrome` is an r-bit integer (bit j = sign flip of input generator j).
    Each generator multiplied into the string during reduction contributes a
    -1 exactly when its syndrome bit is set.
    """
    if r is not None and syndrome >> r:
        raise TaperingError("syndrome length mismatch")
    return 1 - 2 * (bin(record.mult_mask & syndrome).count("1") & 1)


def reduce_terms(h: PauliSum, gens) -> PauliSum:
    """Recombine Hamiltonian terms that share a logical representation.

    Terms are tapered, grouped by unsigned logical string, and their signed
    coefficients summed; each surviving group is re-lifted through one
    physical representative (minimum weight, lexicographic tie-break on the
    letter string).  Never increases the term count or the l1 norm.
    """
    phys = [op for _, op in h.terms()]
    coeffs = [c for c, _ in h.terms()]
    records, _ = taper(phys, gens)

    groups: dict[tuple[int, int], list[int]] = {}
    for i, rec in enumerate(records):
        groups.setdefault(rec.logical.key(), []).append(i)

    out = PauliSum(h.n_qubits)
    for members in groups.values():
        total = sum(coeffs[i] * records[i].logical.coefficient for i in members)
        if abs(total) < 1e-12:
            continue
        rep = min(members, key=lambda i: (weight(phys[i]), phys[i].to_label()[1:]))
        out.add(total / records[rep].logical.coefficient, phys[rep])
    return out.compress()
