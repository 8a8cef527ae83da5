"""Tapering checked against dense projector embeddings and re-taper oracles."""

import itertools

import numpy as np
import pytest

from love_sim.pauli_algebra import SignedPauli, commutes, conjugate_by_clifford, mul
from love_sim.pauli_sum import PauliSum
from love_sim.tapering import (
    TaperCache,
    TaperingError,
    build_context,
    reduce_terms,
    syndrome_sign,
    taper,
    taper_one,
)

from conftest import PLUS_STATES, dense, dense_sum, insert_product_legs


def embed(ctx, syndrome: int, phi: np.ndarray) -> np.ndarray:
    """Dense isometry from the logical space into the physical syndrome block.

    Implements the product form: seed the removed qubits with the round's
    +1 eigenstates of w, then apply one (1 + (-1)^s G)/sqrt(2) per input
    generator.
    """
    legs = [(rd.removed_original, PLUS_STATES[rd.uvw[2]]) for rd in ctx.rounds]
    v = insert_product_legs(phi, legs)
    for j, g in enumerate(ctx.original_gens):
        sign = -1 if (syndrome >> j) & 1 else 1
        v = (v + sign * (dense(g) @ v)) / np.sqrt(2)
    return v


def random_stabilizer_set(rng, n, r):
    """Random commuting independent Hermitian generators via Clifford dressing."""
    gens = [SignedPauli.single(n, q, "Z", sign=1 if rng.random() < 0.7 else -1)
            for q in range(r)]
    for _ in range(3 * n):
        roll = rng.random()
        if roll < 0.4:
            c, t = rng.choice(n, size=2, replace=False)
            gate, qubits = "CNOT", (int(c), int(t))
        else:
            gate = ["H", "S", "RX90", "RY90"][int(rng.integers(4))]
            qubits = (int(rng.integers(n)),)
        gens = [conjugate_by_clifford(g, gate, qubits) for g in gens]
    return gens


def random_pauli(rng, n):
    return SignedPauli(n, int(rng.integers(1 << n)), int(rng.integers(1 << n)),
                       int(rng.integers(4)))


class TestWorkedExamples:
    """Hand-checked single-generator cases verified by the dense embedding."""

    def setup_method(self):
        self.gens = [SignedPauli.from_label("+ZZ")]
        _, self.ctx = taper([], self.gens)

    def test_logical_x(self):
        rec = taper_one(SignedPauli.from_label("+XX"), self.ctx)
        assert rec.logical.to_label() == "+X"
        assert rec.anticommute_mask == 0
        assert rec.mult_mask == 0

    def test_multiplication_path(self):
        rec = taper_one(SignedPauli.from_label("+ZI"), self.ctx)
        assert rec.logical.to_label() == "+Z"
        assert rec.anticommute_mask == 0
        assert rec.mult_mask == 1

    def test_syndrome_flip(self):
        rec = taper_one(SignedPauli.from_label("+XI"), self.ctx)
        assert rec.logical.to_label() == "+I"
        assert rec.anticommute_mask == 1

    def test_empty_generator_list(self):
        strings = [SignedPauli.from_label("-iXZY")]
        records, ctx = taper(strings, [])
        assert records[0].logical == strings[0]
        assert ctx.r == 0

    def test_idempotent_on_own_output(self):
        strings = [SignedPauli.from_label("+XX"), SignedPauli.from_label("+ZI")]
        records, _ = taper(strings, self.gens)
        again, _ = taper([r.logical for r in records], [])
        for first, second in zip(records, again):
            assert second.logical == first.logical


class TestDenseSoundness:
    """p . V_lambda == V_{lambda^nu} . (sign * logical) on random instances."""

    @pytest.mark.parametrize("n,r,seed", [(2, 1, 1), (3, 1, 2), (4, 2, 3),
                                          (5, 2, 4), (6, 3, 5), (6, 3, 6)])
    def test_embedding_identity(self, n, r, seed):
        rng = np.random.default_rng(seed)
        gens = random_stabilizer_set(rng, n, r)
        ctx = build_context(gens)
        k = n - r
        for _ in range(40):
            p = random_pauli(rng, n)
            rec = taper_one(p, ctx)
            phi = rng.standard_normal(1 << k) + 1j * rng.standard_normal(1 << k)
            phi /= np.linalg.norm(phi)
            for syndrome in range(1 << r):
                lhs = dense(p) @ embed(ctx, syndrome, phi)
                sign = syndrome_sign(rec, syndrome)
                logical_phi = sign * (dense(rec.logical) @ phi)
                rhs = embed(ctx, syndrome ^ rec.anticommute_mask, logical_phi)
                assert np.allclose(lhs, rhs, atol=1e-10), (
                    f"n={n} r={r} p={p} syndrome={syndrome:0{r}b}"
                )

    def test_embedding_is_isometry(self):
        rng = np.random.default_rng(11)
        gens = random_stabilizer_set(rng, 5, 2)
        ctx = build_context(gens)
        phi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        phi /= np.linalg.norm(phi)
        for syndrome in range(4):
            v = embed(ctx, syndrome, phi)
            assert np.isclose(np.linalg.norm(v), 1.0, atol=1e-10)


class TestSyndromeSign:
    def test_trivial_syndrome(self, rng):
        gens = random_stabilizer_set(rng, 5, 3)
        ctx = build_context(gens)
        for _ in range(20):
            rec = taper_one(random_pauli(rng, 5), ctx)
            assert syndrome_sign(rec, 0) == 1

    def test_single_overlap(self):
        gens = [SignedPauli.from_label("+ZZI"), SignedPauli.from_label("+IZZ")]
        _, ctx = taper([], gens)
        rec = taper_one(SignedPauli.from_label("+ZII"), ctx)
        assert rec.mult_mask & 1
        assert syndrome_sign(rec, 0b01) == -1

    def test_matches_negated_generator_retaper(self, rng):
        for seed in range(6):
            local = np.random.default_rng(100 + seed)
            gens = random_stabilizer_set(local, 6, 3)
            ctx = build_context(gens)
            strings = [random_pauli(local, 6) for _ in range(15)]
            base = [taper_one(p, ctx) for p in strings]
            for syndrome in range(8):
                flipped = [g.negate() if (syndrome >> j) & 1 else g
                           for j, g in enumerate(gens)]
                ctx_f = build_context(flipped)
                for p, rec in zip(strings, base):
                    rec_f = taper_one(p, ctx_f)
                    sign = syndrome_sign(rec, syndrome)
                    expect = rec.logical if sign == 1 else rec.logical.negate()
                    assert rec_f.logical == expect


class TestProperties:
    def test_commutation_preservation(self, rng):
        gens = random_stabilizer_set(rng, 6, 2)
        ctx = build_context(gens)
        kept = []
        while len(kept) < 10:
            p = random_pauli(rng, 6)
            if all(commutes(p, g) for g in gens):
                kept.append(p)
        recs = [taper_one(p, ctx) for p in kept]
        for (pa, ra), (pb, rb) in itertools.combinations(zip(kept, recs), 2):
            assert commutes(pa, pb) == commutes(ra.logical, rb.logical)

    def test_generators_taper_to_identity(self, rng):
        gens = random_stabilizer_set(rng, 6, 3)
        ctx = build_context(gens)
        for j, g in enumerate(gens):
            rec = taper_one(g, ctx)
            assert rec.logical == SignedPauli.identity(3)
            assert rec.anticommute_mask == 0
            assert syndrome_sign(rec, 1 << j) == -1

    def test_rejects_bad_generator_lists(self):
        zz = SignedPauli.from_label("+ZZ")
        with pytest.raises(TaperingError):
            taper([], [zz, zz])
        with pytest.raises(TaperingError):
            taper([], [SignedPauli.from_label("+XI"), SignedPauli.from_label("+ZI")])
        with pytest.raises(TaperingError):
            taper([], [SignedPauli.from_label("+iXZ")])

    def test_cache_consistency(self, rng):
        gens = random_stabilizer_set(rng, 5, 2)
        ctx = build_context(gens)
        cache = TaperCache(ctx)
        for _ in range(30):
            p = random_pauli(rng, 5)
            assert cache(p) == taper_one(p, ctx)


class TestReduceTerms:
    def test_forced_recombination(self):
        s = SignedPauli.from_label("+ZZ")
        p = SignedPauli.from_label("+XX")
        sp = mul(s, p)
        h = PauliSum.from_terms([(0.5, p), (0.5, sp)])
        out = reduce_terms(h, [s])
        assert out.n_terms == 1
        [(coeff, op)] = out.terms()
        assert np.isclose(abs(coeff), 1.0)

    def test_never_increases_count_or_norm(self, rng):
        for seed in range(5):
            local = np.random.default_rng(300 + seed)
            gens = random_stabilizer_set(local, 6, 2)
            terms = []
            while len(terms) < 12:
                p = random_pauli(local, 6)
                if all(commutes(p, g) for g in gens):
                    terms.append((float(local.standard_normal()), p))
            h = PauliSum.from_terms(terms)
            out = reduce_terms(h, gens)
            assert out.n_terms <= h.n_terms
            assert out.l1_norm() <= h.l1_norm() + 1e-9

    def test_preserves_codespace_action(self, rng):
        for seed in range(4):
            local = np.random.default_rng(400 + seed)
            gens = random_stabilizer_set(local, 5, 2)
            terms = []
            while len(terms) < 10:
                p = random_pauli(local, 5)
                if all(commutes(p, g) for g in gens):
                    terms.append((float(local.standard_normal()), p))
            h = PauliSum.from_terms(terms)
            out = reduce_terms(h, gens)
            ctx = build_context(gens)
            proj = np.eye(1 << 5, dtype=complex)
            for g in gens:
                proj = proj @ (np.eye(1 << 5) + dense(g)) / 2
            before = proj @ dense_sum(h) @ proj
            after = proj @ dense_sum(out) @ proj
            assert np.allclose(before, after, atol=1e-9)
