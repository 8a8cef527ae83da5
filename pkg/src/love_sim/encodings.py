"""Fermion-to-qubit encodings as stabilizer codes.

An Encoding bundles a mode graph with vertex operators B_k, edge operators
A_jk for the graph edges, and a stabilizer generator list.  Vertex and edge
operators must satisfy the exchange-statistics relations

    A_jk = -A_kj,
    A_jk anticommutes with B_j and B_k and commutes with every other B_l,
    A_jk and A_kl sharing exactly one mode anticommute, disjoint ones commute,

and every stabilizer generator commutes with all of them and squares to +I.
Hopping terms compile through a_j^dag a_k -> (i/4)(1-B_j) A_jk (1-B_k) and
number operators through a_k^dag a_k -> (1-B_k)/2.

Built-in builders cover the chain encoding (with optional lattice geometry,
in which case edge operators for all nearest-neighbor pairs are composed
along the chain) and the distance-two auxiliary-qubit construction; other
codes load from definition files shipped under data/encodings.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import reduce
from importlib import resources

import numpy as np

from . import gf2
from .pauli_algebra import PauliError, SignedPauli, commutes, mul, weight
from .pauli_sum import FermionSum, PauliSum


class EncodingError(ValueError):
    """Malformed or inconsistent encoding definition."""


# ---------------------------------------------------------------------------
# mode graph
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModeGraph:
    """Connected graph of fermionic modes, optionally with 2D coordinates."""

    n_modes: int
    edges: tuple[tuple[int, int], ...]
    geometry: dict[int, tuple[int, int]] | None = None

    def __post_init__(self):
        seen = set()
        for j, k in self.edges:
            if j == k:
                raise EncodingError(f"self-loop edge ({j},{k})")
            if not (0 <= j < self.n_modes and 0 <= k < self.n_modes):
                raise EncodingError(f"edge ({j},{k}) out of range")
            key = (min(j, k), max(j, k))
            if key in seen:
                raise EncodingError(f"duplicate edge ({j},{k})")
            seen.add(key)
        if self.geometry is not None and set(self.geometry) != set(range(self.n_modes)):
            raise EncodingError("geometry must cover every mode")

    # Disconnected graphs are allowed (spinful fixtures use one component per
    # spin sector); path routing raises when no path exists.
    def is_connected(self) -> bool:
        adj = self.adjacency()
        seen = {0}
        queue = deque([0])
        while queue:
            for nxt in adj[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return len(seen) == self.n_modes

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {m: [] for m in range(self.n_modes)}
        for j, k in self.edges:
            adj[j].append(k)
            adj[k].append(j)
        for m in adj:
            adj[m].sort()
        return adj

    def has_edge(self, j: int, k: int) -> bool:
        return (min(j, k), max(j, k)) in {(min(a, b), max(a, b)) for a, b in self.edges}

    def shortest_path(self, start: int, goal: int) -> list[int]:
        """BFS path with lexicographic tie-breaking; deterministic."""
        if start == goal:
            return [start]
        adj = self.adjacency()
        prev: dict[int, int] = {start: -1}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in adj[node]:
                if nxt not in prev:
                    prev[nxt] = node
                    if nxt == goal:
                        path = [goal]
                        while path[-1] != start:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    queue.append(nxt)
        raise EncodingError(f"no path between modes {start} and {goal}")

    def lattice_pairs(self) -> list[tuple[int, int]]:
        """Nearest-neighbor mode pairs by geometry (unit Manhattan distance)."""
        if self.geometry is None:
            raise EncodingError("graph has no geometry")
        pairs = []
        for j in range(self.n_modes):
            xj, yj = self.geometry[j]
            for k in range(j + 1, self.n_modes):
                xk, yk = self.geometry[k]
                if abs(xj - xk) + abs(yj - yk) == 1:
                    pairs.append((j, k))
        return pairs


def grid_geometry(width: int, height: int) -> dict[int, tuple[int, int]]:
    """Row-major mode coordinates on a width x height lattice."""
    return {y * width + x: (x, y) for y in range(height) for x in range(width)}


def grid_graph(width: int, height: int) -> ModeGraph:
    geometry = grid_geometry(width, height)
    edges = []
    for (j, (xj, yj)), (k, (xk, yk)) in itertools.combinations(geometry.items(), 2):
        if abs(xj - xk) + abs(yj - yk) == 1:
            edges.append((min(j, k), max(j, k)))
    return ModeGraph(width * height, tuple(sorted(edges)), geometry)


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------

def _hermitized(op: SignedPauli) -> SignedPauli:
    """Same unsigned string with printed prefix forced to +."""
    return SignedPauli(op.n_qubits, op.x_mask, op.z_mask, op.n_y)


@dataclass
class Encoding:
    """Validated fermion-to-qubit mapping; immutable after construction."""

    name: str
    n_qubits: int
    graph: ModeGraph
    vertex_ops: dict[int, SignedPauli]
    edge_ops: dict[tuple[int, int], SignedPauli]
    stabilizer_gens: list[SignedPauli]
    meta: dict = field(default_factory=dict)

    @property
    def n_modes(self) -> int:
        return self.graph.n_modes

    def edge_op(self, j: int, k: int) -> SignedPauli:
        """Directed edge operator; the reverse orientation flips the sign."""
        if (j, k) in self.edge_ops:
            return self.edge_ops[(j, k)]
        if (k, j) in self.edge_ops:
            return self.edge_ops[(k, j)].negate()
        raise EncodingError(f"({j},{k}) is not a graph edge of {self.name}")

    # -- validation ------------------------------------------------------

    def validate(self) -> None:
        ops: list[tuple[str, SignedPauli]] = []
        for m, b in sorted(self.vertex_ops.items()):
            ops.append((f"B_{m}", b))
        for (j, k), a in sorted(self.edge_ops.items()):
            ops.append((f"A_{j},{k}", a))

        if set(self.vertex_ops) != set(range(self.n_modes)):
            raise EncodingError(f"{self.name}: vertex operators must cover every mode")
        edge_keys = {(min(j, k), max(j, k)) for j, k in self.edge_ops}
        graph_keys = {(min(j, k), max(j, k)) for j, k in self.graph.edges}
        if edge_keys != graph_keys:
            raise EncodingError(f"{self.name}: edge operators must match graph edges")

        for label, op in ops + [(f"S_{i}", s) for i, s in enumerate(self.stabilizer_gens)]:
            if op.n_qubits != self.n_qubits:
                raise EncodingError(f"{self.name}: {label} has wrong length")
            if mul(op, op).phase_exp != 0:
                raise EncodingError(f"{self.name}: {label} does not square to +I")

        for (j, k), a in self.edge_ops.items():
            for m, b in self.vertex_ops.items():
                want_anti = m in (j, k)
                if commutes(a, b) == want_anti:
                    relation = "anticommute" if want_anti else "commute"
                    raise EncodingError(
                        f"{self.name}: A_{j},{k} and B_{m} must {relation}")

        for (ma, a), (mb, b) in itertools.combinations(sorted(self.vertex_ops.items()), 2):
            if not commutes(a, b):
                raise EncodingError(f"{self.name}: B_{ma} and B_{mb} must commute")

        edge_items = sorted(self.edge_ops.items())
        for ((j1, k1), a), ((j2, k2), b) in itertools.combinations(edge_items, 2):
            shared = len({j1, k1} & {j2, k2})
            if shared == 1 and commutes(a, b):
                raise EncodingError(
                    f"{self.name}: A_{j1},{k1} and A_{j2},{k2} share one mode "
                    "and must anticommute")
            if shared == 0 and not commutes(a, b):
                raise EncodingError(
                    f"{self.name}: A_{j1},{k1} and A_{j2},{k2} are disjoint "
                    "and must commute")

        everything = ops + [(f"S_{i}", s) for i, s in enumerate(self.stabilizer_gens)]
        for i, s in enumerate(self.stabilizer_gens):
            for label, op in everything:
                if label == f"S_{i}":
                    continue
                if not commutes(s, op):
                    raise EncodingError(
                        f"{self.name}: stabilizer S_{i} must commute with {label}")


# ---------------------------------------------------------------------------
# stabilizer-group utilities
# ---------------------------------------------------------------------------

def stabilizer_group(gens: list[SignedPauli]) -> list[SignedPauli]:
    """All 2^r signed products of the generators (r kept small by callers)."""
    n = gens[0].n_qubits if gens else 0
    group = [SignedPauli.identity(n)]
    for g in gens:
        group += [mul(elem, g) for elem in group]
    return group


def min_weight_form(op: SignedPauli, gens: list[SignedPauli],
                    exhaustive_limit: int = 14) -> SignedPauli:
    """Lightest stabilizer-equivalent form of `op` (ties broken on the label).

    Exact over the full group when r <= exhaustive_limit, otherwise a
    single-generator descent.
    """
    def key(p):
        return (weight(p), p.to_label()[1:])

    if not gens:
        return op
    if len(gens) <= exhaustive_limit:
        return min((mul(op, g) for g in stabilizer_group(gens)), key=key)
    best = op
    improved = True
    while improved:
        improved = False
        for g in gens:
            cand = mul(best, g)
            if key(cand) < key(best):
                best = cand
                improved = True
    return best


def min_weight_basis(gens: list[SignedPauli],
                     exhaustive_limit: int = 14) -> list[SignedPauli]:
    """Minimum-weight generating set of the stabilizer group.

    Greedy over the whole group sorted by weight (exact, a matroid greedy)
    when r is small; otherwise returns the input list unchanged.
    """
    if not gens or len(gens) > exhaustive_limit:
        return list(gens)
    n = gens[0].n_qubits
    elems = [g for g in stabilizer_group(gens) if not g.is_identity()]
    elems.sort(key=lambda p: (weight(p), p.to_label()[1:]))
    span = gf2.Span()
    basis = []
    for elem in elems:
        if span.add((elem.x_mask << n) | elem.z_mask):
            basis.append(elem)
            if len(basis) == len(gens):
                break
    return basis


def _symplectic(p: SignedPauli, n: int) -> int:
    return (p.x_mask << n) | p.z_mask


def logical_distance(n_qubits: int, gens: list[SignedPauli],
                     max_weight: int) -> tuple[int | None, bool]:
    """Minimum weight of a logical operator, searched by ascending weight.

    Returns (distance, exact).  A weight-w candidate is logical when it
    commutes with every generator and is not itself a stabilizer product.
    If nothing is found up to max_weight the result is (max_weight + 1,
    False), a lower bound.
    """
    span = gf2.Span([_symplectic(g, n_qubits) for g in gens])
    letters = [SignedPauli.from_label(c) for c in "XYZ"]
    for w in range(1, max_weight + 1):
        for support in itertools.combinations(range(n_qubits), w):
            for choice in itertools.product(letters, repeat=w):
                x = z = 0
                for q, letter in zip(support, choice):
                    x |= letter.x_mask << q
                    z |= letter.z_mask << q
                cand = SignedPauli(n_qubits, x, z, 0)
                if span.contains(_symplectic(cand, n_qubits)):
                    continue
                if all(commutes(cand, g) for g in gens):
                    return w, True
    return max_weight + 1, False


@dataclass(frozen=True)
class CodeParameters:
    n: int
    k: int
    d: int
    d_exact: bool
    avg_edge_weight: float
    avg_vertex_weight: float
    avg_stabilizer_weight: float | None
    rank_deficiency: int


def code_parameters(enc: Encoding) -> CodeParameters:
    """[[n,k,d]] and average weights of the encoding's operator forms.

    Edge weights average over nearest-neighbor lattice pairs when the graph
    carries geometry (composing exchange operators for pairs that are not
    graph edges), otherwise over the graph edges.  Weights are those of the
    shipped operator forms; builders and fixtures are responsible for
    choosing weight-minimized representatives.  The distance search is
    exhaustive by ascending weight for n <= 16 and capped at weight 2
    (a lower bound when nothing is found) beyond that.
    """
    n = enc.n_qubits
    gens = enc.stabilizer_gens
    rank = gf2.rank([_symplectic(g, n) for g in gens])
    k = n - rank

    if enc.graph.geometry is not None:
        pairs = enc.graph.lattice_pairs()
        edge_ops = []
        for j, kk in pairs:
            if enc.graph.has_edge(j, kk):
                edge_ops.append(enc.edge_op(j, kk))
            else:
                edge_ops.append(exchange_operator(enc, enc.graph.shortest_path(j, kk)))
    else:
        edge_ops = [enc.edge_op(j, kk) for j, kk in enc.graph.edges]

    avg_edge = float(np.mean([weight(a) for a in edge_ops]))
    avg_vertex = float(np.mean([weight(b) for b in enc.vertex_ops.values()]))
    avg_stab = float(np.mean([weight(s) for s in gens])) if gens else None

    max_w = min(n, 6) if n <= 16 else 2
    if rank == 0:
        d, exact = 1, True
    else:
        d, exact = logical_distance(n, gens, max_w)
    return CodeParameters(n, k, d, exact, avg_edge, avg_vertex, avg_stab,
                          len(gens) - rank)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_jordan_wigner(ordering, geometry: dict[int, tuple[int, int]] | None = None,
                        name: str = "jw") -> Encoding:
    """Chain encoding: B = Z at the mode's chain position, A = Y X on links.

    `ordering` lists the mode at each chain position.  With `geometry` the
    mode graph becomes the lattice nearest-neighbor graph and edge operators
    for all pairs are composed along the chain; otherwise the graph is the
    chain itself.
    """
    ordering = list(ordering)
    n = len(ordering)
    if sorted(ordering) != list(range(n)):
        raise EncodingError("ordering must be a permutation of all modes")
    pos = {mode: c for c, mode in enumerate(ordering)}

    def chain_op(a: int, b: int) -> SignedPauli:
        """Exchange string between chain positions (a at Y end when a < b)."""
        ca, cb = pos[a], pos[b]
        lo, hi = min(ca, cb), max(ca, cb)
        x = (1 << hi)
        z = ((1 << hi) - (1 << lo)) | (1 << lo)
        op = SignedPauli(n, x | (1 << lo), z, 1)  # Y at lo, Z... between, X at hi
        return op if ca < cb else op.negate()

    vertex_ops = {m: SignedPauli.single(n, pos[m], "Z") for m in range(n)}

    if geometry is not None:
        graph = ModeGraph(n, tuple(grid_graph_edges(geometry)), dict(geometry))
        edge_ops = {}
        for j, k in graph.edges:
            edge_ops[(j, k)] = _compose_chain(j, k, pos, chain_op, ordering, n)
    else:
        edges = tuple((ordering[c], ordering[c + 1]) for c in range(n - 1))
        graph = ModeGraph(n, tuple((min(e), max(e)) for e in edges), None)
        edge_ops = {(ordering[c], ordering[c + 1]):
                    chain_op(ordering[c], ordering[c + 1]) for c in range(n - 1)}

    enc = Encoding(name, n, graph, vertex_ops, edge_ops, [], meta={"family": "jw"})
    enc.validate()
    return enc


def grid_graph_edges(geometry: dict[int, tuple[int, int]]) -> list[tuple[int, int]]:
    edges = []
    for j, k in itertools.combinations(sorted(geometry), 2):
        xj, yj = geometry[j]
        xk, yk = geometry[k]
        if abs(xj - xk) + abs(yj - yk) == 1:
            edges.append((j, k))
    return sorted(edges)


def _compose_chain(j: int, k: int, pos, chain_op, ordering, n) -> SignedPauli:
    """Exchange operator between modes j,k composed along the chain."""
    ca, cb = pos[j], pos[k]
    step = 1 if cb > ca else -1
    hops = [(ordering[c], ordering[c + step]) for c in range(ca, cb, step)]
    op = reduce(mul, (chain_op(a, b) for a, b in hops))
    phase = (len(hops) - 1) % 4
    return SignedPauli(n, op.x_mask, op.z_mask, (op.phase_exp + phase) % 4)


def exchange_operator(enc: Encoding, path) -> SignedPauli:
    """i^(edges-1) times the ordered product of edge operators along `path`."""
    path = list(path)
    if len(path) < 2:
        raise EncodingError("path needs at least two modes")
    for a, b in zip(path, path[1:]):
        if not enc.graph.has_edge(a, b):
            raise EncodingError(f"({a},{b}) is not an edge; broken path")
    op = reduce(mul, (enc.edge_op(a, b) for a, b in zip(path, path[1:])))
    extra = (len(path) - 2) % 4
    return SignedPauli(op.n_qubits, op.x_mask, op.z_mask, (op.phase_exp + extra) % 4)


def build_gaqm(base_jw: Encoding, t_strings, m_matrix, name: str = "gaqm") -> Encoding:
    """Distance-two auxiliary-qubit extension of a chain encoding.

    Appends one qubit per entry of `t_strings` (signed Paulis on the base
    qubits).  An invertible binary matrix M defines the auxiliary X/Z layer:
    Xfrak^k spreads X over column k of M, Zfrak^j spreads Z over row j of
    M^-1.  Stabilizers are Q^k = t^k * Xfrak^k * prod_{j<k, {t_j,t_k}=0}
    Zfrak^j; base logicals are dressed by Zfrak^m for every anticommuting
    t^m; edge operators whose chain string equals some t^mhat are traded
    through Q^mhat for an auxiliary-only form.
    """
    t_strings = list(t_strings)
    big_n = base_jw.n_qubits
    n_aux = len(t_strings)
    n = big_n + n_aux
    m_arr = np.array(m_matrix, dtype=np.uint8) % 2
    if m_arr.shape != (n_aux, n_aux):
        raise EncodingError("M must be (n_aux x n_aux)")
    try:
        m_inv = gf2.invert(m_arr)
    except ValueError as exc:
        raise EncodingError(str(exc)) from exc
    for t in t_strings:
        if t.n_qubits != big_n:
            raise EncodingError("t strings must act on the base qubits")

    def pad(op: SignedPauli) -> SignedPauli:
        return SignedPauli(n, op.x_mask, op.z_mask, op.phase_exp)

    def aux_x(col: int) -> SignedPauli:
        mask = 0
        for j in range(n_aux):
            if m_arr[j, col]:
                mask |= 1 << (big_n + j)
        return SignedPauli(n, mask, 0, 0)

    def aux_z(row: int) -> SignedPauli:
        mask = 0
        for kk in range(n_aux):
            if m_inv[row, kk]:
                mask |= 1 << (big_n + kk)
        return SignedPauli(n, 0, mask, 0)

    def dress(op_base: SignedPauli) -> SignedPauli:
        out = pad(op_base)
        for m_idx, t in enumerate(t_strings):
            if not commutes(op_base, t):
                out = mul(out, aux_z(m_idx))
        return out

    stabilizers = []
    for kk in range(n_aux):
        q = mul(pad(t_strings[kk]), aux_x(kk))
        for j in range(kk):
            if not commutes(t_strings[j], t_strings[kk]):
                q = mul(q, aux_z(j))
        stabilizers.append(_hermitized(q))

    vertex_ops = {m: _hermitized(dress(op))
                  for m, op in base_jw.vertex_ops.items()}

    t_keys = {}
    for idx, t in enumerate(t_strings):
        t_keys.setdefault(t.key(), idx)

    def op_key(p):
        return (weight(p), p.to_label()[1:])

    edge_ops = {}
    for edge, op in base_jw.edge_ops.items():
        candidate = dress(op)
        if op.key() in t_keys:
            # trade through the matching stabilizer for the auxiliary-only form
            traded = mul(stabilizers[t_keys[op.key()]], candidate)
            if op_key(traded) < op_key(candidate):
                candidate = traded
        edge_ops[edge] = candidate

    stabilizers = min_weight_basis(stabilizers)

    enc = Encoding(name, n, base_jw.graph, vertex_ops, edge_ops, stabilizers,
                   meta={"family": "gaqm"})
    enc.validate()
    return enc


# ---------------------------------------------------------------------------
# Hamiltonian compilation
# ---------------------------------------------------------------------------

def _pair_image(enc: Encoding, j: int, k: int) -> PauliSum:
    """Image of a_j^dag a_k as a PauliSum on the physical qubits."""
    n = enc.n_qubits
    one = PauliSum.identity(n)
    b_j = PauliSum.from_terms([(1.0, enc.vertex_ops[j])], n)
    b_k = PauliSum.from_terms([(1.0, enc.vertex_ops[k])], n)
    if j == k:
        return (one + b_k.scaled(-1.0)).scaled(0.5)
    if enc.graph.has_edge(j, k):
        a_jk = enc.edge_op(j, k)
    else:
        a_jk = exchange_operator(enc, enc.graph.shortest_path(j, k))
    a_sum = PauliSum.from_terms([(1.0, a_jk)], n)
    left = one + b_j.scaled(-1.0)
    right = one + b_k.scaled(-1.0)
    return (left @ a_sum @ right).scaled(0.25j)


def encode_hamiltonian(enc: Encoding, h_f: FermionSum) -> PauliSum:
    """Compile a quadratic/quartic fermionic operator to a Pauli sum."""
    out = PauliSum(enc.n_qubits)
    for coeff, ops in h_f.terms:
        if len(ops) % 2 or len(ops) not in (2, 4):
            raise EncodingError(
                f"term with {len(ops)} ladder operators is not quadratic/quartic")
        pairs = [(ops[i], ops[i + 1]) for i in range(0, len(ops), 2)]
        factors = []
        for (mj, dj), (mk, dk) in pairs:
            if not (dj and not dk):
                raise EncodingError(
                    "each ladder pair must be creation followed by annihilation")
            factors.append(_pair_image(enc, mj, mk))
        term = reduce(lambda a, b: a @ b, factors)
        out = out + term.scaled(coeff)
    return out.compress()


def number_operator(enc: Encoding, modes=None) -> PauliSum:
    """Encoded sum of occupation operators over `modes` (default: all)."""
    modes = range(enc.n_modes) if modes is None else modes
    terms = FermionSum.from_terms(enc.n_modes,
                                  [(1.0, ((m, True), (m, False))) for m in modes])
    return encode_hamiltonian(enc, terms)


# ---------------------------------------------------------------------------
# definition files
# ---------------------------------------------------------------------------

def save_encoding(enc: Encoding, path) -> None:
    lines = ["[meta]", f"name = {enc.name}", f"n_qubits = {enc.n_qubits}",
             f"n_modes = {enc.n_modes}"]
    for key, value in sorted(enc.meta.items()):
        lines.append(f"{key} = {value}")
    lines.append("")
    lines.append("[graph]")
    for j, k in enc.graph.edges:
        lines.append(f"edge = {j} {k}")
    if enc.graph.geometry is not None:
        for m in sorted(enc.graph.geometry):
            x, y = enc.graph.geometry[m]
            lines.append(f"coord = {m} {x} {y}")
    lines.append("")
    lines.append("[vertex_ops]")
    for m in sorted(enc.vertex_ops):
        lines.append(f"{m} = {enc.vertex_ops[m].to_label()}")
    lines.append("")
    lines.append("[edge_ops]")
    for (j, k) in sorted(enc.edge_ops):
        lines.append(f"{j} {k} = {enc.edge_ops[(j, k)].to_label()}")
    lines.append("")
    lines.append("[stabilizers]")
    for s in enc.stabilizer_gens:
        lines.append(s.to_label())
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_encoding(path) -> Encoding:
    """Parse and validate a definition file; validation failures are errors."""
    sections: dict[str, list[str]] = {}
    current = None
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1]
                sections[current] = []
                continue
            if current is None:
                raise EncodingError(f"{path}: content before first section")
            sections[current].append(line)

    for required in ("meta", "graph", "vertex_ops", "edge_ops"):
        if required not in sections:
            raise EncodingError(f"{path}: missing [{required}] section")

    meta: dict = {}
    for line in sections["meta"]:
        key, _, value = line.partition("=")
        meta[key.strip()] = value.strip()
    try:
        n_qubits = int(meta.pop("n_qubits"))
        n_modes = int(meta.pop("n_modes"))
        name = meta.pop("name")
    except KeyError as exc:
        raise EncodingError(f"{path}: meta missing {exc}") from exc

    edges = []
    geometry: dict[int, tuple[int, int]] = {}
    for line in sections["graph"]:
        key, _, value = line.partition("=")
        parts = value.split()
        if key.strip() == "edge":
            edges.append((int(parts[0]), int(parts[1])))
        elif key.strip() == "coord":
            geometry[int(parts[0])] = (int(parts[1]), int(parts[2]))
        else:
            raise EncodingError(f"{path}: bad graph line {line!r}")
    graph = ModeGraph(n_modes, tuple(edges), geometry or None)

    vertex_ops = {}
    for line in sections["vertex_ops"]:
        key, _, value = line.partition("=")
        vertex_ops[int(key)] = SignedPauli.from_label(value.strip())
    edge_ops = {}
    for line in sections["edge_ops"]:
        key, _, value = line.partition("=")
        j, k = (int(t) for t in key.split())
        edge_ops[(j, k)] = SignedPauli.from_label(value.strip())
    stabilizers = [SignedPauli.from_label(line) for line in sections.get("stabilizers", [])]

    enc = Encoding(name, n_qubits, graph, vertex_ops, edge_ops, stabilizers, meta)
    try:
        enc.validate()
    except PauliError as exc:
        raise EncodingError(f"{path}: {exc}") from exc
    return enc


def load_builtin(name: str) -> Encoding:
    """Load one of the definition files shipped with the package."""
    ref = resources.files("love_sim").joinpath(f"data/encodings/{name}.enc")
    with resources.as_file(ref) as path:
        return load_encoding(path)
