"""Generators for the shipped Compact/GSE definition files.

These constructions are development-time tooling: the library itself never
derives these codes, it loads the emitted definition files and accepts them
on relation validation plus parameter matching.

Compact-style codes place one qubit per mode plus one per checkerboard
"odd" face; edge operators carry a face letter on their odd side.  GSE-style
codes give each mode ceil(deg/2) qubits hosting local Majorana strings; an
edge operator pairs one local Majorana from each endpoint, vertex operators
are local Z parities, stabilizers are edge-operator loops plus optional
freeze operators built from unused Majoranas.
"""

from __future__ import annotations

import itertools

import numpy as np

from love_sim.encodings import (
    Encoding,
    EncodingError,
    ModeGraph,
    exchange_operator,
    min_weight_basis,
)
from love_sim.pauli_algebra import SignedPauli, commutes, mul, weight


# ---------------------------------------------------------------------------
# Compact (checkerboard face qubits)
# ---------------------------------------------------------------------------

def build_compact(width: int, height: int, name: str,
                  origin: tuple[int, int] = (0, 0),
                  mode_offset: int = 0, qubit_offset: int = 0,
                  total_modes: int | None = None,
                  total_qubits: int | None = None,
                  odd_parity: int = 0):
    """Operator tables for one width x height compact block.

    Returns (vertex_ops, edge_ops, stabilizers, geometry, edges, n_faces).
    Offsets allow assembling multi-block (spinful) fixtures.
    """
    n_modes = width * height
    faces = [(fx, fy) for fx in range(width - 1) for fy in range(height - 1)]
    odd_faces = [f for f in faces if (f[0] + f[1]) % 2 == odd_parity]
    even_faces = [f for f in faces if (f[0] + f[1]) % 2 != odd_parity]
    face_qubit = {f: qubit_offset + n_modes + i for i, f in enumerate(odd_faces)}
    n_total = total_qubits if total_qubits is not None else n_modes + len(odd_faces)
    n_all_modes = total_modes if total_modes is not None else n_modes

    def mode(x, y):
        return mode_offset + y * width + x

    def mode_qubit(x, y):
        return qubit_offset + y * width + x

    def single(qubit, letter):
        return SignedPauli.single(n_total, qubit, letter)

    # vertex pattern: (x+y) % 2 != odd_parity is "A" (N,E -> X; S,W -> Y),
    # the other color is "B" (N,W -> X; S,E -> Y)
    def letter_at(x, y, direction):
        pattern_a = (x + y) % 2 != odd_parity
        if pattern_a:
            return "X" if direction in ("N", "E") else "Y"
        return "X" if direction in ("N", "W") else "Y"

    vertex_ops = {mode(x, y): single(mode_qubit(x, y), "Z")
                  for x in range(width) for y in range(height)}

    edge_ops = {}
    edges = []
    for x in range(width):
        for y in range(height):
            if x + 1 < width:  # horizontal edge, stored west -> east
                op = mul(single(mode_qubit(x, y), letter_at(x, y, "E")),
                         single(mode_qubit(x + 1, y), letter_at(x + 1, y, "W")))
                for f in ((x, y - 1), (x, y)):
                    if f in face_qubit:
                        op = mul(op, single(face_qubit[f], "X"))
                key = (mode(x, y), mode(x + 1, y))
                edge_ops[key] = op
                edges.append(key)
            if y + 1 < height:  # vertical edge, stored north -> south
                op = mul(single(mode_qubit(x, y), letter_at(x, y, "S")),
                         single(mode_qubit(x, y + 1), letter_at(x, y + 1, "N")))
                for f in ((x - 1, y), (x, y)):
                    if f in face_qubit:
                        op = mul(op, single(face_qubit[f], "Y"))
                key = (mode(x, y), mode(x, y + 1))
                edge_ops[key] = op
                edges.append(key)

    geometry = {mode(x, y): (origin[0] + x, origin[1] + y)
                for x in range(width) for y in range(height)}

    # stabilizers: loops around qubit-free (even) faces
    def loop_stabilizer(fx, fy):
        path = [mode(fx, fy), mode(fx + 1, fy), mode(fx + 1, fy + 1),
                mode(fx, fy + 1), mode(fx, fy)]
        local_edge = lambda a, b: (edge_ops[(a, b)] if (a, b) in edge_ops
                                   else edge_ops[(b, a)].negate())
        op = local_edge(path[0], path[1])
        for a, b in zip(path[1:], path[2:]):
            op = mul(op, local_edge(a, b))
        phase = (len(path) - 2) % 4  # exchange-operator composition power
        op = SignedPauli(n_total, op.x_mask, op.z_mask, (op.phase_exp + phase) % 4)
        return SignedPauli(n_total, op.x_mask, op.z_mask, (op.phase_exp + 1) % 4)

    stabilizers = [loop_stabilizer(*f) for f in even_faces]
    return vertex_ops, edge_ops, stabilizers, geometry, edges, len(odd_faces)


def compact_encoding(width, height, name, odd_parity=0) -> Encoding:
    v, e, s, geo, edges, n_faces = build_compact(width, height, name,
                                                 odd_parity=odd_parity)
    n = width * height + n_faces
    graph = ModeGraph(width * height, tuple(edges), geo)
    enc = Encoding(name, n, graph, v, e, list(s), meta={"family": "compact"})
    enc.validate()
    return enc


def compact_two_cluster(name: str) -> Encoding:
    """Two disjoint 2x3 compact blocks (one per spin sector)."""
    per_modes, per_qubits = 6, 7
    all_v, all_e, all_s, all_geo, all_edges = {}, {}, [], {}, []
    for c in range(2):
        v, e, s, geo, edges, _ = build_compact(
            2, 3, name, origin=(3 * c, 0),
            mode_offset=per_modes * c, qubit_offset=per_qubits * c,
            total_modes=2 * per_modes, total_qubits=2 * per_qubits)
        all_v.update(v)
        all_e.update(e)
        all_s.extend(s)
        all_geo.update(geo)
        all_edges.extend(edges)
    graph = ModeGraph(2 * per_modes, tuple(all_edges), all_geo)
    enc = Encoding(name, 2 * per_qubits, graph, all_v, all_e, all_s,
                   meta={"family": "compact", "clusters": 2})
    enc.validate()
    return enc


# ---------------------------------------------------------------------------
# GSE (local Majorana slots)
# ---------------------------------------------------------------------------

def local_majorana(n_total, block_start, index) -> SignedPauli:
    """Majorana string Z^(i) X/Y inside a vertex's qubit block."""
    qubit = block_start + index // 2
    z = 0
    for q in range(block_start, qubit):
        z |= 1 << q
    letter = "X" if index % 2 == 0 else "Y"
    base = SignedPauli.single(n_total, qubit, letter)
    return SignedPauli(n_total, base.x_mask, base.z_mask | z,
                       (base.phase_exp) % 4)


class GseBlock:
    """Qubit block bookkeeping for one GSE fixture.

    `frame` optionally replaces the ladder-shaped local Majoranas by an
    explicit list of mutually anticommuting Hermitian Paulis on the block.
    """

    def __init__(self, n_modes, qubits_per_mode, n_total=None, qubit_offset=0,
                 frame=None):
        self.n_modes = n_modes
        self.qubits_per_mode = list(qubits_per_mode)
        starts = []
        acc = qubit_offset
        for m in range(n_modes):
            starts.append(acc)
            acc += self.qubits_per_mode[m]
        self.block_start = starts
        self.n_total = n_total if n_total is not None else acc
        self.frame = frame

    def majorana(self, mode, index):
        if index >= 2 * self.qubits_per_mode[mode]:
            raise EncodingError("majorana index out of range")
        if self.frame is not None:
            local = self.frame[index]
            return SignedPauli(self.n_total,
                               local.x_mask << self.block_start[mode],
                               local.z_mask << self.block_start[mode],
                               local.phase_exp)
        return local_majorana(self.n_total, self.block_start[mode], index)

    def parity(self, mode):
        if self.frame is not None:
            op = self.majorana(mode, 0)
            for idx in range(1, len(self.frame)):
                op = mul(op, self.majorana(mode, idx))
            return SignedPauli(self.n_total, op.x_mask, op.z_mask, op.n_y)
        z = 0
        for q in range(self.block_start[mode],
                       self.block_start[mode] + self.qubits_per_mode[mode]):
            z |= 1 << q
        return SignedPauli(self.n_total, 0, z, 0)


def gse_edge_op(block, u, pu, v, pv) -> SignedPauli:
    """Edge operator gamma^u_pu gamma^v_pv for the stored orientation u->v."""
    return mul(block.majorana(u, pu), block.majorana(v, pv))


def loop_from_edges(enc_edges, path, n_total) -> SignedPauli:
    """i * exchange operator around a closed mode path."""
    def get(a, b):
        if (a, b) in enc_edges:
            return enc_edges[(a, b)]
        return enc_edges[(b, a)].negate()
    op = get(path[0], path[1])
    for a, b in zip(path[1:], path[2:]):
        op = mul(op, get(a, b))
    phase = (len(path) - 2) % 4
    return SignedPauli(n_total, op.x_mask, op.z_mask, (op.phase_exp + phase + 1) % 4)


# ---------------------------------------------------------------------------
# concrete GSE fixtures
# ---------------------------------------------------------------------------

DIRS = {"N": (0, -1), "E": (1, 0), "S": (0, 1), "W": (-1, 0)}


def _grid_maps(width, height, origin=(0, 0), mode_offset=0):
    coords = {mode_offset + y * width + x: (origin[0] + x, origin[1] + y)
              for x in range(width) for y in range(height)}
    return coords


def gse_grid(width, height, name, dir_order, extra_pairs=(), freezes=(),
             origin=(0, 0), as_encoding=True):
    """Slot-based GSE on a grid, optionally with extra edges or freeze ops.

    dir_order: permutation of "NESW"; a vertex's present directions are
    assigned local Majorana slots in that order.  extra_pairs: mode pairs
    given an extra edge consuming each endpoint's remaining slot.  freezes:
    tuples of modes whose unused-Majorana-times-parity operators multiply
    into one freeze stabilizer each.
    """
    n_modes = width * height
    coords = _grid_maps(width, height, origin=origin)
    inv = {v: k for k, v in coords.items()}

    def neighbors(m):
        x, y = coords[m]
        out = {}
        for d in dir_order:
            dx, dy = DIRS[d]
            if (x + dx, y + dy) in inv:
                out[d] = inv[(x + dx, y + dy)]
        return out

    # slot assignment per vertex: present directions in dir_order order
    slot = {}
    n_slots = {}
    for m in range(n_modes):
        present = [d for d in dir_order if d in neighbors(m)]
        for i, d in enumerate(present):
            slot[(m, neighbors(m)[d])] = i
        n_slots[m] = len(present)
    for a, b in extra_pairs:
        slot[(a, b)] = n_slots[a]
        slot[(b, a)] = n_slots[b]
        n_slots[a] += 1
        n_slots[b] += 1

    qubits_per_mode = [(n_slots[m] + 1) // 2 for m in range(n_modes)]
    block = GseBlock(n_modes, qubits_per_mode)
    n_total = block.n_total

    edges = []
    edge_ops = {}
    for m in range(n_modes):
        for d, other in neighbors(m).items():
            if m < other:
                edges.append((m, other))
                edge_ops[(m, other)] = gse_edge_op(block, m, slot[(m, other)],
                                                   other, slot[(other, m)])
    for a, b in extra_pairs:
        key = (min(a, b), max(a, b))
        edges.append(key)
        edge_ops[key] = gse_edge_op(block, key[0], slot[(key[0], key[1])],
                                    key[1], slot[(key[1], key[0])])

    vertex_ops = {m: block.parity(m) for m in range(n_modes)}

    # plaquette loops
    stabilizers = []
    for fx in range(width - 1):
        for fy in range(height - 1):
            path = [inv[(origin[0] + fx, origin[1] + fy)],
                    inv[(origin[0] + fx + 1, origin[1] + fy)],
                    inv[(origin[0] + fx + 1, origin[1] + fy + 1)],
                    inv[(origin[0] + fx, origin[1] + fy + 1)]]
            stabilizers.append(loop_from_edges(edge_ops, path + [path[0]], n_total))
    # triangles closed through extra edges
    for a, b in extra_pairs:
        xa, ya = coords[a]
        xb, yb = coords[b]
        middle = [m for m in range(n_modes)
                  if abs(coords[m][0]-xa)+abs(coords[m][1]-ya) == 1
                  and abs(coords[m][0]-xb)+abs(coords[m][1]-yb) == 1]
        path = [a, middle[0], b, a]
        stabilizers.append(loop_from_edges(edge_ops, path, n_total))
    # freeze operators from unused Majoranas
    for group in freezes:
        op = SignedPauli.identity(n_total)
        for m in group:
            unused = [i for i in range(2 * qubits_per_mode[m]) if i >= n_slots[m]]
            op = mul(op, mul(block.majorana(m, unused[0]), block.parity(m)))
        stabilizers.append(SignedPauli(n_total, op.x_mask, op.z_mask, op.n_y))

    if not as_encoding:
        return vertex_ops, edge_ops, stabilizers, coords, edges, n_total
    graph = ModeGraph(n_modes, tuple(edges),
                      coords if not extra_pairs else None)
    enc = Encoding(name, n_total, graph, vertex_ops, edge_ops,
                   list(stabilizers), meta={"family": "gse"})
    enc.validate()
    return enc


def gse_custom(n_modes, coords, real_edges, extra_pairs, slot_of, name,
               freezes=(), loops=None, basis="min", geometry=False):
    """Fully explicit slot-based GSE: slot_of[(u, v)] gives u's Majorana slot
    for the (u,v) port; loops is a list of closed mode paths (defaults to
    nothing).  Used by the fixture tuning searches.
    """
    all_edges = list(real_edges) + [tuple(sorted(p)) for p in extra_pairs]
    n_slots = {m: 0 for m in range(n_modes)}
    for (u, v), s in slot_of.items():
        n_slots[u] = max(n_slots[u], s + 1)
    qubits_per_mode = [(max(n_slots[m], 1) + 1) // 2 for m in range(n_modes)]
    block = GseBlock(n_modes, qubits_per_mode)
    n_total = block.n_total

    edge_ops = {}
    for u, v in all_edges:
        edge_ops[(u, v)] = gse_edge_op(block, u, slot_of[(u, v)],
                                       v, slot_of[(v, u)])
    vertex_ops = {m: block.parity(m) for m in range(n_modes)}
    stabilizers = [loop_from_edges(edge_ops, path, n_total) for path in (loops or [])]
    used_slots = {m: {s for (mm, v), s in slot_of.items() if mm == m}
                  for m in range(n_modes)}
    for u, v in freezes:
        # virtual parallel edge: multiply the real (u,v) edge operator by the
        # unused-Majorana pairing, giving a stabilizer of the doubled edge
        real = edge_ops[(u, v)] if (u, v) in edge_ops else edge_ops[(v, u)]
        ju = [i for i in range(2 * qubits_per_mode[u]) if i not in used_slots[u]][0]
        jv = [i for i in range(2 * qubits_per_mode[v]) if i not in used_slots[v]][0]
        virtual = mul(block.majorana(u, ju), block.majorana(v, jv))
        op = mul(real, virtual)
        stabilizers.append(SignedPauli(n_total, op.x_mask, op.z_mask, op.n_y))
    if basis == "min":
        stabilizers = min_weight_basis(stabilizers)
    graph = ModeGraph(n_modes, tuple(all_edges), coords if geometry else None)
    enc = Encoding(name, n_total, graph, vertex_ops, edge_ops,
                   list(stabilizers), meta={"family": "gse"})
    enc.validate()
    return enc
