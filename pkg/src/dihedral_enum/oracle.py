"""Brute-force orbit counting used to check the closed forms.

Connection sets are bit masks over the points of an action (see
:func:`dihedral_enum.actions.points`): bit ``i`` set means point ``i`` is in
the set. For the graph action a rotation-pair bit stands for both
``tau^i`` and ``tau^-i``, so every mask is inverse-closed by construction.

An orbit is counted once, at its least mask. The sweep walks every mask,
maps it through each automorphism with byte-wise lookup tables and drops it
as soon as some image is smaller.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .actions import ActionKind, Part, action_size, permutation_table, points, rotation_part_size
from .dihedral_core import DihedralGroup, GroupElement, is_connected, make_group

log = logging.getLogger(__name__)

GUARD = {ActionKind.DIGRAPH: 13, ActionKind.GRAPH: 17}
THREADS_ENV = "DIHEDRAL_ENUM_THREADS"
# Below this many masks a single process is faster than spawning workers.
_PARALLEL_THRESHOLD = 1 << 20
# Upper bound on masks held in memory by one sweep call.
_RANGE_SIZE = 1 << 22
_CHUNK_BITS = 8


class TooLarge(RuntimeError):
    def __init__(self, p, kind):
        super().__init__(
            f"p={p} exceeds the oracle limit for {kind.value} (p <= {GUARD[kind]}); "
            "pass force=True to run anyway"
        )
        self.p = p
        self.kind = kind


def check_guard(p: int, kind: ActionKind, force: bool = False):
    if p > GUARD[kind] and not force:
        raise TooLarge(p, kind)


def to_mask(S, G: DihedralGroup, kind: ActionKind = ActionKind.DIGRAPH) -> int:
    """Encode a set of group elements (digraph) or action points as a mask."""
    pts = points(G, kind)
    index = {x: i for i, x in enumerate(pts)}
    n_rot = rotation_part_size(G, kind)
    mask = 0
    for g in S:
        if isinstance(g, GroupElement):
            if g.is_reflection:
                i = n_rot + g.exponent
            elif kind is ActionKind.DIGRAPH:
                i = g.exponent - 1
            else:
                label = g.exponent if 2 * g.exponent < G.p else G.p - g.exponent
                i = label - 1
            if i < 0:
                raise ValueError("the identity is not part of any connection set")
        else:
            i = index[g]
        mask |= 1 << i
    return mask


def to_elements(mask: int, G: DihedralGroup, kind: ActionKind = ActionKind.DIGRAPH) -> frozenset[GroupElement]:
    """Decode a mask into the connection set it denotes, in group elements."""
    out = set()
    for i, x in enumerate(points(G, kind)):
        if not (mask >> i) & 1:
            continue
        if x.part is Part.REFLECTIONS:
            out.add(GroupElement(True, x.index))
        else:
            out.add(GroupElement(False, x.index))
            if kind is ActionKind.GRAPH:
                out.add(GroupElement(False, G.p - x.index))
    return frozenset(out)


def mask_size(mask: int, G: DihedralGroup, kind: ActionKind) -> int:
    """Number of group elements in the set, so rotation pairs count twice."""
    if kind is ActionKind.DIGRAPH:
        return bin(mask).count("1")
    n_rot = rotation_part_size(G, kind)
    rot = mask & ((1 << n_rot) - 1)
    return 2 * bin(rot).count("1") + bin(mask >> n_rot).count("1")


def apply_to_mask(perm: list[int], mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def canonical_form(mask: int, G: DihedralGroup, kind: ActionKind = ActionKind.DIGRAPH) -> int:
    """Least mask in the Aut(D_2p)-orbit of ``mask``."""
    return min(apply_to_mask(permutation_table(a, G, kind), mask) for a in G.automorphisms())


@lru_cache(maxsize=8)
def _lookup_tables(p: int, kind: ActionKind) -> np.ndarray:
    """Shape ``(n_aut - 1, n_chunks, 256)``: image of every byte of a mask.

    The identity automorphism is skipped since it never shrinks a mask.
    """
    G = make_group(p)
    n = action_size(G, kind)
    n_chunks = -(-n // _CHUNK_BITS)
    autos = [a for a in G.automorphisms() if not (a.s == 1 and a.t == 0)]
    tables = np.zeros((len(autos), n_chunks, 1 << _CHUNK_BITS), dtype=np.uint64)
    byte_values = np.arange(1 << _CHUNK_BITS, dtype=np.uint64)
    for ai, a in enumerate(autos):
        perm = permutation_table(a, G, kind)
        for c in range(n_chunks):
            acc = np.zeros(1 << _CHUNK_BITS, dtype=np.uint64)
            for b in range(_CHUNK_BITS):
                src = c * _CHUNK_BITS + b
                if src >= n:
                    break
                bit = (byte_values >> np.uint64(b)) & np.uint64(1)
                acc |= bit << np.uint64(perm[src])
            tables[ai, c] = acc
    return tables


def _sweep(p: int, kind: ActionKind, lo: int, hi: int) -> np.ndarray:
    """Masks in ``[lo, hi)`` that are the least element of their orbit."""
    tables = _lookup_tables(p, kind)
    x = np.arange(lo, hi, dtype=np.uint64)
    n_chunks = tables.shape[1]
    shifts = [np.uint64(c * _CHUNK_BITS) for c in range(n_chunks)]
    low_byte = np.uint64((1 << _CHUNK_BITS) - 1)
    for table in tables:
        if x.size == 0:
            break
        img = table[0][x & low_byte]
        for c in range(1, n_chunks):
            img |= table[c][(x >> shifts[c]) & low_byte]
        x = x[img >= x]
    return x


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0")
    return n or (os.cpu_count() or 1)


def representatives(p: int, kind: ActionKind, force: bool = False, workers: int | None = None) -> list[int]:
    """Sorted least masks of all orbits."""
    check_guard(p, kind, force)
    G = make_group(p)
    total = 1 << action_size(G, kind)
    workers = worker_count() if workers is None else workers
    n_ranges = max(-(-total // _RANGE_SIZE), 4 * workers if total >= _PARALLEL_THRESHOLD else 1)
    bounds = np.linspace(0, total, n_ranges + 1, dtype=np.int64)
    los = [int(a) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    his = [int(b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    if workers <= 1 or total < _PARALLEL_THRESHOLD:
        parts = [_sweep(p, kind, lo, hi) for lo, hi in zip(los, his)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_sweep, [p] * len(los), [kind] * len(los), los, his))
    return sorted(int(r) for part in parts for r in part)


@dataclass
class OracleReport:
    p: int
    kind: ActionKind
    orbit_count: int
    by_size: dict[int, int]
    connected_count: int
    connected_by_size: dict[int, int]
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "kind": self.kind.value,
            "method": "oracle",
            "orbit_count": str(self.orbit_count),
            "by_size": {str(k): str(v) for k, v in sorted(self.by_size.items())},
            "connected_count": str(self.connected_count),
            "connected_by_size": {str(k): str(v) for k, v in sorted(self.connected_by_size.items())},
            "elapsed": round(self.elapsed, 6),
        }


def enumerate_orbits(
    p: int,
    kind: ActionKind,
    connected_only: bool = False,
    force: bool = False,
    workers: int | None = None,
) -> OracleReport:
    """Count orbits of connection sets, overall and by size.

    With ``connected_only`` the top-level ``orbit_count``/``by_size`` fields
    are restricted to connected sets as well.
    """
    start = time.perf_counter()
    G = make_group(p)
    reps = representatives(p, kind, force=force, workers=workers)
    n_elems = 2 * p - 1
    by_size = dict.fromkeys(range(n_elems + 1), 0)
    conn_by_size = dict.fromkeys(range(n_elems + 1), 0)
    for r in reps:
        k = mask_size(r, G, kind)
        by_size[k] += 1
        # connectivity is invariant on orbits, so testing the representative is enough
        if is_connected(to_elements(r, G, kind), G):
            conn_by_size[k] += 1
    if connected_only:
        by_size = dict(conn_by_size)
    elapsed = time.perf_counter() - start
    log.debug("oracle p=%d %s: %d orbits in %.3fs", p, kind.value, len(reps), elapsed)
    return OracleReport(
        p,
        kind,
        sum(by_size.values()),
        by_size,
        sum(conn_by_size.values()),
        conn_by_size,
        elapsed,
    )


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def detail(self) -> str:
        if self.passed:
            return "ok"
        if isinstance(self.expected, list) and isinstance(self.actual, list):
            for i, (e, a) in enumerate(zip(self.expected, self.actual)):
                if e != a:
                    return f"first mismatch at index {i}: expected {e}, got {a}"
            return f"length mismatch: expected {len(self.expected)}, got {len(self.actual)}"
        return f"expected {self.expected}, got {self.actual}"

    def to_dict(self) -> dict:
        def enc(v):
            return [str(x) for x in v] if isinstance(v, list) else str(v)

        return {
            "name": self.name,
            "passed": self.passed,
            "expected": enc(self.expected),
            "actual": enc(self.actual),
        }


@dataclass
class VerificationReport:
    p: int
    kind: ActionKind
    checks: list[Check]
    oracle: OracleReport

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_mismatch(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "kind": self.kind.value,
            "method": "oracle",
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def verify(p: int, kind: ActionKind, force: bool = False, workers: int | None = None) -> VerificationReport:
    """Compare brute-force orbit counts with the closed forms and Polya route."""
    from . import counting
    from .polya import GRAPH_VALENCY_WEIGHTS, Method, cycle_index, evaluate_constant, subset_polynomial

    rep = enumerate_orbits(p, kind, force=force, workers=workers)
    G = make_group(p)
    ks = list(range(2 * p))
    brute = [rep.by_size[k] for k in ks]
    brute_conn = [rep.connected_by_size[k] for k in ks]
    checks = []
    for method in Method:
        ci = cycle_index(G, kind, method)
        checks.append(Check(f"polya_total[{method.value}]", evaluate_constant(ci, 2), rep.orbit_count))
    ci = cycle_index(G, kind)
    if kind is ActionKind.DIGRAPH:
        q = subset_polynomial(ci)
        checks += [
            Check("N", counting.count_digraphs(p), rep.orbit_count),
            Check("N_1", counting.count_connected_digraphs(p), rep.connected_count),
            Check("N_c + 1", counting.count_circulant_digraphs(p) + 1, rep.orbit_count - rep.connected_count),
            Check("M_k", [counting.count_digraphs_by_outdegree(p, k) for k in ks], brute),
            Check("polya_M_k", [q[k] for k in ks], brute),
            Check("M'_k", [counting.count_connected_digraphs_by_outdegree(p, k) for k in ks], brute_conn),
        ]
    else:
        q = subset_polynomial(ci, GRAPH_VALENCY_WEIGHTS)
        checks += [
            Check("N'", counting.count_graphs(p), rep.orbit_count),
            Check("N_1'", counting.count_connected_graphs(p), rep.connected_count),
            Check("N_c' + 1", counting.count_circulant_graphs(p) + 1, rep.orbit_count - rep.connected_count),
            Check("valency", [q[k] for k in ks], brute),
        ]
    return VerificationReport(p, kind, checks, rep)
