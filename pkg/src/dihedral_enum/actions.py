"""The two permutation actions of Aut(D_2p) used for counting.

``Digraph``: the action on D_2p minus the identity, with the p-1 nontrivial
rotations as one part and the p reflections as the other.

``Graph``: the action on inverse-closed building blocks, where each rotation
pair ``{tau^i, tau^-i}`` is a single point (labelled by ``i`` in
``[1, (p-1)/2]``) and the reflections are unchanged.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Mapping

from .dihedral_core import Automorphism, DihedralGroup, discrete_log, primitive_root


class ActionKind(enum.Enum):
    DIGRAPH = "digraph"
    GRAPH = "graph"


class Part(enum.Enum):
    ROTATIONS = "R"
    REFLECTIONS = "F"


@dataclass(frozen=True)
class ActionPoint:
    part: Part
    index: int


def rotation_part_size(G: DihedralGroup, kind: ActionKind) -> int:
    return G.p - 1 if kind is ActionKind.DIGRAPH else (G.p - 1) // 2


def action_size(G: DihedralGroup, kind: ActionKind) -> int:
    return rotation_part_size(G, kind) + G.p


def points(G: DihedralGroup, kind: ActionKind) -> list[ActionPoint]:
    n_rot = rotation_part_size(G, kind)
    return [ActionPoint(Part.ROTATIONS, i) for i in range(1, n_rot + 1)] + [
        ActionPoint(Part.REFLECTIONS, j) for j in range(G.p)
    ]


def _pair_label(i: int, p: int) -> int:
    i %= p
    return i if 2 * i < p else p - i


def permute(a: Automorphism, x: ActionPoint, G: DihedralGroup, kind: ActionKind) -> ActionPoint:
    p = G.p
    if x.part is Part.REFLECTIONS:
        if not 0 <= x.index < p:
            raise ValueError(f"reflection index {x.index} out of range")
        return ActionPoint(Part.REFLECTIONS, (a.s * x.index + a.t) % p)
    if not 1 <= x.index <= rotation_part_size(G, kind):
        raise ValueError(f"rotation index {x.index} out of range for {kind.value}")
    image = (a.s * x.index) % p
    if kind is ActionKind.GRAPH:
        image = _pair_label(image, p)
    return ActionPoint(Part.ROTATIONS, image)


def permutation_table(a: Automorphism, G: DihedralGroup, kind: ActionKind) -> list[int]:
    """``permute`` as a list of point indices in ``points`` order."""
    p, s, t = G.p, a.s, a.t
    if kind is ActionKind.DIGRAPH:
        # rotation i sits at index i-1, reflection j at p-1+j
        rot = [(s * i) % p - 1 for i in range(1, p)]
        off = p - 1
    else:
        h = (p - 1) // 2
        rot = []
        for i in range(1, h + 1):
            r = (s * i) % p
            rot.append((r if r <= h else p - r) - 1)
        off = h
    return rot + [off + (s * j + t) % p for j in range(p)]


@dataclass(frozen=True)
class PartitionedCycleType:
    """Cycle-length multiplicities on each part, as sorted ``(length, count)`` tuples."""

    rot_cycles: tuple[tuple[int, int], ...]
    refl_cycles: tuple[tuple[int, int], ...]

    @classmethod
    def from_counters(cls, rot: Mapping[int, int], refl: Mapping[int, int]) -> PartitionedCycleType:
        return cls(
            tuple(sorted((k, v) for k, v in rot.items() if v)),
            tuple(sorted((k, v) for k, v in refl.items() if v)),
        )

    def merged(self) -> dict[int, int]:
        """The unannotated cycle type ``{k: b_k}``."""
        out: Counter = Counter()
        for k, v in self.rot_cycles:
            out[k] += v
        for k, v in self.refl_cycles:
            out[k] += v
        return dict(sorted(out.items()))

    def degree(self, part: Part | None = None) -> int:
        if part is Part.ROTATIONS:
            cycles = self.rot_cycles
        elif part is Part.REFLECTIONS:
            cycles = self.refl_cycles
        else:
            cycles = self.rot_cycles + self.refl_cycles
        return sum(k * v for k, v in cycles)


def _cycle_lengths(perm: list[int], start: int, stop: int) -> dict[int, int]:
    lengths: dict[int, int] = {}
    seen = bytearray(len(perm))
    for i in range(start, stop):
        if seen[i]:
            continue
        seen[i] = 1
        n = 1
        j = perm[i]
        while j != i:
            seen[j] = 1
            j = perm[j]
            n += 1
        lengths[n] = lengths.get(n, 0) + 1
    return lengths


def cycle_type_direct(a: Automorphism, G: DihedralGroup, kind: ActionKind) -> PartitionedCycleType:
    perm = permutation_table(a, G, kind)
    n_rot = rotation_part_size(G, kind)
    return PartitionedCycleType.from_counters(
        _cycle_lengths(perm, 0, n_rot), _cycle_lengths(perm, n_rot, len(perm))
    )


def cycle_type_closed(
    a: Automorphism, G: DihedralGroup, kind: ActionKind, z: int | None = None
) -> PartitionedCycleType:
    """Cycle type from the closed formulas, via the discrete log of ``s``.

    ``z`` is the primitive root to take logarithms against; the result does
    not depend on it.
    """
    p, s, t = G.p, a.s % G.p, a.t % G.p
    n_rot = rotation_part_size(G, kind)
    if s == 1:
        refl = Counter({1: p}) if t == 0 else Counter({p: 1})
        return PartitionedCycleType.from_counters(Counter({1: n_rot}), refl)
    if z is None:
        z = primitive_root(p)
    i_s = discrete_log(s, z, p)
    g = gcd(i_s, p - 1)
    refl = Counter({1: 1})
    refl[(p - 1) // g] += g
    if kind is ActionKind.DIGRAPH:
        rot = Counter({(p - 1) // g: g})
    else:
        g2 = gcd(2 * i_s, p - 1)
        rot = Counter({(p - 1) // g2: g2 // 2})
    return PartitionedCycleType.from_counters(rot, refl)
