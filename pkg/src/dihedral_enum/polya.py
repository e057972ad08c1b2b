"""Cycle indices of Aut(D_2p) and the two Polya substitutions.

A cycle index is kept as integer masses over the single denominator
``|Aut(D_2p)| = p(p-1)``. Variables are annotated with the part of the
action set they act on, so ``x_{R,d}`` and ``x_{F,d}`` are distinct until
``erased()`` merges them into the usual ``x_d``.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, Mapping

from .actions import ActionKind, Part, PartitionedCycleType, cycle_type_direct
from .arith import divisors, totient
from .dihedral_core import DihedralGroup

# A monomial is a sorted tuple of ((length, part), exponent) factors.
Monomial = tuple


class NonIntegerResult(ArithmeticError):
    """A division that must be exact was not; always an internal bug."""


class Method(enum.Enum):
    DIRECT = "direct"
    CLOSED = "closed"


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerResult(f"{num} is not divisible by {den}")
    return q


def _monomial(factors: Mapping[tuple[int, Part], int]) -> Monomial:
    return tuple(
        sorted(
            ((key, e) for key, e in factors.items() if e),
            key=lambda f: (f[0][0], f[0][1].value),
        )
    )


def monomial_of(ct: PartitionedCycleType) -> Monomial:
    factors: Counter = Counter()
    for k, v in ct.rot_cycles:
        factors[(k, Part.ROTATIONS)] += v
    for k, v in ct.refl_cycles:
        factors[(k, Part.REFLECTIONS)] += v
    return _monomial(factors)


@dataclass(frozen=True)
class CycleIndex:
    group_order: int
    terms: tuple[tuple[Monomial, int], ...]

    @classmethod
    def from_masses(cls, group_order: int, masses: Mapping[Monomial, int]) -> CycleIndex:
        terms = tuple(sorted(((m, c) for m, c in masses.items() if c), key=lambda t: _term_key(t[0])))
        return cls(group_order, terms)

    def mass(self) -> int:
        return sum(c for _, c in self.terms)

    def erased(self) -> dict[tuple[tuple[int, int], ...], int]:
        """Merge part annotations: ``{((length, exponent), ...): coefficient}``."""
        out: Counter = Counter()
        for mono, c in self.terms:
            merged: Counter = Counter()
            for (length, _), e in mono:
                merged[length] += e
            out[tuple(sorted(merged.items()))] += c
        return {m: c for m, c in out.items() if c}

    def ordered_terms(self) -> list[tuple[tuple[tuple[int, int], ...], int]]:
        """Erased terms in print order: x1 exponent descending, then by the
        remaining ``(length, exponent)`` factors."""
        return sorted(self.erased().items(), key=lambda t: _erased_key(t[0]))

    def render(self) -> str:
        rendered = []
        for mono, c in self.ordered_terms():
            factors = "*".join(f"x{k}" if e == 1 else f"x{k}^{e}" for k, e in mono)
            rendered.append(factors if c == 1 else f"{c}*{factors}")
        return f"(1/{self.group_order})*[" + " + ".join(rendered) + "]"

    def __str__(self):
        return self.render()


def _x1_exponent(factors) -> int:
    return sum(e for length, e in factors if length == 1)


def _erased_key(mono):
    return (-_x1_exponent(mono), tuple((k, e) for k, e in mono if k != 1))


def _term_key(mono: Monomial):
    erased = [(length, e) for (length, _), e in mono]
    return (-_x1_exponent(erased), tuple((length, part.value, e) for (length, part), e in mono))


def cycle_index(G: DihedralGroup, kind: ActionKind, method: Method = Method.CLOSED) -> CycleIndex:
    if method is Method.DIRECT:
        return _direct_index(G, kind)
    if kind is ActionKind.DIGRAPH:
        return _closed_digraph_index(G)
    return _closed_graph_index(G)


def _direct_index(G: DihedralGroup, kind: ActionKind) -> CycleIndex:
    return index_from_cycle_types(G, (cycle_type_direct(a, G, kind) for a in G.automorphisms()))


def index_from_cycle_types(G: DihedralGroup, types: Iterable[PartitionedCycleType]) -> CycleIndex:
    """Cycle index from one cycle type per automorphism of ``G``."""
    masses: Counter = Counter()
    for ct, n in Counter(types).items():
        masses[monomial_of(ct)] += n
    if sum(masses.values()) != G.p * (G.p - 1):
        raise ValueError("need exactly one cycle type per automorphism")
    return CycleIndex.from_masses(G.p * (G.p - 1), masses)


def _closed_digraph_index(G: DihedralGroup) -> CycleIndex:
    # (1/p) x1^(p-1) (x_p - x1^p) + (1/(p-1)) x1 sum_{d|p-1} phi(d) x_d^(2(p-1)/d),
    # scaled by p(p-1).
    p = G.p
    R, F = Part.ROTATIONS, Part.REFLECTIONS
    masses: Counter = Counter()
    masses[_monomial({(1, R): p - 1, (p, F): 1})] += p - 1
    masses[_monomial({(1, R): p - 1, (1, F): p})] -= p - 1
    for d in divisors(p - 1):
        e = (p - 1) // d
        factors: Counter = Counter({(1, F): 1})
        factors[(d, R)] += e
        factors[(d, F)] += e
        masses[_monomial(factors)] += p * totient(d)
    return CycleIndex.from_masses(p * (p - 1), masses)


def _closed_graph_index(G: DihedralGroup) -> CycleIndex:
    # (1/p) x1^((p-1)/2) (x_p - x1^p)
    #   + (1/(p-1)) x1 sum_{i=0}^{p-2} x_{(p-1)/g2}^(g2/2) x_{(p-1)/g}^g
    # with g = gcd(i, p-1), g2 = gcd(2i, p-1), scaled by p(p-1).
    p = G.p
    h = (p - 1) // 2
    R, F = Part.ROTATIONS, Part.REFLECTIONS
    masses: Counter = Counter()
    masses[_monomial({(1, R): h, (p, F): 1})] += p - 1
    masses[_monomial({(1, R): h, (1, F): p})] -= p - 1
    for i in range(p - 1):
        g = gcd(i, p - 1)  # gcd(0, n) = n
        g2 = gcd(2 * i, p - 1)
        factors: Counter = Counter({(1, F): 1})
        factors[((p - 1) // g2, R)] += g2 // 2
        factors[((p - 1) // g, F)] += g
        masses[_monomial(factors)] += p
    return CycleIndex.from_masses(p * (p - 1), masses)


def evaluate_constant(ci: CycleIndex, m: int) -> int:
    """``P_G(m, ..., m)``: the number of orbits of m-colourings."""
    if m < 1:
        raise ValueError("m must be positive")
    total = sum(c * m ** sum(e for _, e in mono) for mono, c in ci.terms)
    return _exact_div(total, ci.group_order)


class UnivariatePolynomial:
    """Integer polynomial in one variable, stored sparsely by degree."""

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        self.coefficients = {k: v for k, v in (coefficients or {}).items() if v}

    def __getitem__(self, k: int) -> int:
        return self.coefficients.get(k, 0)

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __repr__(self):
        return f"UnivariatePolynomial({dict(sorted(self.coefficients.items()))})"

    @property
    def degree(self) -> int:
        return max(self.coefficients, default=-1)

    def as_list(self) -> list[int]:
        return [self[k] for k in range(self.degree + 1)]

    def at_one(self) -> int:
        return sum(self.coefficients.values())


def coefficient(q: UnivariatePolynomial, k: int) -> int:
    return q[k]


def _mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: defaultdict = defaultdict(int)
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] += x * y
    return out


def _binomial_power(step: int, e: int) -> dict[int, int]:
    # (1 + x^step)^e
    return {step * i: comb(e, i) for i in range(e + 1)}


def subset_polynomial(ci: CycleIndex, weight_per_part: Mapping[Part, int] | None = None) -> UnivariatePolynomial:
    """Substitute ``x_{part,d} -> 1 + x^(d * weight[part])`` and normalise.

    With unit weights the coefficient of ``x^k`` counts orbits of k-subsets.
    Weight 2 on the rotation part of the graph action counts each rotation
    pair as two elements, giving valency.
    """
    weights = {Part.ROTATIONS: 1, Part.REFLECTIONS: 1}
    if weight_per_part:
        weights.update(weight_per_part)
    total: defaultdict = defaultdict(int)
    for mono, c in ci.terms:
        poly: dict[int, int] = {0: 1}
        for (length, part), e in mono:
            poly = _mul(poly, _binomial_power(length * weights[part], e))
        for k, v in poly.items():
            total[k] += c * v
    return UnivariatePolynomial({k: _exact_div(v, ci.group_order) for k, v in total.items()})


GRAPH_VALENCY_WEIGHTS = {Part.ROTATIONS: 2, Part.REFLECTIONS: 1}
