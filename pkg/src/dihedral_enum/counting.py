"""Closed-form counts of Cayley (di)graphs on D_2p up to isomorphism.

Every formula is evaluated with :class:`fractions.Fraction` so that the
intermediate ``1/p`` and ``1/(p-1)`` terms stay exact; each result is
checked to be an integer before it is returned.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .actions import ActionKind
from .arith import binomial, divisors, factorize, totient
from .dihedral_core import make_group
from .polya import (
    GRAPH_VALENCY_WEIGHTS,
    NonIntegerResult,
    coefficient,
    cycle_index,
    subset_polynomial,
)


class DegreeOutOfRange(ValueError):
    pass


class Filter(enum.Enum):
    ALL = "all"
    CONNECTED = "connected"


class CountMethod(enum.Enum):
    CLOSED_FORM = "closed_form"
    POLYA = "polya"
    ORACLE = "oracle"


@dataclass
class CountReport:
    p: int
    kind: ActionKind
    filter: Filter
    total: int
    method: CountMethod
    by_degree: dict[int, int] | None = field(default=None)

    def __post_init__(self):
        if self.total < 0:
            raise ValueError("counts are nonnegative")
        if self.by_degree is not None and sum(self.by_degree.values()) != self.total:
            raise ValueError("degree histogram does not sum to the total")

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "kind": self.kind.value,
            "filter": self.filter.value,
            "method": self.method.value,
            "total": str(self.total),
        }
        if self.by_degree is not None:
            out["by_degree"] = {str(k): str(v) for k, v in sorted(self.by_degree.items())}
        return out


def _integer(x: Fraction) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"expected an integer, got {x}")
    return x.numerator


def _checked_p(p: int) -> int:
    return make_group(p).p


def _check_degree(k: int, top: int):
    if not 0 <= k <= top:
        raise DegreeOutOfRange(f"degree {k} outside [0, {top}]")


def count_digraphs(p: int) -> int:
    p = _checked_p(p)
    n = Fraction(2**p * (1 - 2 ** (p - 1)), p)
    n += Fraction(2, p - 1) * sum(totient(d) * 2 ** (2 * (p - 1) // d) for d in divisors(p - 1))
    return _integer(n)


def count_circulant_digraphs(p: int) -> int:
    p = _checked_p(p)
    return _integer(Fraction(sum(totient(d) * 2 ** ((p - 1) // d) for d in divisors(p - 1)), p - 1))


def count_connected_digraphs(p: int) -> int:
    return count_digraphs(p) - count_circulant_digraphs(p) - 1


def _inner_sum(p: int, k: int) -> int:
    # sum over d | gcd(p-1, k) of phi(d) C(2(p-1)/d, k/d); gcd(p-1, 0) = p-1
    return sum(
        totient(d) * binomial(2 * (p - 1) // d, k // d) for d in divisors(gcd(p - 1, k))
    )


def count_digraphs_by_outdegree(p: int, k: int) -> int:
    p = _checked_p(p)
    _check_degree(k, 2 * p - 1)
    if k == 0 or k == 2 * p - 1:
        return 1
    m1 = Fraction(_inner_sum(p, k) + _inner_sum(p, k - 1), p - 1)
    if k <= p - 1:
        head = Fraction(binomial(p - 1, k) - binomial(2 * p - 1, k), p)
    else:
        head = Fraction(binomial(p - 1, k - p) - binomial(2 * p - 1, k), p)
    return _integer(head + m1)


def count_circulant_digraphs_by_outdegree(p: int, k: int) -> int:
    p = _checked_p(p)
    _check_degree(k, p - 1)
    total = sum(totient(d) * binomial((p - 1) // d, k // d) for d in divisors(gcd(p - 1, k)))
    return _integer(Fraction(total, p - 1))


def count_connected_digraphs_by_outdegree(p: int, k: int) -> int:
    p = _checked_p(p)
    _check_degree(k, 2 * p - 1)
    if k <= 1:
        return 0
    if k <= p - 1:
        return count_digraphs_by_outdegree(p, k) - count_circulant_digraphs_by_outdegree(p, k)
    return count_digraphs_by_outdegree(p, k)


def count_graphs(p: int) -> int:
    p = _checked_p(p)
    n = Fraction(2 ** ((p + 1) // 2) - 2 ** ((3 * p - 1) // 2), p)
    n += Fraction(2, p - 1) * sum(
        2 ** (gcd(2 * i, p - 1) // 2 + gcd(i, p - 1)) for i in range(p - 1)
    )
    return _integer(n)


def count_circulant_graphs(p: int) -> int:
    p = _checked_p(p)
    h = (p - 1) // 2
    return _integer(Fraction(2, p - 1) * sum(totient(d) * 2 ** (h // d) for d in divisors(h)))


def count_connected_graphs(p: int) -> int:
    return count_graphs(p) - count_circulant_graphs(p) - 1


@lru_cache(maxsize=None)
def graph_valency_polynomial(p: int):
    # cached: count_graphs_by_valency is called once per k
    G = make_group(p)
    return subset_polynomial(cycle_index(G, ActionKind.GRAPH), GRAPH_VALENCY_WEIGHTS)


def count_graphs_by_valency(p: int, k: int) -> int:
    p = _checked_p(p)
    _check_degree(k, 2 * p - 1)
    return coefficient(graph_valency_polynomial(p), k)


def digraph_degree_table(p: int, connected: bool = False) -> dict[int, int]:
    f = count_connected_digraphs_by_outdegree if connected else count_digraphs_by_outdegree
    return {k: f(p, k) for k in range(2 * p)}


def graph_valency_table(p: int) -> dict[int, int]:
    q = graph_valency_polynomial(p)
    return {k: q[k] for k in range(2 * p)}


def count_report(p: int, kind: ActionKind, connected: bool = False, by_degree: bool = False) -> CountReport:
    filt = Filter.CONNECTED if connected else Filter.ALL
    if kind is ActionKind.DIGRAPH:
        total = count_connected_digraphs(p) if connected else count_digraphs(p)
        table = digraph_degree_table(p, connected) if by_degree else None
        return CountReport(p, kind, filt, total, CountMethod.CLOSED_FORM, table)
    total = count_connected_graphs(p) if connected else count_graphs(p)
    if by_degree:
        if connected:
            raise ValueError("no closed form for connected graphs by valency; use the oracle")
        return CountReport(p, kind, filt, total, CountMethod.POLYA, graph_valency_table(p))
    return CountReport(p, kind, filt, total, CountMethod.CLOSED_FORM)


__all__ = [
    "CountMethod",
    "CountReport",
    "DegreeOutOfRange",
    "Filter",
    "binomial",
    "count_circulant_digraphs",
    "count_circulant_digraphs_by_outdegree",
    "count_circulant_graphs",
    "count_connected_digraphs",
    "count_connected_digraphs_by_outdegree",
    "count_connected_graphs",
    "count_digraphs",
    "count_digraphs_by_outdegree",
    "count_graphs",
    "count_graphs_by_valency",
    "count_report",
    "digraph_degree_table",
    "divisors",
    "factorize",
    "graph_valency_table",
    "totient",
]
