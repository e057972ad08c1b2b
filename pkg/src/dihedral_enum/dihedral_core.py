"""The dihedral group D_2p for an odd prime p, its automorphisms and Z_p^x.

Elements are stored as ``(is_reflection, exponent)``: ``tau^i`` is
``GroupElement(False, i)`` and ``tau^j sigma`` is ``GroupElement(True, j)``.
Automorphisms are the affine maps ``alpha_{s,t}`` with ``tau^i -> tau^(s*i)``
and ``tau^j sigma -> tau^(s*j + t) sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class NotOddPrime(ValueError):
    def __init__(self, p):
        super().__init__(f"p must be an odd prime, got {p!r}")
        self.p = p


class IdentityInSet(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class DihedralGroup:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise NotOddPrime(self.p)
        if self.p < 3 or not is_prime(self.p):
            raise NotOddPrime(self.p)

    @property
    def order(self) -> int:
        return 2 * self.p

    @property
    def identity(self) -> GroupElement:
        return GroupElement(False, 0)

    def elements(self) -> list[GroupElement]:
        """Rotations ``tau^0..tau^(p-1)`` followed by reflections."""
        return [GroupElement(False, i) for i in range(self.p)] + [
            GroupElement(True, j) for j in range(self.p)
        ]

    def non_identity(self) -> list[GroupElement]:
        return self.elements()[1:]

    def automorphisms(self) -> list[Automorphism]:
        """All p(p-1) automorphisms, ordered by (s, t)."""
        return [Automorphism(s, t) for s in range(1, self.p) for t in range(self.p)]


@dataclass(frozen=True, order=True)
class GroupElement:
    is_reflection: bool
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError(f"exponent must be reduced mod p, got {self.exponent}")

    def __str__(self):
        if self.is_reflection:
            if self.exponent == 0:
                return "s"
            return f"t^{self.exponent}s" if self.exponent > 1 else "ts"
        if self.exponent == 0:
            return "e"
        return f"t^{self.exponent}" if self.exponent > 1 else "t"


def rotation(i: int, G: DihedralGroup) -> GroupElement:
    return GroupElement(False, i % G.p)


def reflection(j: int, G: DihedralGroup) -> GroupElement:
    return GroupElement(True, j % G.p)


@dataclass(frozen=True, order=True)
class Automorphism:
    s: int
    t: int

    def __post_init__(self):
        if self.s <= 0:
            raise ValueError(f"s must be a unit mod p, got {self.s}")

    def __str__(self):
        return f"alpha_{{{self.s},{self.t}}}"


def make_group(p: int) -> DihedralGroup:
    return DihedralGroup(p)


def make_automorphism(s: int, t: int, G: DihedralGroup) -> Automorphism:
    s %= G.p
    if s == 0:
        raise ValueError("s must be nonzero mod p")
    return Automorphism(s, t % G.p)


def _check(g: GroupElement, G: DihedralGroup):
    if not 0 <= g.exponent < G.p:
        raise ValueError(f"{g!r} is not an element of D_{G.order}")


def multiply(g: GroupElement, h: GroupElement, G: DihedralGroup) -> GroupElement:
    # sigma tau^i = tau^(-i) sigma, so tau^a sigma^x * tau^b sigma^y
    # = tau^(a + (-1)^x b) sigma^(x + y)
    _check(g, G)
    _check(h, G)
    b = -h.exponent if g.is_reflection else h.exponent
    return GroupElement(g.is_reflection != h.is_reflection, (g.exponent + b) % G.p)


def invert(g: GroupElement, G: DihedralGroup) -> GroupElement:
    _check(g, G)
    if g.is_reflection:
        return g
    return GroupElement(False, (-g.exponent) % G.p)


def apply_automorphism(a: Automorphism, g: GroupElement, G: DihedralGroup) -> GroupElement:
    _check(g, G)
    if g.is_reflection:
        return GroupElement(True, (a.s * g.exponent + a.t) % G.p)
    return GroupElement(False, (a.s * g.exponent) % G.p)


def compose(a: Automorphism, b: Automorphism, G: DihedralGroup) -> Automorphism:
    """The automorphism ``a o b`` (apply ``b`` first)."""
    p = G.p
    return Automorphism((a.s * b.s) % p, (a.s * b.t + a.t) % p)


def generated_subgroup(S: Iterable[GroupElement], G: DihedralGroup) -> frozenset[GroupElement]:
    gens = list(S)
    for g in gens:
        _check(g, G)
    seen = {G.identity}
    frontier = [G.identity]
    # In a finite group the monoid generated by S is already the subgroup.
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g, G)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_connected(S: Iterable[GroupElement], G: DihedralGroup, check: bool = False) -> bool:
    """Whether Cay(D_2p, S) is connected, i.e. S generates the whole group.

    Because p is prime, S generates D_2p unless it lies inside the rotation
    subgroup or is a single reflection. With ``check=True`` the answer is
    also recomputed from the subgroup closure and the two are compared.
    """
    S = frozenset(S)
    if G.identity in S:
        raise IdentityInSet("connection set must not contain the identity")
    n_refl = sum(1 for g in S if g.is_reflection)
    result = n_refl > 0 and len(S) >= 2
    if check:
        slow = len(generated_subgroup(S, G)) == G.order
        assert slow == result, (sorted(S), slow, result)
    return result


def multiplicative_order(s: int, p: int) -> int:
    s %= p
    if s == 0:
        raise ValueError("0 has no multiplicative order")
    k, x = 1, s
    while x != 1:
        x = (x * s) % p
        k += 1
    return k


def primitive_root(p: int) -> int:
    """Smallest generator of Z_p^x (p = 3 gives 2)."""
    for z in range(2, p):
        if multiplicative_order(z, p) == p - 1:
            return z
    raise NotOddPrime(p)


def discrete_log(s: int, z: int, p: int) -> int:
    """The exponent i in [0, p-2] with z^i = s (mod p), by linear scan."""
    s %= p
    x = 1
    for i in range(p - 1):
        if x == s:
            return i
        x = (x * z) % p
    raise ValueError(f"{s} is not a power of {z} mod {p}")


__all__ = [
    "Automorphism",
    "DihedralGroup",
    "GroupElement",
    "IdentityInSet",
    "NotOddPrime",
    "apply_automorphism",
    "compose",
    "discrete_log",
    "generated_subgroup",
    "invert",
    "is_connected",
    "is_prime",
    "make_automorphism",
    "make_group",
    "multiplicative_order",
    "multiply",
    "primitive_root",
    "reflection",
    "rotation",
]
