"""Exact integer helpers: factorisation, totient, divisors, binomials."""

from __future__ import annotations

from math import comb


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    # n * prod(1 - 1/q) over prime divisors q, kept in integers
    result = n
    for q in factorize(n):
        result = result // q * (q - 1)
    return result


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when k is outside ``[0, n]``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
