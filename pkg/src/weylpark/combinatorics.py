"""Partitions, integer weights, rho-parking functions and the sequence class A_n(rho).

Everything here is pure counting: values are immutable tuples and all counts
are Python ints, so nothing overflows.
"""

from __future__ import annotations

import itertools
from collections import Counter
from math import factorial
from typing import Iterable, Sequence

WeightVector = tuple  # r integer coordinates, may be negative


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros given to the constructor are dropped, so ``Partition((2, 0))``
    equals ``Partition((2,))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        return transpose(self)

    def padded(self, length: int) -> tuple:
        if len(self) > length:
            raise ValueError(f"{self!r} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def dominates(self, other: Sequence[int]) -> bool:
        """Dominance order: every partial sum of self is >= that of other."""
        a = b = 0
        for k in range(max(len(self), len(other))):
            a += self[k] if k < len(self) else 0
            b += other[k] if k < len(other) else 0
            if a < b:
                return False
        return a == b


def transpose(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1))


def rho_of_xi(xi: Sequence[int]) -> Partition:
    """The partition in which each j occurs xi^t_j times."""
    xt = transpose(Partition(xi))
    parts = []
    for j, mult in enumerate(xt, start=1):
        parts.extend([j] * mult)
    return Partition(sorted(parts, reverse=True))


# -- weights ---------------------------------------------------------------


def epsilon(i: int, r: int) -> WeightVector:
    """The i-th unit vector (1-based)."""
    return tuple(1 if k == i else 0 for k in range(1, r + 1))


def tau(r: int) -> WeightVector:
    return (1,) * r


def add_weights(*ws: Sequence[int]) -> WeightVector:
    return tuple(sum(c) for c in zip(*ws))


def scale_weight(c: int, w: Sequence[int]) -> WeightVector:
    return tuple(c * x for x in w)


def in_Q_plus(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff a - b is a non-negative combination of the simple roots e_i - e_{i+1}."""
    if len(a) != len(b):
        raise ValueError("weights of different length")
    partial = 0
    for x, y in zip(a, b):
        partial += x - y
        if partial < 0:
            return False
    return partial == 0


def pad(xi: Sequence[int], r: int) -> tuple:
    xi = tuple(int(x) for x in xi)
    if len(xi) > r:
        if any(xi[r:]):
            raise ValueError(f"{xi} has more than {r} non-zero coordinates")
        return xi[:r]
    return xi + (0,) * (r - len(xi))


def is_dominant(xi: Sequence[int]) -> bool:
    return all(xi[i] >= xi[i + 1] for i in range(len(xi) - 1))


def catalan_dimension(n: int, r: int) -> int:
    """(r(n+1))! / ((n+1)! ((r-1)(n+1)+1)!), the higher Catalan number."""
    return factorial(r * (n + 1)) // (factorial(n + 1) * factorial((r - 1) * (n + 1) + 1))


# -- rho-parking functions -------------------------------------------------


def _thresholds(rho: Sequence[int], n: int) -> list:
    """Pairs (prefix length, required count) of the rho-parking condition.

    Zero parts of rho are stripped first; prefix lengths are capped at n.
    """
    rho = Partition(rho)
    k = len(rho)
    return [(min(rho[k - s], n), s) for s in range(1, k + 1)]


def enumerate_A(n: int, rho: Sequence[int]) -> list:
    """All (a_1..a_n), a_i >= 0, sum n, with a_1+...+a_{rho_{k-s+1}} >= s.

    Returned in lexicographic order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    need = [0] * (n + 1)  # need[p]: lower bound on a_1+...+a_p
    for p, s in _thresholds(rho, n):
        need[p] = max(need[p], s)
    out = []

    def rec(prefix: list, total: int) -> None:
        p = len(prefix)
        if p == n:
            if total == n:
                out.append(tuple(prefix))
            return
        for a in range(0, n - total + 1):
            if total + a < need[p + 1]:
                continue
            prefix.append(a)
            rec(prefix, total + a)
            prefix.pop()

    if n == 0:
        return [()] if not Partition(rho) else []
    rec([], 0)
    return out


def is_parking(f: Sequence[int], rho: Sequence[int]) -> bool:
    n = len(f)
    if any(not 1 <= v <= n for v in f):
        return False
    return all(sum(1 for v in f if v <= p) >= s for p, s in _thresholds(rho, n))


class ParkingFunction(tuple):
    """A rho-parking function, stored as its value tuple (f(1), ..., f(n))."""

    def __new__(cls, values: Iterable[int], rho: Sequence[int]):
        self = super().__new__(cls, (int(v) for v in values))
        self.rho = Partition(rho)
        if not is_parking(self, self.rho):
            raise ValueError(f"{tuple(self)} is not a {tuple(self.rho)}-parking function")
        return self

    def __repr__(self) -> str:
        return f"ParkingFunction({tuple(self)!r}, rho={tuple(self.rho)!r})"

    @property
    def statistic(self) -> int:
        return parking_statistic(self)

    def content(self) -> tuple:
        """(a_1, ..., a_n) with a_i = |f^{-1}(i)|."""
        c = Counter(self)
        return tuple(c[i] for i in range(1, len(self) + 1))


def enumerate_parking(n: int, rho: Sequence[int]) -> list:
    """All rho-parking functions f: {1..n} -> {1..n}, lexicographically ordered."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rho = Partition(rho)
    return [
        ParkingFunction(f, rho)
        for f in itertools.product(range(1, n + 1), repeat=n)
        if is_parking(f, rho)
    ]


def parking_statistic(f: ParkingFunction) -> int:
    return f.rho.size - sum(f)


def multinomial(seq: Sequence[int]) -> int:
    out = factorial(sum(seq))
    for a in seq:
        out //= factorial(a)
    return out


def sequence_statistic(a: Sequence[int], rho: Sequence[int]) -> int:
    """|rho| - sum_i i*a_i, the statistic carried by a whole content orbit."""
    return Partition(rho).size - sum(i * ai for i, ai in enumerate(a, start=1))


def orbit_decomposition(n: int, rho: Sequence[int]) -> dict:
    """Map each content sequence in A_n(rho) to the size of its Sigma_n-orbit."""
    return {a: multinomial(a) for a in enumerate_A(n, rho)}


def statistic_histogram(functions: Iterable[ParkingFunction]) -> dict:
    return dict(sorted(Counter(f.statistic for f in functions).items()))
