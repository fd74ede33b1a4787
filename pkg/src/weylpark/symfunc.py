"""Schur-basis expansions with coefficients in Z[x].

Only the pieces needed for graded gl_r characters: products of elementary
symmetric functions via the dual Pieri rule, Kostka numbers, and the Weyl
dimension formula.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import prod
from typing import Iterable, Mapping, Sequence

from .combinatorics import Partition, enumerate_A, rho_of_xi, sequence_statistic


def _poly_add(p: dict, q: Mapping[int, int], scale: int = 1) -> dict:
    out = dict(p)
    for d, c in q.items():
        v = out.get(d, 0) + scale * c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out


class SchurExpansion:
    """sum_lambda c_lambda(x) s_lambda with c_lambda in Z[x].

    ``terms`` maps a Partition to a dict {x-degree: integer coefficient}.
    Zero coefficients are never stored.
    """

    def __init__(self, terms: Mapping | None = None):
        self.terms: dict = {}
        self.degree: int | None = None  # homogeneity |lambda|
        for lam, poly in (terms or {}).items():
            self.add_term(lam, poly)

    def add_term(self, lam: Sequence[int], poly: Mapping[int, int] | int, shift: int = 0) -> None:
        lam = Partition(lam)
        if isinstance(poly, int):
            poly = {0: poly}
        if self.degree is None:
            self.degree = lam.size
        elif lam.size != self.degree:
            raise ValueError(f"inhomogeneous expansion: |{tuple(lam)}| != {self.degree}")
        merged = _poly_add(self.terms.get(lam, {}), {d + shift: c for d, c in poly.items()})
        if merged:
            self.terms[lam] = merged
        else:
            self.terms.pop(lam, None)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = SchurExpansion(self.terms)
        for lam, poly in other.terms.items():
            out.add_term(lam, poly)
        return out

    def shifted(self, m: int) -> "SchurExpansion":
        """Multiply by x^m."""
        out = SchurExpansion()
        for lam, poly in self.terms.items():
            out.add_term(lam, poly, shift=m)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms, reverse=True):
            poly = " + ".join(f"{c}*x^{d}" for d, c in sorted(self.terms[lam].items()))
            parts.append(f"({poly})*s{tuple(lam)}")
        return " + ".join(parts)

    def coefficient(self, lam: Sequence[int]) -> dict:
        return dict(self.terms.get(Partition(lam), {}))

    def at_degree(self, m: int) -> dict:
        """{lambda: integer coefficient of x^m}."""
        return {lam: poly[m] for lam, poly in self.terms.items() if m in poly}

    def max_degree(self) -> int:
        return max((max(poly) for poly in self.terms.values()), default=-1)

    def evaluate(self, x: int = 1) -> dict:
        return {lam: sum(c * x**d for d, c in poly.items()) for lam, poly in self.terms.items()}


def vertical_strips(mu: Partition, k: int, max_rows: int) -> Iterable[Partition]:
    """All lambda with lambda/mu a vertical k-strip and at most max_rows rows."""
    rows = min(max_rows, len(mu) + k)
    base = list(mu) + [0] * (rows - len(mu))
    for chosen in itertools.combinations(range(rows), k):
        lam = list(base)
        for i in chosen:
            lam[i] += 1
        if all(lam[i] >= lam[i + 1] for i in range(rows - 1)):
            yield Partition(lam)


def e_product_to_schur(a: Sequence[int], r: int) -> SchurExpansion:
    """Schur expansion of e_{a_1}...e_{a_n}, keeping only partitions with <= r rows.

    This is the gl_r character of the tensor product of exterior powers of V_r.
    """
    current = {Partition(): 1}
    for k in a:
        if k < 0 or k > r:
            return SchurExpansion()
        nxt: dict = {}
        for mu, c in current.items():
            for lam in vertical_strips(mu, k, r):
                nxt[lam] = nxt.get(lam, 0) + c
        current = {lam: c for lam, c in nxt.items() if c}
    return SchurExpansion({lam: {0: c} for lam, c in current.items()})


def frobenius_character(xi: Sequence[int], r: int) -> SchurExpansion:
    """Graded gl_r character sum_m x^m F_n^r(CPF^m_n(rho) (x) Sign) for rho = rho(xi)."""
    lam = Partition(xi)
    if len(lam) > r:
        raise ValueError(f"{tuple(lam)} has more than {r} parts")
    n = lam.size
    rho = rho_of_xi(lam)
    out = SchurExpansion()
    for a in enumerate_A(n, rho):
        out = out + e_product_to_schur(a, r).shifted(sequence_statistic(a, rho))
    return out


@lru_cache(maxsize=None)
def _kostka(lam: tuple, eta: tuple) -> int:
    # peel the largest letter off as a horizontal strip
    if not eta:
        return 1 if not lam else 0
    *rest, m = eta
    if len(lam) > len(eta):
        return 0
    total = 0
    lam_list = list(lam)
    # mu_i in [lam_{i+1}, lam_i], sum(lam - mu) = m
    def rec(i: int, removed: int, mu: list) -> None:
        nonlocal total
        if i == len(lam_list):
            if removed == m:
                total += _kostka(Partition(mu), tuple(rest))
            return
        lo = lam_list[i + 1] if i + 1 < len(lam_list) else 0
        for mu_i in range(lam_list[i], lo - 1, -1):
            take = lam_list[i] - mu_i
            if removed + take > m:
                break
            mu.append(mu_i)
            rec(i + 1, removed + take, mu)
            mu.pop()

    rec(0, 0, [])
    return total


def kostka(lam: Sequence[int], eta: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lambda and content eta."""
    lam = Partition(lam)
    eta = tuple(int(e) for e in eta)
    if any(e < 0 for e in eta) or sum(eta) != lam.size:
        return 0
    return _kostka(tuple(lam), eta)


def weight_multiplicity(exp: SchurExpansion, eta: Sequence[int]) -> dict:
    """Polynomial in x (as {degree: coeff}) giving the eta-weight multiplicity."""
    if any(e < 0 for e in eta):
        return {}
    if exp.degree is not None and sum(eta) != exp.degree:
        return {}
    out: dict = {}
    for lam, poly in exp.terms.items():
        k = kostka(lam, eta)
        if k:
            out = _poly_add(out, poly, k)
    return out


def gl_dimension(lam: Sequence[int], r: int) -> int:
    """Weyl dimension formula for the irreducible gl_r module of highest weight lambda."""
    lam = Partition(lam).padded(r)
    num = prod(lam[i] - lam[j] + j - i for i in range(r) for j in range(i + 1, r))
    den = prod(j - i for i in range(r) for j in range(i + 1, r))
    return num // den


def total_dimension(exp: SchurExpansion, r: int) -> dict:
    out: dict = {}
    for lam, poly in exp.terms.items():
        out = _poly_add(out, poly, gl_dimension(lam, r))
    return out


def evaluate_poly(poly: Mapping[int, int], x: int = 1) -> int:
    return sum(c * x**d for d, c in poly.items())
