"""Deformed Weyl modules V(xi, N) inside exterior powers of V_r (x) C[x, x^-1]/x^N.

A wedge monomial is a set H of cells (i, j): row i >= 1, column j in 1..r.
Cell (i, j) stands for u_j (x) x^(N-i).  Monomials are stored as tuples of
cells sorted by (row, column), i.e. by exponent descending then column
ascending, and that order fixes the sign of the wedge product.

E_ab (x) X^k Y^l acts on one factor by u_b x^s -> s^l u_a x^(s+k), and on
wedges as a derivation.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, NamedTuple, Sequence

from .combinatorics import Partition, is_dominant, transpose
from .linalg import GradedSubspace


class CurrentElement(NamedTuple):
    """E_ij (x) X^k Y^l."""

    i: int
    j: int
    k: int
    l: int


def current_bracket(A: CurrentElement, B: CurrentElement) -> dict:
    """[A, B] expanded in the basis E_ij X^k Y^l, using YX - XY = X."""
    out: dict = {}

    def product(a: int, b: int, c: int, d: int, sign: int, i: int, j: int) -> None:
        # X^a Y^b X^c Y^d = X^(a+c) (Y+c)^b Y^d
        for t in range(b + 1):
            coeff = sign * comb(b, t) * c ** (b - t)
            if coeff:
                key = CurrentElement(i, j, a + c, t + d)
                out[key] = out.get(key, 0) + coeff

    if A.j == B.i:
        product(A.k, A.l, B.k, B.l, 1, A.i, B.j)
    if B.j == A.i:
        product(B.k, B.l, A.k, A.l, -1, B.i, A.j)
    return {g: c for g, c in out.items() if c}


def canonical(cells: Iterable[tuple]) -> tuple:
    """Sort cells into canonical order.  Returns (sign, monomial); sign 0 on a repeated cell."""
    cells = list(cells)
    if len(set(cells)) != len(cells):
        return 0, ()
    inversions = sum(1 for x, y in itertools.combinations(cells, 2) if x > y)
    return (-1) ** inversions, tuple(sorted(cells))


def weight_of(H: Sequence[tuple], r: int) -> tuple:
    w = [0] * r
    for _, j in H:
        w[j - 1] += 1
    return tuple(w)


def degree_of(H: Sequence[tuple], xi: Sequence[int]) -> int:
    """d(H) = sum_i i*xi^t_i - sum over cells of the row index."""
    xt = transpose(Partition(xi))
    return sum(i * c for i, c in enumerate(xt, start=1)) - sum(i for i, _ in H)


def weight_and_degree(H: Sequence[tuple], xi: Sequence[int]) -> tuple:
    return weight_of(H, len(xi)), degree_of(H, xi)


def cyclic_monomial(xi: Sequence[int], N: int | None = None) -> tuple:
    """Cells of v_xi: column j holds rows 1..xi_j.  (The monomial does not depend on N.)"""
    if not is_dominant(xi) or any(x < 0 for x in xi):
        raise ValueError(f"{tuple(xi)} is not a partition vector")
    return tuple(sorted((i, j) for j, x in enumerate(xi, start=1) for i in range(1, x + 1)))


def admissible(xi: Sequence[int]):
    """Predicate for the monomials spanning V(xi, N)."""
    xt = transpose(Partition(xi))
    need = list(itertools.accumulate(xt))
    n = sum(xi)

    def check(H: Sequence[tuple]) -> bool:
        if len(H) != n or len(set(H)) != n:
            return False
        for k, bound in enumerate(need, start=1):
            if sum(1 for i, _ in H if 1 <= i <= k) < bound:
                return False
        return True

    return check


def admissible_sets(xi: Sequence[int]) -> list:
    """All admissible monomials for the partition vector xi (r = len(xi)), sorted."""
    r = len(xi)
    rows = xi[0] if xi else 0
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, r + 1)]
    check = admissible(xi)
    return [H for H in itertools.combinations(cells, sum(xi)) if check(H)]


@dataclass
class ModuleVector:
    """Sparse exact combination of wedge monomials with context (N, r)."""

    terms: dict
    N: int
    r: int

    def __post_init__(self):
        self.terms = {H: c for H, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, H: Sequence[tuple], N: int, r: int, coeff=1) -> "ModuleVector":
        sign, mono = canonical(H)
        return cls({mono: sign * coeff} if sign else {}, N, r)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for H, c in other.terms.items():
            out[H] = out.get(H, 0) + c
        return ModuleVector(out, self.N, self.r)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scaled(-1)

    def scaled(self, c) -> "ModuleVector":
        return ModuleVector({H: c * v for H, v in self.terms.items()}, self.N, self.r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleVector)
            and (self.N, self.r) == (other.N, other.r)
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def weight_components(self) -> dict:
        out: dict = {}
        for H, c in self.terms.items():
            out.setdefault(weight_of(H, self.r), {})[H] = c
        return {w: ModuleVector(t, self.N, self.r) for w, t in out.items()}


@lru_cache(maxsize=1 << 20)
def _moves(H: tuple, a: int, b: int, k: int) -> tuple:
    """Nonzero ways E_ab X^k changes one factor of H: (old row, sign, new monomial)."""
    out = []
    for p, (row, col) in enumerate(H):
        if col != b or row - k < 1:
            continue
        new = (row - k, a)
        rest = H[:p] + H[p + 1 :]
        q = bisect.bisect_left(rest, new)
        if q < len(rest) and rest[q] == new:
            continue
        out.append((row, -1 if (p - q) % 2 else 1, rest[:q] + (new,) + rest[q:]))
    return tuple(out)


def apply_current(terms: Mapping, g: CurrentElement, N: int) -> dict:
    """Action on a raw {monomial: coeff} dict."""
    out: dict = {}
    for H, c in terms.items():
        for row, sign, new in _moves(H, g.i, g.j, g.k):
            coeff = sign * c * (N - row) ** g.l
            if coeff:
                v = out.get(new, 0) + coeff
                if v:
                    out[new] = v
                else:
                    del out[new]
    return out


def act(g: CurrentElement | Mapping, v: ModuleVector) -> ModuleVector:
    """Action of E_ij X^k Y^l (or a linear combination {CurrentElement: coeff})."""
    if isinstance(g, CurrentElement):
        return ModuleVector(apply_current(v.terms, g, v.N), v.N, v.r)
    out = ModuleVector({}, v.N, v.r)
    for elem, c in g.items():
        out = out + ModuleVector(apply_current(v.terms, elem, v.N), v.N, v.r).scaled(c)
    return out


def generators(r: int, max_k: int, max_l: int, l_values: Iterable[int] | None = None) -> list:
    ls = range(max_l + 1) if l_values is None else l_values
    return [
        CurrentElement(a, b, k, l)
        for l in ls
        for k in range(max_k + 1)
        for a in range(1, r + 1)
        for b in range(1, r + 1)
    ]


def spanning_generators(r: int, bound: int) -> list:
    """A smaller set with the same span and the same Y-degree filtration.

    For r >= 2 the off-diagonal E_ab (x) {1, X, Y, XY} generate every traceless
    E_ab X^k Y^l under brackets, with Y-degrees adding up; the trace part is
    covered by E_11 (x) X^k Y^l.
    """
    if r < 2:
        return generators(r, bound, bound)
    small = min(bound, 1)
    off = [
        CurrentElement(a, b, k, l)
        for l in range(small + 1)
        for k in range(small + 1)
        for a in range(1, r + 1)
        for b in range(1, r + 1)
        if a != b
    ]
    diag = [CurrentElement(1, 1, k, l) for l in range(bound + 1) for k in range(bound + 1)]
    return off + diag


def block_key(xi: Sequence[int]):
    """Grading key (weight, d) of a monomial; every generator maps blocks to blocks."""
    r = len(xi)
    xt = transpose(Partition(xi))
    top = sum(i * c for i, c in enumerate(xt, start=1))

    def key(H: tuple) -> tuple:
        return weight_of(H, r), top - sum(i for i, _ in H)

    return key


def close(space: GradedSubspace, queue: list, gens: Sequence[CurrentElement], N: int) -> list:
    """Saturate space under gens starting from the rows in queue.  Returns all rows added."""
    added = []
    queue = list(queue)
    while queue:
        v = queue.pop()
        for g in gens:
            w = apply_current(v, g, N)
            if not w:
                continue
            row = space.add(w)
            if row:
                added.append(row)
                queue.append(row)
    return added


def default_power_bound(xi: Sequence[int]) -> int:
    # Exponents occupy xi_1 consecutive rows: X^k with k >= xi_1 kills everything,
    # and s^l for l >= xi_1 is a combination of lower powers on xi_1 points.
    return max(xi[0] - 1, 0) if xi else 0


@dataclass
class Closure:
    """The cyclic submodule generated by v_xi, stored blockwise in echelon form."""

    xi: tuple
    N: int
    space: GradedSubspace = field(repr=False)

    @property
    def r(self) -> int:
        return len(self.xi)

    @property
    def dim(self) -> int:
        return len(self.space)

    @property
    def basis(self) -> list:
        return [ModuleVector(row, self.N, self.r) for row in self.space.basis()]

    def support(self) -> set:
        out: set = set()
        for ech in self.space.blocks.values():
            out |= ech.support()
        return out

    def monomial_basis(self) -> list:
        """The monomials spanning the closure, checked to form a basis of it."""
        supp = sorted(self.support())
        if len(supp) != self.dim:
            raise AssertionError(
                f"closure of dim {self.dim} is not spanned by its {len(supp)} support monomials"
            )
        return supp

    def contains(self, v: ModuleVector) -> bool:
        return not v or not self.space.reduce(v.terms)

    def block_dims(self) -> dict:
        return self.space.block_dims()


def cyclic_closure(xi: Sequence[int], N: int, power_bound: int | None = None) -> Closure:
    """Span of U(gl_r (x) C<X,Y>) v_xi, computed as a fixpoint with exact row reduction."""
    xi = tuple(int(x) for x in xi)
    v = cyclic_monomial(xi)
    bound = default_power_bound(xi) if power_bound is None else power_bound
    space = GradedSubspace(block_key(xi))
    start = space.add({v: 1})
    close(space, [start], spanning_generators(len(xi), bound), N)
    rows = max(xi) if xi else 0
    for H in (H for ech in space.blocks.values() for H in ech.support()):
        if any(not 1 <= i <= rows for i, _ in H):
            raise AssertionError(f"monomial {H} left the exponent window")
    return Closure(xi, N, space)
