"""Semi-infinite wedges L = wedge^{inf/2}(V_r (x) C[x, x^-1]) and their regularized actions.

A cell (s, j) stands for u_j (x) x^s, identified with u_{r*s + j} of V_infinity.
The vacuum occupies every cell with s >= 0, and a monomial is stored by
its finite difference from the vacuum: ``added`` cells (s < 0, occupied) and
``removed`` cells (s >= 0, empty).  Factors are ordered by increasing
r*s + j, which fixes the sign of every monomial.

Operators are one-particle operators lifted to L: off-diagonal matrix
entries act by the usual Leibniz rule, diagonal entries by the eigenvalue
regularized so that the vacuum has eigenvalue 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .combinatorics import tau
from .wedge import CurrentElement, ModuleVector


# -- monomials ---------------------------------------------------------------


@dataclass(frozen=True)
class FockMonomial:
    r: int
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "added", frozenset(self.added))
        object.__setattr__(self, "removed", frozenset(self.removed))
        if any(s >= 0 for s, _ in self.added) or any(s < 0 for s, _ in self.removed):
            raise ValueError("added cells need s < 0, removed cells need s >= 0")
        if any(not 1 <= j <= self.r for _, j in self.added | self.removed):
            raise ValueError("column out of range")

    def __lt__(self, other: "FockMonomial") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return (sorted(self.added), sorted(self.removed))

    def __repr__(self) -> str:
        return f"FockMonomial(r={self.r}, added={sorted(self.added)}, removed={sorted(self.removed)})"

    @property
    def charge(self) -> int:
        return len(self.added) - len(self.removed)

    @property
    def weight(self) -> tuple:
        w = [0] * self.r
        for _, j in self.added:
            w[j - 1] += 1
        for _, j in self.removed:
            w[j - 1] -= 1
        return tuple(w)

    @property
    def degree(self) -> int:
        """Global d: sum of s over removed cells minus sum of s over added cells."""
        return sum(s for s, _ in self.removed) - sum(s for s, _ in self.added)

    def relative_degree(self) -> int:
        return self.degree - sector_degree(self.charge, self.r)

    def occupied(self, s: int, j: int) -> bool:
        if s < 0:
            return (s, j) in self.added
        return (s, j) not in self.removed

    def index(self, cell: tuple) -> int:
        s, j = cell
        return self.r * s + j

    def count_between(self, lo: int, hi: int) -> int:
        """Number of occupied indices m with lo < m < hi."""
        first = max(lo + 1, 1)
        count = max(0, hi - first)
        count -= sum(1 for c in self.removed if lo < self.index(c) < hi)
        count += sum(1 for c in self.added if lo < self.index(c) < hi)
        return count

    def window(self) -> tuple:
        """(lo, hi): every s < lo is empty and every s > hi is occupied."""
        lo = min([s for s, _ in self.added] + [0])
        hi = max([s for s, _ in self.removed] + [-1])
        return lo, hi

    def moved(self, src: tuple, tgt: tuple) -> "FockMonomial":
        added, removed = set(self.added), set(self.removed)
        if src[0] < 0:
            added.discard(src)
        else:
            removed.add(src)
        if tgt[0] < 0:
            added.add(tgt)
        else:
            removed.discard(tgt)
        return FockMonomial(self.r, frozenset(added), frozenset(removed))

    @classmethod
    def from_occupied(cls, r: int, cells: Iterable[tuple], tail_from: int) -> "FockMonomial":
        """Monomial with the given cells (all s < tail_from) plus every cell with s >= tail_from."""
        cells = set(cells)
        added = {c for c in cells if c[0] < 0}
        removed = {
            (s, j) for s in range(0, tail_from) for j in range(1, r + 1) if (s, j) not in cells
        }
        return cls(r, frozenset(added), frozenset(removed))


def vacuum(r: int) -> FockMonomial:
    return FockMonomial(r)


def xi_monomial(xi: Sequence[int]) -> FockMonomial:
    """v^{inf/2}_xi: column j occupied exactly from s = -xi_j upwards."""
    r = len(xi)
    added, removed = set(), set()
    for j, x in enumerate(xi, start=1):
        if x > 0:
            added.update((s, j) for s in range(-x, 0))
        else:
            removed.update((s, j) for s in range(0, -x))
    return FockMonomial(r, frozenset(added), frozenset(removed))


def highest_weight(n: int, r: int) -> tuple:
    """xi(n) = s*tau + e_1 + ... + e_t where n = s*r + t, 0 <= t < r."""
    s, t = divmod(n, r)
    return tuple(s + (1 if i < t else 0) for i in range(r))


def highest_weight_monomial(n: int, r: int) -> FockMonomial:
    return xi_monomial(highest_weight(n, r))


def sector_degree(n: int, r: int) -> int:
    """d_n, the global degree of the highest weight vector of L_n."""
    return sum(x * (x + 1) // 2 for x in highest_weight(n, r))


def enumerate_sector(n: int, r: int, depth: int) -> list:
    """All charge-n monomials with sector-relative degree <= depth, sorted."""
    budget = sector_degree(n, r) + depth
    cells = [((s, j), -s) for s in range(-budget, 0) for j in range(1, r + 1)]
    cells += [((s, j), s) for s in range(0, budget + 1) for j in range(1, r + 1)]
    cells.sort(key=lambda c: c[1])
    out = []

    def rec(idx: int, cost: int, added: list, removed: list) -> None:
        if len(added) - len(removed) == n:
            out.append(FockMonomial(r, frozenset(added), frozenset(removed)))
        for k in range(idx, len(cells)):
            cell, c = cells[k]
            if cost + c > budget:
                break
            (added if cell[0] < 0 else removed).append(cell)
            rec(k + 1, cost + c, added, removed)
            (added if cell[0] < 0 else removed).pop()

    rec(0, 0, [], [])
    return sorted(out)


# -- vectors -----------------------------------------------------------------


class FockVector(dict):
    """Sparse {FockMonomial: exact coefficient}; zero entries are dropped by the helpers."""

    @classmethod
    def of(cls, mono: FockMonomial, coeff=1) -> "FockVector":
        return cls({mono: coeff})

    def plus(self, other: Mapping, scale=1) -> "FockVector":
        out = FockVector(self)
        for m, c in other.items():
            v = out.get(m, 0) + scale * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def scaled(self, c) -> "FockVector":
        return FockVector({m: c * v for m, v in self.items() if c * v})

    def charges(self) -> set:
        return {m.charge for m in self}


# -- operators ---------------------------------------------------------------


def falling(s: int, a: int) -> int:
    out = 1
    for t in range(a):
        out *= s - t
    return out


class DiffOp:
    """sum c * E_ab (x) x^i D^d, plus a central term c_K * K.

    Terms are keyed by (a, b, i, d).  D = d/dx.
    """

    def __init__(self, terms: Mapping | None = None, central=0):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}
        self.central = Fraction(central)

    @classmethod
    def basic(cls, a: int, b: int, i: int, d: int = 0, coeff=1) -> "DiffOp":
        return cls({(a, b, i, d): coeff})

    def __add__(self, other: "DiffOp") -> "DiffOp":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return DiffOp(out, self.central + other.central)

    def scaled(self, c) -> "DiffOp":
        return DiffOp({k: c * v for k, v in self.terms.items()}, c * self.central)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + other.scaled(-1)

    def __mul__(self, other: "DiffOp") -> "DiffOp":
        """Associative product; central parts are dropped."""
        out: dict = {}
        for (a, b, i, d), c1 in self.terms.items():
            for (b2, e, j, f), c2 in other.terms.items():
                if b != b2:
                    continue
                # D^d x^j = sum_t C(d,t) ff(j,t) x^(j-t) D^(d-t)
                for t in range(d + 1):
                    c = c1 * c2 * comb(d, t) * falling(j, t)
                    if c:
                        key = (a, e, i + j - t, d - t + f)
                        out[key] = out.get(key, 0) + c
        return DiffOp(out)

    def bracket(self, other: "DiffOp") -> "DiffOp":
        return self * other - other * self

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOp) and (self.terms, self.central) == (other.terms, other.central)

    def __repr__(self) -> str:
        return f"DiffOp({self.terms}, central={self.central})"

    def one_particle(self) -> dict:
        """{(a, b, shift): list of (coeff, D-power)} describing u_b x^s -> coeff*ff(s,d) u_a x^(s+shift)."""
        out: dict = {}
        for (a, b, i, d), c in self.terms.items():
            out.setdefault((a, b, i - d), []).append((c, d))
        return out


@dataclass(frozen=True)
class DiffOpElement:
    """g (x) x^i D^a + c*K with g an r x r matrix."""

    g: tuple
    i: int
    a: int = 0
    c: Fraction = Fraction(0)

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("D-power must be non-negative")

    def to_diffop(self) -> DiffOp:
        terms = {}
        for p, row in enumerate(self.g, start=1):
            for q, v in enumerate(row, start=1):
                if v:
                    terms[(p, q, self.i, self.a)] = v
        return DiffOp(terms, self.c)


def matrix_unit(p: int, q: int, r: int) -> tuple:
    return tuple(tuple(1 if (a, b) == (p, q) else 0 for b in range(1, r + 1)) for a in range(1, r + 1))


def identity_matrix(r: int) -> tuple:
    return tuple(tuple(1 if a == b else 0 for b in range(r)) for a in range(r))


def element(g: Sequence[Sequence], i: int, a: int = 0, c=0) -> DiffOpElement:
    return DiffOpElement(tuple(tuple(row) for row in g), i, a, Fraction(c))


def current_to_diffop(g: CurrentElement) -> DiffOp:
    """E_ij (x) X^k Y^l -> E_ij (x) x^k (xD)^l."""
    op = DiffOp.basic(g.i, g.j, g.k)
    xd = DiffOp.basic(g.j, g.j, 1, 1)
    for _ in range(g.l):
        op = op * xd
    return op


def _as_diffop(A) -> DiffOp:
    if isinstance(A, DiffOp):
        return A
    if isinstance(A, DiffOpElement):
        return A.to_diffop()
    if isinstance(A, CurrentElement):
        return current_to_diffop(A)
    raise TypeError(f"cannot act with {type(A).__name__}")


def _apply_monomial(op: dict, mono: FockMonomial) -> dict:
    out: dict = {}

    def push(m: FockMonomial, c) -> None:
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)

    lo, hi = mono.window()
    for (a, b, shift), parts in op.items():
        def coeff(s: int):
            return sum(c * falling(s, d) for c, d in parts)

        if a == b and shift == 0:
            val = sum(coeff(s) for s, j in mono.added if j == b)
            val -= sum(coeff(s) for s, j in mono.removed if j == b)
            if val:
                push(mono, val)
            continue
        for s in range(lo, hi + abs(shift) + 1):
            if not mono.occupied(s, b) or mono.occupied(s + shift, a):
                continue
            c = coeff(s)
            if not c:
                continue
            src, tgt = (s, b), (s + shift, a)
            m1, m2 = sorted((mono.index(src), mono.index(tgt)))
            sign = -1 if mono.count_between(m1, m2) % 2 else 1
            push(mono.moved(src, tgt), sign * c)
    return out


def act_fock(A, v: Mapping) -> FockVector:
    """Action of a DiffOpElement / DiffOp / CurrentElement on a FockVector."""
    D = _as_diffop(A)
    op = D.one_particle()
    out = FockVector()
    for mono, c in v.items():
        out = out.plus(_apply_monomial(op, mono), c)
        if D.central:
            out = out.plus({mono: D.central * c})
    return out


# -- cocycles ----------------------------------------------------------------


class NonScalarDefect(AssertionError):
    """The commutator defect is not a multiple of the identity (implementation error)."""


def cocycle_formula(A: DiffOpElement, B: DiffOpElement) -> Fraction:
    """delta_{i+j-a-b} Tr(g1 g2) (-1)^a a! b! / (a+b+1)! prod_{k=0}^{a+b} (i-k)."""
    if A.i + B.i - A.a - B.a != 0:
        return Fraction(0)
    r = len(A.g)
    trace = sum(A.g[p][q] * B.g[q][p] for p in range(r) for q in range(r))
    a, b = A.a, B.a
    return (
        Fraction(trace * (-1) ** a * factorial(a) * factorial(b), factorial(a + b + 1))
        * math.prod(A.i - k for k in range(a + b + 1))
    )


def commutator_defect(A, B, v: Mapping) -> FockVector:
    """[rho(A), rho(B)] v - rho([A, B]) v."""
    DA, DB = _as_diffop(A), _as_diffop(B)
    lhs = act_fock(DA, act_fock(DB, v)).plus(act_fock(DB, act_fock(DA, v)), -1)
    return lhs.plus(act_fock(DA.bracket(DB), v), -1)


def verify_cocycle(A, B, sample: Iterable[FockMonomial]) -> Fraction:
    """The scalar by which the commutator defect acts, checked on every sample monomial."""
    value = None
    for mono in sample:
        defect = commutator_defect(A, B, FockVector.of(mono))
        extra = {m: c for m, c in defect.items() if m != mono}
        if extra:
            raise NonScalarDefect(f"defect on {mono} leaves the line: {extra}")
        lam = Fraction(defect.get(mono, 0))
        if value is None:
            value = lam
        elif lam != value:
            raise NonScalarDefect(f"defect {lam} on {mono} differs from {value}")
    if value is None:
        raise ValueError("empty sample")
    return value


# -- the annihilation identity ------------------------------------------------


def _spread(v: Mapping) -> int:
    """Any E_jj (x) x^p with p > spread kills every monomial of v."""
    best = 0
    for mono in v:
        lo, hi = mono.window()
        best = max(best, hi - lo + 1)
    return best


def current_identity_coefficient(j: int, m: int, v: Mapping, r: int) -> FockVector:
    """z^{-m-2} coefficient of E_jj(D;z) + 1/2 :E_jj(1;z)^2: - 1/2 d/dz E_jj(1;z), applied to v."""

    def F(p: int) -> DiffOp:
        return DiffOp.basic(j, j, p)

    out = act_fock(DiffOp.basic(j, j, m + 1, 1), v)
    out = out.plus(act_fock(F(m), v), Fraction(m + 1, 2))
    half = Fraction(1, 2)
    bound = _spread(v) + abs(m) + 2
    # i < 0 part: F_i F_{m-i}; inner F_{m-i} vanishes once m - i exceeds the spread
    for i in range(m - bound, 0):
        inner = act_fock(F(m - i), v)
        if inner:
            out = out.plus(act_fock(F(i), inner), half)
    # i >= 0 part: F_{m-i} F_i
    for i in range(0, bound + 1):
        inner = act_fock(F(i), v)
        if inner:
            out = out.plus(act_fock(F(m - i), inner), half)
    return out


def lemma_cur_check(j: int, m: int, samples: Iterable[FockMonomial]) -> bool:
    for mono in samples:
        if current_identity_coefficient(j, m, FockVector.of(mono), mono.r):
            return False
    return True


# -- translations and the embedding ---------------------------------------------


def _reorder_parity(r: int, eta: Sequence[int], cells: Iterable[tuple]) -> int:
    """Inversions created when the cells, listed by increasing index, are moved by T_eta."""
    idx = [r * (s - eta[j - 1]) + j for s, j in sorted(cells, key=lambda c: r * c[0] + c[1])]
    return sum(1 for a, b in itertools.combinations(idx, 2) if a > b) % 2


def _translate_monomial(eta: Sequence[int], mono: FockMonomial) -> tuple:
    """(sign, T_eta mono).

    For eta >= 0 lexicographically the sign is the parity of the reordering
    of all factors below a cutoff, taken relative to the same count for the
    vacuum; beyond the cutoff both wedges agree, so it does not depend on
    the cutoff.  For eta < 0 the sign is chosen so that T_eta is exactly the
    inverse of T_{-eta}.
    """
    if tuple(eta) < (0,) * len(eta):
        _, image = _translate_cells(eta, mono)
        back, _ = _translate_monomial([-e for e in eta], image)
        return back, image
    return _translate_cells(eta, mono)


def _translate_cells(eta: Sequence[int], mono: FockMonomial) -> tuple:
    r = mono.r
    added, removed = set(), set()
    lo, hi = mono.window()
    spread = max((abs(e) for e in eta), default=0)
    for j, e in enumerate(eta, start=1):
        start = min(lo, e)
        stop = max(hi + 1, e + 1)
        for s in range(start, stop):
            t = s - e
            occ = mono.occupied(s, j)
            if occ and t < 0:
                added.add((t, j))
            elif not occ and t >= 0:
                removed.add((t, j))
    cut = max(hi, 0) + 2 * spread + 2
    cols = range(1, r + 1)
    mine = [(s, j) for s in range(lo, cut) for j in cols if mono.occupied(s, j)]
    vac = [(s, j) for s in range(0, cut) for j in cols]
    parity = _reorder_parity(r, eta, mine) ^ _reorder_parity(r, eta, vac)
    return (-1 if parity else 1), FockMonomial(r, frozenset(added), frozenset(removed))


def translate(eta: Sequence[int], v: Mapping) -> FockVector:
    """T_eta: u_H -> +-u_{T_eta H} with T_eta H = {(s, j) : (s + eta_j, j) in H}.

    Intertwines E_ab (x) x^k with E_ab (x) x^(k + eta_b - eta_a), up to the
    scalar -eta_a on E_aa (x) 1.
    """
    out = FockVector()
    for mono, c in v.items():
        sign, image = _translate_monomial(eta, mono)
        out = out.plus({image: sign * c})
    return out


def root_r_omega1(r: int) -> tuple:
    """r*omega_1 identified with r*e_1 - tau."""
    return tuple(a - b for a, b in zip((r,) + (0,) * (r - 1), tau(r)))


def embed_monomial(H: Sequence[tuple], N: int, r: int) -> tuple:
    """(sign, FockMonomial) of u_H^(N) wedge (all u^s_j, s >= N)."""
    cells = [(N - i, j) for i, j in H]
    idx = [r * s + j for s, j in cells]
    inversions = sum(1 for x, y in itertools.combinations(idx, 2) if x > y)
    return (-1) ** inversions, FockMonomial.from_occupied(r, cells, N)


def embed(v: ModuleVector) -> FockVector:
    """V(xi, N) (x) Det(-N) -> L_{|xi| - N r}."""
    out = FockVector()
    for H, c in v.terms.items():
        sign, mono = embed_monomial(H, v.N, v.r)
        out = out.plus({mono: sign * c})
    return out


def det_twist_scalar(g: CurrentElement, N: int) -> int:
    """Eigenvalue of E_ij X^k Y^l on Det(-N)."""
    if g.i != g.j or g.k != 0:
        return 0
    return -sum(s**g.l for s in range(N))


# -- characters -----------------------------------------------------------------


def _series_mul(p: dict, q: dict, D: int) -> dict:
    out: dict = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            if i1 + i2 <= D:
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def denominator_series(r: int, D: int) -> dict:
    """1 / prod_{i>0} (1 - x^i y)(1 - x^i)^(r-1) up to x^D, as {(x-deg, y-deg): coeff}."""
    series = {(0, 0): 1}
    for i in range(1, D + 1):
        geo_y = {(i * t, t): 1 for t in range(D // i + 1)}
        geo = {(i * t, 0): 1 for t in range(D // i + 1)}
        series = _series_mul(series, geo_y, D)
        for _ in range(r - 1):
            series = _series_mul(series, geo, D)
    return series


def norm_exponent(xi: Sequence[int], n: int, r: int) -> int:
    ref = highest_weight(n, r)
    diff = sum(x * x for x in xi) - sum(x * x for x in ref)
    return diff // 2


def limit_character_rhs(n: int, r: int, D: int) -> dict:
    """Closed-form limit series up to x^D as {(weight, x-deg, y-deg): coeff}."""
    if D < 0:
        raise ValueError("D must be non-negative")
    ref = sum(x * x for x in highest_weight(n, r))
    radius = math.isqrt(ref + 2 * D) + 1
    numerator = []
    for head in itertools.product(range(-radius, radius + 1), repeat=r - 1):
        xi = head + (n - sum(head),)
        e = norm_exponent(xi, n, r)
        if 0 <= e <= D:
            numerator.append((xi, e))
        elif e < 0:
            raise AssertionError(f"weight {xi} below the highest weight of L_{n}")
    den = denominator_series(r, D)
    out: dict = {}
    for xi, e in numerator:
        for (i, j), c in den.items():
            if e + i <= D:
                key = (xi, e + i, j)
                out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=32)
def _reversed_character(n: int, r: int, N: int) -> tuple:
    from .degeneration import bigraded_character

    xi = (n + N * r,) + (0,) * (r - 1)
    ch = bigraded_character(xi).shifted(tuple(-N for _ in range(r)))
    top = ch.x_degree()
    return tuple(((w, top - i, j), d) for (w, i, j), d in ch.data.items())


def limit_character_lhs(n: int, r: int, N: int, D: int) -> dict:
    """Rec_x of ch_{x,y} V((n+Nr) e_1) (x) Det^(-N), truncated at x^D."""
    if n + N * r < 0:
        raise ValueError("(n + N r) e_1 is not dominant")
    return {key: d for key, d in _reversed_character(n, r, N) if key[1] <= D}


def embed_coverage(n: int, r: int, N: int, depth: int) -> list:
    """Charge-n monomials of relative depth <= depth missed by the embedded basis of V((n+Nr) e_1, N)."""
    from .wedge import admissible_sets

    xi = (n + N * r,) + (0,) * (r - 1)
    hit = {embed_monomial(H, N, r)[1] for H in admissible_sets(xi)}
    return [m for m in enumerate_sector(n, r, depth) if m not in hit]


def sector_generating_function(n: int, r: int, D: int) -> dict:
    """Count charge-n monomials by (weight, sector-relative degree) up to degree D."""
    out: dict = {}
    for mono in enumerate_sector(n, r, D):
        key = (mono.weight, mono.relative_degree())
        out[key] = out.get(key, 0) + 1
    return out


def limit_check(n: int, r: int, Nmax: int, D: int) -> dict:
    """Compare lhs(N), N = 1..Nmax, with the closed form up to x^D."""
    rhs = limit_character_rhs(n, r, D)
    rows = []
    first_agree = None
    previous = None
    for N in range(1, Nmax + 1):
        if n + N * r < 0:
            continue
        lhs = limit_character_lhs(n, r, N, D)
        agree = lhs == rhs
        if agree and first_agree is None:
            first_agree = N
        if not agree:
            first_agree = None
        mismatch = sorted(
            (k, lhs.get(k, 0), rhs.get(k, 0)) for k in set(lhs) | set(rhs) if lhs.get(k, 0) != rhs.get(k, 0)
        )
        rows.append({"N": N, "agree": agree, "stable": previous == lhs, "mismatch": mismatch})
        previous = lhs
    last = rows[-1] if rows else None
    passed = bool(last and last["agree"] and (len(rows) == 1 or last["stable"]))
    return {"n": n, "r": r, "D": D, "rows": rows, "agree_from_N": first_agree, "passed": passed}


def series_records(series: Mapping) -> list:
    return [
        {"x": i, "y": j, "weight": list(w), "coeff": c}
        for (w, i, j), c in sorted(series.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][0]))
    ]


# -- sweeps ---------------------------------------------------------------------

TRACE_PAIRS = {
    # (g1, g2) as matrix-unit index pairs, with Tr(g1 g2)
    "E11,E11": ((1, 1), (1, 1)),
    "E12,E21": ((1, 2), (2, 1)),
    "E12,E12": ((1, 2), (1, 2)),
    "E11,E22": ((1, 1), (2, 2)),
}


def cocycle_cases(r: int = 2, max_ab: int = 2, max_i: int = 3) -> list:
    """(label, A, B) for a + b <= max_ab, |i| <= max_i, j on and off the diagonal i + j = a + b."""
    cases = []
    for name, (p, q) in TRACE_PAIRS.items():
        g1, g2 = matrix_unit(*p, r), matrix_unit(*q, r)
        for a in range(max_ab + 1):
            for b in range(max_ab + 1 - a):
                for i in range(-max_i, max_i + 1):
                    for j in (a + b - i, a + b - i + 1):
                        A, B = element(g1, i, a), element(g2, j, b)
                        cases.append((f"{name} i={i} a={a} j={j} b={b}", A, B))
    return cases


def sample_monomials(r: int, charges: Iterable[int], depth: int, count: int | None = None, seed: int = 0) -> list:
    import random

    pool = [m for n in charges for m in enumerate_sector(n, r, depth)]
    if count is None or count >= len(pool):
        return pool
    rng = random.Random(seed)
    return sorted(rng.sample(pool, count))


def _cocycle_row(case: tuple, sample: list) -> dict:
    label, A, B = case
    expected = cocycle_formula(A, B)
    try:
        got = verify_cocycle(A, B, sample)
    except NonScalarDefect as exc:
        return {"case": label, "status": "non-scalar", "detail": str(exc)}
    status = "pass" if got == expected else "mismatch"
    return {"case": label, "status": status, "value": str(got), "expected": str(expected)}


def central_acts_by_one(sample: Iterable[FockMonomial]) -> bool:
    for mono in sample:
        K = DiffOpElement(tuple((0,) * mono.r for _ in range(mono.r)), 0, 0, Fraction(1))
        if act_fock(K, FockVector.of(mono)) != FockVector.of(mono):
            return False
    return True


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _cocycle_task(args: tuple) -> dict:
    return _cocycle_row(*args)


def cocycle_sweep(r: int = 2, depth: int = 2, samples: int | None = None, seed: int = 0, jobs: int = 1) -> dict:
    sample = sample_monomials(r, (0, 1), depth, samples, seed)
    if vacuum(r) not in sample:
        sample = [vacuum(r)] + sample
    rows = _map(_cocycle_task, [(c, sample) for c in cocycle_cases(r)], jobs)
    return {
        "identity": "cocycle",
        "r": r,
        "samples": len(sample),
        "central_acts_by_one": central_acts_by_one(sample),
        "rows": rows,
        "passed": all(row["status"] == "pass" for row in rows) and central_acts_by_one(sample),
    }


def _current_task(args: tuple) -> dict:
    j, m, n, r, depth = args
    sample = enumerate_sector(n, r, depth)
    bad = [repr(mono) for mono in sample if current_identity_coefficient(j, m, FockVector.of(mono), r)]
    return {"j": j, "m": m, "charge": n, "checked": len(sample), "failures": bad[:5], "passed": not bad}


def current_identity_sweep(r: int = 2, depth: int = 4, charges: Iterable[int] = (0, 1, 2, 3), max_m: int = 2, jobs: int = 1) -> dict:
    tasks = [(j, m, n, r, depth) for j in range(1, r + 1) for m in range(-max_m, max_m + 1) for n in charges]
    rows = _map(_current_task, tasks, jobs)
    return {"identity": "current", "r": r, "depth": depth, "rows": rows, "passed": all(x["passed"] for x in rows)}
