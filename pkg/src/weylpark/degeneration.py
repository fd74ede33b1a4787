"""Y-degree filtration of V(xi, N), the bigraded character of V(xi), and the alpha maps."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .combinatorics import Partition, catalan_dimension, transpose
from .linalg import GradedSubspace
from .wedge import (
    CurrentElement,
    ModuleVector,
    apply_current,
    block_key,
    close,
    cyclic_closure,
    cyclic_monomial,
    default_power_bound,
    spanning_generators,
)


@dataclass
class Filtration:
    """F^0 <= F^1 <= ... inside V(xi, N), recorded per (weight, x-degree) block."""

    xi: tuple
    N: int
    dim: int
    level_dims: list  # level j -> {(weight, d): dim F^j in that block}
    spaces: list = field(default=None, repr=False)  # GradedSubspace per level, if kept

    def total_dims(self) -> list:
        return [sum(d.values()) for d in self.level_dims]


def filtration_levels(
    xi: Sequence[int], N: int, keep_spaces: bool = False, power_bound: int | None = None
) -> Filtration:
    """Compute F^j = U^{<=j} v_xi level by level.

    Level j is the l = 0 closure of F^{j-1} together with the degree-l
    generators applied to F^{j-l}.  Only the rows that entered at level
    j - l need to be hit by degree-l generators; earlier rows were already
    handled at an earlier level.
    """
    xi = tuple(int(x) for x in xi)
    r = len(xi)
    bound = default_power_bound(xi) if power_bound is None else power_bound
    total = cyclic_closure(xi, N, bound).dim
    gens = spanning_generators(r, bound)
    by_l = {l: [g for g in gens if g.l == l] for l in range(bound + 1)}

    space = GradedSubspace(block_key(xi))
    start = space.add({cyclic_monomial(xi): 1})
    increments = [[start] + close(space, [start], by_l[0], N)]
    level_dims = [space.block_dims()]
    spaces = [space.copy()] if keep_spaces else None
    idle = 0
    while len(space) < total:
        j = len(increments)
        new = []
        for l in range(1, min(j, bound) + 1):
            for v in increments[j - l]:
                for g in by_l[l]:
                    row = space.add(apply_current(v, g, N))
                    if row:
                        new.append(row)
        new += close(space, new, by_l[0], N)
        increments.append(new)
        level_dims.append(space.block_dims())
        if keep_spaces:
            spaces.append(space.copy())
        idle = 0 if new else idle + 1
        if idle > bound:
            raise RuntimeError(f"filtration of V{xi} stalled at dim {len(space)} < {total}")
    return Filtration(xi, N, total, level_dims, spaces)


class BigradedCharacter:
    """dim of V^{ij}(xi)^eta, keyed by (eta, i, j): i the x-degree, j the y-degree."""

    def __init__(self, data: Mapping | None = None):
        self.data = {(tuple(w), int(i), int(j)): int(d) for (w, i, j), d in (data or {}).items() if d}

    def __eq__(self, other) -> bool:
        return isinstance(other, BigradedCharacter) and self.data == other.data

    def __repr__(self) -> str:
        return f"BigradedCharacter({len(self.data)} entries, dim={self.dim})"

    @property
    def dim(self) -> int:
        return sum(self.data.values())

    def weights(self) -> list:
        return sorted({w for w, _, _ in self.data})

    def x_degree(self) -> int:
        return max((i for _, i, _ in self.data), default=-1)

    def y_degree(self) -> int:
        return max((j for _, _, j in self.data), default=-1)

    def specialize(self) -> dict:
        """e^eta -> 1: {(i, j): dim}."""
        out: dict = {}
        for (_, i, j), d in self.data.items():
            out[(i, j)] = out.get((i, j), 0) + d
        return out

    def x_graded(self) -> dict:
        """y -> 1: {(eta, i): dim}."""
        out: dict = {}
        for (w, i, _), d in self.data.items():
            out[(w, i)] = out.get((w, i), 0) + d
        return out

    def weight_totals(self) -> dict:
        out: dict = {}
        for (w, _, _), d in self.data.items():
            out[w] = out.get(w, 0) + d
        return out

    def is_xy_symmetric(self) -> bool:
        flat = self.specialize()
        return all(flat.get((j, i), 0) == d for (i, j), d in flat.items())

    def shifted(self, delta: Sequence[int]) -> "BigradedCharacter":
        return BigradedCharacter(
            {(tuple(a + b for a, b in zip(w, delta)), i, j): d for (w, i, j), d in self.data.items()}
        )

    def records(self) -> list:
        return [
            {"weight": list(w), "x": i, "y": j, "dim": d}
            for (w, i, j), d in sorted(self.data.items())
        ]

    @classmethod
    def from_records(cls, records: Sequence[Mapping]) -> "BigradedCharacter":
        return cls({(tuple(r["weight"]), r["x"], r["y"]): r["dim"] for r in records})

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight", "x", "y", "dim"])
        for rec in self.records():
            writer.writerow([" ".join(map(str, rec["weight"])), rec["x"], rec["y"], rec["dim"]])
        return buf.getvalue()


def character_from_filtration(filt: Filtration) -> BigradedCharacter:
    data: dict = {}
    prev: dict = {}
    for j, dims in enumerate(filt.level_dims):
        for (w, i), d in dims.items():
            gain = d - prev.get((w, i), 0)
            if gain:
                data[(w, i, j)] = gain
        prev = dims
    return BigradedCharacter(data)


def bigraded_character(
    xi: Sequence[int], N: int | None = None, check_n_independence: bool = False
) -> BigradedCharacter:
    """ch_{x,y} V(xi), computed at N (default xi_1).

    With check_n_independence the computation is repeated at N + 1 and a
    mismatch raises AssertionError.
    """
    xi = tuple(int(x) for x in xi)
    N = (xi[0] if xi else 0) if N is None else N
    ch = character_from_filtration(filtration_levels(xi, N))
    if check_n_independence:
        other = character_from_filtration(filtration_levels(xi, N + 1))
        if other != ch:
            raise AssertionError(f"character of V{xi} differs between N={N} and N={N + 1}")
    return ch


def degree_formula(xi: Sequence[int], r: int) -> int:
    """sum_i i*xi^t_i - sum_{i=1}^{|xi|} floor((i + r - 1) / r)."""
    lam = Partition(xi)
    xt = transpose(lam)
    return sum(i * c for i, c in enumerate(xt, start=1)) - sum(
        (i + r - 1) // r for i in range(1, lam.size + 1)
    )


# -- alpha maps --------------------------------------------------------------


def alpha_target(n: int, s: int, r: int) -> tuple:
    """Partition vector hosting the image of alpha_{n,s}.

    (n+r)e_1 + (s-1)tau when that is a partition, otherwise its Det-twist
    normalization (n+r)e_1; the twist does not change any dimension.
    """
    if s >= 1:
        return (n + r + s - 1,) + (s - 1,) * (r - 1)
    return (n + r,) + (0,) * (r - 1)


def alpha_map(n: int, s: int, N: int | None = None, r: int = 2) -> ModuleVector:
    """(E_r1 X^(n+1) ... E_31 X^(n+r-2) E_21 X^(n+r-1)) v in V(alpha_target(n, s, r), N)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    xi = alpha_target(n, s, r)
    N = xi[0] if N is None else N
    terms = {cyclic_monomial(xi): 1}
    for a in range(2, r + 1):
        terms = apply_current(terms, CurrentElement(a, 1, n + r + 1 - a, 0), N)
    return ModuleVector(terms, N, r)


def _generated_graded_dim(filt: Filtration, seed: dict, power_bound: int) -> int:
    """Dimension of the g_r-submodule of gr V(xi) generated by the class of seed in gr^0."""
    spaces = filt.spaces
    top = len(spaces) - 1
    r = len(filt.xi)
    gens = spanning_generators(r, power_bound)
    gen_spaces = {}

    def level_space(j: int) -> GradedSubspace:
        if j not in gen_spaces:
            gen_spaces[j] = spaces[j - 1].copy() if j > 0 else GradedSubspace(spaces[0].block_of)
        return gen_spaces[j]

    def base_dim(j: int) -> int:
        return len(spaces[j - 1]) if j > 0 else 0

    queue = []
    row = level_space(0).add(seed)
    if row:
        queue.append((0, row))
    while queue:
        j, v = queue.pop()
        for g in gens:
            target = j + g.l
            if target > top:
                continue
            w = apply_current(v, g, filt.N)
            if not w:
                continue
            row = level_space(target).add(w)
            if row:
                queue.append((target, row))
    return sum(len(sp) - base_dim(j) for j, sp in gen_spaces.items())


def alpha_experiment(n: int, s: int, r: int = 2, N: int | None = None) -> dict:
    """Compare the submodule generated by the alpha image with dim V(n e_1 + s tau).

    Reports both the deformed module and the degenerate (associated graded)
    module.  Nothing is asserted: injectivity of alpha is an open conjecture.
    """
    xi = alpha_target(n, s, r)
    N = xi[0] if N is None else N
    w = alpha_map(n, s, N, r)
    bound = default_power_bound(xi)
    deformed = GradedSubspace(block_key(xi))
    start = deformed.add(w.terms)
    if start:
        close(deformed, [start], spanning_generators(r, bound), N)
    filt = filtration_levels(xi, N, keep_spaces=True)
    in_f0 = not filt.spaces[0].reduce(w.terms)
    degenerate = _generated_graded_dim(filt, w.terms, bound) if in_f0 else None
    expected = catalan_dimension(n, r)
    return {
        "n": n,
        "s": s,
        "r": r,
        "N": N,
        "target": list(xi),
        "expected_dim": expected,
        "deformed_generated_dim": len(deformed),
        "image_in_F0": in_f0,
        "degenerate_generated_dim": degenerate,
        "injective_evidence": degenerate == expected,
    }
