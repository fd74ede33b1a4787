"""Exact sparse row reduction.

Vectors are dicts {key: int}.  Rational input is cleared of denominators
first; reduction is fraction-free (integer cross-multiplication followed by
division by the content), so no Fraction arithmetic happens in inner loops.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Mapping


def primitive(vec: Mapping) -> dict:
    """Scale a rational vector to a primitive integer vector with positive leading entry."""
    items = {k: v for k, v in vec.items() if v}
    if not items:
        return {}
    if any(isinstance(v, Fraction) for v in items.values()):
        den = reduce(lcm, (Fraction(v).denominator for v in items.values()), 1)
        items = {k: int(Fraction(v) * den) for k, v in items.items()}
    g = reduce(gcd, (abs(v) for v in items.values()))
    lead = items[max(items)]
    if lead < 0:
        g = -g
    return {k: v // g for k, v in items.items()}


_CONTENT_LIMIT = 1 << 62  # divide out the content once entries grow past this


class Echelon:
    """Row-echelon basis of a subspace; pivot of each row is its largest key."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> primitive integer row

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        """Fully reduce vec against the basis.  Result is a primitive integer vector."""
        v = primitive(vec)
        while v:
            hits = [k for k in v if k in self.rows]
            if not hits:
                break
            p = max(hits)
            row = self.rows[p]
            a, b = row[p], v[p]
            g = gcd(a, b)
            a, b = a // g, b // g
            if a != 1:
                v = {k: a * c for k, c in v.items()}
            for k, c in row.items():
                val = v.get(k, 0) - b * c
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
            if v and max(map(abs, v.values())) > _CONTENT_LIMIT:
                v = primitive(v)
        return primitive(v)

    def add(self, vec: Mapping) -> dict:
        """Insert vec; returns the new row, or {} if vec was already in the span."""
        v = self.reduce(vec)
        if v:
            self.rows[max(v)] = v
        return v

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def support(self) -> set:
        keys: set = set()
        for row in self.rows.values():
            keys.update(row)
        return keys

    def copy(self) -> "Echelon":
        out = Echelon()
        out.rows = dict(self.rows)
        return out


class GradedSubspace:
    """A subspace that is a direct sum of homogeneous blocks, one Echelon per block key."""

    def __init__(self, block_of):
        self.block_of = block_of  # monomial -> block key
        self.blocks: dict = {}

    def __len__(self) -> int:
        return sum(len(e) for e in self.blocks.values())

    def _block(self, vec: Mapping):
        key = self.block_of(next(iter(vec)))
        return key, self.blocks.setdefault(key, Echelon())

    def add(self, vec: Mapping) -> dict:
        if not vec:
            return {}
        _, ech = self._block(vec)
        return ech.add(vec)

    def reduce(self, vec: Mapping) -> dict:
        if not vec:
            return {}
        key = self.block_of(next(iter(vec)))
        ech = self.blocks.get(key)
        return ech.reduce(vec) if ech is not None else primitive(vec)

    def block_dims(self) -> dict:
        return {k: len(e) for k, e in self.blocks.items() if len(e)}

    def basis(self) -> list:
        return [row for key in sorted(self.blocks) for row in self.blocks[key].basis()]

    def copy(self) -> "GradedSubspace":
        out = GradedSubspace(self.block_of)
        out.blocks = {k: e.copy() for k, e in self.blocks.items()}
        return out
