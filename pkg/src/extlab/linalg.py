"""Exact sparse linear algebra over Q or F_p.

Vectors are dicts ``{column: value}`` with arbitrary hashable, totally
ordered columns.  Kept deliberately separate from the Groebner code so that
it can serve as an independent check on it.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List

from .field import FieldSpec

Vector = Dict[Hashable, object]


class Echelon:
    """Incrementally built reduced row echelon form.

    Each stored row is normalized to pivot coefficient 1 and contains no other
    pivot column, so reducing a vector takes a single pass over its entries.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.p = field.characteristic
        self.rows: Dict[Hashable, Dict] = {}
        # column -> set of pivots whose row has a nonzero entry there
        self._occurs: Dict[Hashable, set] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon(self.field)
        e.rows = {k: dict(v) for k, v in self.rows.items()}
        e._occurs = {k: set(v) for k, v in self._occurs.items()}
        return e

    def _norm(self, x):
        return x % self.p if self.p else x

    def reduce(self, vec: Vector) -> Dict:
        p = self.p
        out = {}
        for col, val in vec.items():
            if val:
                out[col] = val if not p else val % p
        out = {c: v for c, v in out.items() if v}
        for col in [c for c in out if c in self.rows]:
            c = out.get(col)
            if not c:
                continue
            for k, v in self.rows[col].items():
                nv = out.get(k, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def add(self, vec: Vector) -> bool:
        """Insert a vector; return True if it increased the rank."""
        r = self.reduce(vec)
        if not r:
            return False
        piv = max(r)
        inv = self.field.inverse(r[piv])
        p = self.p
        if p:
            r = {k: v * inv % p for k, v in r.items()}
        else:
            r = {k: v * inv for k, v in r.items()}
        # eliminate the new pivot column from existing rows
        for other in list(self._occurs.get(piv, ())):
            row = self.rows[other]
            c = row.pop(piv)
            for k, v in r.items():
                if k == piv:
                    continue
                nv = row.get(k, 0) - c * v
                if p:
                    nv %= p
                if nv:
                    if k not in row:
                        self._occurs.setdefault(k, set()).add(other)
                    row[k] = nv
                else:
                    if k in row:
                        del row[k]
                        self._occurs[k].discard(other)
        self._occurs.pop(piv, None)
        self.rows[piv] = r
        for k in r:
            if k != piv:
                self._occurs.setdefault(k, set()).add(piv)
        return True

    def extend(self, vecs: Iterable[Vector]) -> int:
        return sum(1 for v in vecs if self.add(v))

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Vector], field: FieldSpec) -> int:
    e = Echelon(field)
    e.extend(vectors)
    return e.rank


def matrix_rank(matrix: List[List[int]], field: FieldSpec) -> int:
    """Rank of a dense integer/rational matrix given as a list of rows."""
    vecs = []
    for row in matrix:
        vecs.append({j: field(x) for j, x in enumerate(row) if x})
    return rank(vecs, field)
