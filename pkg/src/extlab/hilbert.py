"""Hilbert series of monomial ideals and graded dimension tables.

A Hilbert series is kept as ``(h, dim)`` meaning ``h(t) / (1 - t)^dim`` with
``h`` an integer coefficient list and ``h(1) != 0`` unless the module is zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Monomial

IntList = List[int]


def _trim(a: IntList) -> IntList:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a: Sequence[int], b: Sequence[int]) -> IntList:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a: Sequence[int], b: Sequence[int]) -> IntList:
    return poly_add(a, [-x for x in b])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntList:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def shift(a: Sequence[int], k: int) -> IntList:
    return _trim([0] * k + list(a)) if a else []


def _minimalize(gens: Sequence[Monomial]) -> List[Monomial]:
    gens = sorted(set(gens), key=sum)
    out: List[Monomial] = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return out


def hilbert_numerator(gens: Sequence[Monomial], nvars: int) -> IntList:
    """Numerator N(t) of HS(S/I) = N(t) / (1 - t)^nvars for a monomial ideal I."""
    memo: Dict[tuple, IntList] = {}

    def rec(gs: List[Monomial]) -> IntList:
        gs = _minimalize(gs)
        if not gs:
            return [1]
        if any(not any(g) for g in gs):
            return []
        fkey = tuple(sorted(gs))
        if fkey in memo:
            return memo[fkey]
        supports = [frozenset(i for i, x in enumerate(g) if x) for g in gs]
        shared = None
        seen: Dict[int, int] = {}
        for s in supports:
            for i in s:
                seen[i] = seen.get(i, 0) + 1
        multi = [i for i, c in seen.items() if c > 1]
        if not multi:
            out = [1]
            for g in gs:
                out = poly_mul(out, poly_sub([1], shift([1], sum(g))))
            memo[fkey] = out
            return out
        shared = max(multi, key=lambda i: (seen[i], -i))
        x = tuple(1 if i == shared else 0 for i in range(nvars))
        plus = rec(gs + [x])
        colon = rec([tuple(max(e - 1, 0) if i == shared else e for i, e in enumerate(g)) for g in gs])
        out = poly_add(plus, shift(colon, 1))
        memo[fkey] = out
        return out

    return rec(list(gens))


def reduce_series(num: Sequence[int], dim: int) -> Tuple[IntList, int]:
    """Cancel factors (1 - t) so that h(1) != 0 (or h = 0)."""
    h = _trim(num)
    while dim > 0 and h and sum(h) == 0:
        # synthetic division by (1 - t): q_i = sum_{j<=i} h_j
        q, acc = [], 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = _trim(q)
        dim -= 1
    if not h:
        return [], 0
    return h, dim


def series_coefficient(h: Sequence[int], dim: int, d: int) -> int:
    """Coefficient of t^d in h(t) / (1 - t)^dim."""
    if d < 0:
        return 0
    if dim == 0:
        return h[d] if d < len(h) else 0
    return sum(c * comb(d - i + dim - 1, dim - 1) for i, c in enumerate(h) if i <= d)


@dataclass
class GradedDimensionTable:
    """Per-degree dimensions of a graded module, with stabilization data.

    ``stable_from`` is the least degree from which dimensions are constant
    (``None`` if they never are); ``length`` is the total dimension for a
    finite-length module and ``None`` otherwise.
    """

    dims: Dict[int, int]
    stable_from: Optional[int] = None
    stable_value: Optional[int] = None
    length: Optional[int] = None
    numerator: IntList = field(default_factory=list)
    pole_order: int = 0

    def __getitem__(self, d: int) -> int:
        if d in self.dims:
            return self.dims[d]
        if self.numerator or self.pole_order:
            return series_coefficient(self.numerator, self.pole_order, d)
        return 0

    def values(self) -> List[int]:
        return [self.dims[d] for d in sorted(self.dims)]

    def laurent(self) -> Dict[int, int]:
        """Hilbert polynomial of a finite-length module as {exponent: coefficient}."""
        if self.length is None:
            raise ValueError("module does not have finite length")
        return {i: c for i, c in enumerate(self.numerator) if c}

    def to_dict(self) -> dict:
        return {"dims": {str(d): v for d, v in sorted(self.dims.items())},
                "stable_from": self.stable_from, "length": self.length}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def table_from_series(h: Sequence[int], dim: int, max_degree: int) -> GradedDimensionTable:
    h, dim = reduce_series(h, dim)
    dims = {d: series_coefficient(h, dim, d) for d in range(max_degree + 1)}
    if dim == 0:
        s = len(h)
        while s > 0 and h[s - 1] == 0:
            s -= 1
        return GradedDimensionTable(dims, s, 0, sum(h), list(h), 0)
    if dim == 1:
        # HF(d) = sum_{i<=d} h_i, constant once d >= deg h
        s = max(len(h) - 1, 0)
        while s > 0 and h[s] == 0:
            s -= 1
        return GradedDimensionTable(dims, s, sum(h), None, list(h), 1)
    return GradedDimensionTable(dims, None, None, None, list(h), dim)


def laurent_product_with_inverse(coeffs: Dict[int, int]) -> Dict[int, int]:
    """H(t) * H(1/t) for a Laurent polynomial H given as {exponent: coefficient}."""
    out: Dict[int, int] = {}
    for i, a in coeffs.items():
        for j, b in coeffs.items():
            out[i - j] = out.get(i - j, 0) + a * b
    return {k: v for k, v in sorted(out.items()) if v}
