"""The l x n matrix of linear forms used to build the counterexample rings.

Entries are linear forms in V = span(X_{l+1}, ..., X_n), stored as
``{variable index: coefficient}`` with 1-based indices so that ``{4: 1}``
means X_4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..field import QQ, FieldSpec
from ..linalg import rank

LinearForm = Dict[int, int]


class ConstraintError(ValueError):
    """(n, l) outside 2 <= l <= n - 2."""


class DeltaConditionError(AssertionError):
    """A constructed matrix fails one of the three defining conditions."""


def check_nl(n: int, l: int) -> None:
    if not (2 <= l <= n - 2):
        raise ConstraintError(f"need 2 <= l <= n-2, got n={n}, l={l}")


@dataclass(frozen=True)
class DeltaMatrix:
    n: int
    l: int
    entries: Tuple[Tuple[Tuple[Tuple[int, int], ...], ...], ...]

    @classmethod
    def from_forms(cls, n: int, l: int, rows: List[List[LinearForm]]) -> "DeltaMatrix":
        frozen = tuple(tuple(tuple(sorted((k, c) for k, c in f.items() if c)) for f in row) for row in rows)
        return cls(n, l, frozen)

    def entry(self, i: int, j: int) -> LinearForm:
        """Entry (i, j), 1-based like the paper's indices."""
        return dict(self.entries[i - 1][j - 1])

    def rows(self) -> List[List[LinearForm]]:
        return [[dict(e) for e in row] for row in self.entries]

    def coefficient_tensor(self) -> Dict[Tuple[int, int, int], int]:
        """(i, j, k) -> coefficient of X_k in entry (i, j)."""
        out = {}
        for i, row in enumerate(self.entries, 1):
            for j, e in enumerate(row, 1):
                for k, c in e:
                    out[(i, j, k)] = c
        return out

    def format_entry(self, i: int, j: int) -> str:
        e = self.entry(i, j)
        if not e:
            return "0"
        parts = [(f"X{k}" if c == 1 else f"{c}*X{k}") for k, c in sorted(e.items())]
        return " + ".join(parts)

    def __str__(self):
        return "\n".join("[" + ", ".join(self.format_entry(i, j) for j in range(1, self.n + 1)) + "]"
                         for i in range(1, self.l + 1))

    def with_entry(self, i: int, j: int, form: LinearForm) -> "DeltaMatrix":
        rows = self.rows()
        rows[i - 1][j - 1] = dict(form)
        return DeltaMatrix.from_forms(self.n, self.l, rows)

    # -- the three conditions ----------------------------------------------

    def is_symmetric(self) -> bool:
        return all(self.entry(i, j) == self.entry(j, i)
                   for i in range(1, self.l + 1) for j in range(1, self.l + 1))

    def spans_v(self, field: FieldSpec = QQ) -> bool:
        """Entries lie in V and span it."""
        n, l = self.n, self.l
        vecs = []
        for row in self.entries:
            for e in row:
                if any(not (l < k <= n) for k, _ in e):
                    return False
                vecs.append({k: field(c) for k, c in e})
        return rank(vecs, field) == n - l

    def kernel_trivial(self, field: FieldSpec = QQ) -> bool:
        """Delta * c = 0 forces c = 0: the (l*(n-l)) x n coefficient matrix has rank n."""
        t = self.coefficient_tensor()
        rows: Dict[Tuple[int, int], Dict[int, object]] = {}
        for (i, j, k), c in t.items():
            rows.setdefault((i, k), {})[j] = field(c)
        return rank(rows.values(), field) == self.n

    def verify(self, field: FieldSpec = QQ) -> Dict[str, bool]:
        return {"C1": self.is_symmetric(), "C2": self.spans_v(field), "C3": self.kernel_trivial(field)}


def delta_matrix(n: int, l: int, field: FieldSpec = QQ) -> DeltaMatrix:
    """Build the matrix for 2 <= l <= n-2 and verify its three conditions."""
    check_nl(n, l)
    rows: List[List[LinearForm]] = [[{} for _ in range(n)] for _ in range(l)]

    def put(i: int, j: int, k: int):
        rows[i - 1][j - 1] = {k: 1}

    if l <= n - l:
        for j in range(1, l + 1):
            put(1, j, l + j)
            put(j, 1, l + j)
        for j in range(l + 1, n + 1):
            put(l, j, j)
    else:
        alpha = n - l
        q, r = divmod(l, alpha)
        if not (0 < q <= l - 2):
            raise DeltaConditionError(f"quotient q={q} outside 0 < q <= l-2")
        for i in range(1, q + 1):
            for j in range(alpha * (i - 1) + 1, alpha * i + 1):
                put(i, j, l + j - alpha * (i - 1))
                put(j, i, l + j - alpha * (i - 1))
        for j in range(alpha * q + 1, l + 1):
            put(q + 1, j, j + r)
            put(j, q + 1, j + r)
        for j in range(l + 1, n + 1):
            put(l, j, j)
    D = DeltaMatrix.from_forms(n, l, rows)
    status = D.verify(field)
    failed = [c for c, ok in status.items() if not ok]
    if failed:
        raise DeltaConditionError(f"Delta({n},{l}) fails {failed}")
    return D
