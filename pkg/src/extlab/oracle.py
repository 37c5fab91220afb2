"""Graded linear-algebra oracle for R = S/J with J homogeneous.

Every answer is computed from finite-dimensional pieces only: J_d is the span
of all products m*f (m a monomial, f a generator of J), and colon ideals are
kernels of explicit multiplication maps.  No Groebner basis is involved, so
these numbers are an independent check on the Groebner path.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .hilbert import GradedDimensionTable
from .linalg import Echelon
from .poly import Polynomial, PolyRing, monomials_of_degree


class InhomogeneousError(ValueError):
    pass


def _homogeneous(polys: Iterable[Polynomial]) -> List[Polynomial]:
    out = []
    for f in polys:
        if not f:
            continue
        if not f.is_homogeneous():
            raise InhomogeneousError(f"{f} is not homogeneous")
        out.append(f)
    return out


class GradedOracle:
    def __init__(self, S: PolyRing, relations: Sequence[Polynomial]):
        self.S = S
        self.field = S.field
        self.relations = _homogeneous(relations)
        self._cache: Dict[Tuple[FrozenSet, int], Echelon] = {}

    def _span(self, gens: Sequence[Polynomial], d: int) -> Echelon:
        key = (frozenset(str(g) for g in gens), d)
        if key in self._cache:
            return self._cache[key]
        if gens:
            ech = self._span((), d).copy()
        else:
            ech = Echelon(self.field)
        n = self.S.nvars
        for f in (gens if gens else self.relations):
            e = f.degree()
            if e > d:
                continue
            for m in monomials_of_degree(n, d - e):
                ech.add({tuple(x + y for x, y in zip(fm, m)): c for fm, c in f.terms.items()})
        self._cache[key] = ech
        return ech

    def relation_piece(self, d: int) -> Echelon:
        """Echelon form of J_d."""
        return self._span((), d)

    def ideal_piece(self, gens: Sequence[Polynomial], d: int) -> Echelon:
        """Echelon form of (J + (gens))_d."""
        gens = _homogeneous(gens)
        if not gens:
            return self.relation_piece(d)
        return self._span(tuple(sorted(gens, key=str)), d)

    def space_dimension(self, d: int) -> int:
        return sum(1 for _ in monomials_of_degree(self.S.nvars, d))

    def piece_dimension(self, d: int) -> int:
        """dim_k R_d."""
        return self.space_dimension(d) - self.relation_piece(d).rank

    def ideal_dimension(self, gens: Sequence[Polynomial], d: int) -> int:
        """dim_k of the degree-d piece of the ideal (gens) of R."""
        return self.ideal_piece(gens, d).rank - self.relation_piece(d).rank

    def colon_dimension(self, K: Sequence[Polynomial], L: Sequence[Polynomial], d: int) -> int:
        """dim_k ((K : L) / 0)_d in R, i.e. {u in S_d : u*L ⊆ J+K} modulo J_d."""
        L = _homogeneous(L)
        K = _homogeneous(K)
        if not L:
            return self.piece_dimension(d)
        targets = [(g, self.ideal_piece(K, d + g.degree())) for g in L]
        images = Echelon(self.field)
        n = self.S.nvars
        total = 0
        for u in monomials_of_degree(n, d):
            total += 1
            vec = {}
            for idx, (g, ech) in enumerate(targets):
                prod = {tuple(x + y for x, y in zip(gm, u)): c for gm, c in g.terms.items()}
                for m, c in ech.reduce(prod).items():
                    vec[(idx, m)] = c
            if vec:
                images.add(vec)
        kernel = total - images.rank
        return kernel - self.relation_piece(d).rank

    def table(self, values: Dict[int, int]) -> GradedDimensionTable:
        return GradedDimensionTable(dict(values))


def graded_oracle(R, query: str, args=None, max_degree: int = 6,
                  oracle: Optional[GradedOracle] = None) -> GradedDimensionTable:
    """Dimension table of a graded piece computed purely by linear algebra.

    ``query`` is one of:
      * ``"piece-dimension"``: dims of R_d (args ignored),
      * ``"annihilator"``: dims of (0 : L), args = generators of L,
      * ``"colon-by-element"``: dims of (K : g), args = (generators of K, g),
      * ``"ideal"``: dims of the ideal generated by args.
    """
    if oracle is None:
        oracle = GradedOracle(R.S, R.relations)
    dims = {}
    for d in range(max_degree + 1):
        if query == "piece-dimension":
            dims[d] = oracle.piece_dimension(d)
        elif query == "annihilator":
            dims[d] = oracle.colon_dimension((), [R.element(g) for g in args], d)
        elif query == "colon-by-element":
            K, g = args
            dims[d] = oracle.colon_dimension([R.element(k) for k in K], [R.element(g)], d)
        elif query == "colon":
            K, L = args
            dims[d] = oracle.colon_dimension([R.element(k) for k in K], [R.element(x) for x in L], d)
        elif query == "ideal":
            dims[d] = oracle.ideal_dimension([R.element(g) for g in args], d)
        else:
            raise ValueError(f"unknown oracle query {query!r}")
    return GradedDimensionTable(dims)


def oracle_for(R) -> GradedOracle:
    """Per-ring cached oracle."""
    o = R.meta.get("_oracle")
    if o is None:
        o = GradedOracle(R.S, R.relations)
        R.meta["_oracle"] = o
    return o
