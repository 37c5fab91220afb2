"""Builders for the rings studied in the lab."""

from __future__ import annotations

from typing import List, Optional, Sequence

from ..field import QQ, FieldSpec
from ..groebner import buchberger
from ..ideals import RingPresentation, intersect_lifts
from ..poly import Polynomial, PolyRing
from .delta import DeltaMatrix, check_nl, delta_matrix


def counterexample_variables(n: int) -> List[str]:
    return [f"X{i}" for i in range(1, n + 1)] + ["A"]


def counterexample_generators(S: PolyRing, n: int, l: int, delta: DeltaMatrix) -> List[Polynomial]:
    """Generators of J, listing X_iX_j - A*Delta_ij only once per symmetric pair."""
    X = S.gens()[:n]
    A = S.gens()[n]

    def form(i: int, j: int) -> Polynomial:
        out = S.zero
        for k, c in delta.entry(i, j).items():
            out = out + X[k - 1].scale(c)
        return out

    gens = [A * X[i] for i in range(l)]
    gens += [X[i] * X[j] for i in range(l, n) for j in range(i, n)]
    gens += [X[i - 1] * X[j - 1] - A * form(i, j) for i in range(1, l + 1) for j in range(i, l + 1)]
    gens += [X[i - 1] * X[j - 1] - A * form(i, j) for i in range(1, l + 1) for j in range(l + 1, n + 1)]
    return gens


def counterexample_ring(n: int, l: int, field: FieldSpec = QQ,
                        delta: Optional[DeltaMatrix] = None) -> RingPresentation:
    """R = k[X1..Xn, A]/J with J = (AX_i)_{i<=l} + (X_{l+1}..X_n)^2 + (X_iX_j - A*Delta_ij).

    A custom ``delta`` may be supplied (mutation tests); it is not re-verified.
    """
    check_nl(n, l)
    if delta is None:
        delta = delta_matrix(n, l, field)
    S = PolyRing(counterexample_variables(n), field)
    R = RingPresentation(S, counterexample_generators(S, n, l, delta), name=f"CE({n},{l})")
    R.check_graded()
    R.meta.update(delta=delta, n=n, l=l)
    return R


def ring_from_intersection(S: PolyRing, U: Sequence[str], L: Sequence[str], name: str) -> RingPresentation:
    """S/(U ∩ L), also remembering U and L as ideals of S."""
    Ug = [S(u) for u in U]
    Lg = [S(x) for x in L]
    J = intersect_lifts(S, buchberger(Ug, S).elements, buchberger(Lg, S).elements)
    R = RingPresentation(S, J, name=name)
    R.meta.update(U=Ug, L=Lg)
    return R


def example_4_1(field: FieldSpec = QQ) -> RingPresentation:
    S = PolyRing(["X", "Y", "Z"], field)
    return ring_from_intersection(S, ["X", "Y"], ["X^2", "X*Y - Y*Z", "Y^2 - X*Z", "Z^2"], "Ex4.1")


def example_4_3(n: int, m: int, l: int, field: FieldSpec = QQ) -> RingPresentation:
    """U = (X_i^l), L = (X_i^m, Z) in k[X_1..X_n, Z]; requires n > 0 and m > l > 0."""
    if not (n > 0 and m > l > 0):
        raise ValueError(f"need n > 0 and m > l > 0, got n={n}, m={m}, l={l}")
    S = PolyRing([f"X{i}" for i in range(1, n + 1)] + ["Z"], field)
    U = [f"X{i}^{l}" for i in range(1, n + 1)]
    L = [f"X{i}^{m}" for i in range(1, n + 1)] + ["Z"]
    R = ring_from_intersection(S, U, L, f"Ex4.3({n},{m},{l})")
    R.meta.update(n=n, m=m, l=l)
    return R


def example_4_4(field: FieldSpec = QQ) -> RingPresentation:
    S = PolyRing(["X", "Y", "Z"], field)
    return ring_from_intersection(S, ["X", "Y"], ["X^2", "Y^2", "Z^2"], "Ex4.4")


def two_generated_rings(field: FieldSpec = QQ) -> List[RingPresentation]:
    """Small non-Cohen-Macaulay rings of embedding dimension 2, J = f*L with L primary."""
    S = PolyRing(["X", "Y"], field)
    specs = [
        ("v2:X(X,Y)", ["X^2", "X*Y"]),
        ("v2:X(X^2,Y)", ["X^3", "X*Y"]),
        ("v2:X(X,Y^2)", ["X^2", "X*Y^2"]),
        ("v2:X^2(X,Y)", ["X^3", "X^2*Y"]),
    ]
    return [RingPresentation(S, gens, name=name) for name, gens in specs]


def add_indeterminates(R: RingPresentation, count: int) -> RingPresentation:
    """R[Y_1..Y_count]: same relations, more variables (dimension goes up by count)."""
    names = list(R.variables) + [f"Y{i}" for i in range(1, count + 1)]
    S = PolyRing(names, R.field)
    return RingPresentation(S, [f.convert(S) for f in R.relations], name=f"{R.name}[Y1..Y{count}]")
