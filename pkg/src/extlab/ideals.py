"""Ideals in quotient rings R = S/J of a polynomial ring S.

Every ideal of R is handled through its lift to S, which always contains J.
Equality and membership are decided by reduced Groebner bases (degrevlex).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .field import FieldSpec
from .groebner import GroebnerBasis, buchberger, divide_exact, normal_form
from .hilbert import (GradedDimensionTable, hilbert_numerator, poly_sub,
                      reduce_series, table_from_series)
from .parser import format_ring_file, parse_ring_file
from .poly import DEGREVLEX, MonomialOrder, Polynomial, PolyRing

log = logging.getLogger(__name__)

Element = Union[Polynomial, str, int]


class RingMismatchError(ValueError):
    pass


class NotGradedError(ValueError):
    pass


class RingPresentation:
    """R = S/J for S = k[vars] with degrevlex order and J given by generators."""

    def __init__(self, ring: PolyRing, relations: Sequence[Element] = (), name: Optional[str] = None):
        if ring.order != DEGREVLEX:
            ring = ring.with_order(DEGREVLEX)
        self.S = ring
        self.name = name or "R"
        self.relations: Tuple[Polynomial, ...] = tuple(self._coerce(f) for f in relations)
        self.gb: GroebnerBasis = buchberger(self.relations, ring)
        # builder-specific data (Delta matrix, (n, l), U and L, ...)
        self.meta: dict = {}

    @classmethod
    def from_text(cls, text: str) -> "RingPresentation":
        rf = parse_ring_file(text)
        return cls(rf.ring, rf.generators, rf.name)

    def to_text(self, comment: Optional[str] = None) -> str:
        return format_ring_file(self.S, self.relations, self.name, comment)

    def _coerce(self, f: Element) -> Polynomial:
        if isinstance(f, Polynomial):
            if f.ring != self.S:
                if f.ring.variables == self.S.variables and f.ring.field == self.S.field:
                    return f.convert(self.S)
                raise RingMismatchError(f"{f} is not an element of {self.S}")
            return f
        return self.S(f)

    def __repr__(self):
        return f"RingPresentation({self.name}: {self.field} {list(self.variables)}, {len(self.relations)} relations)"

    @property
    def field(self) -> FieldSpec:
        return self.S.field

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.S.variables

    @property
    def nvars(self) -> int:
        return self.S.nvars

    def element(self, f: Element) -> Polynomial:
        return self._coerce(f)

    def reduce(self, f: Element) -> Polynomial:
        """Normal form of f modulo J, the canonical residue representative."""
        return normal_form(self._coerce(f), self.gb)

    def is_zero(self, f: Element) -> bool:
        return self.reduce(f).is_zero()

    @cached_property
    def is_graded(self) -> bool:
        return all(f.is_homogeneous() for f in self.relations)

    def check_graded(self) -> None:
        """Verify J is homogeneous and contained in M^2."""
        if not self.is_graded:
            raise NotGradedError(f"{self.name}: defining ideal is not homogeneous")
        bad = [f for f in self.relations if f and f.degree() < 2]
        if bad:
            raise NotGradedError(f"{self.name}: J is not contained in M^2 (generator {bad[0]})")

    def ideal(self, *gens: Element) -> "IdealHandle":
        if len(gens) == 1 and isinstance(gens[0], (list, tuple)):
            gens = tuple(gens[0])
        return IdealHandle(self, gens)

    @cached_property
    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, ())

    @cached_property
    def unit_ideal(self) -> "IdealHandle":
        return IdealHandle(self, (self.S.one,))

    @cached_property
    def maximal_ideal(self) -> "IdealHandle":
        return IdealHandle(self, self.S.gens())

    def with_field(self, field: FieldSpec) -> "RingPresentation":
        S = self.S.with_field(field)
        rels = [S.from_dict(dict(f.terms)) for f in self.relations]
        return RingPresentation(S, rels, self.name)


class IdealHandle:
    """An ideal of R, stored by residue generators plus the GB of its lift J + (gens)."""

    def __init__(self, ring: RingPresentation, generators: Iterable[Element] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring._coerce(g)
            if g:
                gens.append(g)
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        if gens:
            self.gb = buchberger(list(ring.gb.elements) + gens, ring.S)
        else:
            self.gb = ring.gb

    def _check(self, other: "IdealHandle"):
        if other.ring is not self.ring:
            raise RingMismatchError("ideals belong to different rings")

    def __repr__(self):
        return f"IdealHandle({self.ring.name}: ({', '.join(str(g) for g in self.residue_generators)}))"

    def __str__(self):
        gens = self.residue_generators
        return "(" + ", ".join(str(g) for g in gens) + ")" if gens else "(0)"

    @cached_property
    def residue_generators(self) -> Tuple[Polynomial, ...]:
        """Generators reduced modulo J, zeros and duplicates dropped."""
        seen = []
        for g in self.generators:
            r = self.ring.reduce(g)
            if r and r not in seen:
                seen.append(r)
        return tuple(seen)

    def contains(self, f: Element) -> bool:
        return normal_form(self.ring._coerce(f), self.gb).is_zero()

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        self._check(other)
        return self.gb == other.gb

    def __hash__(self):
        return hash(self.gb)

    def __le__(self, other: "IdealHandle") -> bool:
        self._check(other)
        return all(other.contains(g) for g in self.generators)

    def __ge__(self, other: "IdealHandle") -> bool:
        return other <= self

    def is_zero(self) -> bool:
        return self.gb == self.ring.gb

    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        self._check(other)
        return IdealHandle(self.ring, self.generators + other.generators)

    def __mul__(self, other: "IdealHandle") -> "IdealHandle":
        self._check(other)
        prods = [self.ring.reduce(f * g) for f in self.residue_generators for g in other.residue_generators]
        return IdealHandle(self.ring, prods)

    def __pow__(self, k: int) -> "IdealHandle":
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.unit_ideal
        for _ in range(k):
            out = out * self
        return out

    def scaled(self, f: Element) -> "IdealHandle":
        """The ideal f*self."""
        f = self.ring._coerce(f)
        return IdealHandle(self.ring, [self.ring.reduce(f * g) for g in self.residue_generators])

    @cached_property
    def minimal_generators(self) -> Tuple[Polynomial, ...]:
        """A generating set with no redundant element (minimal when homogeneous)."""
        cands = list(self.residue_generators)
        # GB elements are usually a tidier pool than accumulated generator lists
        pool = [self.ring.reduce(g) for g in self.gb.elements]
        pool = [g for g in pool if g]
        if len(pool) < len(cands):
            cands = pool
        cands.sort(key=lambda g: (g.degree(), len(g), str(g)))
        kept: List[Polynomial] = []
        current = self.ring.gb
        for g in cands:
            if normal_form(g, current).is_zero():
                continue
            kept.append(g)
            current = buchberger(list(current.elements) + [g], self.ring.S)
        # a later generator may make an earlier one redundant only in the
        # inhomogeneous case; for graded input the degree sort rules that out
        return tuple(kept)


# -- ideal membership, equality ---------------------------------------------

def ideal_member(f: Element, I: IdealHandle) -> bool:
    """True iff the residue of f lies in I."""
    if isinstance(f, Polynomial) and f.ring != I.ring.S:
        raise RingMismatchError(f"{f} is not an element of {I.ring.S}")
    return I.contains(f)


def ideal_equal(I: IdealHandle, K: IdealHandle) -> bool:
    return I == K


# -- elimination-based operations in S ---------------------------------------

def _aux_name(S: PolyRing, base: str = "t") -> str:
    name = f"_{base}"
    while name in S.variables:
        name = "_" + name
    return name


def intersect_lifts(S: PolyRing, F: Sequence[Polynomial], G: Sequence[Polynomial]) -> List[Polynomial]:
    """Generators of (F) ∩ (G) in S via t*(F) + (1-t)*(G), eliminating t."""
    if not F or not G:
        return []
    T = PolyRing((_aux_name(S),) + S.variables, S.field, MonomialOrder("elim", 1))
    t = T.gens()[0]
    one = T.one
    gens = [t * f.convert(T) for f in F] + [(one - t) * g.convert(T) for g in G]
    basis = buchberger(gens, T)
    out = []
    for g in basis.elements:
        if all(m[0] == 0 for m in g.terms):
            out.append(S.from_dict({m[1:]: c for m, c in g.terms.items()}))
    return out


def intersect(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    """I ∩ K as ideals of R."""
    I._check(K)
    R = I.ring
    if I.is_unit():
        return K
    if K.is_unit():
        return I
    gens = intersect_lifts(R.S, I.gb.elements, K.gb.elements)
    return IdealHandle(R, [R.reduce(g) for g in gens])


def _colon_element(I: IdealHandle, g: Polynomial) -> IdealHandle:
    R = I.ring
    if I.contains(g):
        return R.unit_ideal
    gens = intersect_lifts(R.S, I.gb.elements, [g])
    quotients = [divide_exact(h, g) for h in gens]
    return IdealHandle(R, [R.reduce(q) for q in quotients])


@dataclass
class ColonResult:
    ideal: IdealHandle
    by_zero: bool = False


def colon(I: IdealHandle, K: Union[IdealHandle, Element]) -> IdealHandle:
    """(I : K) = {r in R : rK ⊆ I}.  Colon by the zero ideal is the unit ideal."""
    return colon_report(I, K).ideal


def colon_report(I: IdealHandle, K: Union[IdealHandle, Element]) -> ColonResult:
    R = I.ring
    if not isinstance(K, IdealHandle):
        K = R.ideal(K)
    I._check(K)
    gens = K.minimal_generators if K.is_homogeneous() else K.residue_generators
    if not gens:
        return ColonResult(R.unit_ideal, by_zero=True)
    result: Optional[IdealHandle] = None
    for g in gens:
        part = _colon_element(I, g)
        result = part if result is None else intersect(result, part)
        if result == I:
            # cannot shrink below I
            break
    return ColonResult(result)


def saturation(I: IdealHandle, K: IdealHandle) -> Tuple[IdealHandle, int]:
    """(I : K^∞) by iterated colon, with the number of colon steps taken."""
    current = I
    steps = 0
    while True:
        nxt = colon(current, K)
        steps += 1
        if nxt == current:
            return current, steps
        current = nxt


def saturate(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    return saturation(I, K)[0]


def local_cohomology_zero(R: RingPresentation) -> IdealHandle:
    """H^0_M(R) as an ideal of R: the saturation of (0) by the irrelevant ideal."""
    if not R.is_graded:
        raise NotGradedError(f"{R.name} is not graded")
    return saturate(R.zero_ideal, R.maximal_ideal)


def radical_member(f: Element, I: IdealHandle) -> bool:
    """True iff f^k ∈ I for some k, via 1 ∈ (lift of I) + (1 - t f) in S[t]."""
    R = I.ring
    f = R._coerce(f)
    S = R.S
    T = PolyRing(S.variables + (_aux_name(S),), S.field, DEGREVLEX)
    t = T.gens()[-1]
    gens = [g.convert(T) for g in I.gb.elements] + [T.one - t * f.convert(T)]
    return buchberger(gens, T).is_unit()


# -- dimension and Hilbert data ---------------------------------------------

def dimension_from_leads(leads: Sequence[Tuple[int, ...]], nvars: int) -> int:
    """Krull dimension of S/(monomial ideal): largest variable set avoiding every support."""
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in leads]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for U in combinations(range(nvars), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return size
    return 0


def krull_dimension(R: Union[RingPresentation, IdealHandle]) -> int:
    """dim S/J (or dim R/I for an ideal handle); -1 for the zero ring."""
    gb = R.gb
    S = R.S if isinstance(R, RingPresentation) else R.ring.S
    return dimension_from_leads(gb.lead_monomials, S.nvars)


def krull_dimension_hilbert(R: Union[RingPresentation, IdealHandle]) -> int:
    """Same as krull_dimension, read off the pole order of the Hilbert series."""
    gb = R.gb
    S = R.S if isinstance(R, RingPresentation) else R.ring.S
    h, dim = reduce_series(hilbert_numerator(gb.lead_monomials, S.nvars), S.nvars)
    return dim if h else -1


def is_finite_quotient(I: IdealHandle) -> bool:
    """R/I finite dimensional over k."""
    return I.gb.is_finite()


@dataclass(frozen=True)
class Subquotient:
    """The module top/bottom for ideals bottom ⊆ top of R."""

    top: IdealHandle
    bottom: IdealHandle


def quotient_module(K: IdealHandle) -> Subquotient:
    return Subquotient(K.ring.unit_ideal, K)


Module = Union[None, RingPresentation, IdealHandle, Subquotient]


def _series_of_lift(I: IdealHandle):
    return hilbert_numerator(I.gb.lead_monomials, I.ring.nvars)


def module_series(R: RingPresentation, module: Module = None) -> Tuple[List[int], int]:
    """Hilbert series (h, dim) of a graded module of R."""
    if module is None or isinstance(module, RingPresentation):
        top, bottom = R.unit_ideal, R.zero_ideal
    elif isinstance(module, IdealHandle):
        top, bottom = module, R.zero_ideal
    else:
        top, bottom = module.top, module.bottom
    for K in (top, bottom):
        if K.ring is not R:
            raise RingMismatchError("module is not over this ring")
        if not K.is_homogeneous() or not R.is_graded:
            raise NotGradedError("module is not graded")
    num = poly_sub(_series_of_lift(bottom), _series_of_lift(top))
    return reduce_series(num, R.nvars)


def hilbert_table(R: RingPresentation, module: Module = None, max_degree: int = 6) -> GradedDimensionTable:
    """Per-degree dimensions of R, an ideal of R, or a subquotient top/bottom."""
    h, dim = module_series(R, module)
    return table_from_series(h, dim, max_degree)


def module_length(R: RingPresentation, module: Module) -> int:
    h, dim = module_series(R, module)
    if dim != 0:
        raise ValueError("module does not have finite length")
    return sum(h)


def quotient_dimension(K: IdealHandle) -> int:
    """dim_k R/K, for any (possibly inhomogeneous) K with R/K finite dimensional.

    Counts standard monomials of the lift, so it is the global k-dimension:
    for inhomogeneous K it sums contributions from every point of V(K).
    """
    h, dim = reduce_series(_series_of_lift(K), K.ring.nvars)
    if dim != 0:
        raise ValueError("quotient is not finite dimensional")
    return sum(h)


def subquotient_dimension(top: IdealHandle, bottom: IdealHandle) -> int:
    """dim_k top/bottom for bottom ⊆ top with R/bottom finite dimensional."""
    return quotient_dimension(bottom) - quotient_dimension(top)


def embedding_dimension(R: RingPresentation) -> int:
    """dim_k M/M^2 = (number of variables) - dim_k J_1 for graded R."""
    if not R.is_graded:
        raise NotGradedError(f"{R.name} is not graded")
    linear = sum(1 for g in R.gb.elements if g.degree() == 1)
    return R.nvars - linear


def minimal_generator_count(K: IdealHandle) -> int:
    """mu(K) = dim_k K/MK for a homogeneous ideal K."""
    R = K.ring
    MK = R.maximal_ideal * K
    return module_length(R, Subquotient(K, MK))


def quotient_embedding_dimension(K: IdealHandle) -> int:
    """v(R/K) for homogeneous K: dim_k M/(K + M^2)."""
    R = K.ring
    top = R.maximal_ideal
    bottom = K + R.maximal_ideal * R.maximal_ideal
    return module_length(R, Subquotient(top + bottom, bottom))
