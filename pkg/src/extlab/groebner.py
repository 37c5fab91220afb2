"""Buchberger's algorithm, normal forms and standard monomials.

Internally polynomials are dicts ``{exponents: int}``.  Over F_p they are kept
monic with coefficients in ``range(p)``; over Q they are kept primitive
(integer coefficients with gcd 1 and positive leading coefficient), which
bounds coefficient growth without rational arithmetic.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import (Monomial, Polynomial, PolyRing, mono_divides, mono_lcm,
                   monomials_of_degree)

IntPoly = Dict[Monomial, int]


class InfiniteQuotientError(ValueError):
    """Requested an unbounded standard-monomial set of an infinite quotient."""


def _mask(m: Monomial) -> int:
    b = 0
    for i, x in enumerate(m):
        if x:
            b |= 1 << i
    return b


class _Elt:
    """A normalized basis element with cached leading data."""

    __slots__ = ("lm", "mask", "terms", "tail", "lc", "sugar", "deg_lm")

    def __init__(self, terms: IntPoly, key, wdeg, p: int, sugar: Optional[int] = None):
        lm = max(terms, key=key)
        terms = _normalize(terms, terms[lm], p)
        self.terms = terms
        self.lm = lm
        self.lc = terms[lm]
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.mask = _mask(lm)
        self.deg_lm = wdeg(lm)
        self.sugar = max(wdeg(m) for m in terms) if sugar is None else sugar


def _to_int(f: Polynomial) -> IntPoly:
    p = f.ring.field.characteristic
    if p:
        return dict(f.terms)
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in f.terms.items()}


def _normalize(f: IntPoly, lc: int, p: int) -> IntPoly:
    """Monic over F_p; primitive with positive leading coefficient over Q."""
    if p:
        inv = pow(lc, -1, p)
        return {m: c * inv % p for m, c in f.items()}
    g = 0
    for c in f.values():
        g = gcd(g, c)
        if g == 1:
            break
    if lc < 0:
        g = -g
    if g == 1:
        return f
    return {m: c // g for m, c in f.items()}


def _reduce(f: IntPoly, G: Sequence[_Elt], key, p: int, full: bool = True):
    """Reduce f by G.  Returns ``(r, scale)`` with ``r / scale`` the exact remainder.

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    f = dict(f)
    r: IntPoly = {}
    scale = Fraction(1)
    while f:
        m = max(f, key=key)
        c = f.pop(m)
        mm = _mask(m)
        for g in G:
            if g.mask & ~mm == 0 and mono_divides(g.lm, m):
                q = tuple(x - y for x, y in zip(m, g.lm))
                if p:
                    for gm, gc in g.tail:
                        t = tuple(x + y for x, y in zip(gm, q))
                        v = (f.get(t, 0) - c * gc) % p
                        if v:
                            f[t] = v
                        else:
                            f.pop(t, None)
                else:
                    lg = g.lc
                    d = gcd(c, lg)
                    cf, cg = lg // d, c // d
                    if cf != 1:
                        for t in f:
                            f[t] *= cf
                        for t in r:
                            r[t] *= cf
                        scale *= cf
                    for gm, gc in g.tail:
                        t = tuple(x + y for x, y in zip(gm, q))
                        v = f.get(t, 0) - cg * gc
                        if v:
                            f[t] = v
                        else:
                            f.pop(t, None)
                    if cf != 1 and (f or r):
                        cont = 0
                        for v in f.values():
                            cont = gcd(cont, v)
                            if cont == 1:
                                break
                        if cont != 1:
                            for v in r.values():
                                cont = gcd(cont, v)
                                if cont == 1:
                                    break
                        if cont > 1:
                            for t in f:
                                f[t] //= cont
                            for t in r:
                                r[t] //= cont
                            scale /= cont
                break
        else:
            r[m] = c
            if not full:
                r.update(f)
                return r, scale
    return r, scale


def _spoly(g1: _Elt, g2: _Elt, p: int) -> IntPoly:
    L = mono_lcm(g1.lm, g2.lm)
    q1 = tuple(x - y for x, y in zip(L, g1.lm))
    q2 = tuple(x - y for x, y in zip(L, g2.lm))
    if p:
        c1, c2 = 1, 1
    else:
        d = gcd(g1.lc, g2.lc)
        c1, c2 = g2.lc // d, g1.lc // d
    out: IntPoly = {}
    for m, c in g1.terms.items():
        t = tuple(x + y for x, y in zip(m, q1))
        out[t] = out.get(t, 0) + c1 * c
    for m, c in g2.terms.items():
        t = tuple(x + y for x, y in zip(m, q2))
        v = out.get(t, 0) - c2 * c
        if p:
            v %= p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    if p:
        out = {m: c % p for m, c in out.items() if c % p}
    return out


def _weighted_degree(ring: PolyRing):
    order = ring.order
    if order.kind == "elim":
        k = order.split
        return lambda m: sum(m[k:])
    return sum


@dataclass
class BuchbergerStats:
    pairs_processed: int = 0
    zero_reductions: int = 0
    basis_size: int = 0


def _buchberger_int(polys: List[IntPoly], ring: PolyRing, strategy: str = "normal",
                    seed: Optional[int] = None, stats: Optional[BuchbergerStats] = None) -> List[_Elt]:
    key = ring.key
    p = ring.field.characteristic
    wdeg = _weighted_degree(ring)
    rng = random.Random(seed)
    G: List[_Elt] = []
    active: List[int] = []
    heap: list = []
    counter = 0

    def pair_key(i: int, j: int, L: Monomial):
        gi, gj = G[i], G[j]
        wl = wdeg(L)
        sugar = max(gi.sugar + wl - gi.deg_lm, gj.sugar + wl - gj.deg_lm)
        # fully random selection explodes coefficients on inhomogeneous input,
        # so "random" keeps the sugar order and randomizes ties and reducers
        if strategy == "random":
            return (sugar, key(L), rng.random())
        return (sugar, key(L))

    def update(h_idx: int):
        nonlocal heap, active, counter
        h = G[h_idx]
        hlm = h.lm
        C = list(active)
        D: List[int] = []
        lcms = {i: mono_lcm(hlm, G[i].lm) for i in C}
        while C:
            i = C.pop()
            L1 = lcms[i]
            coprime = (G[i].mask & h.mask) == 0
            if coprime or not (any(mono_divides(lcms[j], L1) for j in C)
                               or any(mono_divides(lcms[j], L1) for j in D)):
                D.append(i)
        E = [i for i in D if (G[i].mask & h.mask) != 0]
        kept = []
        for entry in heap:
            _, _, i, j, L = entry
            if (mono_divides(hlm, L) and mono_lcm(G[i].lm, hlm) != L
                    and mono_lcm(G[j].lm, hlm) != L):
                continue
            kept.append(entry)
        for i in E:
            counter += 1
            kept.append((pair_key(i, h_idx, lcms[i]), counter, i, h_idx, lcms[i]))
        heapq.heapify(kept)
        heap = kept
        active = [i for i in active if not mono_divides(hlm, G[i].lm)] + [h_idx]

    def add(f: IntPoly) -> bool:
        if not f:
            return False
        elt = _Elt(f, key, wdeg, p)
        G.append(elt)
        if not any(elt.lm):
            return True
        update(len(G) - 1)
        return False

    def unit() -> List[_Elt]:
        one = {(0,) * ring.nvars: 1}
        return [_Elt(one, key, wdeg, p)]

    def reducers() -> List[_Elt]:
        out = [G[k] for k in active]
        if strategy == "random":
            rng.shuffle(out)
        return out

    inputs = [f for f in polys if f]
    if strategy == "random":
        rng.shuffle(inputs)
    for f in sorted(inputs, key=lambda f: max(wdeg(m) for m in f)):
        h, _ = _reduce(f, reducers(), key, p)
        if add(h):
            return unit()

    while heap:
        _, _, i, j, _L = heapq.heappop(heap)
        if stats is not None:
            stats.pairs_processed += 1
        s = _spoly(G[i], G[j], p)
        h, _ = _reduce(s, reducers(), key, p)
        if not h:
            if stats is not None:
                stats.zero_reductions += 1
            continue
        if add(h):
            return unit()

    basis = [G[i] for i in active]
    reduced = []
    for idx, g in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        r, _ = _reduce(g.terms, others, key, p)
        reduced.append(_Elt(r, key, wdeg, p))
    if stats is not None:
        stats.basis_size = len(reduced)
    return reduced


def _from_int(terms: IntPoly, ring: PolyRing, monic: bool = True) -> Polynomial:
    p = ring.field.characteristic
    if p:
        out = {m: c % p for m, c in terms.items() if c % p}
        f = Polynomial(ring, out)
    else:
        f = Polynomial(ring, {m: Fraction(c) for m, c in terms.items() if c})
    return f.monic() if monic else f


class GroebnerBasis:
    """A reduced Groebner basis.  Elements are monic and sorted by leading monomial."""

    def __init__(self, ring: PolyRing, elements: Sequence[Polynomial]):
        self.ring = ring
        key = ring.key
        els = sorted((e.monic() for e in elements if e), key=lambda e: key(e.lm))
        self.elements: Tuple[Polynomial, ...] = tuple(els)
        self.lead_monomials: Tuple[Monomial, ...] = tuple(e.lm for e in els)
        wdeg = _weighted_degree(ring)
        p = ring.field.characteristic
        self._internal = [_Elt(_to_int(e), key, wdeg, p) for e in els]

    @property
    def order(self):
        return self.ring.order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(str(e) for e in self.elements) + "])"

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.lead_monomials)

    def is_zero(self) -> bool:
        return not self.elements

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def standard_monomials(self, up_to_degree: Optional[int] = None) -> "StandardMonomialSet":
        return standard_monomials(self, up_to_degree)

    def is_finite(self) -> bool:
        """True iff the quotient is finite dimensional (a pure power of each variable leads)."""
        n = self.ring.nvars
        pure = set()
        for m in self.lead_monomials:
            support = [i for i, x in enumerate(m) if x]
            if len(support) == 1:
                pure.add(support[0])
            elif not support:
                return True
        return len(pure) == n


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of f modulo G: no term is divisible by a leading monomial."""
    if f.ring != G.ring:
        raise ValueError(f"order/ring mismatch: {f.ring} vs {G.ring}")
    if not f.terms or not G.elements:
        return f
    p = f.ring.field.characteristic
    r, scale = _reduce(_to_int(f) if not p else dict(f.terms), G._internal, f.ring.key, p)
    if p:
        return Polynomial(f.ring, r)
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    factor = 1 / (scale * den)
    return Polynomial(f.ring, {m: c * factor for m, c in r.items()})


def buchberger(gens: Sequence[Polynomial], ring: Optional[PolyRing] = None, *,
               strategy: str = "normal", seed: Optional[int] = None,
               stats: Optional[BuchbergerStats] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens`` in ``ring``'s order.

    ``strategy`` is ``"normal"`` (sugar degree, then lcm order) or ``"random"``.
    An empty generator list gives the zero ideal; ``ring`` is then required.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError(f"generator {g} is not in {ring}")
    if strategy not in ("normal", "random"):
        raise ValueError(f"unknown selection strategy {strategy!r}")
    polys = [_to_int(g) for g in gens if g]
    elts = _buchberger_int(polys, ring, strategy, seed, stats)
    return GroebnerBasis(ring, [_from_int(e.terms, ring) for e in elts])


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact S-polynomial lcm/lt(f)*f - lcm/lt(g)*g."""
    if f.ring != g.ring:
        raise ValueError("polynomials in different rings")
    L = mono_lcm(f.lm, g.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(L, f.lm)), f.ring.field.inverse(f.lc))
    b = g.mul_term(tuple(x - y for x, y in zip(L, g.lm)), g.ring.field.inverse(g.lc))
    return a - b


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Direct check: every S-polynomial of basis pairs reduces to zero."""
    els = G.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            if not normal_form(s_polynomial(els[i], els[j]), G).is_zero():
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    els = G.elements
    for e in els:
        if e.lc != 1:
            return False
        for other in els:
            if other is e:
                continue
            if any(mono_divides(other.lm, m) for m in e.terms):
                return False
    return True


def divide_exact(h: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with h = q*g, raising ValueError if g does not divide h."""
    ring = h.ring
    if g.ring != ring:
        raise ValueError("polynomials in different rings")
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    inv = ring.field.inverse(g.lc)
    glm = g.lm
    q = ring.zero
    r = h
    while r:
        m = r.lm
        if not mono_divides(glm, m):
            raise ValueError(f"{g} does not divide {h}")
        t = ring.monomial(tuple(x - y for x, y in zip(m, glm)), r.lc * inv)
        q = q + t
        r = r - t * g
    return q


@dataclass
class StandardMonomialSet:
    """Monomials outside the leading-term ideal, grouped by total degree."""

    by_degree: Dict[int, List[Monomial]] = field(default_factory=dict)
    finite: bool = False

    def count(self, d: int) -> int:
        return len(self.by_degree.get(d, ()))

    def all(self) -> List[Monomial]:
        return [m for d in sorted(self.by_degree) for m in self.by_degree[d]]

    def __len__(self):
        return sum(len(v) for v in self.by_degree.values())


def standard_monomials(G: GroebnerBasis, up_to_degree: Optional[int] = None) -> StandardMonomialSet:
    """Standard monomials of degree <= up_to_degree, or all of them when None.

    The unbounded request requires a finite-dimensional quotient.
    """
    n = G.ring.nvars
    finite = G.is_finite()
    if up_to_degree is None and not finite:
        raise InfiniteQuotientError("quotient is infinite dimensional; give up_to_degree")
    lms = [(m, _mask(m)) for m in G.lead_monomials]
    out: Dict[int, List[Monomial]] = {}
    d = 0
    while up_to_degree is None or d <= up_to_degree:
        std = []
        for m in monomials_of_degree(n, d):
            mm = _mask(m)
            if not any(lm_mask & ~mm == 0 and mono_divides(lm, m) for lm, lm_mask in lms):
                std.append(m)
        if not std and up_to_degree is None:
            break
        out[d] = std
        d += 1
    return StandardMonomialSet(out, finite)
