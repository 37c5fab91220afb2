"""Sparse multivariate polynomials with exact coefficients.

Monomials are plain exponent tuples.  A polynomial is an immutable mapping
from exponent tuple to a nonzero field element; the term list is exposed in
descending order for the ring's monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from .field import QQ, FieldSpec, Scalar

Monomial = Tuple[int, ...]


def degrevlex_key(e: Monomial):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e: Monomial):
    return e


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a sort key; larger key means larger monomial.

    ``elim`` is a block order: the first ``split`` variables are compared by
    degrevlex first, ties broken by degrevlex on the rest.  It eliminates the
    first block.
    """

    kind: str = "degrevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.split < 1:
            raise ValueError("elimination order needs split >= 1")

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        if self.kind == "degrevlex":
            return degrevlex_key
        if self.kind == "lex":
            return lex_key
        k = self.split
        return lambda e: (degrevlex_key(e[:k]), degrevlex_key(e[k:]))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """Return -1, 0 or 1."""
        if len(m1) != len(m2):
            raise ValueError(f"monomials have {len(m1)} and {len(m2)} exponents")
        key = self.key
        k1, k2 = key(m1), key(m2)
        return (k1 > k2) - (k1 < k2)

    def __str__(self):
        return self.kind if self.kind != "elim" else f"elim({self.split})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree d, in lex-descending order."""
    if d < 0:
        return
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


class PolyRing:
    """k[vars] with a fixed monomial order."""

    def __init__(self, variables: Sequence[str], field: FieldSpec = QQ,
                 order: MonomialOrder = DEGREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        if not variables:
            raise ValueError("need at least one variable")
        self.variables = variables
        self.field = field
        self.order = order
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}
        self.key = order.key
        p = field.characteristic
        self._norm = (lambda c: c % p) if p else (lambda c: c)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.field == other.field and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.field}, {self.order})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.field, order)

    def with_field(self, field: FieldSpec) -> "PolyRing":
        return PolyRing(self.variables, field, self.order)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Monomial, c=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = self.field(c)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> List["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def from_dict(self, terms: Dict[Monomial, object]) -> "Polynomial":
        f = self.field
        out = {}
        for m, c in terms.items():
            c = f(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_polynomial
        return parse_polynomial(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.convert(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)


class Polynomial:
    """An element of a PolyRing.  Immutable; the zero polynomial has no terms."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, Scalar]):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def lc(self) -> Scalar:
        return self.terms[self.lm]

    def sorted_terms(self) -> List[Tuple[Scalar, Monomial]]:
        key = self.ring.key
        return [(self.terms[m], m) for m in sorted(self.terms, key=key, reverse=True)]

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    def support_variables(self) -> List[str]:
        used = set()
        for m in self.terms:
            used.update(i for i, x in enumerate(m) if x)
        return [self.ring.variables[i] for i in sorted(used)]

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError(f"operands live in different rings: {self.ring} vs {other.ring}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        norm = self.ring._norm
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring._norm
        return Polynomial(self.ring, {m: norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        norm = self.ring._norm
        return Polynomial(self.ring, {m: norm(a * c) for m, a in self.terms.items()})

    def mul_term(self, exps: Monomial, c=1) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        norm = self.ring._norm
        return Polynomial(self.ring, {mono_mul(m, exps): norm(a * c) for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        norm = self.ring._norm
        out: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: c for m, c in ((m, norm(c)) for m, c in out.items()) if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inverse(self.lc))

    # -- comparison / conversion -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def convert(self, ring: PolyRing) -> "Polynomial":
        """Re-express in another ring whose variables include ours (by name)."""
        if ring == self.ring:
            return self
        idx = [ring.index(v) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for i, x in zip(idx, m):
                e[i] = x
            out[tuple(e)] = c
        return ring.from_dict(out)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, x in zip(names, m):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Print in the grammar accepted by ``parse_polynomial``."""
    if not f.terms:
        return "0"
    out = []
    for c, m in f.sorted_terms():
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m, f.ring.variables)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def total_degree_monomials(nvars: int, max_degree: int) -> Iterable[Monomial]:
    for d in range(max_degree + 1):
        yield from monomials_of_degree(nvars, d)
