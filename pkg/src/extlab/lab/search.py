"""Exhaustive search for parameters with vanishing Ext^1 over a finite field.

Candidates are residues a = sum c_m m over the standard monomials m of degree
1..max_degree, first nonzero coefficient normalized to 1.  For homogeneous J
these are exactly the classes mod J of polynomials without constant term and
of degree <= max_degree.  Elements with a constant term are units at the
origin and never parameters, so they are skipped up front.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from ..groebner import standard_monomials
from ..ideals import RingPresentation
from ..poly import Monomial, Polynomial
from .ext import (ext1_check, lemma_2_2, nonvanishing_conditions, theorem_3_1_applies,
                  theorem_3_1_hypotheses)
from .report import ClaimReport, timed

DEFAULT_CAP = 10 ** 6


class SearchScopeError(ValueError):
    """Search space empty or above the candidate cap."""


@dataclass
class SearchOutcome:
    tested: int = 0
    parameters: int = 0
    vanishing: List[str] = field(default_factory=list)
    violations: List[dict] = field(default_factory=list)
    theorem_3_1_applied: int = 0

    def merge(self, other: "SearchOutcome") -> None:
        self.tested += other.tested
        self.parameters += other.parameters
        self.vanishing += other.vanishing
        self.violations += other.violations
        self.theorem_3_1_applied += other.theorem_3_1_applied


def search_basis(R: RingPresentation, max_degree: int) -> List[Monomial]:
    sm = standard_monomials(R.gb, max_degree)
    return [m for d in range(1, max_degree + 1) for m in sm.by_degree.get(d, ())]


def candidate_count(p: int, size: int) -> int:
    return (p ** size - 1) // (p - 1)


def candidates(R: RingPresentation, basis: Sequence[Monomial], start: int = 0,
               stop: Optional[int] = None) -> Iterator[Polynomial]:
    """Normalized nonzero combinations of ``basis``, in a fixed order, sliced [start, stop)."""
    p = R.field.characteristic
    k = len(basis)
    idx = 0
    # leading position = first nonzero coefficient, fixed to 1
    for lead in range(k):
        for rest in product(range(p), repeat=k - lead - 1):
            if idx >= start and (stop is None or idx < stop):
                terms = {basis[lead]: 1}
                for m, c in zip(basis[lead + 1:], rest):
                    if c:
                        terms[m] = c
                yield R.S.from_dict(terms)
            idx += 1
            if stop is not None and idx >= stop:
                return


def _examine(R: RingPresentation, a: Polynomial, suite: bool, out: SearchOutcome) -> None:
    out.tested += 1
    Q = R.ideal(a)
    if not Q.gb.is_finite():
        return
    out.parameters += 1
    rep = ext1_check(R, a)
    if rep.vanishes_locally:
        out.vanishing.append(rep.parameter)
    if not suite:
        return
    items = lemma_2_2(R, a, rep)
    bad = sorted(k for k, ok in items.items() if not ok)
    if bad:
        out.violations.append({"parameter": rep.parameter, "Lemma2.2": bad})
    if rep.vanishes_locally:
        conds = nonvanishing_conditions(R, a, rep)
        fired = sorted(k for k, v in conds.items() if v)
        if fired:
            out.violations.append({"parameter": rep.parameter, "conditions": fired})
    hyp = theorem_3_1_hypotheses(R, a, rep)
    if theorem_3_1_applies(hyp):
        out.theorem_3_1_applied += 1
        if rep.vanishes_locally:
            out.violations.append({"parameter": rep.parameter, "Thm3.1": hyp})


def _worker(args: Tuple[str, int, int, int, bool]) -> SearchOutcome:
    text, max_degree, start, stop, suite = args
    R = RingPresentation.from_text(text)
    out = SearchOutcome()
    for a in candidates(R, search_basis(R, max_degree), start, stop):
        _examine(R, a, suite, out)
    return out


def run_search(R: RingPresentation, max_degree: int, cap: int = DEFAULT_CAP, *,
               suite: bool = False, jobs: int = 1) -> SearchOutcome:
    p = R.field.characteristic
    if not p:
        raise SearchScopeError("exhaustive search needs a finite field")
    if max_degree < 1:
        raise SearchScopeError("max_degree must be >= 1: constants are never parameters")
    basis = search_basis(R, max_degree)
    if not basis:
        raise SearchScopeError("no nonconstant residues up to this degree")
    total = candidate_count(p, len(basis))
    if total > cap:
        raise SearchScopeError(f"{total} candidates exceed the cap {cap}; raise --cap to override")
    if jobs <= 1:
        out = SearchOutcome()
        for a in candidates(R, basis):
            _examine(R, a, suite, out)
        return out
    text = R.to_text()
    step = -(-total // jobs)
    tasks = [(text, max_degree, s, min(s + step, total), suite) for s in range(0, total, step)]
    out = SearchOutcome()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_worker, tasks):
            out.merge(part)
    return out


def falsification_search(R: RingPresentation, max_degree: int, cap: int = DEFAULT_CAP, *,
                         expect_vanishing: Optional[bool] = False, suite: bool = False, jobs: int = 1) -> ClaimReport:
    """Run the search; the claim passes when vanishing instances appear exactly as expected
    (any outcome if ``expect_vanishing`` is None) and, with ``suite``, no structural fact is
    violated on any parameter."""
    with timed() as t:
        res = run_search(R, max_degree, cap, suite=suite, jobs=jobs)
    ok = (expect_vanishing is None or bool(res.vanishing) == expect_vanishing) and not res.violations
    witness = {"field": str(R.field), "max_degree": max_degree, "tested": res.tested,
               "parameters": res.parameters, "vanishing": res.vanishing[:20],
               "vanishing_count": len(res.vanishing), "violations": res.violations[:20],
               "expect_vanishing": expect_vanishing}
    if suite:
        witness["thm3.1_applied"] = res.theorem_3_1_applied
    return ClaimReport("Search", ok, witness, t.ms, ring=R.name)
