"""Ext^1_R(R/(a), R) through the colon identity Ext^1 ≅ ((0):I)/(a), I = (0):a.

Besides the checker this module holds the structural facts that hold for any
parameter (the Lemma-2.2 suite), the sufficient conditions for non-vanishing
and the perturbation experiment a -> a + z with z in W.

Global versus local.  R = S/J is a graded model of a local ring.  For a
homogeneous parameter every module involved is graded and supported at the
origin only, so the global answer is the local one.  An inhomogeneous a may
also vanish at other points of Spec R, and then ((0):I)/(a) picks up summands
living there.  The report keeps both the global quantities and the part
supported at the origin, computed as the M-torsion of ((0):I)/(a).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence

from ..ideals import (IdealHandle, RingPresentation, colon, embedding_dimension,
                      intersect, local_cohomology_zero, minimal_generator_count,
                      quotient_embedding_dimension, saturate, subquotient_dimension)
from ..poly import Polynomial
from .report import ClaimReport, ideal_gens, timed


class NotAParameterError(ValueError):
    pass


class NotStandardError(ValueError):
    pass


def unmixed_component(R: RingPresentation) -> IdealHandle:
    """W = H^0_M(R), cached on the ring."""
    W = R.meta.get("W")
    if W is None:
        W = local_cohomology_zero(R)
        R.meta["W"] = W
    return W


def annihilator_of_w(R: RingPresentation) -> IdealHandle:
    """The ideal (0):W."""
    ann = R.meta.get("annW")
    if ann is None:
        ann = colon(R.zero_ideal, unmixed_component(R))
        R.meta["annW"] = ann
    return ann


def _has_constant_term(f: Polynomial) -> bool:
    return any(sum(m) == 0 for m in f.terms)


def is_parameter(R: RingPresentation, a) -> bool:
    """a ∈ M and R/(a) finite dimensional."""
    a = R.reduce(a)
    if _has_constant_term(a):
        return False
    return R.ideal(a).gb.is_finite()


def is_standard(R: RingPresentation, a) -> bool:
    """(a)W = (0)."""
    W = unmixed_component(R)
    a = R.element(a)
    return all(R.is_zero(a * w) for w in W.residue_generators)


@dataclass
class ExtReport:
    ring: str
    parameter: str
    is_parameter: bool
    homogeneous: bool
    I: List[str]
    D: List[str]
    vanishes: bool
    ext_length: int
    vanishes_locally: bool
    local_ext_length: int
    standard: bool
    square_standard: bool
    ideals: Dict[str, IdealHandle] = field(default_factory=dict, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring, "parameter": self.parameter, "is_parameter": self.is_parameter,
            "homogeneous": self.homogeneous, "I": self.I, "D": self.D,
            "vanishes": self.vanishes, "ext_length": self.ext_length,
            "vanishes_locally": self.vanishes_locally, "local_ext_length": self.local_ext_length,
            "standard": self.standard, "square_standard": self.square_standard,
        }


def ext1_check(R: RingPresentation, a) -> ExtReport:
    """Decide Ext^1_R(R/(a), R) = 0 by comparing (0):((0):a) with (a)."""
    a = R.reduce(a)
    if a.is_zero():
        raise NotAParameterError("a = 0 is not a parameter: R/(a) = R is infinite dimensional")
    if _has_constant_term(a):
        raise NotAParameterError(f"{a} is a unit at the origin, not a parameter")
    Q = R.ideal(a)
    if not Q.gb.is_finite():
        raise NotAParameterError(
            f"{a} is not a parameter: R/(a) is infinite dimensional "
            f"(leading terms miss a pure power of some variable)")
    zero = R.zero_ideal
    I = colon(zero, Q)
    D = colon(zero, I)
    vanishes = D == Q
    ext_length = subquotient_dimension(D, Q)
    homogeneous = a.is_homogeneous() and R.is_graded
    if vanishes or homogeneous:
        local_len = ext_length
    else:
        torsion = saturate(Q, R.maximal_ideal)
        local_len = subquotient_dimension(intersect(torsion, D), Q)
    W = unmixed_component(R)
    QW = W.scaled(a)
    return ExtReport(
        ring=R.name, parameter=str(a), is_parameter=True, homogeneous=homogeneous,
        I=ideal_gens(I), D=ideal_gens(D), vanishes=vanishes, ext_length=ext_length,
        vanishes_locally=local_len == 0, local_ext_length=local_len,
        standard=QW.is_zero(), square_standard=QW.scaled(a).is_zero(),
        ideals={"Q": Q, "I": I, "D": D, "W": W},
    )


# -- structural facts valid for every parameter ------------------------------

def lemma_2_2(R: RingPresentation, a, report: Optional[ExtReport] = None) -> Dict[str, bool]:
    """Items (1)-(4) for every parameter, (5)-(7) in addition when (a) is standard.

    Returns item -> holds.  Items that do not apply are omitted.
    """
    if report is None:
        report = ext1_check(R, a)
    Q, I, D, W = (report.ideals[k] for k in ("Q", "I", "D", "W"))
    M = R.maximal_ideal
    QW = Q * W
    QM = colon(Q, M)
    out = {
        "(1)": intersect(Q, W) == QW,
        "(2)": I <= W,
        "(3)": annihilator_of_w(R) <= D,
        "(4)": QM <= colon(QW, I),
    }
    if report.standard:
        out["(5)"] = I == W
        out["(6)"] = annihilator_of_w(R) == D
        out["(7)"] = QM <= D
    return out


def lemma_2_2_report(R: RingPresentation, a, report: Optional[ExtReport] = None) -> ClaimReport:
    with timed() as t:
        items = lemma_2_2(R, a, report)
    failed = sorted(k for k, ok in items.items() if not ok)
    return ClaimReport("Lemma2.2", not failed, {"parameter": str(R.reduce(a)), "items": items,
                                                "violations": failed}, t.ms, ring=R.name)


# -- sufficient conditions for non-vanishing ---------------------------------

def nonvanishing_conditions(R: RingPresentation, a, report: ExtReport) -> Dict[str, bool]:
    """Each sufficient condition for Ext^1 ≠ 0, evaluated on (R, a)."""
    Q, I, W = report.ideals["Q"], report.ideals["I"], report.ideals["W"]
    M2 = R.maximal_ideal * R.maximal_ideal
    ann = annihilator_of_w(R)
    return {
        "Prop2.3(1)": report.standard,
        "Prop2.3(2)": report.square_standard and I <= Q,
        "Prop2.6(1)": not (ann <= M2),
        "Prop2.6(2)": (W * W).is_zero(),
    }


def standardness_suite(R: RingPresentation, a, report: Optional[ExtReport] = None) -> List[ClaimReport]:
    """One report per condition: when the condition holds, Ext^1 must not vanish."""
    with timed() as t:
        if report is None:
            report = ext1_check(R, a)
        conds = nonvanishing_conditions(R, a, report)
    out = []
    for claim, holds in conds.items():
        ok = (not holds) or (not report.vanishes_locally)
        out.append(ClaimReport(claim, ok, {"parameter": report.parameter, "condition": holds,
                                           "vanishes": report.vanishes_locally}, t.ms, ring=R.name))
    return out


def perturbations(R: RingPresentation, z_basis: Sequence, samples: int = 4, seed: int = 0) -> List[Polynomial]:
    """All F_p-combinations of z_basis, or basis vectors plus seeded random combinations over Q."""
    zs = [R.element(z) for z in z_basis]
    F = R.field
    if F.characteristic:
        out = []
        for coeffs in product(range(F.characteristic), repeat=len(zs)):
            z = R.S.zero
            for c, g in zip(coeffs, zs):
                z = z + g.scale(F(c))
            out.append(z)
        return out
    rng = random.Random(seed)
    out = [R.S.zero] + zs
    for _ in range(samples):
        z = R.S.zero
        for g in zs:
            z = z + g.scale(F(rng.randint(-3, 3)))
        out.append(z)
    return out


def perturbation_check(R: RingPresentation, a, z_basis: Sequence, samples: int = 4, seed: int = 0) -> ClaimReport:
    """For standard a and every z in the span of z_basis ⊆ W: a+z is a parameter with Ext^1 ≠ 0."""
    with timed() as t:
        a = R.reduce(a)
        if not is_parameter(R, a):
            raise NotAParameterError(f"{a} is not a parameter")
        if not is_standard(R, a):
            raise NotStandardError(f"{a} is not standard: aW ≠ 0")
        W = unmixed_component(R)
        for z in z_basis:
            if not W.contains(z):
                raise ValueError(f"{z} does not lie in W")
        bad = []
        tested = 0
        for z in perturbations(R, z_basis, samples, seed):
            b = a + z
            tested += 1
            if not is_parameter(R, b):
                bad.append({"z": str(z), "reason": "not a parameter"})
                continue
            rep = ext1_check(R, b)
            if rep.vanishes_locally:
                bad.append({"z": str(z), "reason": "Ext vanishes"})
    return ClaimReport("Thm2.5", not bad, {"parameter": str(a), "tested": tested, "counterwitnesses": bad},
                       t.ms, ring=R.name)


# -- hypotheses of the affirmative theorems ----------------------------------

def m2w_zero(R: RingPresentation) -> bool:
    W = unmixed_component(R)
    M = R.maximal_ideal
    return (M * M * W).is_zero()


def theorem_3_1_hypotheses(R: RingPresentation, a=None, report: Optional[ExtReport] = None) -> Dict[str, Optional[bool]]:
    """M^2 W = 0 together with the four alternatives; parameter-level items need homogeneous a."""
    W = unmixed_component(R)
    out: Dict[str, Optional[bool]] = {
        "m2W=0": m2w_zero(R),
        "v<=4": embedding_dimension(R) <= 4,
        "mu(W)<=1": minimal_generator_count(W) <= 1,
        "mu(I)<=1": None,
        "v(R/I)<=2": None,
    }
    if a is not None:
        if report is None:
            report = ext1_check(R, a)
        I = report.ideals["I"]
        if I.is_homogeneous():
            out["mu(I)<=1"] = minimal_generator_count(I) <= 1
            out["v(R/I)<=2"] = quotient_embedding_dimension(I) <= 2
    return out


def theorem_3_1_applies(h: Dict[str, Optional[bool]]) -> bool:
    return bool(h["m2W=0"]) and any(h[k] for k in ("v<=4", "mu(W)<=1", "mu(I)<=1", "v(R/I)<=2"))
