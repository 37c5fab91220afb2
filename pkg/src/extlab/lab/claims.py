"""Verifiers for the concrete claims about the lab's rings.

Each verifier returns ``ClaimReport`` objects whose witness carries the data
that was compared, so a failure always names the mismatching ideal or
dimension.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Optional, Tuple

from ..field import QQ, FieldSpec
from ..groebner import standard_monomials
from ..hilbert import laurent_product_with_inverse
from ..ideals import (IdealHandle, RingPresentation, Subquotient, colon, embedding_dimension,
                      hilbert_table, is_finite_quotient, krull_dimension, krull_dimension_hilbert,
                      local_cohomology_zero, module_length, quotient_module, radical_member)
from ..linalg import Echelon
from ..oracle import oracle_for
from ..poly import monomials_of_degree
from .delta import DeltaMatrix, delta_matrix
from .ext import (ExtReport, annihilator_of_w, ext1_check, lemma_2_2_report, m2w_zero,
                  theorem_3_1_applies, theorem_3_1_hypotheses, unmixed_component)
from .report import ClaimReport, timed
from .rings import (add_indeterminates, counterexample_ring, example_4_1, example_4_3,
                    example_4_4)

ORACLE_DEGREE = 6


def _ce(n: int, l: int, field: FieldSpec, delta: Optional[DeltaMatrix] = None,
        R: Optional[RingPresentation] = None) -> RingPresentation:
    return R if R is not None else counterexample_ring(n, l, field, delta)


def _xs(R: RingPresentation, upto: int) -> IdealHandle:
    return R.ideal(*[f"X{i}" for i in range(1, upto + 1)])


def _claim(claim, passed, witness, ms, n, l, R) -> ClaimReport:
    return ClaimReport(claim, bool(passed), witness, ms, n=n, l=l, ring=R.name)


# -- the counterexample family -----------------------------------------------

def verify_lemma_5_1(n: int, l: int, field: FieldSpec = QQ) -> ClaimReport:
    with timed() as t:
        D = delta_matrix(n, l, field)
        status = D.verify(field)
    return ClaimReport("Lemma5.1", all(status.values()), {"conditions": status, "matrix": str(D).splitlines()},
                       t.ms, n=n, l=l, ring=f"CE({n},{l})")


def verify_prop_5_2(n: int, l: int, field: FieldSpec = QQ, delta: Optional[DeltaMatrix] = None,
                    R: Optional[RingPresentation] = None) -> List[ClaimReport]:
    """dim R = 1; √J = (X_1..X_n); M^2 = aM, M^3 = (a^3), M^2 W = 0; W = (x_1..x_n), W_d = 0 for d >= 3."""
    R = _ce(n, l, field, delta, R)
    out = []
    a = R.element("A")
    M = R.maximal_ideal
    M2 = M * M

    with timed() as t:
        d1, d2 = krull_dimension(R), krull_dimension_hilbert(R)
    out.append(_claim("Prop5.2(1)", d1 == 1 and d2 == 1, {"dim_leads": d1, "dim_hilbert": d2}, t.ms, n, l, R))

    with timed() as t:
        J = R.zero_ideal
        members = {f"X{i}": radical_member(f"X{i}", J) for i in range(1, n + 1)}
        a_in = radical_member("A", J)
        S0 = RingPresentation(R.S, (), "S")
        Xlift = S0.ideal(*[f"X{i}" for i in range(1, n + 1)])
        contained = all(Xlift.contains(f) for f in R.relations)
    out.append(_claim("Prop5.2:radical", all(members.values()) and not a_in and contained,
                      {"X_i in rad J": members, "A in rad J": a_in, "J in (X)": contained}, t.ms, n, l, R))

    with timed() as t:
        aM = M.scaled(a)
        eq1 = M2 == aM
        M3 = M2 * M
        eq2 = M3 == R.ideal(a ** 3)
        W = unmixed_component(R)
        eq3 = (M2 * W).is_zero()
    wit = {"M^2=aM": eq1, "M^3=(a^3)": eq2, "M^2W=0": eq3}
    if not eq1:
        wit["M^2 not in aM"] = [str(g) for g in M2.residue_generators if not aM.contains(g)][:3]
    out.append(_claim("Prop5.2(2)", eq1 and eq2 and eq3, wit, t.ms, n, l, R))

    with timed() as t:
        W = unmixed_component(R)
        eqW = W == _xs(R, n)
        tab = hilbert_table(R, W, ORACLE_DEGREE)
        # finite length and nothing from degree 3 on
        high_zero = tab.length is not None and tab.stable_from <= 3
    out.append(_claim("Prop5.2(3)", eqW and high_zero,
                      {"W": W, "W=(x1..xn)": eqW, "dims W": tab.values(), "W_d=0 from": tab.stable_from},
                      t.ms, n, l, R))
    return out


def verify_lemma_5_3(n: int, l: int, field: FieldSpec = QQ, R: Optional[RingPresentation] = None) -> ClaimReport:
    """dim R_2 = n-l+1 with a*x_{l+1}, ..., a*x_n, a^2 linearly independent."""
    R = _ce(n, l, field, None, R)
    with timed() as t:
        basis = standard_monomials(R.gb, 2).by_degree[2]
        col = {m: i for i, m in enumerate(basis)}
        elems = [f"A*X{j}" for j in range(l + 1, n + 1)] + ["A^2"]
        ech = Echelon(R.field)
        for e in elems:
            nf = R.reduce(e)
            ech.add({col[m]: c for m, c in nf.terms.items()})
        dim2 = len(basis)
    ok = dim2 == n - l + 1 and ech.rank == len(elems)
    return _claim("Lemma5.3", ok, {"dim R_2": dim2, "expected": n - l + 1, "rank": ech.rank,
                                   "elements": elems}, t.ms, n, l, R)


def verify_thm_5_4(n: int, l: int, field: FieldSpec = QQ, R: Optional[RingPresentation] = None,
                   delta: Optional[DeltaMatrix] = None) -> Tuple[ExtReport, List[ClaimReport]]:
    """Ext^1(R/(a), R) = 0 with I = (0):a = (x_1..x_l), plus the I = I_1 + I_2, I_2 = W_2 structure."""
    R = _ce(n, l, field, delta, R)
    with timed() as t:
        rep = ext1_check(R, "A")
        I = rep.ideals["I"]
        I_ok = I == _xs(R, l)
    main = _claim("Thm5.4", rep.vanishes and I_ok,
                  {"vanishes": rep.vanishes, "ext_length": rep.ext_length, "I": rep.I, "D": rep.D,
                   "I=(x1..xl)": I_ok}, t.ms, n, l, R)
    with timed() as t:
        W = rep.ideals["W"]
        ti = hilbert_table(R, I, 4)
        tw = hilbert_table(R, W, 4)
        structure = I <= W and ti[2] == tw[2] and ti.length == ti[1] + ti[2] and I <= _xs(R, l)
    step = _claim("Thm5.4:I=I1+I2", structure, {"dims I": ti.values(), "dims W": tw.values()}, t.ms, n, l, R)
    return rep, [main, step]


def laurent_identity(R: RingPresentation, M: Subquotient, Mdual: IdealHandle) -> Dict[str, object]:
    hm = hilbert_table(R, M, ORACLE_DEGREE).laurent()
    hd = hilbert_table(R, Mdual, ORACLE_DEGREE).laurent()
    lhs = laurent_product_with_inverse(hm)
    rhs = laurent_product_with_inverse(hd)
    return {"H_M": hm, "H_M*": hd, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


def gdim_obstruction(n: int, l: int, field: FieldSpec = QQ, R: Optional[RingPresentation] = None) -> ClaimReport:
    """ℓ(R/(a)) = n+1 against ℓ((0):a) = n, and H_M(t)H_M(1/t) ≠ H_M*(t)H_M*(1/t)."""
    R = _ce(n, l, field, None, R)
    with timed() as t:
        Q = R.ideal("A")
        I = colon(R.zero_ideal, Q)
        M = quotient_module(Q)
        lm = module_length(R, M)
        li = module_length(R, I)
        lid = laurent_identity(R, M, I)
        socle = colon(R.zero_ideal, R.maximal_ideal)
        depth0 = not socle.is_zero()
    ok = lm == n + 1 and li == n and not lid["equal"] and depth0
    wit = {"length R/(a)": lm, "length (0):a": li, "laurent_equal": lid["equal"],
           "lhs": lid["lhs"], "rhs": lid["rhs"], "socle": socle}
    return _claim("Prop6.4", ok, wit, t.ms, n, l, R)


def oracle_equivalence(R: RingPresentation, pairs: Dict[str, Tuple[IdealHandle, str, object]],
                       max_degree: int = ORACLE_DEGREE, n=None, l=None) -> ClaimReport:
    """Compare Groebner-side dims of each named colon with the linear-algebra oracle.

    ``pairs`` maps name -> (Groebner ideal, oracle query, oracle args) where the
    query is "annihilator" (args: list of generators) or "colon" ((K, L)).
    """
    with timed() as t:
        oracle = oracle_for(R)
        mismatches = {}
        tables = {}
        for name, (ideal, query, args) in sorted(pairs.items()):
            gb = hilbert_table(R, ideal, max_degree).values()
            if query == "annihilator":
                od = [oracle.colon_dimension((), [R.element(g) for g in args], d) for d in range(max_degree + 1)]
            elif query == "colon":
                K, L = args
                od = [oracle.colon_dimension([R.element(k) for k in K], [R.element(x) for x in L], d)
                      for d in range(max_degree + 1)]
            else:
                od = [oracle.piece_dimension(d) for d in range(max_degree + 1)]
            tables[name] = gb
            if gb != od:
                mismatches[name] = {"groebner": gb, "oracle": od}
    return ClaimReport("Oracle", not mismatches, {"tables": tables, "mismatches": mismatches}, t.ms,
                       n=n, l=l, ring=R.name)


def standard_oracle_pairs(R: RingPresentation, rep: ExtReport) -> Dict[str, Tuple[IdealHandle, str, object]]:
    """R, (0):a, (0):((0):a), (0):W, (a):M, (0):M and W for a homogeneous parameter a."""
    a = rep.ideals["Q"].generators[0]
    I, D, W = rep.ideals["I"], rep.ideals["D"], rep.ideals["W"]
    Igens = list(I.minimal_generators)
    pairs = {
        "R": (R.unit_ideal, "piece", None),
        "(0):a": (I, "annihilator", [a]),
        "(0):W": (annihilator_of_w(R), "annihilator", list(W.minimal_generators)),
        "(a):M": (colon(rep.ideals["Q"], R.maximal_ideal), "colon", ([a], list(R.S.gens()))),
    }
    if Igens:
        pairs["(0):I"] = (D, "annihilator", Igens)
    # W came from iterated colons; it equals (0):M^s once M^s W = 0
    M = R.maximal_ideal
    s, P = 1, M * W
    while not P.is_zero():
        s, P = s + 1, M * P
    pairs["W=(0):M^s"] = (W, "colon", ([], [R.S.from_dict({m: 1}) for m in monomials_of_degree(R.nvars, s)]))
    pairs["(0):M"] = (colon(R.zero_ideal, M), "annihilator", list(R.S.gens()))
    QW = rep.ideals["Q"] * W
    if Igens:
        pairs["QW:I"] = (colon(QW, I), "colon", (list(QW.residue_generators), Igens))
    return pairs


def verify_family(n: int, l: int, field: FieldSpec = QQ) -> List[ClaimReport]:
    """Every claim about the (n, l) counterexample ring."""
    out = [verify_lemma_5_1(n, l, field)]
    R = counterexample_ring(n, l, field)
    with timed() as t:
        v, d = embedding_dimension(R), krull_dimension(R)
    out.append(_claim("CE:v=n+1,dim=1", v == n + 1 and d == 1 and m2w_zero(R), {"v": v, "dim": d}, t.ms, n, l, R))
    out += verify_prop_5_2(n, l, field, R=R)
    out.append(verify_lemma_5_3(n, l, field, R=R))
    rep, thm = verify_thm_5_4(n, l, field, R=R)
    out += thm
    out.append(gdim_obstruction(n, l, field, R=R))
    lem = lemma_2_2_report(R, "A", rep)
    lem.n, lem.l = n, l
    out.append(lem)
    with timed() as t:
        hyp = theorem_3_1_hypotheses(R, "A", rep)
    # vanishing is only possible when no affirmative hypothesis applies
    out.append(_claim("Thm3.1:hypotheses-fail", not theorem_3_1_applies(hyp) and rep.vanishes, hyp, t.ms, n, l, R))
    out.append(oracle_equivalence(R, standard_oracle_pairs(R, rep), n=n, l=l))
    return out


# -- the affirmative examples ----------------------------------------------

def _lift_ring(R: RingPresentation) -> RingPresentation:
    return RingPresentation(R.S, (), "S")


def prop_4_2_hypotheses(R: RingPresentation) -> Dict[str, bool]:
    """(i) S/U one-dimensional Cohen-Macaulay, (ii) L primary to the origin, (iii) J ⊆ n^2,
    and the two alternatives (1) L ⊄ n^2, (2) J ⊆ nL."""
    U, L = R.meta["U"], R.meta["L"]
    S = R.S
    SU = RingPresentation(S, U, "S/U")
    S0 = _lift_ring(R)
    n_ = S0.maximal_ideal
    n2 = n_ * n_
    Lh = S0.ideal(*L)
    nL = n_ * Lh
    return {
        "(i)": krull_dimension(SU) == 1 and local_cohomology_zero(SU).is_zero(),
        "(ii)": is_finite_quotient(Lh) and not Lh.is_unit(),
        "(iii)": all(n2.contains(f) for f in R.relations),
        "(1)": not all(n2.contains(f) for f in L),
        "(2)": all(nL.contains(f) for f in R.relations),
    }


def build_example(name: str, *args, field: FieldSpec = QQ) -> Tuple[RingPresentation, List[ClaimReport]]:
    """Build ex4_1, ex4_3(n, m, l) or ex4_4 and check the claims made about it."""
    out: List[ClaimReport] = []
    if name == "ex4_1":
        with timed() as t:
            R = example_4_1(field)
            expected = R.ideal("X^2", "X*Y - Y*Z", "Y^2 - X*Z", "X*Z^2", "Y*Z^2")
            ok = _lift_eq(R, expected)
        out.append(_claim("Ex4.1:J", ok, {"J": [str(g) for g in R.gb.elements]}, t.ms, None, None, R))
        with timed() as t:
            W = unmixed_component(R)
            v, d = embedding_dimension(R), krull_dimension(R)
            facts = {"v=3": v == 3, "dim=1": d == 1, "m2W=0": m2w_zero(R), "W=(x,y)": W == R.ideal("X", "Y")}
        out.append(_claim("Ex4.1:hypotheses", all(facts.values()), facts, t.ms, None, None, R))
    elif name == "ex4_4":
        with timed() as t:
            R = example_4_4(field)
            ok = _lift_eq(R, R.ideal("X^2", "Y^2", "X*Z^2", "Y*Z^2"))
        out.append(_claim("Ex4.4:J", ok, {"J": [str(g) for g in R.gb.elements]}, t.ms, None, None, R))
        with timed() as t:
            W = unmixed_component(R)
            M = R.maximal_ideal
            facts = {"W=(x,y)": W == R.ideal("X", "Y"), "m2W!=0": not (M * M * W).is_zero(),
                     "m3W=0": (M * M * M * W).is_zero(), "dim=1": krull_dimension(R) == 1}
        out.append(_claim("Ex4.4:hypotheses", all(facts.values()), facts, t.ms, None, None, R))
        with timed() as t:
            h = prop_4_2_hypotheses(R)
        # the example is affirmative although neither alternative applies
        ok = h["(i)"] and h["(ii)"] and h["(iii)"] and not h["(1)"] and not h["(2)"]
        out.append(_claim("Ex4.4:Prop4.2-alternatives-fail", ok, h, t.ms, None, None, R))
    elif name == "ex4_3":
        n, m, l = args
        with timed() as t:
            R = example_4_3(n, m, l, field)
            h = prop_4_2_hypotheses(R)
            ok = h["(i)"] and h["(ii)"] and h["(iii)"] and h["(1)"] and krull_dimension(R) == 1
        out.append(_claim("Ex4.3:Prop4.2", ok, h, t.ms, None, None, R))
    else:
        raise ValueError(f"unknown example {name!r}")
    return R, out


def _lift_eq(R: RingPresentation, K: IdealHandle) -> bool:
    """J equals the given generator list (as ideals of S): K, built over R, is the zero ideal."""
    S0 = _lift_ring(R)
    return S0.ideal(*K.generators) == S0.ideal(*R.relations)


def example_ext_claims(R: RingPresentation, params: List[str]) -> List[ClaimReport]:
    """Ext^1 ≠ 0, the Lemma-2.2 suite and the oracle cross-check at the given parameters."""
    out = []
    for p in params:
        with timed() as t:
            rep = ext1_check(R, p)
        out.append(ClaimReport("Ext1-nonzero", not rep.vanishes_locally,
                               {"parameter": rep.parameter, "ext_length": rep.local_ext_length,
                                "D": rep.D}, t.ms, ring=R.name))
        out.append(lemma_2_2_report(R, p, rep))
        if rep.homogeneous:
            oc = oracle_equivalence(R, standard_oracle_pairs(R, rep))
            out.append(oc)
    return out


EX44_W_BASIS = ("X", "Y", "X*Y", "Y*Z", "X*Z", "X*Y*Z")


def verify_ex44_reduced_parameters(field: FieldSpec) -> ClaimReport:
    """Every a = z + b with b in the k-span of the residues spanning W: Ext^1 ≠ 0.

    Parameters z^n + b with n >= 2 reduce to the perturbation check of the
    standard element z^n, so this finite sweep covers the remaining case over
    a finite field.
    """
    p = field.characteristic
    if not p:
        raise ValueError("the sweep needs a finite field")
    R = example_4_4(field)
    basis = [R.element(b) for b in EX44_W_BASIS]
    with timed() as t:
        tested, bad = 0, []
        for coeffs in product(range(p), repeat=len(basis)):
            a = R.element("Z")
            for c, b in zip(coeffs, basis):
                if c:
                    a = a + b.scale(field(c))
            rep = ext1_check(R, a)
            tested += 1
            if rep.vanishes_locally:
                bad.append(rep.parameter)
    return ClaimReport("Ex4.4:z+b", not bad, {"field": str(field), "tested": tested, "vanishing": bad[:20]},
                       t.ms, ring=R.name)


def verify_higher_dimension(n: int, l: int, extra: int, field: FieldSpec = QQ) -> ClaimReport:
    """Adjoining indeterminates raises the dimension to 1 + extra (Ext^d itself is not computed)."""
    with timed() as t:
        R = add_indeterminates(counterexample_ring(n, l, field), extra)
        d = krull_dimension(R)
    return ClaimReport("Thm1.3:dimension", d == 1 + extra, {"dim": d, "extra": extra,
                                                            "ext_d": "not computed"}, t.ms, n=n, l=l, ring=R.name)
