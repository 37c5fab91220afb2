import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extlab.field import GF2, QQ, FieldSpec
from extlab.lab.claims import verify_prop_5_2, verify_thm_5_4
from extlab.lab.delta import ConstraintError, DeltaMatrix, check_nl, delta_matrix


def rows_as_text(D):
    return [[D.format_entry(i, j) for j in range(1, D.n + 1)] for i in range(1, D.l + 1)]


def test_first_case_small():
    assert rows_as_text(delta_matrix(4, 2)) == [["X3", "X4", "0", "0"], ["X4", "0", "X3", "X4"]]


def test_second_case_small():
    # l > n - l: alpha = 2, q = 1, r = 1
    assert rows_as_text(delta_matrix(5, 3)) == [["X4", "X5", "0", "0", "0"],
                                               ["X5", "0", "X4", "0", "0"],
                                               ["0", "X4", "0", "X4", "X5"]]


@pytest.mark.parametrize("n,l", [(4, 3), (3, 1), (5, 1), (2, 0), (9, 9)])
def test_constraint_violations(n, l):
    with pytest.raises(ConstraintError):
        delta_matrix(n, l)


VALID = [(n, l) for n in range(4, 12) for l in range(2, n - 1)]


@pytest.mark.parametrize("n,l", VALID)
@pytest.mark.parametrize("field", [QQ, GF2, FieldSpec.parse("F3")])
def test_three_conditions_hold(n, l, field):
    D = delta_matrix(n, l, field)
    assert D.verify(field) == {"C1": True, "C2": True, "C3": True}
    assert len(D.rows()) == l and all(len(r) == n for r in D.rows())


def test_conditions_detect_breakage():
    D = delta_matrix(4, 2)
    asym = D.with_entry(2, 1, {})
    assert not asym.is_symmetric()
    outside = D.with_entry(2, 3, {1: 1})
    assert not outside.spans_v()
    # dropping X4 from every entry loses the span of V
    no_x4 = DeltaMatrix.from_forms(4, 2, [[{k: c for k, c in e.items() if k != 4} for e in row]
                                          for row in D.rows()])
    assert not no_x4.spans_v()


def test_kernel_condition_detects_dependent_columns():
    # columns 3 and 4 equal: c = e3 - e4 lies in the kernel
    D = DeltaMatrix.from_forms(4, 2, [[{3: 1}, {4: 1}, {}, {}], [{4: 1}, {}, {3: 1}, {3: 1}]])
    assert not D.kernel_trivial()


def test_coefficient_tensor():
    t = delta_matrix(4, 2).coefficient_tensor()
    assert t == {(1, 1, 3): 1, (1, 2, 4): 1, (2, 1, 4): 1, (2, 3, 3): 1, (2, 4, 4): 1}


@settings(max_examples=40)
@given(st.integers(4, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 2))))
def test_entries_are_single_variables_of_v(nl):
    n, l = nl
    D = delta_matrix(n, l)
    for row in D.rows():
        for e in row:
            assert all(l < k <= n and c == 1 for k, c in e.items())
            assert len(e) <= 1


def test_check_nl_accepts_boundary():
    check_nl(4, 2)
    check_nl(10, 8)


def _verdicts(delta, field):
    reports = verify_prop_5_2(4, 2, field, delta=delta)
    _, thm = verify_thm_5_4(4, 2, field, delta=delta)
    return {r.claim: r.passed for r in reports + thm}


@pytest.mark.parametrize("field", [QQ, GF2])
def test_single_entry_mutations_are_caught(field):
    D = delta_matrix(4, 2, field)
    baseline = _verdicts(D, field)
    assert all(baseline.values())
    mutated = 0
    for (i, j, _k) in sorted(D.coefficient_tensor()):
        M = D.with_entry(i, j, {})
        status = M.verify(field)
        mutated += 1
        if all(status.values()):
            after = _verdicts(M, field)
            assert after != baseline, f"zeroing entry ({i},{j}) went unnoticed"
    assert mutated == 5
