import pytest

from extlab.field import GF2, QQ
from extlab.ideals import RingPresentation, embedding_dimension, krull_dimension
from extlab.lab.delta import ConstraintError
from extlab.lab.rings import (add_indeterminates, counterexample_ring, example_4_1, example_4_3,
                              example_4_4, two_generated_rings)


def test_counterexample_generator_count(ce42):
    # 2 of A*X_i, 3 squares in X3, X4, 3 symmetric pairs in the 2x2 block, 4 mixed
    assert len(ce42.relations) == 12
    assert ce42.variables == ("X1", "X2", "X3", "X4", "A")


@pytest.mark.parametrize("n,l", [(4, 2), (5, 2), (5, 3), (6, 4), (7, 5)])
def test_counterexample_is_graded_in_square_of_maximal_ideal(n, l):
    R = counterexample_ring(n, l)
    assert R.is_graded
    assert all(f.is_homogeneous() and f.degree() == 2 for f in R.relations)
    assert embedding_dimension(R) == n + 1
    assert krull_dimension(R) == 1


def test_counterexample_generators_follow_the_families(ce42):
    rels = {str(f) for f in ce42.relations}
    for s in ["X1*A", "X2*A", "X3^2", "X3*X4", "X4^2"]:
        assert s in rels
    # X1*X2 - A*Delta_12 with Delta_12 = X4
    assert ce42.is_zero("X1*X2 - X4*A")
    assert ce42.is_zero("X1^2 - X3*A")
    assert ce42.is_zero("X2^2")


def test_counterexample_constraint():
    with pytest.raises(ConstraintError):
        counterexample_ring(4, 3)


def test_ring_file_round_trip(ce42):
    text = ce42.to_text(comment="round trip")
    back = RingPresentation.from_text(text)
    assert back.variables == ce42.variables
    assert back.zero_ideal.gb == ce42.zero_ideal.gb


def test_field_override(ce42):
    R2 = ce42.with_field(GF2)
    assert R2.field == GF2
    assert krull_dimension(R2) == 1


def test_examples_are_one_dimensional(ex41, ex44):
    for R in (ex41, ex44, example_4_3(2, 2, 1), example_4_3(1, 2, 1)):
        assert krull_dimension(R) == 1
        assert R.is_graded


def test_example_4_3_constraints():
    for args in [(0, 2, 1), (2, 1, 1), (2, 2, 0), (2, 2, 2)]:
        with pytest.raises(ValueError):
            example_4_3(*args)


def test_example_4_3_remembers_components():
    R = example_4_3(2, 2, 1, QQ)
    assert [str(u) for u in R.meta["U"]] == ["X1", "X2"]
    assert "Z" in [str(x) for x in R.meta["L"]]


def test_two_generated_rings():
    rings = two_generated_rings()
    assert len(rings) == 4
    for R in rings:
        assert embedding_dimension(R) == 2
        assert krull_dimension(R) == 1


@pytest.mark.parametrize("extra", [1, 2, 3])
def test_adding_indeterminates_raises_dimension(extra):
    R = add_indeterminates(counterexample_ring(4, 2), extra)
    assert krull_dimension(R) == 1 + extra
    assert R.nvars == 5 + extra
