from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extlab.field import GF2, QQ, FieldSpec
from extlab.parser import ParseError, format_ring_file, parse_polynomial, parse_ring_file
from extlab.poly import DEGREVLEX, LEX, MonomialOrder, PolyRing, format_polynomial, monomials_of_degree

from conftest import polynomials

QX = PolyRing(["X", "Y", "Z"], QQ)
FX = PolyRing(["X", "Y", "Z"], GF2)
CE = PolyRing(["X1", "X2", "X3", "X4", "A"], QQ)


# -- fields ------------------------------------------------------------------

def test_field_parse_and_print():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("F2") == GF2
    assert FieldSpec.parse("F<7>").characteristic == 7
    assert str(FieldSpec.parse("GF(3)")) == "F3"
    assert QQ.kind == "rationals" and GF2.kind == "prime-field"


@pytest.mark.parametrize("p", [4, 1, -3, 2 ** 31 + 11])
def test_field_rejects_non_primes(p):
    with pytest.raises(ValueError):
        FieldSpec(p)


def test_field_coercion():
    F5 = FieldSpec(5)
    assert F5(7) == 2
    assert F5(Fraction(1, 2)) == 3
    with pytest.raises(ValueError, match="not representable"):
        F5(Fraction(1, 5))
    assert QQ(Fraction(3, 6)) == Fraction(1, 2)


# -- parser ------------------------------------------------------------------

def test_parse_collects_terms():
    f = parse_polynomial("X1^2 - A*X3", CE)
    assert len(f) == 2 and f.degree() == 2


def test_parse_example_generator():
    f = QX.parse("X*Y - Y*Z")
    x, y, z = QX.gens()
    assert f == x * y - y * z


def test_parse_cancellation_gives_zero():
    f = QX.parse("X + X - 2*X")
    assert f.is_zero() and len(f.terms) == 0


def test_parse_rational_coefficients():
    assert QX.parse("3/2*X") == QX.var("X").scale(Fraction(3, 2))
    assert QX.parse("-1/3") == QX.constant(Fraction(-1, 3))


@pytest.mark.parametrize("text,needle", [
    ("X +", "end"),
    ("X ** 2", None),
    ("W + X", "unknown variable"),
    ("X $ Y", None),
    ("X^", None),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError) as err:
        QX.parse(text)
    assert err.value.pos >= 0
    if needle:
        assert needle in str(err.value)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        QX.parse("X + $")
    assert err.value.pos == 4


def test_coefficient_not_representable():
    with pytest.raises(ValueError):
        FX.parse("1/2*X")


@settings(max_examples=300)
@given(polynomials(QX))
def test_parse_print_roundtrip_q(f):
    assert QX.parse(format_polynomial(f)) == f


@settings(max_examples=200)
@given(polynomials(FX))
def test_parse_print_roundtrip_f2(f):
    assert FX.parse(format_polynomial(f)) == f


def test_ring_file_roundtrip():
    text = """
    # Example ring
    name demo
    field F<3>
    vars X Y Z
    order lex
    ideal
    X^2 - Y*Z
    2*Y^3
    """
    rf = parse_ring_file(text)
    assert rf.ring.field.characteristic == 3
    assert rf.ring.order == LEX
    assert [str(g) for g in rf.generators] == ["X^2 + 2*Y*Z", "2*Y^3"]
    again = parse_ring_file(format_ring_file(rf.ring, rf.generators, rf.name))
    assert again.generators == rf.generators and again.name == "demo"


def test_ring_file_errors():
    with pytest.raises(ValueError):
        parse_ring_file("field Q\nideal\nX\n")
    with pytest.raises(ValueError):
        parse_ring_file("vars X\norder weird\n")


# -- arithmetic ----------------------------------------------------------------

def test_difference_of_squares():
    x, y = QX.var("X"), QX.var("Y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2


def test_counterexample_generator_arithmetic():
    X1, X2, X4, A = CE.var("X1"), CE.var("X2"), CE.var("X4"), CE.var("A")
    assert X1 * X2 - A * X4 == CE.parse("X1*X2 - A*X4")


def test_additive_identity():
    f = QX.parse("X^2 + 3*Y")
    assert f + QX.zero == f


def test_mixed_rings_rejected():
    with pytest.raises(ValueError):
        QX.var("X") + FX.var("X")


def test_degree_of_zero_is_an_error():
    with pytest.raises(ValueError):
        QX.zero.degree()


def test_terms_sorted_descending():
    f = QX.parse("Z + X*Y + X^2 + Y^2 + 1")
    mons = [m for _, m in f.sorted_terms()]
    keys = [DEGREVLEX.key(m) for m in mons]
    assert keys == sorted(keys, reverse=True)
    assert f.lm == (2, 0, 0)


@settings(max_examples=1000)
@given(polynomials(QX), polynomials(QX), polynomials(QX))
def test_ring_axioms_q(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + g == g + f
    assert f - f == QX.zero


@settings(max_examples=1000)
@given(polynomials(FX), polynomials(FX), polynomials(FX))
def test_ring_axioms_f2(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f + f == FX.zero


@settings(max_examples=200)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_homogeneous_products(d1, d2, data):
    def hom(d):
        mons = list(monomials_of_degree(3, d))
        chosen = data.draw(st.lists(st.sampled_from(mons), min_size=1, max_size=4, unique=True))
        coeffs = data.draw(st.lists(st.integers(1, 5), min_size=len(chosen), max_size=len(chosen)))
        return QX.from_dict(dict(zip(chosen, coeffs)))
    f, g = hom(d1), hom(d2)
    assert f.is_homogeneous() and g.is_homogeneous()
    prod = f * g
    assert prod.is_homogeneous() and prod.degree() == d1 + d2


# -- monomial orders ------------------------------------------------------------

def reference_degrevlex(a, b):
    """Textbook definition: higher degree wins; on ties the last nonzero entry of a - b decides, negative wins."""
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    diff = [x - y for x, y in zip(a, b)]
    for v in reversed(diff):
        if v:
            return 1 if v < 0 else -1
    return 0


def test_degrevlex_examples():
    assert DEGREVLEX.compare((2, 0, 0), (1, 1, 0)) == 1
    assert DEGREVLEX.compare((1, 1, 0), (0, 2, 0)) == 1
    assert DEGREVLEX.compare((1, 2, 3), (1, 2, 3)) == 0


def test_degrevlex_exhaustive_against_reference():
    for n in range(1, 6):
        mons = [m for d in range(5) for m in monomials_of_degree(n, d)]
        for a, b in product(mons, repeat=2):
            assert DEGREVLEX.compare(a, b) == reference_degrevlex(a, b), (a, b)


def test_order_refines_divisibility_and_is_multiplicative():
    mons = [m for d in range(4) for m in monomials_of_degree(3, d)]
    for order in (DEGREVLEX, LEX, MonomialOrder("elim", 1)):
        for a, b in product(mons, repeat=2):
            c = tuple(x + y for x, y in zip(a, b))
            if a != c:
                assert order.compare(c, a) == 1
            for m in mons[:6]:
                am = tuple(x + y for x, y in zip(a, m))
                bm = tuple(x + y for x, y in zip(b, m))
                assert order.compare(am, bm) == order.compare(a, b)


def test_elimination_order_puts_block_first():
    elim = MonomialOrder("elim", 1)
    # any power of the first variable beats everything without it
    assert elim.compare((1, 0, 0), (0, 5, 5)) == 1


def test_compare_dimension_mismatch():
    with pytest.raises(ValueError):
        DEGREVLEX.compare((1, 0), (1, 0, 0))


def test_monomial_order_transitive_and_antisymmetric():
    mons = [m for d in range(3) for m in monomials_of_degree(3, d)]
    srt = sorted(mons, key=DEGREVLEX.key)
    for i in range(len(srt) - 1):
        assert DEGREVLEX.compare(srt[i], srt[i + 1]) == -1
        assert DEGREVLEX.compare(srt[i + 1], srt[i]) == 1
