import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from extlab.field import GF2, QQ
from extlab.lab.rings import counterexample_ring, example_4_1, example_4_4
from extlab.poly import PolyRing

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

VARS3 = ["X", "Y", "Z"]


def polynomials(ring: PolyRing, max_terms: int = 5, max_exp: int = 3):
    """Random polynomials of ``ring`` with small exponents and coefficients."""
    n = ring.nvars
    if ring.field.characteristic:
        coeff = st.integers(0, ring.field.characteristic - 1)
    else:
        coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    mono = st.tuples(*[st.integers(0, max_exp) for _ in range(n)])
    return st.dictionaries(mono, coeff, max_size=max_terms).map(ring.from_dict)


@pytest.fixture(scope="session")
def ce42():
    return counterexample_ring(4, 2)


@pytest.fixture(scope="session")
def ce42_f2():
    return counterexample_ring(4, 2, GF2)


@pytest.fixture(scope="session")
def ex41():
    return example_4_1()


@pytest.fixture(scope="session")
def ex44():
    return example_4_4()


@pytest.fixture(scope="session")
def S3():
    return PolyRing(VARS3, QQ)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
