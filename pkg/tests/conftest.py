import pytest
from hypothesis import strategies as st

from su2hodge.laurent import LaurentPoly
from su2hodge.su2_model import ModelParams, build_algebra

# filled by test_acceptance, printed at the end of the run
CRITERIA: dict[int, tuple[str, bool, str]] = {}

exponents = st.integers(min_value=-4, max_value=4)
coefficients = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def laurent_polys(draw, max_terms=5):
    terms = draw(st.dictionaries(st.tuples(exponents, exponents), coefficients, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def unit_monomials(draw):
    return LaurentPoly.monomial(draw(exponents), draw(exponents), draw(st.sampled_from([1, -1])))


@pytest.fixture(scope="session")
def A53():
    return build_algebra(ModelParams(5, 3))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        name, ok, detail = CRITERIA[n]
        line = f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {name}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)
