import hypothesis.strategies as st
import pytest

from conjrep.laurent import LaurentPoly
from conjrep.words import GenWord, alphabet


@st.composite
def laurent_polys(draw, max_terms=5, max_coeff=50, exp_range=6):
    terms = draw(st.dictionaries(
        st.integers(-exp_range, exp_range),
        st.integers(-max_coeff, max_coeff),
        max_size=max_terms,
    ))
    return LaurentPoly(terms)


@st.composite
def gen_words(draw, n_min=2, n_max=5, max_len=8):
    n = draw(st.integers(n_min, n_max))
    letters = draw(st.lists(st.sampled_from(alphabet(n)), max_size=max_len))
    return GenWord(n, tuple(letters))


@pytest.fixture(scope="session")
def theorem_v():
    from conjrep.kernel import theorem_word
    return theorem_word(3)


@pytest.fixture(scope="session")
def theorem_w():
    from conjrep.kernel import theorem_word
    return theorem_word(5)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
