import pytest
from hypothesis import strategies as st

from bwperm import GeneralGraph, Permutation, oracle_frontier

FIGURE1 = (3, 5, 1, 4, 2)


@pytest.fixture
def fig1():
    return Permutation(FIGURE1)


def oracle_of(p, labels=None):
    return oracle_frontier(GeneralGraph.from_permutation(p, labels))


@st.composite
def permutations(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def pieces(draw, n):
    from bwperm import Piece, Scanline

    a1, a2 = sorted(draw(st.lists(st.integers(0, n), min_size=2, max_size=2)))
    b1, b2 = sorted(draw(st.lists(st.integers(0, n), min_size=2, max_size=2)))
    return Piece(Scanline(a1, b1), Scanline(a2, b2))


def valid_colorings(p):
    """Every (black mask, white mask) pair with no black-white edge; bit k-1 is vertex k."""
    n = p.n
    closed = [0] * n
    for k in p.vertices():
        closed[k - 1] = 1 << (k - 1)
        for j in p.neighbors[k]:
            closed[k - 1] |= 1 << (j - 1)
    full = (1 << n) - 1
    for black in range(1 << n):
        covered = 0
        for i in range(n):
            if black >> i & 1:
                covered |= closed[i]
        free = full & ~covered
        rest = full & ~black
        # every white set avoiding black and its neighbors
        sub = rest
        while True:
            white = sub
            yield black, white, (white & ~free) == 0
            if sub == 0:
                break
            sub = (sub - 1) & rest


def is_maximal(p, black, white):
    for k in p.vertices():
        bit = 1 << (k - 1)
        if (black | white) & bit:
            continue
        nb = sum(1 << (j - 1) for j in p.neighbors[k])
        if not (nb & black and nb & white):
            return False
    return True


def mask_coloring(p, black, white):
    from bwperm import Coloring

    labels = lambda m: [k for k in p.vertices() if m >> (k - 1) & 1]  # noqa: E731
    return Coloring.from_sets(p.n, labels(black), labels(white))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
