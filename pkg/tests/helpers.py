"""Small lattices shared by the tests."""

from hypothesis import strategies as st

from latshell.corpus import corpus, random_dismantlable
from latshell.lattice import build_lattice

DIAMOND = [(0, 1), (0, 2), (1, 3), (2, 3)]
B3 = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6), (4, 7), (5, 7), (6, 7)]
# two 3-chains sharing bottom 0 and top 5: 0 < a=1 < b=2 < 5 and 0 < c=3 < d=4 < 5
TWO_CHAINS = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)]


def chain(n):
    return build_lattice([(i, i + 1) for i in range(n - 1)], n)


def m_k(k):
    """Bottom 0, atoms 1..k, top k+1."""
    return build_lattice([(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)])


def b3_subsets():
    """B_3 with element ids given by subsets of {1, 2, 3}: 0={}, 1..3 atoms, 4={1,2}, 5={1,3}, 6={2,3}, 7=all."""
    sets = [frozenset(), {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}]
    return build_lattice(B3), [frozenset(s) for s in sets]


_CORPUS = list(corpus(7))


@st.composite
def lattices(draw, random_max=14):
    """A corpus lattice (n <= 7) or a random dismantlable one."""
    if draw(st.booleans()):
        return _CORPUS[draw(st.integers(0, len(_CORPUS) - 1))]
    n = draw(st.integers(2, random_max))
    seed = draw(st.integers(0, 10**6))
    bias = draw(st.sampled_from([0.3, 0.6, 0.9]))
    return random_dismantlable(n, seed, bias)[0]


# filled by the acceptance tests, printed in the terminal summary
ACCEPTANCE_LINES = []
