from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from isospec import primegraph
from isospec.arith import primes_upto
from isospec.spectra import Family, GroupId, omega_basis

PRIMES = primes_upto(50)


def brute_max_coclique(g, within=None):
    """Largest coclique by trying every subset; the lexicographically least one."""
    verts = sorted(within if within is not None else g.vertices)
    for size in range(len(verts), -1, -1):
        for subset in combinations(verts, size):
            if all(not primegraph.adjacent(g, r, s) for r, s in combinations(subset, 2)):
                return size, frozenset(subset)
    return 0, frozenset()


@st.composite
def graphs(draw):
    verts = draw(st.lists(st.sampled_from(PRIMES), min_size=1, max_size=12, unique=True))
    pairs = list(combinations(sorted(verts), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    return primegraph.from_edges(verts, edges)


@pytest.fixture
def gk_s6_5():
    return primegraph.build(omega_basis(GroupId(Family.S6, 5)))


def test_s6_5_graph(gk_s6_5):
    assert gk_s6_5.vertices == (2, 3, 5, 7, 13, 31)
    assert not primegraph.adjacent(gk_s6_5, 7, 13)
    assert not primegraph.adjacent(gk_s6_5, 7, 31)
    assert primegraph.adjacent(gk_s6_5, 2, 31)
    assert primegraph.nonneighbors(gk_s6_5, 2) == {7}


def test_s6_5_cocliques(gk_s6_5):
    t, witness = primegraph.max_coclique(gk_s6_5)
    assert t == 3
    assert witness == {5, 7, 31}
    # {7, 13, 31} is another maximum coclique
    assert all(not primegraph.adjacent(gk_s6_5, r, s) for r, s in combinations((7, 13, 31), 2))
    assert primegraph.max_coclique_through(gk_s6_5, 7)[0] == 3
    assert primegraph.max_coclique_through(gk_s6_5, 2) == (2, frozenset({2, 7}))


def test_s6_7_nonneighbours_of_2():
    gk = primegraph.build(omega_basis(GroupId(Family.S6, 7)))
    assert primegraph.nonneighbors(gk, 2) == {19}


def test_unknown_vertex(gk_s6_5):
    with pytest.raises(primegraph.UnknownVertex):
        primegraph.adjacent(gk_s6_5, 2, 11)
    with pytest.raises(primegraph.UnknownVertex):
        primegraph.max_coclique_through(gk_s6_5, 11)


def test_from_edges_rejects_loops():
    with pytest.raises(ValueError):
        primegraph.from_edges([2, 3], [(3, 3)])


def test_empty_and_complete():
    g = primegraph.from_edges([2, 3, 5], [])
    assert primegraph.max_coclique(g) == (3, frozenset({2, 3, 5}))
    k = primegraph.from_edges([2, 3, 5], [(2, 3), (2, 5), (3, 5)])
    assert primegraph.max_coclique(k) == (1, frozenset({2}))


def test_dot(gk_s6_5):
    dot = primegraph.to_dot(gk_s6_5, "GK(S6(5))")
    assert dot.startswith('graph "GK(S6(5))" {')
    assert "  2 -- 31;" in dot and "7 -- 13" not in dot


@given(graphs())
def test_max_coclique_matches_brute_force(g):
    assert primegraph.max_coclique(g) == brute_max_coclique(g)


@given(graphs(), st.data())
def test_through_matches_brute_force(g, data):
    r = data.draw(st.sampled_from(g.vertices))
    size, witness = primegraph.max_coclique_through(g, r)
    inner = primegraph.nonneighbors(g, r)
    assert size == 1 + brute_max_coclique(g, inner)[0]
    assert r in witness and len(witness) == size
    assert all(not primegraph.adjacent(g, a, b) for a, b in combinations(witness, 2))


@given(graphs())
def test_edges_roundtrip(g):
    assert primegraph.from_edges(g.vertices, g.edges()) == g
