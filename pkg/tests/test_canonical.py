import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphs import (
    are_isomorphic,
    build_graph,
    canonical_form,
    canonical_hash,
    complete_bipartite,
    cycle_graph,
    matching_graph,
    petersen_graph,
    relabel,
    to_networkx,
)
from tests.strategies import PROPERTY_SETTINGS, graphs


@given(st.permutations(range(10)))
@settings(max_examples=1000, deadline=None)
def test_petersen_hash_survives_relabelling(perm):
    assert canonical_hash(relabel(petersen_graph(), perm)) == canonical_hash(petersen_graph())


@given(st.data())
@PROPERTY_SETTINGS
def test_hash_invariant_under_relabelling(data):
    g = data.draw(graphs(max_n=8))
    perm = data.draw(st.permutations(range(g.n)))
    assert canonical_hash(relabel(g, perm)) == canonical_hash(g)


@given(graphs(min_n=5, max_n=6), graphs(min_n=5, max_n=6))
@PROPERTY_SETTINGS
def test_isomorphism_agrees_with_networkx(a, b):
    expected = nx.is_isomorphic(to_networkx(a), to_networkx(b))
    assert are_isomorphic(a, b) == expected
    assert (canonical_hash(a) == canonical_hash(b)) == expected


def test_cospectral_like_pair_is_separated():
    # same degree sequence, different graphs
    c6 = cycle_graph(6)
    two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not are_isomorphic(c6, two_triangles)
    assert canonical_hash(c6) != canonical_hash(two_triangles)


def test_canonical_form_drops_roles_and_returns_permutation():
    g = complete_bipartite(2, 3)
    form, perm = canonical_form(g)
    assert form.roles == {}
    assert sorted(perm) == list(range(5))
    assert relabel(build_graph(g.n, g.edges), perm).same_edges(form)


@pytest.mark.parametrize("g", [build_graph(0, []), build_graph(1, []), matching_graph(3)])
def test_small_and_disconnected_graphs(g):
    assert len(canonical_hash(g)) == 64
    assert are_isomorphic(g, relabel(g, list(reversed(range(g.n)))))


def _z4_squared(steps):
    edges = set()
    for i in range(4):
        for j in range(4):
            for di, dj in steps:
                u, v = 4 * i + j, 4 * ((i + di) % 4) + (j + dj) % 4
                edges.add((min(u, v), max(u, v)))
    return build_graph(16, sorted(edges))


SHRIKHANDE = _z4_squared([(0, 1), (1, 0), (1, 1)])
ROOK_4X4 = _z4_squared([(0, 1), (0, 2), (1, 0), (2, 0)])


def test_strongly_regular_pair_is_separated():
    assert SHRIKHANDE.degrees == ROOK_4X4.degrees == (6,) * 16
    assert not nx.is_isomorphic(to_networkx(SHRIKHANDE), to_networkx(ROOK_4X4))
    assert not are_isomorphic(SHRIKHANDE, ROOK_4X4)
    assert canonical_hash(SHRIKHANDE) != canonical_hash(ROOK_4X4)


@given(st.sampled_from([SHRIKHANDE, ROOK_4X4]), st.permutations(range(16)))
@settings(max_examples=40, deadline=None)
def test_strongly_regular_hash_survives_relabelling(g, perm):
    assert canonical_hash(relabel(g, perm)) == canonical_hash(g)
