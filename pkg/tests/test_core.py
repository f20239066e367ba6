import pytest

from hlag.core import (
    Hypergraph,
    blowup,
    covers_pairs,
    degree,
    equivalent,
    induced,
    link,
    link_diff,
    min_degree,
    same_links,
    uncovered_pairs,
)
from hlag.families import complete, matching, split, star


def test_hypergraph_basics():
    G = Hypergraph.from_edges(3, 5, [(3, 1, 2), (2, 4, 5)])
    assert G.r == 3 and G.n == 5
    assert len(G) == 2
    assert (1, 2, 3) in G.edges
    assert G.edge_list() == [(1, 2, 3), (2, 4, 5)]
    assert list(G.vertices) == [1, 2, 3, 4, 5]


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph(4, 5, frozenset({(1, 2, 3)}))  # wrong arity
    with pytest.raises(ValueError):
        Hypergraph(3, 4, frozenset({(2, 3, 5)}))  # vertex out of range
    with pytest.raises(ValueError):
        Hypergraph(3, 4, frozenset({(0, 1, 2)}))  # labels are 1-based
    with pytest.raises(ValueError):
        Hypergraph.from_edges(3, 5, [(1, 2, 2)])  # repeated vertex


def test_empty_graph_allowed():
    G = Hypergraph(4, 6, frozenset())
    assert len(G) == 0
    assert min_degree(G) == 0


def test_link_of_star_center():
    # link at the center of a star is the complete (r-1)-graph on the leaves
    L = link(star(6, 4), (1,))
    assert L.r == 3
    assert len(L) == 10  # C(5,3)
    assert all(1 not in e for e in L.edges)


def test_link_of_pair():
    L = link(complete(7, 4), (1, 2))
    assert L.r == 2
    assert len(L) == 10  # C(5,2)


def test_link_diff_star():
    # L(1\2) in the star: all 3-sets of leaves other than 2; L(2\1) is empty
    assert len(link_diff(star(6, 4), 1, 2)) == 4
    assert link_diff(star(6, 4), 2, 1) == frozenset()


def test_induced_relabels():
    H, relabel = induced(complete(7, 4), {2, 3, 4, 5, 6})
    assert H.n == 5 and len(H) == 5
    assert relabel == {2: 1, 3: 2, 4: 3, 5: 4, 6: 5}


def test_covers_pairs():
    assert covers_pairs(complete(5, 4))
    assert covers_pairs(star(6, 4))
    assert not covers_pairs(matching(2, 4))


def test_uncovered_pairs_of_matching():
    pairs = sorted(uncovered_pairs(matching(2, 4)))
    assert len(pairs) == 16
    assert pairs[0] == (1, 5)
    assert all(i <= 4 < j for i, j in pairs)


def test_blowup_identity_and_sizes():
    G = complete(4, 4)
    assert blowup(G, [1, 1, 1, 1]) == G
    B = blowup(G, [2, 1, 1, 1])
    assert B.n == 5
    assert sorted(B.edges) == [(1, 3, 4, 5), (2, 3, 4, 5)]


def test_blowup_of_star_is_split():
    # blowing the star center into a class of size a gives the split graph
    a = 2
    B = blowup(star(7, 4), [a, 1, 1, 1, 1, 1, 1])
    S = split(8, 4, a=a)
    assert B.n == S.n and len(B) == len(S)
    assert B.edges == S.edges


def test_degrees():
    G = star(8, 4)
    assert degree(G, 1) == 35  # C(7,3)
    assert degree(G, 2) == 15  # C(6,2)
    assert min_degree(G) == 15


def test_same_links_vs_equivalent():
    # star leaves have symmetric links but share edges, so they are not
    # equivalent; the two split classes are uncovered and equivalent
    G = star(6, 4)
    assert same_links(G, 2, 3)
    assert not equivalent(G, 2, 3)
    S = split(8, 4)  # part size 2: A = {1, 2}
    assert equivalent(S, 1, 2)
    assert not equivalent(S, 1, 3)


def test_equivalence_is_symmetric():
    S = split(8, 4)
    assert equivalent(S, 2, 1) == equivalent(S, 1, 2)
