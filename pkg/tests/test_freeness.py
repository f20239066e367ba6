import itertools

import pytest

from hlag.core import Hypergraph
from hlag.errors import UnsupportedSizeError
from hlag.families import complete, extension, matching, split, star
from hlag.freeness import (
    enumerate_left_compressed_free,
    extremal_lambda_search,
    hom_search,
    is_core_free,
    is_hom_free,
    is_matching_free,
    matching_number,
)

# enumeration freeze, cross-checked pre-build by brute force at n=5
FAMILY_COUNTS = {5: 6, 6: 32, 7: 352, 8: 3978}


def test_matching_number():
    assert matching_number(Hypergraph(4, 8, frozenset())) == 0
    assert matching_number(star(10, 4)) == 1
    assert matching_number(complete(8, 4)) == 2
    assert matching_number(complete(12, 4)) == 3
    assert matching_number(matching(3, 3)) == 3


def test_is_matching_free():
    rep = is_matching_free(star(9, 4), 2)
    assert rep.free and rep.witness is None
    assert rep.pattern == "matching(t=2,r=4)"

    rep = is_matching_free(complete(8, 4), 2)
    assert not rep.free
    e1, e2 = rep.witness
    assert e1 in complete(8, 4).edges and e2 in complete(8, 4).edges
    assert set(e1).isdisjoint(e2)


def test_split_contains_matchings_but_no_covered_core():
    # the split graph has plenty of 2-matchings; what it lacks is an 8-core
    # with all pairs covered around one, which is the freeness that matters
    for n in (8, 12):
        assert not is_matching_free(split(n, 4), 2).free
        assert is_core_free(split(n, 4), 8, matching(2, 4)).free


def test_is_core_free_basic():
    M2 = matching(2, 4)
    assert is_core_free(star(12, 4), 8, M2).free
    rep = is_core_free(complete(8, 4), 8, M2)
    assert not rep.free
    core, edges = rep.witness
    assert len(core) == 8 and len(edges) == 2
    assert all(set(e) <= set(core) for e in edges)


def test_extension_contains_its_own_core():
    M2 = matching(2, 4)
    E = extension(M2, 8)  # the 8-core 4-graph the freeness check targets
    rep = is_core_free(E, 8, M2)
    assert not rep.free


def test_split_and_star_are_core_free():
    M2 = matching(2, 4)
    assert is_core_free(split(12, 4), 8, M2).free
    assert is_core_free(star(16, 4), 8, M2).free


def test_is_hom_free_matches_core_free():
    M2 = matching(2, 4)
    for G in (complete(8, 4), star(9, 4), split(8, 4)):
        assert is_hom_free(G, M2, 8).free == is_core_free(G, 8, M2).free


def test_hom_search_cross_validation():
    M2 = matching(2, 4)
    m = hom_search(complete(8, 4), M2, 8)
    assert m is not None
    # core vertices 1..8 must be injective and every 2-matching edge present
    assert len(set(m[:8])) == 8
    assert hom_search(star(9, 4), M2, 8) is None


def test_hom_search_guard():
    with pytest.raises(UnsupportedSizeError):
        hom_search(star(11, 4), matching(2, 4), 8)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_enumeration_counts(n):
    families = list(enumerate_left_compressed_free(n, 4, 2))
    assert len(families) == FAMILY_COUNTS[n]
    assert len(set(families)) == len(families)  # no duplicates


def test_enumeration_members_are_free_and_compressed():
    from hlag.compression import is_left_compressed

    for edges in enumerate_left_compressed_free(6, 4, 2):
        G = Hypergraph(4, 6, frozenset(edges))
        assert is_left_compressed(G)
        assert is_matching_free(G, 2).free


def test_enumeration_guard():
    with pytest.raises(UnsupportedSizeError):
        list(enumerate_left_compressed_free(10, 4, 2))


def test_search_n7_max_is_complete():
    res = extremal_lambda_search(7, 4, 2)
    assert res.families == 352
    assert res.evaluated == 1  # a single maximal family at n=7
    assert res.witness.edges == complete(7, 4).edges
    assert res.max_value == pytest.approx(5 / 343, abs=1e-9)
    assert not res.witness_is_star_subgraph


def test_search_n5():
    res = extremal_lambda_search(5, 4, 2)
    assert res.families == 6
    assert res.max_value == pytest.approx(5 / 625, abs=1e-9)  # K_5^4


def test_search_jobs_equivalence():
    a = extremal_lambda_search(7, 4, 2, jobs=1)
    b = extremal_lambda_search(7, 4, 2, jobs=4)
    assert a == b


def test_search_all_families_mode():
    res_all = extremal_lambda_search(6, 4, 2, maximal_only=False)
    res_max = extremal_lambda_search(6, 4, 2, maximal_only=True)
    assert res_all.families == 32
    assert res_all.evaluated == 31  # everything but the empty family
    assert res_max.evaluated < res_all.evaluated
    assert res_all.max_value == pytest.approx(res_max.max_value, abs=1e-9)


def test_search_nonstar_sentinel_at_n4():
    # at n=4 the only nonempty family is one edge, which is a star subgraph
    res = extremal_lambda_search(4, 4, 2)
    assert res.witness_is_star_subgraph
    assert res.nonstar_witness is None
