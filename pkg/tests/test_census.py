import pytest

from conftest import chain_plus_point, small_posets, two_chains
from hibi.birkhoff import ideal_lattice, lattices_isomorphic
from hibi.canon import canonical_form, is_isomorphic
from hibi.census import (CensusQuery, census, census_jsonl, enumerate_posets,
                         figure1_family, figure1_matches, figure2_lattices,
                         load_figure1_templates, off_chain_count)
from hibi.config import Caps
from hibi.errors import PreconditionViolated, SizeCapExceeded
from hibi.poset import Poset, is_simple, rank
import oracles


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_class_counts_match_labeled_enumeration(n):
    assert len(enumerate_posets(n)) == oracles.labeled_class_count(n)


def test_known_small_counts():
    assert [len(enumerate_posets(n)) for n in (1, 3, 4)] == [1, 5, 16]


def test_enumeration_is_sound_and_deduplicated():
    for n in range(1, 7):
        ps = enumerate_posets(n)
        keys = [canonical_form(P) for P in ps]
        assert len(set(keys)) == len(keys) and keys == sorted(keys)
        assert all(P.n == n for P in ps)


def test_parallel_enumeration_matches_serial():
    from hibi.census import _enumerate
    assert _enumerate(6, 2) == _enumerate(6, 1)


def test_enumeration_cap():
    with pytest.raises(SizeCapExceeded):
        enumerate_posets(9)
    with pytest.raises(SizeCapExceeded):
        enumerate_posets(5, caps=Caps(census=4))


def test_reg2_census():
    res = census(CensusQuery(n_max=7, simple=True, reg=2))
    assert [P.n for P, _ in res] == [2, 3, 4, 5, 6, 7]
    for P, r in res:
        assert is_isomorphic(P, chain_plus_point(P.n - 1))
        assert r.regularity == 2 and r.flags["linear_resolution"]


def test_extremal_gorenstein_census_small():
    # all four classes already appear with at most four elements
    res = census(CensusQuery(n_max=6, simple=True, pure=True, k_value=3))
    assert len(res) == 4 and max(P.n for P, _ in res) == 4


def test_k3_off_chain_elements():
    res = census(CensusQuery(n_min=4, n_max=4, simple=True, k_value=3))
    assert res
    assert all(off_chain_count(P) == 2 for P, _ in res)


def test_off_chain_count_for_k2_k3():
    for P in small_posets(7, nmin=2):
        if is_simple(P):
            k = P.n - rank(P)
            if k in (2, 3):
                assert off_chain_count(P) == k - 1


def test_figure1_examples():
    assert figure1_family(Poset.antichain(3)) == "F1"
    assert figure1_family(two_chains(2, 2)) == "F3"
    with pytest.raises(PreconditionViolated):
        figure1_family(chain_plus_point(2))


def test_figure1_templates_are_data():
    fams = load_figure1_templates()
    assert [f["tag"] for f in fams] == ["F1", "F2", "F3", "F4", "F5", "F6"]


def test_figure1_template_instances_qualify():
    from hibi.census import figure1_instance_keys
    for n in range(3, 8):
        qualifying = {canonical_form(P) for P, _ in
                      census(CensusQuery(n_min=n, n_max=n, simple=True, k_value=3))}
        for tag, keys in figure1_instance_keys(n).items():
            assert keys <= qualifying, tag


def test_figure1_overlap_resolved_to_lowest_tag():
    N = Poset.from_relations("abcd", [("a", "c"), ("b", "c"), ("b", "d")])
    assert figure1_matches(N) == ["F4", "F5"]
    assert figure1_family(N) == "F4"


def test_figure2_lattices():
    lats = figure2_lattices()
    assert [L.m for L in lats] == [7, 8, 8, 9]
    b3 = ideal_lattice(Poset.antichain(3))
    grid = ideal_lattice(two_chains(2, 2))
    bowtie = Poset.from_relations(["p0", "p1", "q", "q2"],
                                  [("p0", "p1"), ("q", "q2"), ("p0", "q2"), ("q", "p1")])
    assert any(lattices_isomorphic(L, b3) for L in lats)
    assert any(lattices_isomorphic(L, grid) for L in lats)
    assert lattices_isomorphic(lats[0], ideal_lattice(bowtie))


def test_jsonl_output():
    res = census(CensusQuery(n_max=3, simple=True))
    lines = census_jsonl(res).splitlines()
    assert len(lines) == len(res)
    import json
    rec = json.loads(lines[0])
    assert set(rec) == {"poset", "report"}
    assert Poset.from_dict(rec["poset"]).n == rec["report"]["p_size"]
