from math import comb

import pytest

from conftest import V, chain_plus_point, small_posets, two_chains
from hibi.birkhoff import ideal_lattice, lattice_from_poset
from hibi.errors import EmptyPoset, MismatchedPair, NotDistributive, NotSimple
from hibi.invariants import (a_invariant, generator_count, has_linear_resolution,
                             hibi_generators, invariant_report, is_extremal_gorenstein,
                             is_gorenstein, krull_dim, proj_dim, regularity,
                             two_chain_regularity)
from hibi.poset import Poset, is_simple, simplify


def test_generator_examples():
    assert len(hibi_generators(lattice_from_poset(Poset.chain(5)))) == 0
    assert len(hibi_generators(ideal_lattice(Poset.antichain(2)))) == 1
    B3 = ideal_lattice(Poset.antichain(3))
    assert B3.comparable_pairs() == 19
    assert len(hibi_generators(B3)) == comb(8, 2) - 19 == 9


def test_generator_shape_b2():
    L = ideal_lattice(Poset.antichain(2))
    (g,) = hibi_generators(L).generators
    assert [L.labels[i] for i in g.lhs] == ["{a0}", "{a1}"]
    assert [L.labels[i] for i in g.rhs] == ["{}", "{a0,a1}"]


def test_generators_need_distributive():
    M3 = lattice_from_poset(Poset.from_relations(
        "0abc1", [("0", x) for x in "abc"] + [(x, "1") for x in "abc"]))
    with pytest.raises(NotDistributive):
        hibi_generators(M3)


@pytest.mark.parametrize("P, value, zero", [
    (Poset.antichain(2), 2, False),
    (chain_plus_point(4), 2, False),
    (Poset.chain(5), 1, True),
])
def test_regularity(P, value, zero):
    assert regularity(P) == (value, zero)


def test_regularity_empty():
    with pytest.raises(EmptyPoset):
        regularity(Poset([], []))


def test_a_invariant_examples():
    assert a_invariant(Poset.antichain(2)) == -2
    assert a_invariant(two_chains(2, 2)) == -3
    for n in range(1, 6):
        assert a_invariant(Poset.chain(n)) == -(n + 1)


@pytest.mark.parametrize("P, dim, pd", [
    (Poset.antichain(2), 3, 0),
    (Poset.antichain(3), 4, 3),
    (two_chains(2, 2), 5, 3),
])
def test_dim_and_pd(P, dim, pd):
    assert krull_dim(P) == dim
    assert proj_dim(P, ideal_lattice(P)) == pd


def test_pd_mismatched_pair():
    with pytest.raises(MismatchedPair):
        proj_dim(Poset.antichain(2), ideal_lattice(Poset.antichain(3)))
    with pytest.raises(MismatchedPair):
        proj_dim(Poset.antichain(2), lattice_from_poset(Poset.chain(3)))


def test_pd_of_zero_ideal_is_absent():
    P = Poset.chain(3)
    assert proj_dim(P, ideal_lattice(P)) is None


def test_linear_resolution_examples():
    assert has_linear_resolution(chain_plus_point(3))
    assert not has_linear_resolution(Poset.antichain(3))
    assert not has_linear_resolution(two_chains(2, 2))
    with pytest.raises(NotSimple):
        has_linear_resolution(V())


def test_gorenstein_examples():
    for n in range(1, 5):
        assert is_gorenstein(Poset.antichain(n))
    assert not is_gorenstein(chain_plus_point(2))
    assert is_gorenstein(two_chains(2, 2))
    assert is_extremal_gorenstein(Poset.antichain(3))
    assert is_extremal_gorenstein(two_chains(2, 2))
    assert not is_extremal_gorenstein(Poset.disjoint_union(Poset.chain(2), Poset.antichain(2)))


def test_two_chain_examples():
    assert two_chain_regularity(two_chains(3, 2)) == 3
    assert two_chain_regularity(Poset.antichain(2)) == 2
    assert two_chain_regularity(Poset.antichain(3)) is None
    with pytest.raises(NotSimple):
        two_chain_regularity(V())


def test_report_json_key_order():
    r = invariant_report(Poset.antichain(2))
    assert list(r.to_dict()) == ["p_size", "rank_p", "lattice_size", "regularity",
                                 "ideal_is_zero", "krull_dim", "proj_dim", "a_invariant",
                                 "flags"]
    assert list(r.to_dict()["flags"]) == ["simple", "pure", "linear_resolution",
                                          "gorenstein", "extremal_gorenstein"]


ALL6 = small_posets(6)


def test_weight_balance_and_counts_exhaustive():
    for P in ALL6:
        L = ideal_lattice(P)
        pres = hibi_generators(L)
        assert all(pres.is_balanced(g) for g in pres.generators)
        assert len(pres) == generator_count(L)
        pairs = {frozenset(g.lhs) for g in pres.generators}
        assert len(pairs) == len(pres)
        assert (len(pres) == 0) == P.is_chain() == regularity(P)[1]


def test_formula_identities_exhaustive():
    for P in ALL6:
        reg, _ = regularity(P)
        assert a_invariant(P) + krull_dim(P) + 1 == reg
        S = simplify(P)
        if S.n:
            assert regularity(S)[0] == reg


def test_linear_resolution_iff_reg_two_up_to_seven():
    for P in small_posets(7):
        if P.n > 1 and is_simple(P):
            assert has_linear_resolution(P) == (regularity(P)[0] == 2)
