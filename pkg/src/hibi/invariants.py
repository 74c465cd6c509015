"""Hibi ideals and the invariants read off the poset of join-irreducibles.

The regularity of the Hibi ideal is ``|P| - rank P``; dimension, projective
dimension and the a-invariant follow, and the classification predicates
(linear resolution, Gorenstein, extremal Gorenstein) are stated on ``P``.
"""

import json
from collections import namedtuple
from dataclasses import dataclass

from .birkhoff import ideal_lattice, is_distributive, join_irreducible_indices
from .errors import (InternalInconsistency, MismatchedPair, NotDistributive,
                     NotSimple)
from .poset import (is_pure, is_simple, max_chain, order_ideal_masks, rank,
                    require_nonempty)

Binomial = namedtuple("Binomial", "lhs rhs")


@dataclass(frozen=True)
class HibiPresentation:
    """Generators of ``I_L`` as pairs of degree-two monomials.

    ``torus_weights[a]`` is the exponent vector of ``s * prod(t_p, p in a)``
    over ``(s, t_0, ..., t_{k-1})``.
    """

    variables: tuple
    generators: tuple
    torus_weights: tuple

    def weight(self, monomial):
        w = [0] * len(self.torus_weights[0])
        for a in monomial:
            for k, e in enumerate(self.torus_weights[a]):
                w[k] += e
        return tuple(w)

    def is_balanced(self, gen):
        return self.weight(gen.lhs) == self.weight(gen.rhs)

    def __len__(self):
        return len(self.generators)

    def format_generator(self, gen):
        x = self.variables
        return (f"x[{x[gen.lhs[0]]}]*x[{x[gen.lhs[1]]}] - "
                f"x[{x[gen.rhs[0]]}]*x[{x[gen.rhs[1]]}]")


def _torus_weights(L):
    if L.ideal_map is not None and L.source is not None:
        k, masks = L.source.n, L.ideal_map
    else:
        ji = join_irreducible_indices(L)
        k = len(ji)
        masks = [sum(1 << i for i, j in enumerate(ji) if L.leq[j, a]) for a in range(L.m)]
    return tuple((1,) + tuple((mk >> p) & 1 for p in range(k)) for mk in masks)


def hibi_generators(L, caps=None):
    if not is_distributive(L, caps):
        raise NotDistributive("Hibi ideals are defined for distributive lattices only")
    gens = []
    for a in range(L.m):
        for b in range(a + 1, L.m):
            if L.leq[a, b] or L.leq[b, a]:
                continue
            lo, hi = int(L.meet[a, b]), int(L.join[a, b])
            gens.append(Binomial((a, b), tuple(sorted((lo, hi)))))
    pres = HibiPresentation(tuple(L.labels), tuple(gens), _torus_weights(L))
    for g in gens:
        if not pres.is_balanced(g):
            raise InternalInconsistency(f"generator {pres.format_generator(g)} is not homogeneous "
                                        "for the torus grading")
    return pres


def regularity(P):
    """``(|P| - rank P, ideal_is_zero)``; the flag marks chains, where ``I_L = 0``."""
    r = rank(P)
    return P.n - r, r == P.n - 1


def a_invariant(P):
    return -(rank(P) + 2)


def krull_dim(P):
    require_nonempty(P)
    return P.n + 1


def _check_pair(P, L):
    if L.ideal_map is None or len(L.ideal_map) != len(set(L.ideal_map)):
        raise MismatchedPair("lattice was not built as a lattice of down-sets")
    if set(L.ideal_map) != set(order_ideal_masks(P)):
        raise MismatchedPair("lattice is not the down-set lattice of this poset")


def proj_dim(P, L):
    """``|L| - |P| - 2``, or ``None`` when ``I_L`` is the zero ideal."""
    _check_pair(P, L)
    if regularity(P)[1]:
        return None
    pd = L.m - P.n - 2
    if pd < 0:
        raise InternalInconsistency(f"negative projective dimension {pd}")
    return pd


def _is_chain_plus_point(P):
    for q in range(P.n):
        if P.up[q] or P.down[q]:
            continue
        rest = P.induced(P.full_mask & ~(1 << q))
        if rest.n and rest.is_chain():
            return True
    return False


def has_linear_resolution(P):
    """Simple ``P`` only: true iff ``P`` is a chain plus an isolated element."""
    if not is_simple(P):
        raise NotSimple("linear-resolution classification is stated for simple posets")
    shape = _is_chain_plus_point(P)
    if shape != (regularity(P)[0] == 2):
        raise InternalInconsistency("chain-plus-point shape disagrees with regularity 2")
    return shape


def is_gorenstein(P):
    return is_pure(P)


def is_extremal_gorenstein(P):
    return is_gorenstein(P) and regularity(P)[0] == 3


def two_chain_regularity(P):
    """``|C2| + 1`` when ``P`` minus its maximum chain ``C1`` is a chain ``C2``."""
    require_nonempty(P)
    if not is_simple(P):
        raise NotSimple("two-chain decomposition is considered for simple posets")
    c1 = max_chain(P)
    rest_mask = P.full_mask
    for i in c1:
        rest_mask &= ~(1 << i)
    rest = P.induced(rest_mask)
    if not rest.n or not rest.is_chain():
        return None
    value = rest.n + 1
    if value != regularity(P)[0]:
        raise InternalInconsistency(f"|C2|+1 = {value} but |P| - rank P = {regularity(P)[0]}")
    return value


REPORT_FIELDS = ("p_size", "rank_p", "lattice_size", "regularity", "ideal_is_zero",
                 "krull_dim", "proj_dim", "a_invariant", "flags")
FLAG_FIELDS = ("simple", "pure", "linear_resolution", "gorenstein", "extremal_gorenstein")


@dataclass(frozen=True)
class InvariantReport:
    p_size: int
    rank_p: int
    lattice_size: int
    regularity: int
    ideal_is_zero: bool
    krull_dim: int
    proj_dim: object
    a_invariant: int
    flags: dict

    def to_dict(self):
        d = {f: getattr(self, f) for f in REPORT_FIELDS}
        d["flags"] = {f: self.flags[f] for f in FLAG_FIELDS}
        return d

    def to_json(self):
        return json.dumps(self.to_dict())


def invariant_report(P, L=None, caps=None):
    """Collect every formula-level invariant of ``P`` and its lattice."""
    L = ideal_lattice(P, caps) if L is None else L
    reg, zero = regularity(P)
    pure = is_pure(P)
    report = InvariantReport(
        p_size=P.n,
        rank_p=rank(P),
        lattice_size=L.m,
        regularity=reg,
        ideal_is_zero=zero,
        krull_dim=krull_dim(P),
        proj_dim=proj_dim(P, L),
        a_invariant=a_invariant(P),
        flags={
            "simple": is_simple(P),
            "pure": pure,
            "linear_resolution": not zero and reg == 2,
            "gorenstein": pure,
            "extremal_gorenstein": pure and reg == 3,
        },
    )
    if report.a_invariant != report.regularity - report.p_size - 2:
        raise InternalInconsistency("a-invariant does not match regularity")
    return report


def generator_count(L):
    m = L.m
    return m * (m - 1) // 2 - L.comparable_pairs()


def principal_ideal_masks(P):
    return [P.down[p] | (1 << p) for p in range(P.n)]

