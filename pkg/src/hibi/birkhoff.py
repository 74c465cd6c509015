"""Distributive lattices of down-sets and the Birkhoff correspondence."""

from dataclasses import dataclass

import numpy as np

from .canon import canonical_form
from .config import check_cap, resolve
from .errors import InternalInconsistency, NotALattice, NotDistributive
from .poset import Poset, bits, order_ideal_masks


@dataclass(frozen=True, eq=False)
class Lattice:
    """A finite lattice given by its order and its meet/join tables.

    ``ideal_map[a]`` is, for lattices built by :func:`ideal_lattice`, the
    bitmask of the down-set of the originating poset that ``a`` stands for.
    """

    labels: tuple
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int
    ideal_map: tuple = None
    source: Poset = None

    @property
    def m(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def order(self):
        """The underlying order as a :class:`Poset`."""
        return Poset.from_leq_matrix(self.leq, self.labels)

    def comparable_pairs(self):
        """Number of unordered pairs of distinct comparable elements."""
        return int((self.leq.sum() - self.m))

    def to_dict(self):
        d = self.order().to_dict()
        d["as_lattice"] = True
        return d

    def to_dot(self, name="L"):
        return self.order().to_dot(name)

    def __repr__(self):
        return f"Lattice(m={self.m}, labels={list(self.labels)!r})"


def _ideal_label(P, mask):
    return "{" + ",".join(P.labels[i] for i in bits(mask)) + "}"


def ideal_lattice(P, caps=None):
    """The lattice of down-sets of ``P`` ordered by inclusion."""
    caps = resolve(caps)
    masks = order_ideal_masks(P, caps)
    check_cap(caps, "lattice_size", len(masks))
    m = len(masks)
    # object dtype keeps masks exact for any |P|
    arr = np.array(masks, dtype=object)
    index = {mask: k for k, mask in enumerate(masks)}
    inter = np.bitwise_and.outer(arr, arr)
    union = np.bitwise_or.outer(arr, arr)
    lookup = np.vectorize(index.__getitem__, otypes=[np.int64])
    meet = lookup(inter)
    join = lookup(union)
    leq = meet == np.arange(m)[:, None]
    return Lattice(
        labels=tuple(_ideal_label(P, mk) for mk in masks),
        leq=leq,
        meet=meet,
        join=join,
        bottom=0,
        top=m - 1,
        ideal_map=tuple(masks),
        source=P,
    )


def lattice_from_poset(P):
    """Treat the order ``P`` as a lattice, deriving meets and joins.

    Raises :class:`NotALattice` naming a pair without a greatest lower or
    least upper bound.
    """
    n = P.n
    if n == 0:
        raise NotALattice("the empty order is not a lattice")
    lowers = [P.down[i] | (1 << i) for i in range(n)]
    uppers = [P.up[i] | (1 << i) for i in range(n)]
    by_lowers = {m: i for i, m in enumerate(lowers)}
    by_uppers = {m: i for i, m in enumerate(uppers)}
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            g = by_lowers.get(lowers[a] & lowers[b])
            l_ = by_uppers.get(uppers[a] & uppers[b])
            if g is None:
                raise NotALattice(f"{P.labels[a]!r} and {P.labels[b]!r} have no meet")
            if l_ is None:
                raise NotALattice(f"{P.labels[a]!r} and {P.labels[b]!r} have no join")
            meet[a, b] = meet[b, a] = g
            join[a, b] = join[b, a] = l_
    leq = np.array([[P.leq(i, j) for j in range(n)] for i in range(n)], dtype=bool)
    (bottom,) = P.minimal_elements()
    (top,) = P.maximal_elements()
    return Lattice(tuple(P.labels), leq, meet, join, bottom, top)


def cover_matrix(L):
    """``C[b, a]`` is true iff ``a`` covers ``b``."""
    strict = L.leq & ~np.eye(L.m, dtype=bool)
    s = strict.astype(np.int64)
    return strict & ((s @ s) == 0)


def lower_covers(L, a):
    return [int(b) for b in np.flatnonzero(cover_matrix(L)[:, a])]


def _ji_by_definition(L):
    out = []
    for a in range(L.m):
        if a == L.bottom:
            continue
        below = np.flatnonzero(L.leq[:, a])
        below = below[below != a]
        if below.size == 0 or not (L.join[np.ix_(below, below)] == a).any():
            out.append(int(a))
    return out


def _ji_by_covers(L):
    counts = cover_matrix(L).sum(axis=0)
    return [a for a in range(L.m) if counts[a] == 1]


def join_irreducible_indices(L):
    first = _ji_by_definition(L)
    second = _ji_by_covers(L)
    if first != second:
        raise InternalInconsistency(
            f"join-irreducible tests disagree: {first} vs {second}; corrupted tables?")
    return first


def join_irreducibles(L):
    """The subposet of join-irreducible elements of ``L``."""
    ji = join_irreducible_indices(L)
    up = [sum(1 << k for k, b in enumerate(ji) if b != a and L.leq[a, b]) for a in ji]
    return Poset([L.labels[a] for a in ji], up)


def is_distributive(L, caps=None):
    check_cap(resolve(caps), "distributive", L.m)
    meet, join = L.meet, L.join
    for a in range(L.m):
        ma = meet[a]
        lhs = ma[join]                           # a ^ (b v c)
        rhs = join[ma[:, None], ma[None, :]]     # (a ^ b) v (a ^ c)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def birkhoff_map(L):
    """Send each element to the bitmask of join-irreducibles below it."""
    ji = join_irreducible_indices(L)
    return [sum(1 << k for k, j in enumerate(ji) if L.leq[j, a]) for a in range(L.m)], ji


def birkhoff_roundtrip(L, caps=None):
    """Check that ``L`` is isomorphic to the down-set lattice of its join-irreducibles.

    The map ``a -> {j join-irreducible : j <= a}`` is built explicitly and
    verified to be an order isomorphism onto all down-sets of ``J(L)``.
    """
    if not is_distributive(L, caps):
        raise NotDistributive("lattice is not distributive")
    J = join_irreducibles(L)
    phi, _ = birkhoff_map(L)
    targets = set(order_ideal_masks(J, caps))
    if len(set(phi)) != L.m or set(phi) != targets:
        return False
    for a in range(L.m):
        for b in range(L.m):
            if bool(L.leq[a, b]) != (phi[a] & ~phi[b] == 0):
                return False
    return True


def lattices_isomorphic(L1, L2):
    if L1.m != L2.m:
        return False
    cap = max(L1.m, L2.m)
    return canonical_form(L1.order(), cap=cap) == canonical_form(L2.order(), cap=cap)


def absorption_holds(L):
    idx = np.arange(L.m)
    return bool((L.meet[idx[:, None], L.join] == idx[:, None]).all()
                and (L.join[idx[:, None], L.meet] == idx[:, None]).all())
