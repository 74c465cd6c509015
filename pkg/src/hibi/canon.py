"""Canonical labeling and isomorphism testing for posets.

Colour refinement on the strict up/down relation, followed by a search tree
that individualizes one vertex of the first non-singleton cell at a time.
Every leaf gives a labeling; the canonical key is the lexicographically
smallest relabeled up-set table.  Interchangeable elements ("twins", equal
strict up- and down-sets) are branched on only once per cell.
"""

from .config import check_cap, resolve
from .errors import SizeCapExceeded
from .poset import bits


def _refine(colors, down_lists, up_lists):
    n = len(colors)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[i],
             tuple(sorted(colors[j] for j in down_lists[i])),
             tuple(sorted(colors[j] for j in up_lists[i])))
            for i in range(n)
        ]
        ids = {s: k for k, s in enumerate(sorted(set(sigs)))}
        colors = [ids[s] for s in sigs]
        if len(ids) == ncolors:
            return colors
        ncolors = len(ids)


def canonical_labeling(P, caps=None, cap=None):
    """Return ``(key, perm)`` where ``perm[i]`` is the canonical position of ``i``."""
    n = P.n
    if cap is None:
        check_cap(resolve(caps), "isomorphism", n)
    elif n > cap:
        raise SizeCapExceeded("isomorphism", cap, n)
    if n == 0:
        return (0, ()), []
    down_lists = [list(bits(m)) for m in P.down]
    up_lists = [list(bits(m)) for m in P.up]
    twin = [(P.down[i], P.up[i]) for i in range(n)]

    best = [None, None]

    def leaf(colors):
        table = [0] * n
        for i in range(n):
            m = 0
            for j in up_lists[i]:
                m |= 1 << colors[j]
            table[colors[i]] = m
        key = tuple(table)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = list(colors)

    def search(colors):
        colors = _refine(colors, down_lists, up_lists)
        k = len(set(colors))
        if k == n:
            leaf(colors)
            return
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] > 1)
        tried = set()
        for v in range(n):
            if colors[v] != target or twin[v] in tried:
                continue
            tried.add(twin[v])
            search([2 * c + (0 if i == v else 1) for i, c in enumerate(colors)])

    search([0] * n)
    return (n, best[0]), best[1]


def canonical_form(P, caps=None, cap=None):
    """A hashable key equal for isomorphic posets and distinct otherwise."""
    return canonical_labeling(P, caps, cap)[0]


def canonical_poset(P, caps=None):
    """The canonical representative of the isomorphism class of ``P``.

    Elements are renamed ``"0".."n-1"`` by canonical position.
    """
    key, perm = canonical_labeling(P, caps)
    return P.relabel(perm, labels=[str(i) for i in range(P.n)])


def is_isomorphic(P, Q, caps=None, cap=None):
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return False
    return canonical_form(P, caps, cap) == canonical_form(Q, caps, cap)


def find_isomorphism(P, Q, caps=None, cap=None):
    """An order isomorphism ``P -> Q`` as a list, or ``None``."""
    if P.n != Q.n:
        return None
    kp, pp = canonical_labeling(P, caps, cap)
    kq, pq = canonical_labeling(Q, caps, cap)
    if kp != kq:
        return None
    inv_q = [0] * Q.n
    for i, c in enumerate(pq):
        inv_q[c] = i
    return [inv_q[pp[i]] for i in range(P.n)]
