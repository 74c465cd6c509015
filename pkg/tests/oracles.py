"""Slow reference implementations, independent of the package internals.

Everything here works on plain Python sets and tuples (and networkx for
isomorphism), never on the bitmask machinery it is used to check.
"""

import itertools

import networkx as nx


def relation_pairs(P):
    """Strict order as a set of label pairs (a, b) meaning a < b."""
    return {(P.labels[i], P.labels[j]) for i in range(P.n) for j in range(P.n) if P.lt(i, j)}


def closure(elements, pairs):
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return rel


def chains(elements, lt):
    """All chains (as tuples, increasing) of a strict order given by set ``lt``."""
    result = []

    def grow(chain):
        result.append(chain)
        for x in elements:
            if all((y, x) in lt for y in chain):
                grow(chain + (x,))

    grow(())
    return result


def brute_rank(P):
    lt = relation_pairs(P)
    return max(len(c) for c in chains(P.labels, lt)) - 1


def maximal_chains(P):
    lt = relation_pairs(P)
    cs = [set(c) for c in chains(P.labels, lt) if c]
    return [c for c in cs if not any(c < d for d in cs)]


def brute_pure(P):
    return len({len(c) for c in maximal_chains(P)}) == 1


def brute_ideals(P):
    lt = relation_pairs(P)
    out = []
    for r in range(P.n + 1):
        for sub in itertools.combinations(P.labels, r):
            s = set(sub)
            if all(a in s for (a, b) in lt if b in s):
                out.append(frozenset(s))
    return out


def brute_hilbert(P, n):
    """Order-reversing maps P -> {0..n} by raw enumeration."""
    lt = relation_pairs(P)
    idx = {lab: k for k, lab in enumerate(P.labels)}
    count = 0
    for vals in itertools.product(range(n + 1), repeat=P.n):
        if all(vals[idx[a]] >= vals[idx[b]] for a, b in lt):
            count += 1
    return count


def multichain_count(P, n):
    """Multichains I_1 <= ... <= I_n of down-sets (another route to HF(n))."""
    ideals = brute_ideals(P)
    counts = {I: 1 for I in ideals}
    for _ in range(n - 1):
        counts = {J: sum(c for I, c in counts.items() if I <= J) for J in ideals}
    return sum(counts.values()) if n > 0 else 1


def brute_isomorphic(P, Q):
    if P.n != Q.n:
        return False
    lp, lq = relation_pairs(P), relation_pairs(Q)
    for perm in itertools.permutations(range(Q.n)):
        m = {P.labels[i]: Q.labels[perm[i]] for i in range(P.n)}
        if {(m[a], m[b]) for a, b in lp} == lq:
            return True
    return False


def to_digraph(P):
    g = nx.DiGraph()
    g.add_nodes_from(range(P.n))
    g.add_edges_from((i, j) for i in range(P.n) for j in range(P.n) if P.lt(i, j))
    return g


def labeled_class_count(n):
    """Isomorphism classes of n-element posets from all naturally labeled closures.

    Every poset has a linear extension, so generating sets of pairs (i, j)
    with i < j cover all classes.  Deduplication uses networkx isomorphism.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen_rel = set()
    reps = []
    for mask in range(1 << len(pairs)):
        gen = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        rel = frozenset(closure(range(n), gen))
        if rel in seen_rel:
            continue
        seen_rel.add(rel)
        g = nx.DiGraph()
        g.add_nodes_from(range(n))
        g.add_edges_from(rel)
        if not any(nx.is_isomorphic(g, h) for h in reps):
            reps.append(g)
    return len(reps)


def strict_min_degree(P):
    """Least v(BOTTOM) over strictly order-reversing v, by raw enumeration."""
    lt = relation_pairs(P)
    idx = {lab: k for k, lab in enumerate(P.labels)}
    for top in range(P.n + 2):
        for vals in itertools.product(range(1, top), repeat=P.n):
            if all(vals[idx[a]] > vals[idx[b]] for a, b in lt):
                return top
    raise AssertionError("unreachable")
