"""Regularity of Hibi ideals straight from the poset.

The ideal of a distributive lattice L = J(P) has regularity |P| - rank P,
so everything below is read off P without touching a resolution.
"""

from hibi import Poset, invariant_report, regularity, simplify

shapes = {
    "antichain(3)": Poset.antichain(3),
    "chain(3) + point": Poset.disjoint_union(Poset.chain(3), Poset.antichain(1)),
    "two 2-chains": Poset.disjoint_union(Poset.chain(2), Poset.chain(2)),
    "N": Poset.from_relations("abcd", [("a", "c"), ("b", "c"), ("b", "d")]),
    "chain(4)": Poset.chain(4),
}

for name, P in shapes.items():
    r = invariant_report(P)
    print(f"{name:18s} |P|={r.p_size} rank={r.rank_p} reg={r.regularity} "
          f"|L|={r.lattice_size} pd={r.proj_dim} pure={r.flags['pure']}")

# a chain gives the zero ideal; the formula value is flagged, not trusted
print("chain(4):", regularity(Poset.chain(4)))

# universal elements split L into a product with a chain and can be dropped
P = Poset.from_relations("xabc", [("x", "a"), ("x", "b"), ("a", "c")])
S = simplify(P)
print("simplified:", S.labels, "reg", regularity(P)[0], "->", regularity(S)[0])
