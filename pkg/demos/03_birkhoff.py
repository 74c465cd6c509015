"""Down-set lattices and back again."""

from hibi import Poset, birkhoff_roundtrip, ideal_lattice, is_isomorphic, join_irreducibles
from hibi.invariants import hibi_generators

P = Poset.from_relations("abc", [("a", "c"), ("b", "c")])
L = ideal_lattice(P)
print("|L| =", L.m)
for i in range(L.m):
    print("  ", L.labels[i])

J = join_irreducibles(L)
print("join-irreducibles recover P:", is_isomorphic(J, P), birkhoff_roundtrip(L))

pres = hibi_generators(L)
print(len(pres), "binomial generators, all torus balanced:",
      all(pres.is_balanced(g) for g in pres.generators))
for g in pres.generators:
    print("  ", pres.format_generator(g))
