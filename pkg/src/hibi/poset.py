"""Finite posets stored as bitmasks.

Elements are the indices ``0..n-1``.  For each element we keep the bitmask
of its strict up-set and of its strict down-set, so comparability queries,
down-set closure and chain computations are plain integer operations.
"""

import json

from .config import check_cap, resolve
from .errors import CycleError, EmptyPoset, ParseError, UnknownElement

BOTTOM = "BOTTOM"
TOP = "TOP"


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset.

    ``up[i]`` is the mask of elements strictly above ``i`` and ``down[i]``
    the mask of elements strictly below it.  Use :meth:`from_relations` or
    the small constructors (:meth:`chain`, :meth:`antichain`, ...) rather
    than calling the initializer with hand-made masks.
    """

    __slots__ = ("labels", "up", "down", "_covers", "_hash")

    def __init__(self, labels, up):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        up = tuple(int(m) for m in up)
        if len(up) != n:
            raise ValueError("labels and up-sets differ in length")
        if len(set(labels)) != n:
            raise ParseError("element names must be distinct")
        down = [0] * n
        for i, m in enumerate(up):
            if m >> i & 1:
                raise CycleError(f"element {labels[i]!r} lies strictly above itself")
            for j in bits(m):
                down[j] |= 1 << i
        for i, m in enumerate(up):
            for j in bits(m):
                if up[j] & ~m:
                    raise ValueError("up-sets are not transitively closed")
                if up[j] >> i & 1:
                    raise CycleError(f"{labels[i]!r} and {labels[j]!r} lie above each other")
        self.labels = labels
        self.up = up
        self.down = tuple(down)
        self._covers = None
        self._hash = None

    @classmethod
    def _trusted(cls, labels, up, down=None):
        """Skip validation; ``up`` must already be a closed strict order."""
        self = object.__new__(cls)
        self.labels = tuple(labels)
        self.up = tuple(up)
        if down is None:
            d = [0] * len(up)
            for i, m in enumerate(up):
                for j in bits(m):
                    d[j] |= 1 << i
            down = d
        self.down = tuple(down)
        self._covers = None
        self._hash = None
        return self

    @property
    def covers(self):
        """Cover relations ``(lower, upper)`` of the Hasse diagram."""
        if self._covers is None:
            up, down = self.up, self.down
            self._covers = frozenset(
                (i, j) for i in range(len(up)) for j in bits(up[i]) if not (up[i] & down[j])
            )
        return self._covers

    # -- construction -----------------------------------------------------

    @classmethod
    def from_relations(cls, names, relations):
        """Build the poset generated by ``relations`` (pairs ``(lower, upper)``).

        The closure is computed here, so any generating set works; pairs of
        the form ``(a, a)`` are ignored.
        """
        names = [str(x) for x in names]
        if len(set(names)) != len(names):
            raise ParseError("element names must be distinct")
        index = {name: i for i, name in enumerate(names)}
        n = len(names)
        up = [0] * n
        for rel in relations:
            a, b = (str(x) for x in rel)
            for x in (a, b):
                if x not in index:
                    raise UnknownElement(f"relation mentions unknown element {x!r}")
            if a != b:
                up[index[a]] |= 1 << index[b]
        # Warshall on bitmasks
        for k in range(n):
            bk = 1 << k
            for i in range(n):
                if up[i] & bk:
                    up[i] |= up[k]
        for i in range(n):
            if up[i] >> i & 1:
                raise CycleError(f"relations force {names[i]!r} < {names[i]!r}")
        return cls(names, up)

    @classmethod
    def from_index_relations(cls, n, relations, labels=None):
        labels = [str(i) for i in range(n)] if labels is None else labels
        return cls.from_relations(labels, [(labels[a], labels[b]) for a, b in relations])

    @classmethod
    def chain(cls, n, prefix="c"):
        return cls([f"{prefix}{i}" for i in range(n)],
                   [((1 << n) - 1) & ~((1 << (i + 1)) - 1) for i in range(n)])

    @classmethod
    def antichain(cls, n, prefix="a"):
        return cls([f"{prefix}{i}" for i in range(n)], [0] * n)

    @classmethod
    def disjoint_union(cls, *posets):
        labels, up, offset = [], [], 0
        for k, p in enumerate(posets):
            labels.extend(f"{lab}_{k}" if len(posets) > 1 else lab for lab in p.labels)
            up.extend(m << offset for m in p.up)
            offset += p.n
        return cls(labels, up)

    @classmethod
    def from_leq_matrix(cls, leq, labels=None):
        n = len(leq)
        labels = [str(i) for i in range(n)] if labels is None else labels
        up = [sum(1 << j for j in range(n) if j != i and leq[i][j]) for i in range(n)]
        return cls(labels, up)

    # -- basic queries ----------------------------------------------------

    @property
    def n(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        rels = ", ".join(f"{self.labels[a]}<{self.labels[b]}" for a, b in sorted(self.covers))
        return f"Poset([{', '.join(self.labels)}]; {rels})"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.labels, self.up))
        return self._hash

    def index(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise UnknownElement(f"unknown element {label!r}") from None

    def leq(self, i, j):
        return i == j or bool(self.up[i] >> j & 1)

    def lt(self, i, j):
        return bool(self.up[i] >> j & 1)

    def comparable(self, i, j):
        return i == j or bool((self.up[i] | self.down[i]) >> j & 1)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def minimal_elements(self, within=None):
        within = self.full_mask if within is None else within
        return [i for i in bits(within) if not (self.down[i] & within)]

    def maximal_elements(self, within=None):
        within = self.full_mask if within is None else within
        return [i for i in bits(within) if not (self.up[i] & within)]

    def upper_covers(self, i):
        return [j for j in bits(self.up[i]) if not (self.up[i] & self.down[j])]

    def lower_covers(self, i):
        return [j for j in bits(self.down[i]) if not (self.down[i] & self.up[j])]

    def linear_extension(self):
        """Indices in an order compatible with ``<`` (smallest index first among minima)."""
        order, placed = [], 0
        while len(order) < self.n:
            nxt = min(i for i in range(self.n)
                      if not placed >> i & 1 and not (self.down[i] & ~placed))
            order.append(nxt)
            placed |= 1 << nxt
        return order

    def induced(self, mask):
        """The subposet on the elements of ``mask``, keeping relative order of indices."""
        keep = list(bits(mask))
        pos = {old: new for new, old in enumerate(keep)}
        up = [sum(1 << pos[j] for j in bits(self.up[i] & mask)) for i in keep]
        return Poset._trusted([self.labels[i] for i in keep], up)

    def relabel(self, perm, labels=None):
        """Return the isomorphic poset where old element ``i`` becomes ``perm[i]``."""
        n = self.n
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        up = [sum(1 << perm[j] for j in bits(self.up[inv[k]])) for k in range(n)]
        if labels is None:
            labels = [self.labels[inv[k]] for k in range(n)]
        elif len(set(map(str, labels))) != n:
            raise ParseError("relabeling needs n distinct names")
        return Poset._trusted([str(x) for x in labels], up)

    def dual(self):
        return Poset._trusted(self.labels, self.down, self.up)

    def is_chain(self):
        return all(self.comparable(i, j) for i in range(self.n) for j in range(i + 1, self.n))

    def is_antichain(self):
        return not any(self.up)

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        return {
            "elements": list(self.labels),
            "relations": [[self.labels[a], self.labels[b]] for a, b in sorted(self.covers)],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or "elements" not in data:
            raise ParseError('poset JSON needs an "elements" list')
        elements = data["elements"]
        relations = data.get("relations", [])
        if not isinstance(elements, list) or not isinstance(relations, list):
            raise ParseError('"elements" and "relations" must be lists')
        for rel in relations:
            if not isinstance(rel, (list, tuple)) or len(rel) != 2:
                raise ParseError(f"relation {rel!r} is not a pair")
        return cls.from_relations(elements, relations)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, name="P"):
        height = heights(self)
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
        for i, lab in enumerate(self.labels):
            lines.append(f'  n{i} [label="{lab}"];')
        for a, b in sorted(self.covers):
            lines.append(f"  n{a} -> n{b};")
        for h in sorted(set(height)):
            same = " ".join(f"n{i};" for i in range(self.n) if height[i] == h)
            lines.append(f"  {{ rank=same; {same} }}")
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset_from_relations(names, relations):
    return Poset.from_relations(names, relations)


def require_nonempty(P):
    if P.n == 0:
        raise EmptyPoset("operation needs a nonempty poset")


def heights(P):
    """Length of the longest chain ending at each element."""
    h = [0] * P.n
    for i in P.linear_extension():
        for j in P.lower_covers(i):
            h[i] = max(h[i], h[j] + 1)
    return h


def rank(P):
    """Largest number of covering steps in a chain of ``P``."""
    require_nonempty(P)
    return max(heights(P))


def is_pure(P):
    """True iff all maximal chains of ``P`` have the same length.

    Equivalent to: every cover raises the height by exactly one and every
    maximal element sits at height ``rank(P)``.
    """
    require_nonempty(P)
    h = heights(P)
    r = max(h)
    if any(h[b] != h[a] + 1 for a, b in P.covers):
        return False
    return all(h[i] == r for i in P.maximal_elements())


def universal_elements(P):
    """Elements comparable to every other element."""
    full = P.full_mask
    return [i for i in range(P.n) if (P.up[i] | P.down[i] | (1 << i)) == full]


def is_simple(P):
    require_nonempty(P)
    return not universal_elements(P)


def simplify(P):
    """Strip elements comparable to all others until none remain.

    May return the empty poset (for chains).
    """
    while P.n:
        drop = universal_elements(P)
        if not drop:
            break
        keep = P.full_mask
        for i in drop:
            keep &= ~(1 << i)
        P = P.induced(keep)
    return P


def removed_by_simplify(P):
    return P.n - simplify(P).n


def order_ideal_masks(P, caps=None):
    """Bitmasks of all down-sets, sorted by size then by sorted index tuple."""
    check_cap(resolve(caps), "poset_ideals", P.n)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ideal in frontier:
            rest = P.full_mask & ~ideal
            for i in bits(rest):
                # i is minimal in the complement iff everything below it is in the ideal
                if not (P.down[i] & ~ideal):
                    bigger = ideal | (1 << i)
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), tuple(bits(m))))


def order_ideals(P, caps=None):
    """All down-sets of ``P`` as sorted tuples of element indices."""
    return [tuple(bits(m)) for m in order_ideal_masks(P, caps)]


def is_down_set(P, mask):
    return all(not (P.down[i] & ~mask) for i in bits(mask))


class DepthFunction:
    """Values of the depth function on ``P`` plus the two virtual bounds."""

    def __init__(self, poset, values):
        self.poset = poset
        self.values = dict(values)

    def __getitem__(self, key):
        return self.values[key]

    def value(self, key):
        return self.values[key]

    def __repr__(self):
        return f"DepthFunction({self.values!r})"


def depth_function(P):
    """Length of the longest chain from each element of P-hat up to TOP."""
    require_nonempty(P)
    depth = [0] * P.n
    for i in reversed(P.linear_extension()):
        depth[i] = 1 + max((depth[j] for j in P.upper_covers(i)), default=0)
    values = {TOP: 0, BOTTOM: 1 + max(depth)}
    values.update(enumerate(depth))
    return DepthFunction(P, values)


def max_chain(P):
    """A longest chain, lexicographically smallest by element index."""
    require_nonempty(P)
    depth = depth_function(P).values
    longest = max(depth[i] for i in range(P.n))
    cur = min(i for i in range(P.n) if depth[i] == longest)
    chain = [cur]
    while depth[cur] > 1:
        cur = min(j for j in P.upper_covers(cur) if depth[j] == depth[cur] - 1)
        chain.append(cur)
    return chain
