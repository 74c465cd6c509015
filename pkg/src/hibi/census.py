"""Unlabeled poset enumeration and census queries.

Every n-element poset has a maximal element, so all of them arise from the
(n-1)-element classes by adding one new maximal element above some down-set.
Candidates are deduplicated by canonical form.
"""

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .birkhoff import ideal_lattice
from .canon import canonical_form, canonical_labeling
from .config import check_cap, resolve
from .errors import PreconditionViolated
from .invariants import invariant_report
from .poset import Poset, is_simple, max_chain, order_ideal_masks, rank


def _extend(parent):
    n = parent.n + 1
    names = [str(i) for i in range(n)]
    out = {}
    for ideal in order_ideal_masks(parent):
        up = list(parent.up) + [0]
        for i in range(n - 1):
            if ideal >> i & 1:
                up[i] |= 1 << (n - 1)
        Q = Poset._trusted(names, up)
        key, perm = canonical_labeling(Q, cap=n)
        if key not in out:
            out[key] = Q.relabel(perm, labels=names)
    return out


@lru_cache(maxsize=None)
def _enumerate(n, workers):
    if n == 1:
        return (Poset._trusted(["0"], [0]),)
    parents = _enumerate(n - 1, workers)
    found = {}
    if workers > 1 and len(parents) > 64:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_extend, parents, chunksize=32))
    else:
        parts = map(_extend, parents)
    for part in parts:
        for key, Q in part.items():
            found.setdefault(key, Q)
    return tuple(found[k] for k in sorted(found))


def enumerate_posets(n, caps=None, workers=1):
    """One canonical representative per isomorphism class of n-element posets.

    Sorted by canonical key.  ``workers > 1`` spreads the extension step over
    processes; the result does not depend on it.
    """
    if n < 1:
        raise PreconditionViolated("n must be at least 1")
    check_cap(resolve(caps), "census", n)
    return list(_enumerate(n, 1 if workers is None else max(1, workers)))


@dataclass(frozen=True)
class CensusQuery:
    n_min: int = 1
    n_max: int = 6
    simple: bool = False
    pure: bool = False
    reg: int = None
    k_value: int = None
    linear_resolution: bool = False
    gorenstein: bool = False
    extremal_gorenstein: bool = False

    def accepts(self, P, report):
        flags = report.flags
        if self.simple and not flags["simple"]:
            return False
        if self.pure and not flags["pure"]:
            return False
        if self.gorenstein and not flags["gorenstein"]:
            return False
        if self.extremal_gorenstein and not flags["extremal_gorenstein"]:
            return False
        if self.linear_resolution and not flags["linear_resolution"]:
            return False
        if self.reg is not None and (report.ideal_is_zero or report.regularity != self.reg):
            return False
        if self.k_value is not None and report.p_size - report.rank_p != self.k_value:
            return False
        return True


def census(query, caps=None, workers=1):
    """Posets with ``n_min <= n <= n_max`` passing every filter of ``query``.

    Returns ``(poset, report)`` pairs ordered by ``(n, canonical key)``.
    """
    caps = resolve(caps)
    check_cap(caps, "census", query.n_max)
    out = []
    for n in range(max(1, query.n_min), query.n_max + 1):
        for P in enumerate_posets(n, caps, workers):
            # cheap structural filters first; the report needs the lattice
            if query.simple and not is_simple(P):
                continue
            k = P.n - rank(P)
            if query.k_value is not None and k != query.k_value:
                continue
            if query.reg is not None and k != query.reg:
                continue
            report = invariant_report(P, caps=caps)
            if query.accepts(P, report):
                out.append((P, report))
    return out


def census_record(P, report):
    return {"poset": P.to_dict(), "report": report.to_dict()}


def census_jsonl(results):
    return "".join(json.dumps(census_record(P, r)) + "\n" for P, r in results)


# -- reg-3 family templates -------------------------------------------------

def load_figure1_templates():
    text = resources.files("hibi").joinpath("data/figure1.json").read_text()
    return json.loads(text)["families"]


def _template_instance(template, m, params):
    """Build the poset drawn by ``template`` with chain ``c0..cm``; ``None`` if
    a drawn line is not a cover or the drawn chain is not a longest chain."""
    chain = [f"c{i}" for i in range(m + 1)]
    names = chain + list(template["off_chain"])

    def resolve_end(end):
        return f"c{params[end['chain']]}" if isinstance(end, dict) else end

    lines = [(chain[i], chain[i + 1]) for i in range(m)]
    lines += [tuple(r) for r in template["relations"]]
    lines += [(resolve_end(a), resolve_end(b)) for a, b in template["attachments"]]
    P = Poset.from_relations(names, lines)
    covers = {(P.labels[a], P.labels[b]) for a, b in P.covers}
    if not set(lines) <= covers or rank(P) != m:
        return None
    return P


def _parameters(template):
    names = []
    for a, b in template["attachments"]:
        for end in (a, b):
            if isinstance(end, dict) and end["chain"] not in names:
                names.append(end["chain"])
    return names


@lru_cache(maxsize=None)
def figure1_instance_keys(n):
    """``{tag: set of canonical keys}`` of all ``n``-element template instances."""
    m = n - 3
    result = {}
    for template in load_figure1_templates():
        keys = set()
        if m >= 0:
            names = _parameters(template)
            for values in itertools.product(range(m + 1), repeat=len(names)):
                params = dict(zip(names, values))
                if any(params[a] >= params[b] for a, b in template.get("order", [])):
                    continue
                P = _template_instance(template, m, params)
                if P is not None:
                    keys.add(canonical_form(P, cap=n))
        result[template["tag"]] = keys
    return result


def figure1_matches(P):
    """All family tags whose templates produce a poset isomorphic to ``P``."""
    key = canonical_form(P, cap=P.n)
    return [tag for tag, keys in figure1_instance_keys(P.n).items() if key in keys]


def figure1_family(P):
    """Tag of the lowest-numbered matching family, or ``None``."""
    if not P.n or not is_simple(P) or P.n - rank(P) != 3:
        raise PreconditionViolated("figure1_family needs a simple poset with |P| - rank P = 3")
    tags = figure1_matches(P)
    return tags[0] if tags else None


def off_chain_count(P):
    return P.n - len(max_chain(P))


def figure2_lattices(caps=None, workers=1):
    """Down-set lattices of the simple pure posets with |P| - rank P = 3, by size."""
    q = CensusQuery(n_min=1, n_max=8, simple=True, pure=True, k_value=3)
    lattices = [ideal_lattice(P, caps) for P, _ in census(q, caps, workers)]
    return sorted(lattices, key=lambda L: L.m)
