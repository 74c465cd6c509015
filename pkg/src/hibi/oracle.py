"""Brute-force Hilbert series of the Hibi ring.

Nothing here looks at ``rank P``.  The Hilbert function counts weakly
order-reversing maps ``v`` on ``P`` plus the two bounds with
``v(TOP) = 0`` and ``v(BOTTOM) = n``; the canonical module's initial degree
is the least ``v(BOTTOM)`` over strictly order-reversing maps.  Agreement
with the closed formulas in :mod:`hibi.invariants` is therefore a genuine
cross-check.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .config import check_cap, resolve
from .errors import (ArithmeticOverflow, InternalInconsistency, SizeCapExceeded,
                     StabilizationFailure)
from .poset import bits, require_nonempty

INT128_MAX = (1 << 127) - 1


def _checked(x):
    if not -INT128_MAX - 1 <= x <= INT128_MAX:
        raise ArithmeticOverflow(f"intermediate value {x} leaves the signed 128-bit range")
    return x


def _oracle_caps(P, caps, degree=None):
    caps = resolve(caps)
    check_cap(caps, "oracle_poset", P.n)
    if degree is not None and degree > P.n + caps.oracle_slack:
        raise SizeCapExceeded("oracle_slack", P.n + caps.oracle_slack, degree)
    return caps


def _sweep_plan(P):
    """Elements top-down, and after each step the elements still needed.

    An element stays "active" while some element below it is unplaced,
    because that element's lower bound depends on it.
    """
    order = list(reversed(P.linear_extension()))
    lower_cover_sets = [set(P.lower_covers(i)) for i in range(P.n)]
    upper = [P.upper_covers(i) for i in range(P.n)]
    placed = set()
    active = []
    plan = []
    for x in order:
        placed.add(x)
        new_active = [a for a in active + [x] if not lower_cover_sets[a] <= placed]
        plan.append((x, [active.index(u) for u in upper[x]], active, new_active))
        active = new_active
    return plan


def hilbert_function(P, n, caps=None):
    """Number of order-reversing maps ``P -> {0..n}`` (the degree ``n`` part of K[L])."""
    _oracle_caps(P, caps, n)
    if n < 0:
        return 0
    states = {(): 1}
    for x, upper_slots, before, after in _sweep_plan(P):
        keep = [i for i, a in enumerate(before) if a in after]
        x_kept = x in after
        nxt = {}
        for vals, count in states.items():
            lo = max((vals[s] for s in upper_slots), default=0)
            base = tuple(vals[i] for i in keep)
            for v in range(lo, n + 1):
                key = base + (v,) if x_kept else base
                nxt[key] = _checked(nxt.get(key, 0) + count)
        states = nxt
    return _checked(sum(states.values()))


def strict_map_exists(P, top_value):
    """Is there ``v`` on P with values in ``1..top_value-1``, strictly order-reversing?

    Exhaustive depth-first search over a top-down sweep.
    """
    order = list(reversed(P.linear_extension()))
    upper = [P.upper_covers(i) for i in range(P.n)]
    vals = [0] * P.n

    def place(k):
        if k == len(order):
            return True
        x = order[k]
        lo = 1 + max((vals[u] for u in upper[x]), default=0)
        for v in range(lo, top_value):
            vals[x] = v
            if place(k + 1):
                return True
        return False

    return place(0)


def canonical_min_degree(P, caps=None):
    """Least ``v(BOTTOM)`` over strictly order-reversing ``v`` with ``v(TOP) = 0``."""
    require_nonempty(P)
    _oracle_caps(P, caps)
    # a chain of P-hat has at most |P| + 2 elements, so |P| + 1 always works
    for m in range(P.n + 2):
        if strict_map_exists(P, m):
            return m
    raise InternalInconsistency("no strictly order-reversing map found")


@dataclass(frozen=True)
class HilbertSummary:
    hf: tuple
    d: int
    h_coeffs: tuple
    q_degree: int
    a_invariant_oracle: int
    reg_oracle: int
    canonical_min_degree: int
    symmetric: bool

    def to_dict(self):
        return {
            "hf": list(self.hf),
            "h": list(self.h_coeffs),
            "deg_q": self.q_degree,
            "a": self.a_invariant_oracle,
            "reg_oracle": self.reg_oracle,
            "canonical_min_degree": self.canonical_min_degree,
            "symmetric": self.symmetric,
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    def q_string(self):
        terms = []
        for i, c in enumerate(self.h_coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms)


def h_numerator(hf, d, length):
    """Coefficients of ``(1 - t)^d * sum(hf[k] t^k)`` up to ``t^(length-1)``."""
    out = []
    for k in range(length):
        q = 0
        for j in range(min(k, d) + 1):
            q = _checked(q + _checked((-1) ** j * comb(d, j) * hf[k - j]))
        out.append(q)
    return out


def h_polynomial(P, caps=None):
    require_nonempty(P)
    _oracle_caps(P, caps)
    d = P.n + 1
    length = P.n + 4
    hf = [hilbert_function(P, k, caps) for k in range(length)]
    q = h_numerator(hf, d, length)
    # deg Q <= |P|; the slots past it must vanish
    if any(q[k] for k in range(P.n + 1, length)):
        raise StabilizationFailure(f"h-vector does not terminate: {q}")
    deg = max(k for k in range(length) if q[k])
    h = q[:deg + 1]
    if h[0] != 1 or any(c < 0 for c in h):
        raise InternalInconsistency(f"h-vector {h} is not a Cohen-Macaulay h-vector")
    return HilbertSummary(
        hf=tuple(hf),
        d=d,
        h_coeffs=tuple(h),
        q_degree=deg,
        a_invariant_oracle=deg - d,
        reg_oracle=deg + 1,
        canonical_min_degree=canonical_min_degree(P, caps),
        symmetric=h == h[::-1],
    )


def interpolate(xs, ys):
    """Monomial coefficients (lowest first) of the interpolating polynomial.

    Newton divided differences over :class:`fractions.Fraction`; trailing
    zero coefficients are stripped.
    """
    xs = [Fraction(x) for x in xs]
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    # Horner expansion of the Newton form
    for k in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + poly[:-1]
        poly = [shifted[i] - xs[k] * poly[i] for i in range(n)]
        poly[0] += coef[k]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def dim_oracle(P, caps=None):
    """Degree of the Hilbert polynomial plus one."""
    require_nonempty(P)
    _oracle_caps(P, caps)
    xs = range(P.n + 3)
    poly = interpolate(xs, [hilbert_function(P, k, caps) for k in xs])
    return len(poly)


def gorenstein_oracle(P, caps=None):
    return h_polynomial(P, caps).symmetric


def strict_maps_at_degree(P, top_value):
    """All strictly order-reversing maps with ``v(BOTTOM) = top_value`` (small P only)."""
    order = list(reversed(P.linear_extension()))
    upper = [P.upper_covers(i) for i in range(P.n)]
    vals = [0] * P.n
    out = []

    def place(k):
        if k == len(order):
            out.append(tuple(vals))
            return
        x = order[k]
        lo = 1 + max((vals[u] for u in upper[x]), default=0)
        for v in range(lo, top_value):
            vals[x] = v
            place(k + 1)

    place(0)
    return out


def is_strictly_order_reversing(P, values, bottom, top=0):
    if top != 0:
        return False
    for i in range(P.n):
        if not top < values[i] < bottom:
            return False
        for j in bits(P.up[i]):
            if not values[j] < values[i]:
                return False
    return True
