"""Hull computation, convex-set enumeration, and the convex-geometry tests.

Closure-rule convexities (fFree, p4plus) have no interval oracle; their
single expansion step fires precomputed trigger rules instead.  Both
geometry tests scan subsets in ascending bitmask order, so reports are
deterministic for a fixed graph labeling.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError
from .graphs import EXPONENTIAL_GUARD, bit, iter_bits, vertices_of
from .patterns import P4, all_induced_occurrences, iter_induced_embeddings
from .walks import CLOSURE_KINDS, interval_table


@lru_cache(maxsize=1 << 12)
def closure_rules(g, spec):
    """Merged (trigger_mask, added_mask) pairs; x joins S once some trigger
    lies inside S."""
    rules = {}

    def add_rule(trigger, x):
        rules[trigger] = rules.get(trigger, 0) | bit(x)

    if spec.kind == "p4plus":
        seen = set()
        for e in iter_induced_embeddings(g, P4):
            a, b, c, d = e
            if (d, c, b, a) in seen:
                continue
            seen.add((a, b, c, d))
            add_rule(bit(a) | bit(b) | bit(d), c)
            add_rule(bit(a) | bit(c) | bit(d), b)
    else:
        for h in spec.family:
            for occ in all_induced_occurrences(g, h):
                for x in iter_bits(occ):
                    add_rule(occ & ~bit(x), x)
    return tuple(sorted(rules.items()))


def _expander(g, spec):
    """One-step interval/closure operator as a mask -> mask function."""
    if spec.kind in CLOSURE_KINDS:
        rules = closure_rules(g, spec)

        def expand(s):
            out = s
            for trigger, added in rules:
                if trigger & ~s == 0:
                    out |= added
            return out
    else:
        t = interval_table(g, spec)
        n = g.n

        def expand(s):
            out = s
            vs = list(iter_bits(s))
            for i, u in enumerate(vs):
                row = u * n
                for v in vs[i + 1:]:
                    out |= t[row + v]
            return out
    return expand


def expand_once(g, spec, s):
    return _expander(g, spec)(s)


def is_convex(g, spec, s):
    return _expander(g, spec)(s) == s


def hull(g, spec, s):
    """Least fixpoint of the expansion step above s."""
    expand = _expander(g, spec)
    while True:
        t = expand(s)
        if t == s:
            return s
        s = t


def extreme_vertices(g, spec, s):
    """Vertices x of convex s with s minus x still convex; s must be convex."""
    expand = _expander(g, spec)
    if expand(s) != s:
        raise ValueError("extreme_vertices requires a convex set")
    out = 0
    for x in iter_bits(s):
        t = s & ~bit(x)
        if expand(t) == t:
            out |= bit(x)
    return out


def _check_guard(g):
    if g.n > EXPONENTIAL_GUARD:
        raise CapacityError(
            f"subset scan over {g.n} vertices exceeds the n <= {EXPONENTIAL_GUARD} guard")


def all_convex_sets(g, spec):
    """All fixpoints of the expansion step, ascending by bitmask."""
    _check_guard(g)
    expand = _expander(g, spec)
    return [s for s in range(1 << g.n) if expand(s) == s]


@dataclass(frozen=True)
class GeometryReport:
    """Outcome of a convex-geometry test with witness data on failure."""

    verdict: bool
    mode: str
    violating_set: int | None = None
    extremes: int | None = None
    hull_of_extremes: int | None = None
    antiexchange_witness: tuple | None = None

    def to_dict(self, labels=None):
        def names(mask):
            if mask is None:
                return None
            if labels is None:
                return list(vertices_of(mask))
            return [labels[v] for v in iter_bits(mask)]

        witness = None
        if self.antiexchange_witness is not None:
            s, x, y = self.antiexchange_witness
            witness = {"set": names(s),
                       "x": labels[x] if labels else x,
                       "y": labels[y] if labels else y}
        return {"verdict": self.verdict,
                "mode": self.mode,
                "violating_set": names(self.violating_set),
                "extremes": names(self.extremes),
                "hull_of_extremes": names(self.hull_of_extremes),
                "antiexchange_witness": witness}


def is_convex_geometry_mkm(g, spec):
    """Every convex set must equal the hull of its extreme vertices; reports
    the first (ascending mask order) violating convex set otherwise."""
    _check_guard(g)
    expand = _expander(g, spec)
    for s in range(1 << g.n):
        if expand(s) != s:
            continue
        ext = 0
        for x in iter_bits(s):
            t = s & ~bit(x)
            if expand(t) == t:
                ext |= bit(x)
        h = ext
        while True:
            t = expand(h)
            if t == h:
                break
            h = t
        if h != s:
            return GeometryReport(False, "mkm", violating_set=s,
                                  extremes=ext, hull_of_extremes=h)
    return GeometryReport(True, "mkm")


def satisfies_antiexchange(g, spec):
    """For convex S and distinct x,y outside S, x in H(S+y) and y in H(S+x)
    must not both hold; reports the first witness otherwise."""
    _check_guard(g)
    expand = _expander(g, spec)
    hulls = {}

    def hull_of(s):
        h = hulls.get(s)
        if h is None:
            h = s
            while True:
                t = expand(h)
                if t == h:
                    break
                h = t
            hulls[s] = h
        return h

    full = g.vertex_set()
    for s in range(1 << g.n):
        if expand(s) != s:
            continue
        outside = list(iter_bits(full & ~s))
        for i, x in enumerate(outside):
            bx = bit(x)
            for y in outside[i + 1:]:
                by = bit(y)
                if hull_of(s | by) & bx and hull_of(s | bx) & by:
                    return GeometryReport(False, "antiexchange",
                                          antiexchange_witness=(s, x, y))
    return GeometryReport(True, "antiexchange")
