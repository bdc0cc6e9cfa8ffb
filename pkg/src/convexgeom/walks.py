"""Per-convexity interval oracles.

Every path convexity gets I(u,v) = endpoints plus the union of qualifying
p-walk vertex sets.  The toll and weakly toll intervals are computed by
polynomial component-reachability decisions rather than walk search; the
bounded walk oracle at the bottom exists purely to validate those decisions
and is kept algorithmically independent of them.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import UnsupportedOracleError
from .graphs import Graph, bit, component_of, distances_from, iter_bits
from .paths import path_interval_rows

INTERVAL_KINDS = frozenset(
    {"geodetic", "monophonic", "m3", "lk", "strong", "toll",
     "weaklyToll", "trianglePath", "p3"})
CLOSURE_KINDS = frozenset({"fFree", "p4plus"})
ALL_KINDS = INTERVAL_KINDS | CLOSURE_KINDS


@dataclass(frozen=True)
class ConvexitySpec:
    kind: str
    k: int | None = None
    family: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise ValueError(f"unknown convexity kind {self.kind!r}")
        if self.kind == "lk":
            if self.k is None or self.k < 1:
                raise ValueError("lk convexity requires k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind} takes no k parameter")
        if self.kind == "fFree":
            if not self.family:
                raise ValueError("fFree requires a nonempty pattern family")
            for h in self.family:
                if not isinstance(h, Graph) or h.n < 2:
                    raise ValueError("fFree family members must be graphs on >= 2 vertices")
        elif self.family:
            raise ValueError(f"{self.kind} takes no pattern family")

    @property
    def name(self):
        if self.kind == "lk":
            return f"l{self.k}"
        return self.kind

    def has_interval_oracle(self):
        return self.kind in INTERVAL_KINDS


def geodetic():
    return ConvexitySpec("geodetic")


def monophonic():
    return ConvexitySpec("monophonic")


def m3():
    return ConvexitySpec("m3")


def lk(k):
    return ConvexitySpec("lk", k=k)


def strong():
    return ConvexitySpec("strong")


def toll():
    return ConvexitySpec("toll")


def weakly_toll():
    return ConvexitySpec("weaklyToll")


def triangle_path():
    return ConvexitySpec("trianglePath")


def p3():
    return ConvexitySpec("p3")


def f_free(family):
    return ConvexitySpec("fFree", family=tuple(family))


def p4plus():
    return ConvexitySpec("p4plus")


_PATH_MODE = {"monophonic": ("induced", 0, None),
              "m3": ("induced", 3, None),
              "strong": ("strong", 0, None),
              "trianglePath": ("triangle", 0, None)}


@lru_cache(maxsize=1 << 14)
def interval_table(g, spec):
    """Flat n*n tuple of interval masks for every ordered vertex pair."""
    if not spec.has_interval_oracle():
        raise UnsupportedOracleError(
            f"{spec.kind} is a closure-rule convexity with no interval oracle")
    n = g.n
    t = [0] * (n * n)
    for u in range(n):
        t[u * n + u] = bit(u)
        for v in range(u + 1, n):
            t[u * n + v] = t[v * n + u] = bit(u) | bit(v)
    kind = spec.kind
    if kind == "p3":
        for u in range(n):
            for v in range(u + 1, n):
                m = bit(u) | bit(v) | (g.adj[u] & g.adj[v])
                t[u * n + v] = t[v * n + u] = m
    elif kind == "geodetic":
        dist = [distances_from(g, u) for u in range(n)]
        for u in range(n):
            du = dist[u]
            for v in range(u + 1, n):
                dv = dist[v]
                duv = du[v]
                if duv == float("inf"):
                    continue
                m = 0
                for x in range(n):
                    if du[x] + dv[x] == duv:
                        m |= bit(x)
                t[u * n + v] = t[v * n + u] = m | bit(u) | bit(v)
    elif kind in _PATH_MODE or kind == "lk":
        if kind == "lk":
            mode, min_len, max_len = "induced", 0, spec.k
        else:
            mode, min_len, max_len = _PATH_MODE[kind]
        for u in range(n):
            rows = path_interval_rows(g, u, mode, min_len=min_len, max_len=max_len)
            for v in range(u + 1, n):
                if rows[v]:
                    t[u * n + v] |= rows[v]
                    t[v * n + u] = t[u * n + v]
    elif kind == "toll":
        for u in range(n):
            for v in range(u + 1, n):
                m = _toll_pair(g, u, v)
                t[u * n + v] = t[v * n + u] = m
    elif kind == "weaklyToll":
        for u in range(n):
            for v in range(u + 1, n):
                m = _weakly_toll_pair(g, u, v)
                t[u * n + v] = t[v * n + u] = m
    return tuple(t)


def interval(g, spec, u, v):
    """I(u,v) as a bitmask; always contains the endpoints, I(u,u) = {u}."""
    if not 0 <= u < g.n or not 0 <= v < g.n:
        raise ValueError(f"vertex pair ({u},{v}) out of range")
    return interval_table(g, spec)[u * g.n + v]

def interval_of_set(g, spec, members):
    """I(S): union of pairwise intervals, containing S itself."""
    t = interval_table(g, spec)
    n = g.n
    out = members
    vs = list(iter_bits(members))
    for i, u in enumerate(vs):
        row = u * n
        for v in vs[i + 1:]:
            out |= t[row + v]
    return out


# --- toll / weakly toll decisions --------------------------------------------
#
# With u,v nonadjacent put A = N(u)\N[v], B = N(v)\N[u], R = everything
# outside N[u] u N[v].  The positional constraints force a tolled walk to be
# u, a, (simple excursion in R), b, v with a in A u (N(u) n N(v) shortcut for
# length 2) appearing exactly once, so membership collapses to component
# reachability questions inside R.  Weakly toll walks may revisit their
# second and second-to-last vertices, which turns the same analysis into
# whole-component absorption.


def _toll_pair(g, u, v):
    if g.adj[u] & bit(v):
        return bit(u) | bit(v)
    au, av = g.adj[u], g.adj[v]
    common = au & av
    a_side = au & ~av & ~bit(v)
    b_side = av & ~au & ~bit(u)
    r = g.vertex_set() & ~(au | av | bit(u) | bit(v))
    res = bit(u) | bit(v) | common
    comps_a = {a: component_of(g, a, r | bit(a)) for a in iter_bits(a_side)}
    comps_b = {b: component_of(g, b, r | bit(b)) for b in iter_bits(b_side)}
    union_a = 0
    for a, ca in comps_a.items():
        union_a |= ca
        for b in iter_bits(b_side):
            if g.adj[b] & ca:
                res |= bit(a)
                break
    union_b = 0
    for b, cb in comps_b.items():
        union_b |= cb
        for a in iter_bits(a_side):
            if g.adj[a] & cb:
                res |= bit(b)
                break
    res |= r & union_a & union_b
    return res


def _weakly_toll_pair(g, u, v):
    if g.adj[u] & bit(v):
        return bit(u) | bit(v)
    au, av = g.adj[u], g.adj[v]
    common = au & av
    a_side = au & ~av & ~bit(v)
    b_side = av & ~au & ~bit(u)
    r = g.vertex_set() & ~(au | av | bit(u) | bit(v))
    res = bit(u) | bit(v)
    for c in iter_bits(common):
        res |= component_of(g, c, r | bit(c))
    for a in iter_bits(a_side):
        for b in iter_bits(b_side):
            comp = component_of(g, a, r | bit(a) | bit(b))
            if comp & bit(b):
                res |= comp
    return res


def toll_membership(g, u, v, x):
    """True iff x lies on some tolled walk from u to v (endpoints included)."""
    return bool(_toll_pair(g, u, v) & bit(x)) if u != v else x == u


def weakly_toll_membership(g, u, v, x):
    """True iff x lies on some weakly toll walk from u to v."""
    return bool(_weakly_toll_pair(g, u, v) & bit(x)) if u != v else x == u


# --- bounded walk oracle ------------------------------------------------------
#
# Validation-only.  Tolled-walk constraints are positional (only index 1 may
# see N(u), only index k-1 may see N(v)), so for each length k a per-position
# reachability sweep is exact.  Weakly toll constraints are identity based
# (every N(u) occurrence equals the one vertex u1), so fixing the pair
# (u1, u_{k-1}) = (a, b) turns the interior into plain reachability inside a
# fixed allowed set, with no dependence on position or length.


def default_walk_bound(g):
    return 2 * g.n + 2


def bounded_walk_hits(g, kind, u, v, max_len=None):
    """Mask of all vertices on some qualifying walk of length <= max_len."""
    if kind == "toll":
        return _toll_walk_hits(g, u, v, max_len or default_walk_bound(g))
    if kind == "weaklyToll":
        return _weakly_toll_walk_hits(g, u, v, max_len or default_walk_bound(g))
    raise ValueError(f"bounded walk oracle supports toll/weaklyToll, not {kind!r}")


def bounded_walk_oracle(g, kind, u, v, x, max_len=None):
    return bool(bounded_walk_hits(g, kind, u, v, max_len) & bit(x))


def _neighbors_of(g, mask):
    out = 0
    for w in iter_bits(mask):
        out |= g.adj[w]
    return out


def _toll_walk_hits(g, u, v, max_len):
    if u == v:
        return bit(u)
    if g.adj[u] & bit(v):
        # u_0 u_k is an edge, so k-1 = 0: the single edge is the only walk
        return bit(u) | bit(v)
    au, av = g.adj[u], g.adj[v]
    not_uv = ~(bit(u) | bit(v))
    hits = 0
    for k in range(2, max_len + 1):
        def allowed(i):
            m = (au if i == 1 else ~au) & (av if i == k - 1 else ~av)
            return m & not_uv & g.vertex_set()
        fwd = [0] * k
        fwd[0] = bit(u)
        alive = True
        for i in range(1, k):
            fwd[i] = _neighbors_of(g, fwd[i - 1]) & allowed(i)
            if not fwd[i]:
                alive = False
                break
        if not alive:
            continue
        bwd = [0] * (k + 1)
        bwd[k] = bit(v)
        for i in range(k - 1, 0, -1):
            bwd[i] = _neighbors_of(g, bwd[i + 1]) & allowed(i)
            if not bwd[i]:
                break
        got = 0
        for i in range(1, k):
            got |= fwd[i] & bwd[i]
        if got:
            hits |= got | bit(u) | bit(v)
    return hits


def _weakly_toll_walk_hits(g, u, v, max_len):
    if u == v:
        return bit(u)
    if g.adj[u] & bit(v):
        # every interior occurrence collapses onto u1 = v and u_{k-1} = u,
        # so walks alternate u,v and contribute nothing new
        return bit(u) | bit(v)
    au, av = g.adj[u], g.adj[v]
    full = g.vertex_set()
    hits = 0
    for a in iter_bits(au):
        ba = bit(a)
        for b in iter_bits(av):
            bb = bit(b)
            if (av & ba and a != b) or (au & bb and a != b):
                continue  # a or b would be a second distinct N-endpoint witness
            allowed = (~au | ba) & (~av | bb) & full
            fwd = [0, ba]
            while len(fwd) <= max_len - 1:
                nxt = _neighbors_of(g, fwd[-1]) & allowed
                if not nxt:
                    break
                fwd.append(nxt)
            bwd = [0, bb]
            while len(bwd) <= max_len - 1:
                nxt = _neighbors_of(g, bwd[-1]) & allowed
                if not nxt:
                    break
                bwd.append(nxt)
            cum_b = [0] * (max_len + 1)
            for d in range(1, max_len + 1):
                cum_b[d] = cum_b[d - 1] | (bwd[d] if d < len(bwd) else 0)
            got = 0
            for i in range(1, len(fwd)):
                if i + 1 > max_len:
                    break
                got |= fwd[i] & cum_b[max_len - i]
            if got:
                hits |= got | bit(u) | bit(v)
    return hits
