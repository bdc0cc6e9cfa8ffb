"""Named pattern graphs and induced-subgraph search.

Fixed labelings, used throughout recognizers and closure rules:

  gem     a=0, b=1, c=2, d=3 path; e=4 adjacent to all of a,b,c,d
  house   a=0..e=4; edges ab, bc, cd, ad, ae, be (4-cycle abcd plus roof e)
  domino  a=0..f=5; edges ab, bc, cd, ad, ce, ef, df (two squares sharing cd)
  A       domino minus the edge ef
  claw    K_{1,3}: center a=0, leaves b=1, c=2, d=3
"""

from functools import lru_cache

from .canon import canonical_form
from .graphs import Graph, bit, iter_bits


def path_graph(k):
    return Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k):
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k):
    return Graph.from_edge_list(k, [(i, j) for i in range(k) for j in range(i)])


def complete_bipartite(a, b):
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(m):
    """K_{1,m}: center 0, leaves 1..m."""
    return Graph.from_edge_list(m + 1, [(0, i) for i in range(1, m + 1)])


GEM = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
HOUSE = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)])
DOMINO = Graph.from_edge_list(6, [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (4, 5), (3, 5)])
A_GRAPH = Graph.from_edge_list(6, [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 5)])
CLAW = star_graph(3)
P4 = path_graph(4)
K3 = complete_graph(3)


def _check_pattern_library():
    checks = [
        (GEM, 7, [2, 2, 3, 3, 4]),
        (HOUSE, 6, [2, 2, 2, 3, 3]),
        (DOMINO, 7, [2, 2, 2, 2, 3, 3]),
        (A_GRAPH, 6, [1, 1, 2, 2, 3, 3]),
        (CLAW, 3, [1, 1, 1, 3]),
        (P4, 3, [1, 1, 2, 2]),
        (K3, 3, [2, 2, 2]),
    ]
    for g, m, degs in checks:
        assert g.edge_count() == m, f"pattern edge count drifted: {g!r}"
        assert sorted(g.degree(v) for v in range(g.n)) == degs, f"pattern degrees drifted: {g!r}"
    assert GEM.adj[4] == 0b01111           # e universal over the path
    assert HOUSE.adj[4] == 0b00011         # roof on a,b
    assert DOMINO.has_edge(4, 5) and not A_GRAPH.has_edge(4, 5)


_check_pattern_library()


def n_gem_graph(n):
    """Induced path x0..xn (vertices 0..n) plus universal apex n+1; needs n >= 4."""
    edges = [(i, i + 1) for i in range(n)]
    edges += [(i, n + 1) for i in range(n + 1)]
    return Graph.from_edge_list(n + 2, edges)


def odd_cycle_family(max_n):
    return [cycle_graph(k) for k in range(3, max_n + 1, 2)]


@lru_cache(maxsize=None)
def kuratowski_family(max_n):
    """All subdivisions of K5 and K3,3 with at most max_n vertices, up to iso."""
    seeds = [complete_graph(5), complete_bipartite(3, 3)]
    seen = {}
    frontier = []
    for s in seeds:
        if s.n <= max_n:
            seen[canonical_form(s)] = s
            frontier.append(s)
    while frontier:
        nxt = []
        for g in frontier:
            if g.n + 1 > max_n:
                continue
            for u, v in g.edges():
                h = _subdivide(g, u, v)
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
                    nxt.append(h)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda g: (g.n, canonical_form(g))))


def _subdivide(g, u, v):
    adj = list(g.adj)
    adj[u] &= ~bit(v)
    adj[v] &= ~bit(u)
    w = g.n
    adj[u] |= bit(w)
    adj[v] |= bit(w)
    adj.append(bit(u) | bit(v))
    return Graph(g.n + 1, adj)


def _embedding_order(p):
    # keep each next pattern vertex attached to the placed prefix when possible
    if p.n == 0:
        return []
    start = max(range(p.n), key=lambda v: (p.degree(v), -v))
    order = [start]
    placed = bit(start)
    while len(order) < p.n:
        best = None
        for v in range(p.n):
            if placed & bit(v):
                continue
            score = (p.adj[v] & placed).bit_count()
            if best is None or score > best[0]:
                best = (score, v)
        order.append(best[1])
        placed |= bit(best[1])
    return order


def contains_induced(g, p):
    """First induced embedding of p into g as a tuple e with e[i] hosting pattern
    vertex i, or None.  Adjacency and non-adjacency both must match exactly."""
    for found in iter_induced_embeddings(g, p):
        return found
    return None


def all_induced_occurrences(g, p):
    """All vertex bitmasks of g inducing a copy of p, in ascending mask order."""
    masks = set()
    for emb in iter_induced_embeddings(g, p):
        m = 0
        for v in emb:
            m |= bit(v)
        masks.add(m)
    return sorted(masks)


def iter_induced_embeddings(g, p):
    if p.n > g.n:
        return
    if p.n == 0:
        yield ()
        return
    order = _embedding_order(p)
    degs = [p.degree(v) for v in range(p.n)]
    image = [None] * p.n

    def extend(pos, used):
        if pos == p.n:
            yield tuple(image)
            return
        q = order[pos]
        want = p.adj[q]
        req_adj = 0
        req_non = 0
        for j in range(pos):
            m = image[order[j]]
            if want & bit(order[j]):
                req_adj |= bit(m)
            else:
                req_non |= bit(m)
        for w in range(g.n):
            bw = bit(w)
            if used & bw:
                continue
            aw = g.adj[w]
            if aw & req_adj != req_adj or aw & req_non:
                continue
            if aw.bit_count() < degs[q]:
                continue
            image[q] = w
            yield from extend(pos + 1, used | bw)
            image[q] = None

    yield from extend(0, 0)
