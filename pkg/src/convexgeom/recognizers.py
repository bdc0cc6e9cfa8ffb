"""Graph-class recognition, independent of the convexity engine.

Each class check works from first principles (elimination orderings, pattern
search, reachability), so the verification harness can use these verdicts as
the opposite side of each characterization without circularity.
"""

from itertools import combinations

from .errors import CapacityError
from .graphs import bit, component_of, components, diameter, iter_bits
from .patterns import (A_GRAPH, CLAW, DOMINO, GEM, HOUSE, P4, contains_induced,
                       cycle_graph)

# --- local vertex types -------------------------------------------------------


def _is_simplicial_in(g, sub, v):
    nbrs = g.adj[v] & sub
    for u in iter_bits(nbrs):
        if nbrs & ~g.adj[u] & ~bit(u):
            return False
    return True


def _is_simple_in(g, sub, v):
    # closed neighborhoods (within sub) of v's neighbors must form a chain;
    # sorting by size reduces pairwise comparability to consecutive containment
    rows = sorted(((g.adj[u] | bit(u)) & sub for u in iter_bits(g.adj[v] & sub)),
                  key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(rows, rows[1:]))


def _is_semisimplicial_in(g, sub, v):
    # internal vertex of an induced P4 means a pattern a-v-b-c with
    # a,b in N(v) nonadjacent and c extending past b away from both
    nbrs = g.adj[v] & sub
    for a in iter_bits(nbrs):
        for b in iter_bits(nbrs & ~g.adj[a] & ~bit(a)):
            tail = g.adj[b] & sub & ~g.adj[v] & ~g.adj[a] & ~bit(v) & ~bit(a)
            if tail:
                return False
    return True


def simplicial_vertices(g, sub=None):
    sub = g.vertex_set() if sub is None else sub
    return _collect(g, sub, _is_simplicial_in)


def simple_vertices(g, sub=None):
    sub = g.vertex_set() if sub is None else sub
    return _collect(g, sub, _is_simple_in)


def semisimplicial_vertices(g, sub=None):
    sub = g.vertex_set() if sub is None else sub
    return _collect(g, sub, _is_semisimplicial_in)


def _collect(g, sub, pred):
    out = 0
    for v in iter_bits(sub):
        if pred(g, sub, v):
            out |= bit(v)
    return out


# --- chordality family --------------------------------------------------------


def is_chordal(g):
    """Greedy simplicial elimination; sound because chordality is hereditary
    and removing a simplicial vertex preserves it."""
    sub = g.vertex_set()
    while sub:
        for v in iter_bits(sub):
            if _is_simplicial_in(g, sub, v):
                sub &= ~bit(v)
                break
        else:
            return False
    return True


def is_ptolemaic(g):
    return is_chordal(g) and contains_induced(g, GEM) is None


def _iter_cycles(g, min_len):
    """All simple cycles with >= min_len vertices as tuples, each exactly once
    (rooted at the minimum vertex, direction fixed by second < last)."""
    n = g.n
    adj = g.adj
    for root in range(n):
        higher = g.vertex_set() & ~((1 << (root + 1)) - 1)
        path = [root]

        def extend(last, used):
            for w in iter_bits(adj[last] & higher & ~used):
                path.append(w)
                if len(path) >= 3 and adj[w] & bit(root) and path[1] < w:
                    if len(path) >= min_len:
                        yield tuple(path)
                yield from extend(w, used | bit(w))
                path.pop()

        yield from extend(root, bit(root))


def _has_odd_chord(g, cycle):
    length = len(cycle)
    for i in range(length):
        for j in range(i + 2, length):
            d = j - i
            if d == length - 1:
                continue  # cycle edge, not a chord
            if g.has_edge(cycle[i], cycle[j]) and d % 2 == 1:
                return True
    return False


def is_strongly_chordal(g):
    """Definitional check: chordal and every even cycle with >= 6 vertices
    carries an odd chord (positions have equal parity along both arcs)."""
    if not is_chordal(g):
        return False
    for cycle in _iter_cycles(g, 6):
        if len(cycle) % 2 == 0 and not _has_odd_chord(g, cycle):
            return False
    return True


def strongly_chordal_farber(g):
    """Cross-check criterion: every induced subgraph contains a simple vertex."""
    for sub in range(1, 1 << g.n):
        ok = False
        for v in iter_bits(sub):
            if _is_simple_in(g, sub, v):
                ok = True
                break
        if not ok:
            return False
    return True


def is_weakly_polarizable(g):
    """No hole (induced cycle >= 5), house, domino, or A."""
    forbidden = [cycle_graph(k) for k in range(5, g.n + 1)]
    forbidden += [HOUSE, DOMINO, A_GRAPH]
    return free_of_family(g, forbidden)


def find_asteroidal_triple(g):
    """Triple (a,b,c) with each pair connected outside the closed neighborhood
    of the third, or None."""
    n = g.n
    full = g.vertex_set()
    # reach[c][v] = component mask of v in G - N[c]
    reach = []
    for c in range(n):
        allowed = full & ~(g.adj[c] | bit(c))
        comp_id = {}
        for m in iter_bits(allowed):
            if m not in comp_id:
                comp = component_of(g, m, allowed)
                for w in iter_bits(comp):
                    comp_id[w] = comp
        reach.append(comp_id)

    def linked(x, y, z):
        comp = reach[z].get(x)
        return comp is not None and comp & bit(y)

    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if linked(a, b, c) and linked(a, c, b) and linked(b, c, a):
                    return (a, b, c)
    return None


def is_interval(g):
    return is_chordal(g) and find_asteroidal_triple(g) is None


def is_proper_interval(g):
    return is_interval(g) and contains_induced(g, CLAW) is None


def is_cograph(g):
    return contains_induced(g, P4) is None


def is_chordal_cograph(g):
    return is_chordal(g) and is_cograph(g)


# --- sparse classes -----------------------------------------------------------


def is_forest(g):
    return g.edge_count() == g.n - len(components(g))


def is_forest_of_stars(g):
    """Every component is K_{1,m} for some m >= 0."""
    if not is_forest(g):
        return False
    for comp in components(g):
        centers = sum(1 for v in iter_bits(comp) if g.degree(v) >= 2)
        if centers > 1:
            return False
    return True


def is_bipartite(g):
    color = {}
    for comp in components(g):
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in iter_bits(g.adj[v]):
                if w not in color:
                    color[w] = color[v] ^ 1
                    frontier.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def diam_at_most(g, k):
    return diameter(g) <= k


# --- planarity at desk scale --------------------------------------------------


def _has_topological_subgraph(g, branch_sets, pattern_edges):
    """Is some subdivision of the pattern a subgraph of g?  branch_sets lists
    candidate images per pattern vertex; pattern_edges connect pattern slots."""
    n = g.n

    def place(edges, used, images):
        if not edges:
            return True
        (pu, pv), rest = edges[0], edges[1:]
        x, y = images[pu], images[pv]

        # paths from x to y whose interior avoids used vertices
        def paths(last, interior_used):
            if g.adj[last] & bit(y):
                yield interior_used
            free = g.adj[last] & ~used & ~interior_used & ~bit(y)
            for w in iter_bits(free):
                yield from paths(w, interior_used | bit(w))

        for interior in paths(x, 0):
            if place(rest, used | interior, images):
                return True
        return False

    def assign(slot, used, images):
        if slot == len(branch_sets):
            return place(pattern_edges, used, images)
        for v in branch_sets[slot]:
            bv = bit(v)
            if used & bv:
                continue
            images.append(v)
            if assign(slot + 1, used | bv, images):
                return True
            images.pop()
        return False

    return assign(0, 0, [])


def _k5_subdivision_present(g):
    cands = [v for v in range(g.n) if g.degree(v) >= 4]
    if len(cands) < 5:
        return False
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    for chosen in combinations(cands, 5):
        if _has_topological_subgraph(g, [[v] for v in chosen], edges):
            return True
    return False


def _k33_subdivision_present(g):
    cands = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(cands) < 6:
        return False
    edges = [(i, 3 + j) for i in range(3) for j in range(3)]
    for chosen in combinations(cands, 6):
        rest = list(chosen[1:])
        # the first chosen vertex anchors side one; sides are interchangeable
        for side_rest in combinations(rest, 2):
            side1 = [chosen[0], *side_rest]
            side2 = [v for v in rest if v not in side_rest]
            slots = [[v] for v in side1] + [[v] for v in side2]
            if _has_topological_subgraph(g, slots, edges):
                return True
    return False


def is_planar_desk(g):
    """No subgraph is a subdivision of K5 or K3,3."""
    return not (_k5_subdivision_present(g) or _k33_subdivision_present(g))


# --- maximal cliques and interval-model structure ------------------------------


def maximal_cliques(g):
    """All maximal cliques as bitmasks, ascending."""
    out = []

    def bron_kerbosch(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda v: (g.adj[v] & p).bit_count())
        for v in iter_bits(p & ~g.adj[pivot]):
            bv = bit(v)
            bron_kerbosch(r | bv, p & g.adj[v], x & g.adj[v])
            p &= ~bv
            x |= bv

    if g.n:
        bron_kerbosch(0, g.vertex_set(), 0)
    return sorted(out)


def consecutive_orderings(g, max_cliques=12):
    """Yield every linear order of the maximal cliques in which each vertex's
    cliques sit consecutively.  Empty when no such order exists."""
    cliques = maximal_cliques(g)
    k = len(cliques)
    if k > max_cliques:
        raise CapacityError(f"{k} maximal cliques exceed the ordering guard {max_cliques}")
    if k == 0:
        yield ()
        return
    order = []

    def extend(placed_mask, seen, last):
        if placed_mask == (1 << k) - 1:
            yield tuple(order)
            return
        closed = seen & ~last
        for i in range(k):
            if placed_mask & (1 << i):
                continue
            c = cliques[i]
            if c & closed:
                continue  # some vertex would restart after being closed
            order.append(c)
            yield from extend(placed_mask | (1 << i), seen | c, c)
            order.pop()

    yield from extend(0, 0, 0)


def end_simplicial_vertices(g, max_cliques=12):
    """Simplicial vertices whose unique maximal clique can open some
    consecutive clique ordering (realizable with an end interval)."""
    if not is_interval(g):
        raise ValueError("end_simplicial_vertices requires an interval graph")
    cliques = maximal_cliques(g)
    k = len(cliques)
    if k > max_cliques:
        raise CapacityError(f"{k} maximal cliques exceed the ordering guard {max_cliques}")
    simp = simplicial_vertices(g)
    full_placed = (1 << k) - 1
    dead = set()

    def completes(placed_mask, seen, last):
        if placed_mask == full_placed:
            return True
        key = (placed_mask, last)
        if key in dead:
            return False
        closed = seen & ~last
        for i in range(k):
            if placed_mask & (1 << i):
                continue
            c = cliques[i]
            if c & closed:
                continue
            if completes(placed_mask | (1 << i), seen | c, c):
                return True
        dead.add(key)
        return False

    out = 0
    for v in iter_bits(simp):
        home = g.adj[v] | bit(v)  # the unique maximal clique of a simplicial v
        idx = cliques.index(home)
        if completes(1 << idx, home, home):
            out |= bit(v)
    return out


# --- n-gems and the l3 characterization ----------------------------------------


def n_gems(g):
    """All induced n-gems (n >= 4): induced paths on >= 5 vertices lying inside
    one vertex's neighborhood, as (path, apex) with path[0] < path[-1]."""
    found = []
    for apex in range(g.n):
        pool = g.adj[apex]
        path = []

        def extend(last, used):
            for w in iter_bits(g.adj[last] & pool & ~used):
                if g.adj[w] & used & ~bit(last):
                    continue  # chord against the path so far
                path.append(w)
                if len(path) >= 5 and path[0] < w:
                    found.append((tuple(path), apex))
                extend(w, used | bit(w))
                path.pop()

        for start in iter_bits(pool):
            path = [start]
            extend(start, bit(start))
    return found


def is_gem_solved(g, path, apex):
    """An induced P4 must join the path's ends while avoiding the apex."""
    x0, xn = path[0], path[-1]
    block = bit(apex)
    for y in iter_bits(g.adj[x0] & ~g.adj[xn] & ~block & ~bit(xn)):
        if g.adj[y] & g.adj[xn] & ~g.adj[x0] & ~block & ~bit(x0):
            return True
    return False


def is_l3_characterization(g):
    if not is_chordal(g) or diameter(g) > 3:
        return False
    return all(is_gem_solved(g, path, apex) for path, apex in n_gems(g))


# --- family-freeness and dispatch ----------------------------------------------


def free_of_family(g, family):
    """True when no family member occurs as an induced subgraph."""
    return all(p.n > g.n or contains_induced(g, p) is None for p in family)


CLASS_KINDS = ("chordal", "ptolemaic", "stronglyChordal", "weaklyPolarizable",
               "interval", "properInterval", "cograph", "chordalCograph",
               "forest", "forestOfStars", "bipartite", "planarDesk",
               "l3Characterization", "diamAtMost")


def recognize(g, kind, k=None):
    table = {"chordal": is_chordal,
             "ptolemaic": is_ptolemaic,
             "stronglyChordal": is_strongly_chordal,
             "weaklyPolarizable": is_weakly_polarizable,
             "interval": is_interval,
             "properInterval": is_proper_interval,
             "cograph": is_cograph,
             "chordalCograph": is_chordal_cograph,
             "forest": is_forest,
             "forestOfStars": is_forest_of_stars,
             "bipartite": is_bipartite,
             "planarDesk": is_planar_desk,
             "l3Characterization": is_l3_characterization}
    if kind == "diamAtMost":
        if k is None:
            raise ValueError("diamAtMost needs k")
        return diam_at_most(g, k)
    if kind not in table:
        raise ValueError(f"unknown class kind {kind!r}")
    return table[kind](g)
