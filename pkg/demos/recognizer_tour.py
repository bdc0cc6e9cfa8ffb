"""Vertex types and graph-class recognizers on a few named graphs."""
from convexgeom.graphs import Graph, iter_bits
from convexgeom.patterns import CLAW, GEM, HOUSE, n_gem_graph
from convexgeom.recognizers import (end_simplicial_vertices, is_chordal,
                                    is_gem_solved, is_interval,
                                    is_proper_interval, is_ptolemaic,
                                    is_strongly_chordal, n_gems,
                                    semisimplicial_vertices, simple_vertices,
                                    simplicial_vertices)

C5 = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
SUN3 = Graph.from_edge_list(6, [(0, 1), (1, 2), (2, 0),
                                (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)])

named = [("gem", GEM), ("house", HOUSE), ("claw", CLAW), ("C5", C5), ("3-sun", SUN3)]

print("vertex types (listed as bit indices):")
for name, g in named:
    rows = (sorted(iter_bits(simplicial_vertices(g))),
            sorted(iter_bits(simple_vertices(g))),
            sorted(iter_bits(semisimplicial_vertices(g))))
    print(f"  {name:6} simplicial={rows[0]} simple={rows[1]} semisimplicial={rows[2]}")

print()
print("class membership:")
for name, g in named:
    flags = []
    for label, check in (("chordal", is_chordal), ("strongly chordal", is_strongly_chordal),
                         ("ptolemaic", is_ptolemaic), ("interval", is_interval),
                         ("proper interval", is_proper_interval)):
        if check(g):
            flags.append(label)
    print(f"  {name:6} {', '.join(flags) or '(none of the tracked classes)'}")

# the 3-sun is chordal but not strongly chordal: its even 6-cycle has no odd chord
print()
print("3-sun: chordal", is_chordal(SUN3), "/ strongly chordal", is_strongly_chordal(SUN3))

# interval graphs: end vertices are the candidates for extremal intervals
print("claw end-simplicial vertices:", sorted(iter_bits(end_simplicial_vertices(CLAW))))

# an n-gem is a long path under a universal apex; a second path can solve it
four_gem = n_gem_graph(4)
print()
for g, tag in ((four_gem, "4-gem"),
               (four_gem.with_new_vertex((1 << 0) | (1 << 3)), "4-gem + resolver")):
    for path, apex in n_gems(g):
        print(f"{tag}: path={path} apex={apex} solved={is_gem_solved(g, path, apex)}")
