"""Connected-graph enumeration, canonical forms, and graph6 round-trips."""
from convexgeom.canon import canonical_form, decode_canonical_form
from convexgeom.enumeration import CONNECTED_COUNTS, connected_graphs
from convexgeom.graphs import emit_graph6, parse_graph6

print("connected graphs per order (enumerated vs published):")
for n in range(1, 8):
    got = len(connected_graphs(n))
    print(f"  n={n}: {got} (expected {CONNECTED_COUNTS[n]})")

print()
print("all connected graphs on 4 vertices, graph6 encoded:")
for g in connected_graphs(4):
    back = parse_graph6(emit_graph6(g))
    assert back == g
    degrees = sorted(bin(g.adj[v]).count("1") for v in range(g.n))
    print(f"  {emit_graph6(g):6} degrees={degrees}")

# canonical forms are relabeling invariants: every copy of C5 has one form
from convexgeom.graphs import Graph

g = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
form = canonical_form(g)
print()
print("canonical form bytes:", form.hex())
print("decodes to an isomorphic copy:", canonical_form(decode_canonical_form(form)) == form)
