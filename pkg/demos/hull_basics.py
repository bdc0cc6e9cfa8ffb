"""Intervals, hulls and extreme vertices on the two bundled fixtures."""
from convexgeom.engine import extreme_vertices, hull
from convexgeom.fixtures import GEM_FIXTURE, SEVEN_FIXTURE
from convexgeom.graphs import bit, iter_bits, mask_of
from convexgeom.walks import geodetic, interval, lk, monophonic

GEM_LABELS = "abcde"


def names(mask, labels):
    return "{" + ",".join(labels[v] for v in iter_bits(mask)) + "}"


g = GEM_FIXTURE
print("gem: path a-b-c-d plus apex e adjacent to everything")
print("geodetic I(a,d)      =", names(interval(g, geodetic(), 0, 3), GEM_LABELS))
print("monophonic I(a,d)    =", names(interval(g, monophonic(), 0, 3), GEM_LABELS))

# the single shortcut through the apex keeps b and c out of the geodetic hull
tips = mask_of([0, 3])
print("geodetic hull({a,d}) =", names(hull(g, geodetic(), tips), GEM_LABELS))
print("monophonic hull({a,d}) =", names(hull(g, monophonic(), tips), GEM_LABELS))
print("geodetic ext(V)      =", names(extreme_vertices(g, geodetic(), g.vertex_set()), GEM_LABELS))
print()

f = SEVEN_FIXTURE
labels = [str(i + 1) for i in range(7)]
print("seven-vertex fixture, induced paths of length <= 3")
spec = lk(3)
for u, v in [(0, 6), (1, 4), (2, 5)]:
    print(f"I({labels[u]},{labels[v]}) =", names(interval(f, spec, u, v), labels))
seed = bit(0) | bit(6)
print("hull({1,7}) =", names(hull(f, spec, seed), labels))
print("ext(V)      =", names(extreme_vertices(f, spec, f.vertex_set()), labels))
