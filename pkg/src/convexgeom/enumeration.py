"""Exhaustive enumeration of connected graphs up to isomorphism.

Vertex-augmentation scheme: every connected graph on n vertices arises from
some connected graph on n-1 vertices by attaching a new vertex with a nonempty
neighbor set, so growing all parents and deduplicating by canonical form is
exhaustive.  Counts match the known sequence 1, 1, 2, 6, 21, 112, 853, 11117,
261080 for n = 1..9.
"""

from functools import lru_cache

from .canon import canonical_form, decode_canonical_form
from .errors import CapacityError
from .graphs import Graph

ENUMERATION_LIMIT = 9

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853,
                    8: 11117, 9: 261080}


@lru_cache(maxsize=None)
def _canonical_keys(n):
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)
    keys = set()
    for parent_key in _canonical_keys(n - 1):
        parent = decode_canonical_form(parent_key)
        for nbrs in range(1, 1 << (n - 1)):
            keys.add(canonical_form(parent.with_new_vertex(nbrs)))
    return tuple(sorted(keys))


def connected_graphs(n):
    """All connected graphs on n vertices, one per isomorphism class, in a
    deterministic order (sorted canonical encodings)."""
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise CapacityError(
            f"connected graph enumeration supports 1 <= n <= {ENUMERATION_LIMIT}, got {n}")
    return [decode_canonical_form(key) for key in _canonical_keys(n)]


def connected_graphs_upto(n):
    """Concatenation of connected_graphs(i) for i = 1..n."""
    out = []
    for i in range(1, n + 1):
        out.extend(connected_graphs(i))
    return out
