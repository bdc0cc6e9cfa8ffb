"""Exhaustive machine verification of convexity/class characterizations.

Every registry entry binds a convexity to an independently computed fact: a
graph-class recognizer for theorem entries, or a structural per-graph claim
for lemma entries.  Verification walks all connected graphs up to a size
bound, evaluates both sides, and emits a certificate for each violation.
Certificate files are deterministic (JSONL, sorted by graph6 string) and can
be re-verified from scratch.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from .engine import (GeometryReport, all_convex_sets, extreme_vertices, hull,
                     is_convex_geometry_mkm, satisfies_antiexchange)
from .enumeration import connected_graphs_upto
from .fixtures import SEVEN_FIXTURE, delete_vertex
from .graphs import (bit, emit_graph6, induced_subgraph, iter_bits,
                     parse_graph6, vertices_of)
from .patterns import CLAW, K3, kuratowski_family, odd_cycle_family
from .recognizers import (diam_at_most, end_simplicial_vertices,
                          free_of_family, is_bipartite, is_chordal,
                          is_chordal_cograph, is_cograph, is_forest,
                          is_forest_of_stars, is_interval,
                          is_l3_characterization, is_planar_desk,
                          is_proper_interval, is_ptolemaic,
                          is_strongly_chordal, is_weakly_polarizable,
                          semisimplicial_vertices, simple_vertices,
                          simplicial_vertices)
from .walks import (f_free, geodetic, interval_table, lk, m3, monophonic, p3,
                    p4plus, strong, toll, triangle_path, weakly_toll)

INVERTED_PREFIX = "X-INV-"


@dataclass(frozen=True)
class TheoremEntry:
    ident: str
    direction: str            # "iff" or "onlyIf"
    default_n_max: int
    spec_for: object          # n -> ConvexitySpec or None (None: no closure rules)
    class_check: object       # Graph -> bool
    description: str


@dataclass(frozen=True)
class LemmaEntry:
    ident: str
    default_n_max: int
    domain: object            # Graph -> bool
    check: object             # Graph -> (bool, witness dict or None)
    description: str


@dataclass
class VerifyResult:
    ident: str
    n_max: int
    graphs: int
    geometries: int
    class_members: int
    certificates: list = field(default_factory=list)

    def summary(self):
        return {"theorem": self.ident, "nMax": self.n_max,
                "graphs": self.graphs, "geometries": self.geometries,
                "classMembers": self.class_members,
                "certificates": len(self.certificates)}


# --- theorem registry -----------------------------------------------------------


def _const(spec):
    return lambda n: spec


def _odd_cycle_spec(n):
    family = tuple(odd_cycle_family(n))
    return f_free(family) if family else None


def _kuratowski_spec(n):
    family = kuratowski_family(n)
    return f_free(family) if family else None


def _lk_necessary(k, g):
    return is_chordal(g) and diam_at_most(g, k)


def _build_theorems():
    entries = [
        TheoremEntry("T-MONO", "iff", 8, _const(monophonic()), is_chordal,
                     "induced-path convex geometries are the chordal graphs"),
        TheoremEntry("T-GEO", "iff", 8, _const(geodetic()), is_ptolemaic,
                     "shortest-path convex geometries are the ptolemaic graphs"),
        TheoremEntry("T-STRONG", "iff", 8, _const(strong()), is_strongly_chordal,
                     "even-chorded-path convex geometries are the strongly chordal graphs"),
        TheoremEntry("T-M3", "iff", 8, _const(m3()), is_weakly_polarizable,
                     "long-induced-path convex geometries are the weakly polarizable graphs"),
        TheoremEntry("T-TOLL", "iff", 7, _const(toll()), is_interval,
                     "tolled-walk convex geometries are the interval graphs"),
        TheoremEntry("T-WTOLL", "iff", 7, _const(weakly_toll()), is_proper_interval,
                     "weakly-toll-walk convex geometries are the proper interval graphs"),
        TheoremEntry("T-L2", "iff", 8, _const(lk(2)), is_chordal_cograph,
                     "l2 convex geometries are the chordal cographs"),
        TheoremEntry("T-L3", "iff", 8, _const(lk(3)), is_l3_characterization,
                     "l3 convex geometries are chordal, diameter <= 3, with every "
                     "apex-path configuration solved"),
        TheoremEntry("T-P3", "iff", 8, _const(p3()), is_forest_of_stars,
                     "common-neighbor convex geometries are the star forests"),
        TheoremEntry("T-TRI", "iff", 8, _const(triangle_path()), is_forest,
                     "triangle-path convex geometries are the forests"),
        TheoremEntry("T-FFREE", "iff", 6, _const(f_free((K3, CLAW))),
                     partial(free_of_family, family=(K3, CLAW)),
                     "family-closure convex geometries are the graphs with no "
                     "family member induced (triangle/claw sample family)"),
        TheoremEntry("C-BIP", "iff", 8, _odd_cycle_spec, is_bipartite,
                     "odd-cycle-family convex geometries are the bipartite graphs"),
        TheoremEntry("C-PLANAR", "iff", 6, _kuratowski_spec, is_planar_desk,
                     "subdivision-family convex geometries versus planarity"),
        TheoremEntry("C-P4PLUS", "iff", 8, _const(p4plus()), is_cograph,
                     "four-vertex-path closure geometries are the cographs"),
    ]
    entries += [
        TheoremEntry(f"T-LK-NEC-{k}", "onlyIf", 7, _const(lk(k)),
                     partial(_lk_necessary, k),
                     f"l{k} convex geometries are chordal with diameter <= {k}")
        for k in (2, 3, 4, 5)
    ]
    return {e.ident: e for e in entries}


THEOREMS = _build_theorems()


def resolve_theorem(ident):
    """Look up a theorem entry; the X-INV- prefix negates the class side
    (harness self-test: violations must then appear and re-verify)."""
    if ident.startswith(INVERTED_PREFIX):
        base = resolve_theorem(ident[len(INVERTED_PREFIX):])
        return TheoremEntry(ident, base.direction, base.default_n_max,
                            base.spec_for,
                            lambda g: not base.class_check(g),
                            f"inverted self-test of {base.ident}")
    try:
        return THEOREMS[ident]
    except KeyError:
        raise ValueError(f"unknown theorem id {ident!r}") from None


def _evaluate_theorem(entry, g):
    spec = entry.spec_for(g.n)
    report = GeometryReport(True, "mkm") if spec is None else is_convex_geometry_mkm(g, spec)
    geo = report.verdict
    cls = bool(entry.class_check(g))
    violated = (geo != cls) if entry.direction == "iff" else (geo and not cls)
    cert = None
    if violated:
        cert = {"g6": emit_graph6(g), "theorem": entry.ident,
                "geometry": geo, "class": cls, "witness": report.to_dict()}
    return geo, cls, cert


def _theorem_chunk(ident, g6_chunk):
    entry = resolve_theorem(ident)
    geo_count = cls_count = 0
    certs = []
    for g6 in g6_chunk:
        geo, cls, cert = _evaluate_theorem(entry, parse_graph6(g6))
        geo_count += geo
        cls_count += cls
        if cert is not None:
            certs.append(cert)
    return geo_count, cls_count, certs


def verify_theorem(ident, n_max=None, jobs=1, graphs=None):
    """Check one theorem entry over all connected graphs up to n_max vertices
    (or an explicit graph list) and collect violation certificates."""
    entry = resolve_theorem(ident)
    if graphs is None:
        if n_max is None:
            n_max = entry.default_n_max
        graphs = connected_graphs_upto(n_max)
    else:
        graphs = list(graphs)
        if n_max is None:
            n_max = max((g.n for g in graphs), default=0)
    result = VerifyResult(ident, n_max, len(graphs), 0, 0)
    stream = [emit_graph6(g) for g in graphs]
    if jobs > 1 and len(stream) > 1:
        chunks = [stream[i::jobs] for i in range(jobs) if stream[i::jobs]]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(partial(_theorem_chunk, ident), chunks))
    else:
        parts = [_theorem_chunk(ident, stream)]
    for geo_count, cls_count, certs in parts:
        result.geometries += geo_count
        result.class_members += cls_count
        result.certificates.extend(certs)
    result.certificates.sort(key=lambda c: (c["g6"], c["theorem"]))
    return result


# --- lemma registry ---------------------------------------------------------------


def _names(mask):
    return list(vertices_of(mask))


def _extremes_match(g, spec, target, exact=True):
    """Across every convex set S: extreme vertices equal (or refine, when
    exact=False) the target vertex set computed on G[S]."""
    for s in all_convex_sets(g, spec):
        ext = extreme_vertices(g, spec, s)
        want = target(g, s)
        bad = (ext != want) if exact else (ext & ~want)
        if bad:
            return False, {"set": _names(s), "extremes": _names(ext),
                           "target": _names(want)}
    return True, None


def _end_simplicial_within(g, members):
    sub, mapping = induced_subgraph(g, members)
    inner = end_simplicial_vertices(sub)
    out = 0
    for i in iter_bits(inner):
        out |= bit(mapping[i])
    return out


def _covered_by_pairs(g, spec, anchors, vertex):
    table = interval_table(g, spec)
    pool = list(iter_bits(anchors))
    bv = bit(vertex)
    for i, s1 in enumerate(pool):
        for s2 in pool[i + 1:]:
            if table[s1 * g.n + s2] & bv:
                return True
    return False


def _check_cover(g, spec, anchors_fn):
    """Every non-anchor vertex must lie in the interval of some anchor pair."""
    anchors = anchors_fn(g)
    for v in iter_bits(g.vertex_set() & ~anchors):
        if not _covered_by_pairs(g, spec, anchors, v):
            return False, {"vertex": v, "anchors": _names(anchors)}
    return True, None


def _check_howorka(g):
    geo = interval_table(g, geodetic())
    mono = interval_table(g, monophonic())
    if geo != mono:
        for u in range(g.n):
            for v in range(g.n):
                if geo[u * g.n + v] != mono[u * g.n + v]:
                    return False, {"pair": [u, v],
                                   "geodetic": _names(geo[u * g.n + v]),
                                   "monophonic": _names(mono[u * g.n + v])}
    return True, None


def _mkm_ae_kinds(n):
    kinds = [geodetic(), monophonic(), m3(), lk(2), lk(3), strong(), toll(),
             weakly_toll(), triangle_path(), p3(), p4plus()]
    family = tuple(p for p in (K3, CLAW) if p.n <= n)
    if family:
        kinds.append(f_free(family))
    return kinds


def _check_mkm_ae(g):
    for spec in _mkm_ae_kinds(g.n):
        mkm = is_convex_geometry_mkm(g, spec)
        ae = satisfies_antiexchange(g, spec)
        if mkm.verdict != ae.verdict:
            return False, {"convexity": spec.name, "mkm": mkm.verdict,
                           "antiexchange": ae.verdict}
    return True, None


def _always(_g):
    return True


def _build_lemmas():
    entries = [
        LemmaEntry("L-EXT-MONO", 7, _always,
                   lambda g: _extremes_match(g, monophonic(),
                                             lambda h, s: simplicial_vertices(h, s)),
                   "extreme vertices of induced-path convex sets are the "
                   "simplicial vertices of the induced subgraph"),
        LemmaEntry("L-EXT-M3", 7, _always,
                   lambda g: _extremes_match(g, m3(),
                                             lambda h, s: semisimplicial_vertices(h, s)),
                   "extreme vertices of long-induced-path convex sets are the "
                   "semisimplicial vertices of the induced subgraph"),
        LemmaEntry("L-SC-EXT", 7, is_chordal,
                   lambda g: _extremes_match(g, strong(),
                                             lambda h, s: simple_vertices(h, s)),
                   "on chordal graphs, extreme vertices of even-chorded-path "
                   "convex sets are the simple vertices of the induced subgraph"),
        LemmaEntry("L-SC-COVER", 7, is_strongly_chordal,
                   lambda g: _check_cover(g, strong(), simple_vertices),
                   "on strongly chordal graphs, every nonsimple vertex lies on "
                   "an even-chorded path between two simple vertices"),
        LemmaEntry("L-TOLL-EXT-NEC", 7, _always,
                   lambda g: _extremes_match(g, toll(),
                                             lambda h, s: simplicial_vertices(h, s),
                                             exact=False),
                   "extreme vertices of tolled-walk convex sets are simplicial "
                   "in the induced subgraph"),
        LemmaEntry("L-TOLL-EXT-IFF", 7, is_interval,
                   lambda g: _extremes_match(g, toll(), _end_simplicial_within),
                   "on interval graphs, extreme vertices of tolled-walk convex "
                   "sets are the end simplicial vertices of the induced subgraph"),
        LemmaEntry("L-TOLL-COVER", 7, is_interval,
                   lambda g: _check_cover(g, toll(), end_simplicial_vertices),
                   "on interval graphs, every vertex that is not end simplicial "
                   "lies on a tolled walk between two end simplicial vertices"),
        LemmaEntry("L-WT-EXT-NEC", 7, _always,
                   lambda g: _extremes_match(g, weakly_toll(),
                                             lambda h, s: simplicial_vertices(h, s),
                                             exact=False),
                   "extreme vertices of weakly-toll-walk convex sets are "
                   "simplicial in the induced subgraph"),
        LemmaEntry("L-WT-EXT-IFF", 7, is_proper_interval,
                   lambda g: _extremes_match(g, weakly_toll(), _end_simplicial_within),
                   "on proper interval graphs, extreme vertices of weakly-toll "
                   "convex sets are the end simplicial vertices of the induced "
                   "subgraph"),
        LemmaEntry("L-WT-COVER", 7, is_proper_interval,
                   lambda g: _check_cover(g, weakly_toll(), end_simplicial_vertices),
                   "on proper interval graphs, every vertex that is not end "
                   "simplicial lies on a weakly toll walk between two end "
                   "simplicial vertices"),
        LemmaEntry("L-HOWORKA", 7, is_ptolemaic, _check_howorka,
                   "on ptolemaic graphs, shortest-path and induced-path "
                   "intervals coincide"),
        LemmaEntry("L-MKM-AE", 6, _always, _check_mkm_ae,
                   "the hull-of-extremes property and the antiexchange property "
                   "agree for every supported convexity"),
    ]
    return {e.ident: e for e in entries}


LEMMAS = _build_lemmas()


def resolve_lemma(ident):
    try:
        return LEMMAS[ident]
    except KeyError:
        raise ValueError(f"unknown lemma id {ident!r}") from None


def _evaluate_lemma(entry, g):
    in_domain = bool(entry.domain(g))
    if not in_domain:
        return False, True, None
    holds, witness = entry.check(g)
    cert = None
    if not holds:
        cert = {"g6": emit_graph6(g), "theorem": entry.ident,
                "geometry": False, "class": True,
                "witness": witness or {}}
    return True, holds, cert


def verify_lemma(ident, n_max=None, graphs=None):
    """Check one lemma entry over its domain; certificates mark violations."""
    entry = resolve_lemma(ident)
    if graphs is None:
        if n_max is None:
            n_max = entry.default_n_max
        graphs = connected_graphs_upto(n_max)
    else:
        graphs = list(graphs)
        if n_max is None:
            n_max = max((g.n for g in graphs), default=0)
    result = VerifyResult(ident, n_max, len(graphs), 0, 0)
    for g in graphs:
        in_domain, holds, cert = _evaluate_lemma(entry, g)
        result.class_members += in_domain
        result.geometries += in_domain and holds
        if cert is not None:
            result.certificates.append(cert)
    result.certificates.sort(key=lambda c: (c["g6"], c["theorem"]))
    return result


# --- certificates on disk -----------------------------------------------------------


def certificate_lines(certs):
    ordered = sorted(certs, key=lambda c: (c["g6"], c["theorem"]))
    return [json.dumps(c, sort_keys=True, separators=(",", ":")) for c in ordered]


def write_certificates(path, certs):
    with open(path, "w", encoding="ascii") as fh:
        for line in certificate_lines(certs):
            fh.write(line + "\n")


def read_certificates(path):
    with open(path, encoding="ascii") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def reverify_certificate(cert):
    """Recompute both verdicts from the stored graph6 string."""
    ident = cert["theorem"]
    g = parse_graph6(cert["g6"])
    base = ident[len(INVERTED_PREFIX):] if ident.startswith(INVERTED_PREFIX) else ident
    if base in LEMMAS:
        entry = resolve_lemma(base)
        in_domain, holds, _ = _evaluate_lemma(entry, g)
        return cert["class"] == in_domain and cert["geometry"] == holds
    entry = resolve_theorem(ident)
    geo, cls, _ = _evaluate_theorem(entry, g)
    return cert["geometry"] == geo and cert["class"] == cls


def read_graph6_lines(path):
    """External generator ingestion: one graph6 string per nonblank line."""
    with open(path, encoding="ascii") as fh:
        return [parse_graph6(line) for line in fh if line.strip()]


# --- fixture-sensitivity check ------------------------------------------------------


def nonhereditary_fixture_check(g=None):
    """The seven-vertex fixture is an l3 geometry while deleting either hub
    vertex (index 1 or 4) breaks the property; deleting index 1 leaves
    extremes {old 0, old 6} whose hull adds nothing.  True iff all facts hold
    for the supplied graph (default: the bundled fixture)."""
    g = SEVEN_FIXTURE if g is None else g
    spec = lk(3)
    facts = [is_convex_geometry_mkm(g, spec).verdict]
    for drop in (1, 4):
        rest = delete_vertex(g, drop)
        facts.append(not is_convex_geometry_mkm(rest, spec).verdict)
    rest = delete_vertex(g, 1)
    ends = bit(0) | bit(rest.n - 1)
    facts.append(extreme_vertices(rest, spec, rest.vertex_set()) == ends)
    facts.append(hull(rest, spec, ends) == ends)
    return all(facts)
