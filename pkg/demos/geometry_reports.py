"""Convex-geometry checks: MKM reports, antiexchange witnesses, both modes."""
from convexgeom.engine import is_convex_geometry_mkm, satisfies_antiexchange
from convexgeom.fixtures import SEVEN_FIXTURE, delete_vertex
from convexgeom.walks import lk, monophonic, p3

labels = [str(i + 1) for i in range(7)]
spec = lk(3)

report = is_convex_geometry_mkm(SEVEN_FIXTURE, spec)
print("fixture, l3 convexity:", "geometry" if report.verdict else "not a geometry")

# deleting vertex 2 or 5 breaks it; the report pins down a violating set
for drop in (1, 4):
    g = delete_vertex(SEVEN_FIXTURE, drop)
    kept = [lab for i, lab in enumerate(labels) if i != drop]
    report = is_convex_geometry_mkm(g, spec)
    print(f"drop {labels[drop]}: verdict={report.verdict}")
    print("  report:", report.to_dict(kept))

# same verdicts through the antiexchange lens
for drop in (1, 4):
    g = delete_vertex(SEVEN_FIXTURE, drop)
    report = satisfies_antiexchange(g, spec)
    print(f"drop {labels[drop]}: antiexchange={report.verdict}",
          f"witness={report.antiexchange_witness}")

# a triangle under P3 convexity fails both ways
from convexgeom.patterns import K3

print()
print("K3 under p3 convexity")
print("  mkm:", is_convex_geometry_mkm(K3, p3()).to_dict())
print("  antiexchange:", satisfies_antiexchange(K3, p3()).to_dict())
print("  monophonic instead:", is_convex_geometry_mkm(K3, monophonic()).verdict)
