"""Run registry entries at desk scale and show the certificate machinery."""
from convexgeom.harness import (certificate_lines, resolve_theorem,
                                reverify_certificate, verify_lemma,
                                verify_theorem)

# characterization sweeps over every connected graph up to n_max
for ident in ("T-MONO", "T-GEO", "T-P3", "C-BIP"):
    res = verify_theorem(ident, n_max=5)
    s = res.summary()
    print(f"{ident}: graphs={s['graphs']} geometries={s['geometries']}"
          f" class={s['classMembers']} certificates={s['certificates']}")

print()
entry = resolve_theorem("T-MONO")
print("T-MONO:", entry.description)

# the X-INV- prefix negates the class side, so counterexamples must appear;
# each certificate re-verifies from its graph6 string alone
res = verify_theorem("X-INV-T-MONO", n_max=4)
print()
print(f"X-INV-T-MONO at n<=4: {len(res.certificates)} certificates")
for line in certificate_lines(res.certificates)[:3]:
    print(" ", line)
print("  ...")
print("all reverify:", all(reverify_certificate(c) for c in res.certificates))

# lemma entries restrict the sweep to a graph-class domain
print()
for ident in ("L-EXT-MONO", "L-HOWORKA", "L-MKM-AE"):
    res = verify_lemma(ident, n_max=5)
    s = res.summary()
    print(f"{ident}: domain={s['classMembers']} of {s['graphs']}"
          f" certificates={s['certificates']}")
