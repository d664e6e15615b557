# # Cores, small pairs and the rainbow extension
#
# A planted instance has a rainbow host H, a core L whose pairs are mostly big,
# and a rainbow loose path away from the core.  Big pairs let us grow the path.

from antiramsey.structure import (
    decompose, edge_class_counts, extend_rainbow, greedy_core_detect, planted_instance,
)

inst = planted_instance(40, 3, t=2, ell=3, seed=7)
print(len(inst.h), "edges; core", inst.core, "starved", inst.starved)

dec = decompose(inst.h, inst.core, tau=3 * (3 + 4))
print("S =", sorted(dec.S))

counts = edge_class_counts(inst.h, inst.core, dec.S_bar)
print(counts.cross, counts.missing, counts.by_s_bar)

# Extend by two or four edges, as a path or closed into a cycle.

for mode in ("path", "cycle"):
    for i in (1, 2):
        w = extend_rainbow(inst.coloring, inst.h, inst.core, inst.path, mode, i)
        print(mode, i, w.spec, w.edges[-2:])

# The greedy core finder picks the vertices with the most crossing edges.

print(greedy_core_detect(inst.h, 2))
