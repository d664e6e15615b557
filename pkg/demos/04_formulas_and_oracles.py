# # Closed forms against exact small-case oracles
#
# The formulas are only claimed for large n, so each value carries a tag.  On
# tiny instances the brute-force oracles give exact numbers.

from antiramsey import ar_linear, ar_loose, brute_ar, brute_ex, ex_loose
from antiramsey.formulas import consistency_audit, eg_bound, standard_grid
from antiramsey.oracles import brute_ex_graph_paths
from antiramsey.patterns import loose_path

print(ar_loose(20, 3, 4), ar_loose(20, 3, 5), ar_linear(20, 3, 5))
print(ex_loose(20, 3, 3).value + 2)

report = consistency_audit(standard_grid(60))
print(report.points, "grid points,", len(report.violations), "violations")

# ar(5, 3, P_2) by enumerating all partitions of the 10 edges of K_5^3.

res = brute_ar(5, 3, [loose_path(2)])
print(res.value, res.stats["nodes"])

# Turan numbers by branch and bound.

for n, k in [(5, 2), (6, 2), (7, 3)]:
    r = brute_ex(n, 3, [loose_path(k)])
    print(f"ex({n},3,P_{k}) =", r.value, sorted(r.witness.edge_sets())[:3])

# Graph case: the path bound (k-1)n/2 is respected.

for n, k in [(6, 3), (8, 4)]:
    print(n, k, brute_ex_graph_paths(n, k).value, eg_bound(n, k).value)
