# # Colorings with no rainbow loose paths or cycles
#
# The lower-bound coloring gives every edge that meets a small core its own
# color.  Everything else is squeezed into one class (even k) or two (odd k).

from math import comb

from antiramsey import ar_loose, lb_coloring, verify_construction
from antiramsey.coloring import representative_subgraph
from antiramsey.patterns import loose_cycle, loose_path

lb = lb_coloring(10, 3, 4)
print(lb.colors_used, "colors;", "core", lb.core)
print(sorted(lb.coloring.class_sizes())[-3:])

# Exhaustive search confirms that no loose P_4 or C_4 is rainbow.

cert = verify_construction(lb, [loose_path(4), loose_cycle(4)])
print(cert.verdict, cert.nodes_expanded)

# Odd k splits the leftover edges by whether they contain the next vertex.

lb5 = lb_coloring(11, 3, 5)
print(lb5.colors_used, "=", comb(11, 3) - comb(9, 3) + 2)
print(len(representative_subgraph(lb5.coloring)))

# One more color than the construction is exactly the closed-form value.

for n in range(12, 18):
    print(n, lb_coloring(n, 3, 6).colors_used + 1, ar_loose(n, 3, 6).value)
