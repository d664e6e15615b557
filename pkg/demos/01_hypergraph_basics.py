# # Hypergraphs, ranks and shadows
#
# Edges of K_n^r are r-sets of {0, ..., n-1}.  Each one has a colex rank, and a
# hypergraph is just the set of ranks it keeps.

from math import comb

from antiramsey import Hypergraph, rank_rset, shadow, unrank_rset
from antiramsey.hypergraph import format_hypergraph, pair_degree

# Colex order sorts by largest element first, so the rank of an r-set does not
# depend on n.

for e in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4)]:
    print(e, "->", rank_rset(e, 10))

print(unrank_rset(9, 5, 3))

# A small host: the loose path {1,2,3}, {3,4,5}, {5,6,7} in 1-based labels.

h = Hypergraph(7, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])
print(h.edges, len(h))
print(format_hypergraph(h))

# The shadow collects every (r-1)-subset of an edge.

print(sorted(shadow(h).edge_sets()))
print(len(shadow(Hypergraph.complete(8, 4))), "==", comb(8, 3))

# Pair degree counts edges through both vertices.

k = Hypergraph.complete(6, 3)
print(pair_degree(k, 0, 1), pair_degree(h, 2, 3))
