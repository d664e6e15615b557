# # Searching for loose and linear paths and cycles
#
# find_copy runs an exhaustive backtracking search.  It either returns a
# witness, proves there is none, or gives up after a node budget.

from antiramsey import Hypergraph, PatternSpec, find_copy
from antiramsey.patterns import classify_sequence, end_data

spec = PatternSpec.parse("loose-path:3")
print(find_copy(Hypergraph.complete(6, 3), spec))
print(find_copy(Hypergraph.complete(5, 3), spec).status)

# Six vertices are needed because the first and last edges of the path must be
# disjoint.  Sweeping n shows the smallest complete host for a few shapes.

for text in ["loose-path:4", "loose-cycle:4", "linear-path:3", "linear-cycle:4"]:
    s = PatternSpec.parse(text)
    n = next(n for n in range(3, 12) if find_copy(Hypergraph.complete(n, 3), s).found)
    print(f"{text:15s} first appears in K_{n}^3")

# classify_sequence gives a reason when it rejects a sequence.

print(classify_sequence([(0, 1, 2), (1, 2, 3)], PatternSpec("path", "linear", 2)))

# End data of a path: vertices that only belong to the first or last edge.

w = find_copy(Hypergraph.complete(9, 3), PatternSpec("path", "linear", 3)).witness
print(w.edges, end_data(w))

# With a tiny budget the answer is indeterminate, never a false "none".

rep = find_copy(Hypergraph.complete(7, 3), PatternSpec.parse("linear-cycle:4"), budget=20)
print(rep.status, rep.nodes_expanded)
