# # Graphs, graph6 and canonical forms
#
# Hosts are small simple graphs stored as bitmask adjacency rows.  This
# walkthrough builds a few, moves them through graph6 and shows that
# relabeled copies share one canonical form.

import random

from sizeramsey import canonical_form, cycle, from_edge_list, parse_graph6, star, to_graph6

# A 4-cycle and a 4-leaf star.
c4 = cycle(4)
k14 = star(4)
print(c4.edges, c4.degree_sequence())
print(k14.edges, k14.degree_sequence())

# graph6 round trip.
code = to_graph6(c4)
print("C4 as graph6:", code)
assert parse_graph6(code) == c4

# Deleting an edge of C4 leaves a path, deleting the middle of that path disconnects it.
p4 = c4.delete_edge(c4.edge_id(0, 3))
print("P4 connected:", p4.is_connected())
print("2K2 components:", p4.delete_edge(p4.edge_id(1, 2)).components())

# Relabel a paw many times: the canonical form never changes.
paw = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
rng = random.Random(0)
forms = set()
for _ in range(24):
    perm = list(range(4))
    rng.shuffle(perm)
    forms.add(canonical_form(paw.relabel(perm)))
print("distinct canonical forms of the paw:", forms)
