# # The upper-bound construction
#
# n stars K_{1,m+p-1} with centres joined in a path have n(m+p)-1 edges and
# arrow (nK_{1,p}, K_{1,m}).  Dropping any edge that keeps the host connected
# breaks the arrowing.

from sizeramsey import ArrowingInstance, arrows, construct_upper, m_min, to_graph6

for n in (1, 2, 3):
    for p in (1, 2):
        m = m_min(n, p)
        g = construct_upper(n, p, m)
        cert = arrows(g, ArrowingInstance(n, p, m))
        print(f"n={n} p={p} m_min={m}: {g.edge_count} edges, arrows={cert.arrows}, "
              f"nodes={cert.stats.nodes}, graph6={to_graph6(g)}")

g = construct_upper(2, 1, 4)
inst = ArrowingInstance(2, 1, 4)
leaf_gone, _ = g.delete_edge(g.edge_id(0, 1)).delete_vertices([1])
print("minus a leaf edge:", arrows(leaf_gone, inst).arrows)
