# # Deciding arrowing
#
# G -> (nK_{1,p}, K_{1,m}) holds when every red/blue coloring of G has n
# disjoint red p-stars or a blue m-star.  The exact search either proves it
# or returns a good coloring, and the brute-force oracle agrees.

from sizeramsey import ArrowingInstance, arrows, coloring_is_good, cycle, naive_arrows, path, star

inst = ArrowingInstance(2, 1, 2)
for name, g in [("P4", path(4)), ("C4", cycle(4)), ("K13", star(3))]:
    cert = arrows(g, inst)
    print(f"{name} -> {inst}: {cert.arrows} (naive: {naive_arrows(g, inst)}, nodes {cert.stats.nodes})")
    if not cert.arrows:
        print("   witness red edges:", cert.witness.red_edges(), coloring_is_good(cert.witness, inst))

# One star: K_{1,m+p-1} arrows, K_{1,m+p-2} does not.
one = ArrowingInstance(1, 2, 3)
print(arrows(star(4), one).arrows, arrows(star(3), one).arrows)

# Certificates are canonical JSON.
print(arrows(path(4), inst).to_json())
