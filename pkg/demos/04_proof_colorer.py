# # Constructive colorings below the threshold
#
# proof_color follows the induction: cover colorings, edge peeling inside
# each side, bridge splitting, pendant moves and the terminal steps.  Each
# step lands in the trace.

import collections
import random

from sizeramsey import ArrowingInstance, coloring_is_good, m_min, proof_color
from sizeramsey.sampling import random_host

n, p = 3, 1
m = m_min(n, p)
inst = ArrowingInstance(n, p, m)
rng = random.Random(1)

tags = collections.Counter()
for _ in range(300):
    g = random_host(rng, n, p, m, n * (m + p) - 2)
    c, trace = proof_color(g, inst)
    assert coloring_is_good(c, inst)
    tags.update(trace.tags())
print(f"{inst}, 300 hosts with at most {n * (m + p) - 2} edges")
for tag, count in tags.most_common():
    print(f"  {tag:22s} {count}")

g = random_host(random.Random(7), n, p, m, n * (m + p) - 2)
print(proof_color(g, inst)[1].to_text())
