# # Exact size Ramsey values by enumeration
#
# Hosts are generated one isomorphism class at a time in order of edge count.
# The first edge count with an arrowing host is the size Ramsey number; all
# smaller hosts are refuted with checked witnesses.

from sizeramsey import ArrowingInstance, compute_size_ramsey

for inst, connected in [(ArrowingInstance(2, 1, 2), False), (ArrowingInstance(2, 1, 2), True),
                        (ArrowingInstance(3, 1, 2), True), (ArrowingInstance(2, 1, 4), True)]:
    res = compute_size_ramsey(inst, connected, e_max=10)
    print(res.summary())
    print()
