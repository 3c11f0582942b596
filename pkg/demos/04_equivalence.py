"""Rook equivalence classes and their strict representatives."""

from collections import defaultdict

from pavoid import Partition, rook_poly, strict_representative, wilf_check
from pavoid.enumeration import partition_tuples

P = Partition.of

print("rook polynomial of (2,1):", rook_poly(P(2, 1)).coeffs)
print("strict representative of (2,2):", strict_representative(P(2, 2)))
print("Wilf check (2,2) vs (3,1) to n = 20:", wilf_check(P(2, 2), P(3, 1), 20))

# group the partitions of 8 by representative
classes = defaultdict(list)
for t in partition_tuples(8):
    p = Partition(t)
    classes[strict_representative(p)].append(str(p))
for rep, members in classes.items():
    print(f"{str(rep):>8}: {', '.join(members)}")
