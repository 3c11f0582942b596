"""Deleting rows and columns of a Ferrers board."""

from pavoid import Partition, contains, contains_oracle, witness
from pavoid.containment import apply_deletion

alpha = Partition.of(6, 5, 5, 5, 4, 4, 2, 2)
mu = Partition.of(4, 3, 3, 2, 2)

# fast test and the exhaustive reference agree
print(f"{alpha} contains {mu}:", contains(alpha, mu), contains_oracle(alpha, mu, cap=40))

# one concrete deletion, replayed
w = witness(alpha, mu)
print("delete", w.as_dict(), "->", apply_deletion(alpha, w.deleted_rows, w.deleted_cols))

# other deletions exist too
print("rows {2,5,7}, cols {3,4} ->", apply_deletion(alpha, {2, 5, 7}, {3, 4}))

# (3,1) is an L; it has no two equal rows to give (2,2)
print("(3,1) contains (2,2):", contains(Partition.of(3, 1), Partition.of(2, 2)))
