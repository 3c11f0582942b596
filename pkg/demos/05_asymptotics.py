"""Exact counts against leading-order predictions."""

import numpy as np

from pavoid import Partition, av32_exact, ratio_report
from pavoid.asymptotics import fit_linear_recurrence, predictions

P = Partition.of

for mu, ns in ((P(3, 2), [10 ** j for j in range(2, 7)]),
               (P(4, 2), [100, 1000, 2000]),
               (P(3, 2, 1), [2 ** j for j in range(4, 15, 2)]),
               (P(5, 2), [500, 5000])):
    print(f"\n{mu}: leading term {predictions(mu)[0].describe()}")
    rows = ratio_report(mu, ns)
    table = np.array([[r.n, r.observed, r.predicted, r.ratio] for r in rows], dtype=float)
    with np.printoptions(suppress=True, precision=4, linewidth=120):
        print(table)
    print("source:", rows[0].source)

# the (3,2) counts admit no short constant-coefficient recurrence
seq = [av32_exact(n) for n in range(1, 201)]
print("\norder <= 8 fits for (3,2):", [d for d in range(1, 9) if fit_linear_recurrence(seq, d, 100)])
