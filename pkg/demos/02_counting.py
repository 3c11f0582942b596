"""Counting avoiders by brute force and by rectangular decompositions."""

from pavoid import Partition, av_series, d_series
from pavoid.asymptotics import sigma
from pavoid.enumeration import d_set

P = Partition.of

# (2,1)-avoiders are rectangles, so the count is the number of divisors
s = av_series(P(2, 1), 15)
print("Av_n((2,1)):", s.counts)
print("sigma_0(n): ", tuple(sigma(0, n) for n in range(1, 16)))

# avoiders with the maximal number mu_1 - 1 of part sizes
mu = P(4, 2)
print("D_n((4,2)), n <= 20:", d_series(mu, 20)[1:])
print("members at n = 9:", [str(p) for p in d_set(mu, 9)])

# the decomposition DP reaches far beyond enumeration
big = d_series(P(3, 2, 1), 5000)
print("D_5000((3,2,1)) =", big[5000])
