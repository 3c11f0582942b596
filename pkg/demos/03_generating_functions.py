"""Rational generating functions from the operator word of the border."""

from pavoid import Partition, av_series, gf_avoid, theta_from_border
from pavoid.ratfunc import RatFunc

P = Partition.of

for mu in (P(3), P(4, 1), P(5, 2), P(8, 5, 3)):
    print(f"{mu}: word {''.join(op.value for op in theta_from_border(mu))}")
    print("   F =", gf_avoid(mu))

# the (5,2) function coincides with a known closed form
known = RatFunc.parse("-z*(z^7 - 2*z^5 + z^3 + z^2 - z - 1)/((z-1)^4*(z+1)^2*(z^2+z+1))")
print("matches:", gf_avoid(P(5, 2)) == known)

# coefficients versus enumeration
print(gf_avoid(P(5, 2)).series(15)[1:])
print(list(av_series(P(5, 2), 15).counts))

# patterns whose first two parts differ by one are rejected
try:
    gf_avoid(P(3, 2))
except ValueError as exc:
    print("(3,2):", exc)
