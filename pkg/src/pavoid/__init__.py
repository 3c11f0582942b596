"""Pattern avoidance in integer partitions under row and column deletion."""

from .asymptotics import (StrictShape, av32_exact, closed_form, leading_term,
                          predict, ratio_report, shape_of, sigma, sigma_prime_m1)
from .containment import avoids, contains, contains_oracle, witness
from .enumeration import av_series, d_count, d_series, nu, psi
from .equivalence import (fs_multiset, rook_equivalent, rook_poly,
                          strict_representative, wilf_check)
from .errors import CapExceeded, DomainError, PavoidError
from .gf import gf_avoid, theta_from_border
from .partition import Partition, parse_partition
from .ratfunc import IntPoly, RatFunc

__all__ = [
    "CapExceeded", "DomainError", "IntPoly", "Partition", "PavoidError", "RatFunc",
    "StrictShape", "av32_exact", "av_series", "avoids", "closed_form", "contains",
    "contains_oracle", "d_count", "d_series", "fs_multiset", "gf_avoid",
    "leading_term", "nu", "parse_partition", "predict", "psi", "ratio_report",
    "rook_equivalent", "rook_poly", "shape_of", "sigma", "sigma_prime_m1",
    "strict_representative", "theta_from_border", "wilf_check", "witness",
]
