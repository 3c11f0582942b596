"""Divisor sums, leading asymptotic terms and exact closed forms.

Counts are exact integers. Predictions are floats: they are diagnostics for
trend checks, never contracts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .enumeration import ENUM_CAP, av_count, d_series
from .errors import DegenerateProduct, NoExactSource, NotStrict, PatternTooSmall
from .gf import gf_avoid
from .partition import Partition, is_staircase, is_strict, is_super_strict, staircase

EULER_GAMMA = 0.577215664901532860606512090082

_ZETA = {
    2: 1.64493406684822643647241516665,
    3: 1.20205690315959428539973816151,
    4: 1.08232323371113819151600369654,
    5: 1.03692775514336992633136548646,
    6: 1.01734306198444913971451792979,
    7: 1.00834927738192282683979754985,
    8: 1.00407735619794433937868523851,
}

# the rate of convergence of the Dirichlet divisor problem error, O(n^theta)
DIVISOR_THETA = Fraction(131, 416)

STAIRCASE_CAP = 1 << 15
GF_SERIES_CAP = 20000


def zeta(k: int) -> float:
    if k < 2:
        raise ValueError("zeta(k) needs k >= 2")
    if k in _ZETA:
        return _ZETA[k]
    # k >= 9: the tail past 64 is below 1e-16
    return math.fsum(m ** -k for m in range(1, 65))


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sigma(k: int, n: int) -> int:
    """``sum_{d | n} d^k``."""
    if k < 0:
        raise ValueError("use sigma_prime_m1 or Fractions for negative k")
    return sum(d ** k for d in divisors(n))


def sigma_prime_m1(n: int) -> float:
    """``sum_{d | n} log(d) / d``."""
    return math.fsum(math.log(d) / d for d in divisors(n))


def divisor_summatory(n: int) -> int:
    """``sum_{m <= n} sigma_0(m)`` by the hyperbola method."""
    if n < 1:
        return 0
    s = isqrt(n)
    return 2 * sum(n // d for d in range(1, s + 1)) - s * s


# -- shapes and predictions ---------------------------------------------------

@dataclass(frozen=True)
class StrictShape:
    """``mu = (k+1, k, ..., k-ell+1, a_0, a_1, ...)`` with ``k - ell > a_0``."""

    k: int
    ell: int
    tail: tuple[int, ...]
    is_staircase: bool

    def a(self, j: int) -> int:
        return self.tail[j] if j < len(self.tail) else 0

    def reconstruct(self) -> Partition:
        return Partition(tuple(range(self.k + 1, self.k - self.ell, -1)) + self.tail)

    def product_factors(self) -> list[int]:
        m = self.k - self.ell
        return [m - self.a(j) - j for j in range(m)]


def shape_of(mu: Partition) -> StrictShape:
    if not is_strict(mu):
        raise NotStrict(f"{mu} is not strict")
    if not mu.parts or mu.parts[0] < 2:
        raise PatternTooSmall(f"{mu} needs a first part of at least 2")
    k = mu.parts[0] - 1
    ell = 0
    while ell + 1 < len(mu) and mu.parts[ell + 1] == k - ell:
        ell += 1
    return StrictShape(k, ell, mu.parts[ell + 1:], mu == staircase(k + 1))


@dataclass(frozen=True)
class Prediction:
    """``constant * base(n) * log(n)^log_power``, divided by ``zeta(zeta_arg)`` if set.

    ``base(n)`` is ``sigma_{sigma_index}(n)`` when ``sigma_index`` is set and
    ``n^n_power`` otherwise.
    """

    n_power: int
    log_power: int
    constant: Fraction
    zeta_arg: int | None = None
    sigma_index: int | None = None
    tag: str = "general"

    def value(self, n: int) -> float:
        if n < 2:
            raise ValueError("predictions need n >= 2")
        base = sigma(self.sigma_index, n) if self.sigma_index is not None else n ** self.n_power
        out = float(self.constant) * float(base) * math.log(n) ** self.log_power
        if self.zeta_arg is not None:
            out /= zeta(self.zeta_arg)
        return out

    def describe(self) -> str:
        base = f"sigma_{self.sigma_index}(n)" if self.sigma_index is not None else f"n^{self.n_power}"
        logs = f" log^{self.log_power} n" if self.log_power else ""
        zeta_part = f" / zeta({self.zeta_arg})" if self.zeta_arg is not None else ""
        return f"{self.constant} {base}{logs}{zeta_part}"


def leading_term(mu: Partition) -> Prediction:
    s = shape_of(mu)
    k = s.k
    if s.is_staircase:
        if k == 1:
            return Prediction(0, 0, Fraction(1), sigma_index=0)
        if k == 2:
            return Prediction(0, 2, Fraction(1, 2), zeta_arg=2, sigma_index=1)
        return Prediction(0, k, Fraction(1, factorial(k) * factorial(k - 1)),
                          zeta_arg=k, sigma_index=k - 1)
    factors = s.product_factors()
    if any(f <= 0 for f in factors):
        raise DegenerateProduct(f"nonpositive factor in {factors} for {mu}")
    return Prediction(k - 1, s.ell, Fraction(1, factorial(s.ell) * factorial(k - 1) * math.prod(factors)))


_TABLE_VARIANTS = {
    (4, 3, 1): Prediction(3, 1, Fraction(1, 2), tag="table-variant"),
    (4, 3, 2): Prediction(3, 2, Fraction(1, 4), tag="table-variant"),
    (4, 3, 2, 1): Prediction(0, 3, Fraction(1, 6), zeta_arg=3, sigma_index=2, tag="table-variant"),
}


def table_variant(mu: Partition) -> Prediction | None:
    """The tabulated leading term where it differs from :func:`leading_term`."""
    return _TABLE_VARIANTS.get(mu.parts)


def predictions(mu: Partition) -> list[Prediction]:
    out = [leading_term(mu)]
    alt = table_variant(mu)
    if alt is not None:
        out.append(alt)
    return out


def predict(mu: Partition, n: int) -> float:
    return leading_term(mu).value(n)


def refined_321(n: int, second_sign: int = -1) -> float:
    """Two-term estimate of ``|Av_n((3,2,1))|`` including the ``n log n sigma'_{-1}`` term.

    ``second_sign = +1`` gives the tabulated variant.
    """
    z2 = _ZETA[2]
    L = math.log(n)
    return sigma(1, n) * L * L / (2 * z2) + second_sign * 2 / z2 * n * L * sigma_prime_m1(n)


# -- exact counts -------------------------------------------------------------

def _nearest(x: Fraction) -> int:
    return round(x)  # half to even


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _cf_41(n: int) -> int:
    num = 2 * n * n + 10 * n + 3 + _sign(n) * (2 * n - 3)
    assert num % 16 == 0
    return num // 16


def _cf_5(n: int) -> int:
    s = _sign(n)
    return _nearest(Fraction(n ** 3 + 15 * n * n, 144)
                    + Fraction((135 + 9 * s) * n, 288) + Fraction(94 + 18 * s, 144))


_CLOSED_FORMS = {
    (1,): lambda n: 0,
    (2,): lambda n: 1,
    (2, 1): lambda n: sigma(0, n),
    (3,): lambda n: n // 2 + 1,
    (3, 1): lambda n: n,
    (4,): lambda n: _nearest(Fraction(n * n + 6 * n + 9, 12)),
    (4, 1): _cf_41,
    (4, 2): lambda n: -((-(n * n + 3)) // 4),
    (5,): _cf_5,
}

SUPPORTED_CLOSED_FORMS = tuple(Partition(p) for p in _CLOSED_FORMS)


def closed_form(mu: Partition, n: int) -> int | None:
    """Exact ``|Av_n(mu)|`` from a tabulated formula, or None when ``mu`` has none."""
    if n < 1:
        raise ValueError("n must be positive")
    f = _CLOSED_FORMS.get(mu.parts)
    return None if f is None else f(n)


def av32_exact(n: int) -> int:
    """``|Av_n((3,2))| = 1 + sum_{m <= n} (sigma_0(m) - 1)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return 1 + divisor_summatory(n) - n


def staircase_count(k: int, n: int) -> int:
    """``|Av_n((k+1, k, ..., 1))|``: partitions of ``n`` with at most ``k`` part sizes."""
    if n < 1:
        raise ValueError("n must be positive")
    return staircase_counts(k, n)[n]


def staircase_counts(k: int, n_max: int) -> list[int]:
    """Index ``n`` holds ``|Av_n((k+1, ..., 1))|`` for ``n <= n_max`` (index 0 is 0)."""
    total = [0] * (n_max + 1)
    for j in range(1, k + 1):
        ds = d_series(staircase(j + 1), n_max)
        for n in range(1, n_max + 1):
            total[n] += ds[n]
    return total


# -- ratio reports ------------------------------------------------------------

@dataclass(frozen=True)
class RatioRow:
    n: int
    observed: int
    predicted: float
    ratio: float
    source: str


def exact_counts(mu: Partition, ns: list[int], enum_cap: int = ENUM_CAP) -> list[tuple[int, str]]:
    """Exact ``|Av_n(mu)|`` for each ``n`` with the name of the method used."""
    if not ns:
        return []
    out: dict[int, tuple[int, str]] = {}
    todo = []
    for n in ns:
        cf = closed_form(mu, n)
        if cf is not None:
            out[n] = (cf, "closed_form")
        elif mu.parts == (3, 2):
            out[n] = (av32_exact(n), "av32_exact")
        else:
            todo.append(n)
    if todo and is_staircase(mu) and max(todo) <= STAIRCASE_CAP:
        counts = staircase_counts(len(mu) - 1, max(todo))
        for n in todo:
            out[n] = (counts[n], "staircase_split")
        todo = []
    if todo and is_super_strict(mu) and max(todo) <= GF_SERIES_CAP:
        coeffs = gf_avoid(mu).series(max(todo))
        for n in todo:
            out[n] = (int(coeffs[n]), "gf_series")
        todo = []
    for n in todo:
        if n > enum_cap:
            raise NoExactSource(f"no exact method for {mu} reaches n = {n}")
        out[n] = (av_count(mu, n, enum_cap), "brute_force")
    return [out[n] for n in ns]


def ratio_report(mu: Partition, ns: list[int], enum_cap: int = ENUM_CAP) -> list[RatioRow]:
    lead = leading_term(mu)
    rows = []
    for n, (obs, src) in zip(ns, exact_counts(mu, ns, enum_cap)):
        pred = lead.value(n)
        rows.append(RatioRow(n, obs, pred, obs / pred, src))
    return rows


# -- linear recurrences -------------------------------------------------------

def fit_linear_recurrence(seq: list[int], order: int, fit_len: int | None = None) -> tuple[Fraction, ...] | None:
    """Coefficients ``c`` with ``a_n = sum_i c_i a_{n-i}`` on the whole sequence.

    The coefficients are solved exactly from the first ``fit_len`` terms (all by
    default) and then checked on the rest. Returns None if no recurrence of this
    order fits.
    """
    import sympy

    if fit_len is None:
        fit_len = len(seq)
    if order < 1 or fit_len <= order:
        raise ValueError("need more terms than the order")
    head = seq[:fit_len]
    rows = [[head[n - i] for i in range(1, order + 1)] for n in range(order, fit_len)]
    rhs = [head[n] for n in range(order, fit_len)]
    A = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    coeffs = tuple(Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in sol)
    for n in range(order, len(seq)):
        if sum(c * seq[n - i] for i, c in enumerate(coeffs, start=1)) != seq[n]:
            return None
    return coeffs


def minimal_recurrence_order(seq: list[int], max_order: int, fit_len: int | None = None) -> int | None:
    for d in range(1, max_order + 1):
        if fit_linear_recurrence(seq, d, fit_len) is not None:
            return d
    return None
