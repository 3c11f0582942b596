"""Rational generating functions of super-strict patterns.

The southeast border of a pattern ``mu`` compiles to a word over the two
operators

    E G(z,t) = (G(z,1) - z t G(z,zt)) / (1 - z t)
    N G(z,t) = G(z,0) + sum_{n,m>=1} a_{n,m} z^n (1/(1-z^m)) (1-(tz)^m)/(1-tz)

and ``F_mu(z,1)`` is the word applied to ``zt/(1-zt)``, evaluated at ``t = 1``.
The bivariate series are never built. Each level of the word is evaluated
only at the specialisations a later level asks for, ``t = z^k`` (with
``t = 1`` as ``k = 0``) and ``t = 0``:

    E at t=z^k : (F(1) - z^{k+1} F(z^{k+1})) / (1 - z^{k+1})
    E at t=0   : F(1)
    N at t=z^k : sum_{j=0..k} (F(z^j) - F(0)) / (1 - z^{k+1}) + F(0)

``N`` at ``t = 0`` has no rational closed form; super-strict words never
stack two N's, so it is never requested.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .errors import NotStrict, NotSuperStrict, NZeroUnsupported, TooSmall
from .partition import Partition, add, is_strict, is_super_strict
from .ratfunc import RatFunc


class Op(str, Enum):
    E = "E"
    N = "N"

    def __repr__(self) -> str:
        return self.value


ThetaWord = tuple[Op, ...]

# t = z^k is keyed by the int k; t = 0 by ZERO
ZERO = None
TSpec = Optional[int]


def border_steps(mu: Partition) -> list[str]:
    """Southeast border from bottom-left to top-right as ``'e'``/``'n'`` steps."""
    steps: list[str] = []
    parts = mu.parts
    below = 0
    for x in reversed(parts):
        steps.extend("e" * (x - below))
        steps.append("n")
        below = x
    return steps


def theta_from_border(mu: Partition) -> ThetaWord:
    """Operator word read off the border of a strict pattern.

    North steps immediately followed by an east step become ``N``, remaining
    east steps ``E``. The initial east step and the final east and north
    steps are dropped. When the last east step is the tail of a north-east
    step (first two parts differing by 1) the ``N`` survives.
    """
    if not is_strict(mu):
        raise NotStrict(f"{mu} is not strict")
    if mu.weight < 2:
        raise TooSmall(f"{mu} has weight < 2")
    steps = border_steps(mu)
    tokens: list[str] = []
    i = 0
    while i < len(steps):
        if steps[i] == "n" and i + 1 < len(steps) and steps[i + 1] == "e":
            tokens.append("N")
            i += 2
        else:
            tokens.append(steps[i])
            i += 1
    assert tokens[0] == "e" and tokens[-1] == "n"
    tokens = tokens[1:-1]
    if tokens and tokens[-1] == "e":
        tokens.pop()
    return tuple(Op.N if t == "N" else Op.E for t in tokens)


def theta_recursive(mu: Partition) -> ThetaWord:
    """The same word built by peeling the pattern the way the induction does."""
    if not is_super_strict(mu):
        raise NotSuperStrict(f"{mu} is not super-strict")
    if mu.weight < 2:
        raise TooSmall(f"{mu} has weight < 2")
    word: list[Op] = []
    while mu.parts != (2,):
        p = mu.parts
        second = p[1] if len(p) > 1 else 0
        if p[0] >= second + 3:
            word.append(Op.E)
            mu = Partition((p[0] - 1,) + p[1:])
        else:
            word.append(Op.N)
            mu = add(Partition(p[1:]), Partition((1,)))
    return tuple(reversed(word))


def _base(t: TSpec) -> RatFunc:
    if t is ZERO:
        return RatFunc.zero()
    return RatFunc.geometric(t + 1)


class ThetaEvaluator:
    """Memoised evaluation of ``F_level(z, t)`` over one operator word."""

    def __init__(self, theta: ThetaWord):
        self.theta = tuple(theta)
        self.memo: dict[tuple[int, TSpec], RatFunc] = {}

    def __call__(self, level: int, t: TSpec = 0) -> RatFunc:
        key = (level, t)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        val = self._eval(level, t)
        self.memo[key] = val
        return val

    def _eval(self, level: int, t: TSpec) -> RatFunc:
        if level == 0:
            return _base(t)
        op = self.theta[level - 1]
        prev = level - 1
        if op is Op.E:
            if t is ZERO:
                return self(prev, 0)
            k1 = t + 1
            return (self(prev, 0) - RatFunc.z_power(k1) * self(prev, k1)) / RatFunc.one_minus_z_power(k1)
        if t is ZERO:
            raise NZeroUnsupported(f"N at t = 0 requested at level {level}")
        at_zero = self(prev, ZERO)
        total = RatFunc.zero()
        for j in range(t + 1):
            total = total + self(prev, j)
        total = total - at_zero * (t + 1)
        return total / RatFunc.one_minus_z_power(t + 1) + at_zero


def eval_node(theta: ThetaWord, level: int, t: TSpec = 0,
              memo: ThetaEvaluator | None = None) -> RatFunc:
    """``F_level`` of ``theta`` specialised at ``t = z^t`` (``t = None`` for ``t = 0``)."""
    if not 0 <= level <= len(theta):
        raise ValueError(f"level {level} outside 0..{len(theta)}")
    if memo is None:
        memo = ThetaEvaluator(theta)
    return memo(level, t)


def gf_avoid(mu: Partition) -> RatFunc:
    """``sum_{n>=1} |Av_n(mu)| z^n`` for super-strict ``mu`` (no constant term)."""
    if not is_super_strict(mu):
        raise NotSuperStrict(
            f"{mu} is not super-strict; only super-strict patterns are handled, "
            "and strict patterns whose first two parts differ by 1 have "
            "generating functions that are not algebraic")
    if not mu.parts:
        raise TooSmall("the empty pattern is contained in every partition")
    if mu.parts == (1,):
        return RatFunc.zero()
    theta = theta_from_border(mu)
    return ThetaEvaluator(theta)(len(theta), 0)


def gf_series(mu: Partition, n_max: int) -> list[int]:
    """``|Av_n(mu)|`` for ``n = 1..n_max`` read off :func:`gf_avoid`."""
    return [int(c) for c in gf_avoid(mu).series(n_max)[1:]]
