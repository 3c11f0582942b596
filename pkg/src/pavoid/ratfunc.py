"""Exact univariate polynomials and rational functions over the integers.

Coefficient lists are dense and low-degree first: ``(1, 0, -1)`` is ``1 - z^2``.
A :class:`RatFunc` is always kept in canonical form:

* numerator and denominator are coprime,
* the integer content of all their coefficients together is 1,
* the lowest-order nonzero denominator coefficient is positive.

Canonical forms are unique, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .errors import PoleAtZero

Coeffs = tuple[int, ...]


def _trim(c: Iterable[int]) -> Coeffs:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPoly:
    """Dense polynomial in ``z`` with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs: Coeffs = _trim(int(x) for x in coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-x for x in self.coeffs)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(poly_add(self.coeffs, other.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(poly_sub(self.coeffs, other.coeffs))

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(x * other for x in self.coeffs)
        return IntPoly(poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        out: Coeffs = (1,)
        base = self.coeffs
        while e:
            if e & 1:
                out = poly_mul(out, base)
            base = poly_mul(base, base)
            e >>= 1
        return IntPoly(out)

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def content(self) -> int:
        return content(self.coeffs)

    def substitute_power(self, j: int) -> IntPoly:
        return IntPoly(dilate(self.coeffs, j))


# -- coefficient-tuple kernels ------------------------------------------------

def poly_add(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_sub(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def content(a: Sequence[int]) -> int:
    return reduce(gcd, a, 0)


def primitive(a: Sequence[int]) -> Coeffs:
    """``a`` divided by its content, with positive leading coefficient."""
    c = content(a)
    if c == 0:
        return ()
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def pseudo_rem(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Remainder of ``lc(b)^(deg a - deg b + 1) * a`` divided by ``b``."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return tuple(r)


def poly_gcd(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Primitive gcd over Z[z] (primitive PRS), positive leading coefficient."""
    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive(r)
    return a


def exact_div(a: Sequence[int], b: Sequence[int]) -> Coeffs:
    """Quotient ``a / b`` when ``b`` divides ``a`` exactly in Z[z]."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(0, len(r) - db)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        coef, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = coef
        for i, y in enumerate(b):
            r[i + shift] -= coef * y
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def dilate(a: Sequence[int], j: int) -> Coeffs:
    """Coefficients of ``a(z^j)``."""
    if j < 1:
        raise ValueError("dilation factor must be positive")
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * j + 1)
    for i, x in enumerate(a):
        out[i * j] = x
    return tuple(out)


def format_poly(c: Sequence[int], var: str = "z") -> str:
    if not c:
        return "0"
    terms = []
    for i, x in enumerate(c):
        if x == 0:
            continue
        mag = abs(x)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if x < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- rational functions -------------------------------------------------------

class RatFunc:
    """Canonical quotient of two integer polynomials in ``z``."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly | Sequence[int] | int, den: IntPoly | Sequence[int] | int = 1):
        n = _coeffs(num)
        d = _coeffs(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        n, d = _normalize(n, d)
        self.num = IntPoly(n)
        self.den = IntPoly(d)

    @classmethod
    def _raw(cls, n: Coeffs, d: Coeffs) -> RatFunc:
        obj = object.__new__(cls)
        obj.num = IntPoly(n)
        obj.den = IntPoly(d)
        return obj

    # construction helpers
    @classmethod
    def zero(cls) -> RatFunc:
        return cls._raw((), (1,))

    @classmethod
    def const(cls, c: int) -> RatFunc:
        return cls((c,))

    @classmethod
    def z_power(cls, k: int) -> RatFunc:
        return cls._raw((0,) * k + (1,), (1,))

    @classmethod
    def one_minus_z_power(cls, k: int) -> RatFunc:
        """``1 - z^k`` (``k >= 1``)."""
        return cls._raw((1,) + (0,) * (k - 1) + (-1,), (1,))

    @classmethod
    def geometric(cls, k: int) -> RatFunc:
        """``z^k / (1 - z^k)``."""
        return cls._raw((0,) * k + (1,), (1,) + (0,) * (k - 1) + (-1,))

    @classmethod
    def parse(cls, text: str) -> RatFunc:
        """Parse an expression in ``z`` such as ``"-z*(z^7 - 1)/((z-1)^4*(z+1))"``."""
        import sympy

        z = sympy.Symbol("z")
        expr = sympy.sympify(text.replace("^", "**"), locals={"z": z})
        num, den = sympy.fraction(sympy.together(expr))
        pn = sympy.Poly(num, z)
        pd = sympy.Poly(den, z)
        if not (pn.domain.is_ZZ or pn.domain.is_QQ) or not (pd.domain.is_ZZ or pd.domain.is_QQ):
            raise ValueError(f"not a rational function of z over Q: {text!r}")
        qn = [Fraction(int(c.p), int(c.q)) for c in reversed(pn.all_coeffs())]
        qd = [Fraction(int(c.p), int(c.q)) for c in reversed(pd.all_coeffs())]
        lcm = 1
        for c in qn + qd:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        return cls([int(c * lcm) for c in qn], [int(c * lcm) for c in qd])

    # protocol
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self) -> str:
        if self.den.coeffs == (1,):
            return format_poly(self.num.coeffs)
        return f"({format_poly(self.num.coeffs)}) / ({format_poly(self.den.coeffs)})"

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(tuple(-x for x in self.num.coeffs), self.den.coeffs)

    def __add__(self, other: RatFunc | int) -> RatFunc:
        other = _lift(other)
        a, b = self.num.coeffs, self.den.coeffs
        c, d = other.num.coeffs, other.den.coeffs
        if b == d:
            return RatFunc(poly_add(a, c), b)
        return RatFunc(poly_add(poly_mul(a, d), poly_mul(c, b)), poly_mul(b, d))

    __radd__ = __add__

    def __sub__(self, other: RatFunc | int) -> RatFunc:
        return self + (-_lift(other))

    def __rsub__(self, other: RatFunc | int) -> RatFunc:
        return _lift(other) - self

    def __mul__(self, other: RatFunc | int) -> RatFunc:
        other = _lift(other)
        return RatFunc(poly_mul(self.num.coeffs, other.num.coeffs),
                       poly_mul(self.den.coeffs, other.den.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: RatFunc | int) -> RatFunc:
        other = _lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(poly_mul(self.num.coeffs, other.den.coeffs),
                       poly_mul(self.den.coeffs, other.num.coeffs))

    def __rtruediv__(self, other: RatFunc | int) -> RatFunc:
        return _lift(other) / self

    def substitute_z_power(self, j: int) -> RatFunc:
        return RatFunc(dilate(self.num.coeffs, j), dilate(self.den.coeffs, j))

    def series(self, n_max: int) -> list:
        return series(self, n_max)

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.num.coeffs],
                "den": [str(c) for c in self.den.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> RatFunc:
        return cls([int(c) for c in obj["num"]], [int(c) for c in obj["den"]])


def _coeffs(x) -> Coeffs:
    if isinstance(x, IntPoly):
        return x.coeffs
    if isinstance(x, int):
        return _trim((x,))
    return _trim(int(c) for c in x)


def _lift(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, int):
        return RatFunc.const(x)
    raise TypeError(f"cannot combine RatFunc with {type(x).__name__}")


def _normalize(n: Coeffs, d: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not n:
        return (), (1,)
    g = poly_gcd(n, d)
    if len(g) > 1:
        n = exact_div(n, g)
        d = exact_div(d, g)
    c = gcd(content(n), content(d))
    low = next(x for x in d if x)
    if low < 0:
        c = -c
    if c != 1:
        n = tuple(x // c for x in n)
        d = tuple(x // c for x in d)
    return n, d


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Field operation by name: ``add``, ``sub``, ``mul`` or ``div``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_equal(a: RatFunc, b: RatFunc) -> bool:
    """Equality as rational functions (cross-multiplication)."""
    return poly_mul(a.num.coeffs, b.den.coeffs) == poly_mul(b.num.coeffs, a.den.coeffs)


def substitute_z_power(f: RatFunc, j: int) -> RatFunc:
    return f.substitute_z_power(j)


def series(f: RatFunc, n_max: int) -> list:
    """Maclaurin coefficients of ``f`` for ``z^0 .. z^n_max``.

    Coefficients are ints when the constant term of the denominator is a unit
    and Fractions otherwise.
    """
    num, den = f.num.coeffs, f.den.coeffs
    if den[0] == 0:
        raise PoleAtZero(f"{f} has a pole at z = 0")
    d0 = den[0]
    out: list = []
    for n in range(n_max + 1):
        acc = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        if d0 in (1, -1):
            out.append(acc * d0)
        else:
            q = Fraction(acc, d0)
            out.append(int(q) if q.denominator == 1 else q)
    return out
