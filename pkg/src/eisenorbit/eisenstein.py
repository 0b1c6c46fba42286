"""Exact arithmetic in the Eisenstein integers Z[w], w = exp(2*pi*i/3).

Elements are stored as ``a + b*w`` with Python integers, so nothing ever
overflows. Besides the ring operations this module fixes the two
canonical-form policies the rest of the package relies on:

* unit-normal associates: the representative of ``x * units`` lying in the
  half-open sector ``0 <= arg < pi/3``, i.e. ``0 <= b < a``;
* residues: ``residue_mod(a, c)`` is the remainder of division with each
  coordinate of ``a / c`` rounded to the nearest integer, ties going down.
"""

from __future__ import annotations

from typing import NamedTuple, Union

__all__ = [
    "EisensteinInt",
    "OMEGA",
    "ONE",
    "ZERO",
    "UNITS",
    "UnitNormalForm",
    "as_eisenstein",
    "norm",
    "unit_normalize",
    "gcd",
    "gcd_many",
    "extended_gcd",
    "residue_mod",
    "exact_div",
    "divides",
    "mod3",
    "is_unit",
    "unit_inverse",
    "parse",
]


class EisensteinInt:
    """The element ``a + b*w`` of Z[w]."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError(f"coefficients must be integers, got {a!r}, {b!r}")
        self._a = int(a)
        self._b = int(b)

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    def __repr__(self) -> str:
        return f"EisensteinInt({self._a}, {self._b})"

    def __str__(self) -> str:
        sign = "-" if self._b < 0 else "+"
        return f"{self._a}{sign}{abs(self._b)}*w"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisensteinInt):
            return self._a == other._a and self._b == other._b
        if isinstance(other, int):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a or self._b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self._a, -self._b)

    def __pos__(self) -> EisensteinInt:
        return self

    def __add__(self, other) -> EisensteinInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinInt(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other) -> EisensteinInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return EisensteinInt(self._a - other._a, self._b - other._b)

    def __rsub__(self, other) -> EisensteinInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> EisensteinInt:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        bd = b * d
        return EisensteinInt(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> EisensteinInt:
        if n < 0:
            return unit_inverse(self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> EisensteinInt:
        """Complex conjugate; conj(w) = w**2 = -1 - w."""
        return EisensteinInt(self._a - self._b, -self._b)

    def norm(self) -> int:
        return self._a * self._a - self._a * self._b + self._b * self._b

    def __divmod__(self, other) -> tuple[EisensteinInt, EisensteinInt]:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        t = self * other.conj()
        q = EisensteinInt(_round_half_down(t._a, n), _round_half_down(t._b, n))
        return q, self - q * other

    def __rdivmod__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return divmod(other, self)

    def __floordiv__(self, other) -> EisensteinInt:
        return divmod(self, other)[0]

    def __mod__(self, other) -> EisensteinInt:
        return divmod(self, other)[1]

    def __rfloordiv__(self, other):
        return divmod(_coerce(other), self)[0]

    def __rmod__(self, other):
        return divmod(_coerce(other), self)[1]

    def to_complex(self) -> complex:
        """Floating-point embedding; for plotting and test oracles only."""
        return complex(self._a - self._b / 2, self._b * 3**0.5 / 2)


Coercible = Union[EisensteinInt, int]

ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
# 1, -w^2, w, -1, w^2, -w: counter-clockwise from the positive real axis
UNITS = (
    ONE,
    EisensteinInt(1, 1),
    OMEGA,
    EisensteinInt(-1, 0),
    EisensteinInt(-1, -1),
    EisensteinInt(0, -1),
)


def _coerce(x) -> EisensteinInt | None:
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x, 0)
    return None


def as_eisenstein(x) -> EisensteinInt:
    """Accept an EisensteinInt, an int, or a string in the text grammar."""
    if isinstance(x, str):
        return parse(x)
    e = _coerce(x)
    if e is None:
        raise TypeError(f"cannot interpret {x!r} as an Eisenstein integer")
    return e


def _round_half_down(x: int, n: int) -> int:
    # nearest integer to x/n (n > 0), exact halves rounded toward -inf
    return -((n - 2 * x) // (2 * n))


def norm(x: Coercible) -> int:
    return as_eisenstein(x).norm()


def is_unit(x: Coercible) -> bool:
    return as_eisenstein(x).norm() == 1


def unit_inverse(u: Coercible) -> EisensteinInt:
    u = as_eisenstein(u)
    if u.norm() != 1:
        raise ValueError(f"{u} is not a unit")
    return u.conj()


class UnitNormalForm(NamedTuple):
    unit: EisensteinInt
    normal: EisensteinInt


def _in_sector(x: EisensteinInt) -> bool:
    return 0 <= x.b < x.a


def unit_normalize(x: Coercible) -> UnitNormalForm:
    """Split ``x = unit * normal`` with ``normal`` in the sector 0 <= b < a.

    Zero maps to ``(1, 0)``.
    """
    x = as_eisenstein(x)
    if not x:
        return UnitNormalForm(ONE, ZERO)
    for u in UNITS:
        candidate = x * u.conj()
        if _in_sector(candidate):
            return UnitNormalForm(u, candidate)
    raise AssertionError(f"no associate of {x} in the fundamental sector")


def gcd(a: Coercible, b: Coercible) -> EisensteinInt:
    """Unit-normal generator of the ideal (a, b); gcd(0, 0) = 0."""
    a, b = as_eisenstein(a), as_eisenstein(b)
    while b:
        a, b = b, a % b
    return unit_normalize(a).normal


def gcd_many(*xs: Coercible) -> EisensteinInt:
    g = ZERO
    for x in xs:
        g = gcd(g, x)
    return g


def extended_gcd(a: Coercible, b: Coercible) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g`` and g = gcd(a, b)."""
    a, b = as_eisenstein(a), as_eisenstein(b)
    r0, r1 = a, b
    x0, x1 = ONE, ZERO
    y0, y1 = ZERO, ONE
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    unit, g = unit_normalize(r0)
    inv = unit.conj()
    return g, x0 * inv, y0 * inv


def residue_mod(a: Coercible, c: Coercible) -> EisensteinInt:
    """Canonical representative of ``a`` in Z[w] / cZ[w]."""
    return divmod(as_eisenstein(a), as_eisenstein(c))[1]


def divides(c: Coercible, a: Coercible) -> bool:
    c, a = as_eisenstein(c), as_eisenstein(a)
    if not c:
        return not a
    return not (a % c)


def exact_div(a: Coercible, c: Coercible) -> EisensteinInt:
    """``a / c``, raising ValueError unless the division is exact."""
    q, r = divmod(as_eisenstein(a), as_eisenstein(c))
    if r:
        raise ValueError(f"{c} does not divide {a}")
    return q


def mod3(x: Coercible) -> EisensteinInt:
    """Coefficient-wise reduction into {0, 1, 2} + {0, 1, 2}w."""
    x = as_eisenstein(x)
    return EisensteinInt(x.a % 3, x.b % 3)


def parse(text: str) -> EisensteinInt:
    """Parse ``a``, ``-a``, ``b*w``, ``-w``, ``a+b*w`` or ``a-b*w``.

    ``w`` (or ``ω``) stands for the cube root of unity; the ``*`` is optional.
    """
    s = "".join(str(text).split()).replace("ω", "w")
    if not s:
        raise ValueError("empty Eisenstein integer literal")
    if not s.endswith("w"):
        return EisensteinInt(_parse_int(s, text), 0)
    k = max(s.rfind("+"), s.rfind("-"))
    if k <= 0:
        int_part, w_part = "", s
    else:
        int_part, w_part = s[:k], s[k:]
    a = _parse_int(int_part, text) if int_part else 0
    sign = 1
    if w_part[0] in "+-":
        sign = -1 if w_part[0] == "-" else 1
        w_part = w_part[1:]
    coeff = w_part[:-1]
    if coeff.endswith("*"):
        coeff = coeff[:-1]
        if not coeff:
            raise ValueError(f"malformed Eisenstein integer literal {text!r}")
    if coeff and not coeff.isdigit():
        raise ValueError(f"malformed Eisenstein integer literal {text!r}")
    b = sign * (int(coeff) if coeff else 1)
    return EisensteinInt(a, b)


def _parse_int(s: str, original: str) -> int:
    body = s[1:] if s[:1] in "+-" else s
    if not body.isdigit():
        raise ValueError(f"malformed Eisenstein integer literal {original!r}")
    return int(s)
