"""Exact arithmetic foundation: Laurent polynomials in v and rational functions.

Everything here is immutable and exact.  Coefficients are Python ints where
possible and :class:`fractions.Fraction` otherwise; a Fraction that reduces to
an integer is stored as an int so the fast integer multiplication path stays
available.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import NonPolynomialError

Coeff = int | Fraction


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    return c


def _conv_int(a: list[int], b: list[int]) -> list[int]:
    """Convolution of integer sequences via Kronecker substitution.

    Packs each polynomial into one big integer, multiplies, and unpacks
    signed digits.  One big-int multiply beats schoolbook convolution by a
    wide margin for the degree-few-hundred numerators showing up in the
    wall-crossing sweep.
    """
    max_a = max(abs(x) for x in a)
    max_b = max(abs(x) for x in b)
    bound = min(len(a), len(b)) * max_a * max_b
    bits = bound.bit_length() + 2
    base = 1 << bits
    half = base >> 1
    mask = base - 1

    packed_a = 0
    for x in reversed(a):
        packed_a = (packed_a << bits) + x
    packed_b = 0
    for x in reversed(b):
        packed_b = (packed_b << bits) + x

    prod = packed_a * packed_b
    out = []
    for _ in range(len(a) + len(b) - 1):
        digit = prod & mask
        if digit >= half:
            digit -= base
        out.append(digit)
        prod = (prod - digit) >> bits
    return out


def _conv(a, b):
    if len(a) >= 16 and len(b) >= 16 \
            and all(type(x) is int for x in a) and all(type(x) is int for x in b):
        return _conv_int(a, b)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class LaurentPoly:
    """Dense Laurent polynomial in a single variable v.

    ``coeffs[i]`` is the coefficient of ``v**(min_exp + i)``.  Canonical form:
    first and last stored coefficients are nonzero; zero is the empty tuple
    with ``min_exp == 0``.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs, min_exp: int = 0):
        coeffs = [_norm_coeff(c) for c in coeffs]
        lo = 0
        hi = len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, exp: int, coeff: Coeff = 1) -> "LaurentPoly":
        return cls((coeff,), exp)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            return 0
        return self.min_exp + len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def coeff(self, exp: int) -> Coeff:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] = c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_exp)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly([c * other for c in self.coeffs], self.min_exp)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        return LaurentPoly(_conv(self.coeffs, other.coeffs),
                           self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def v_shift(self, k: int) -> "LaurentPoly":
        """Multiply by the monomial v**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_exp + k)

    def reciprocal(self) -> "LaurentPoly":
        """Substitute v -> 1/v."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.max_exp)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in the Laurent polynomial ring.

        Raises NonPolynomialError if the division leaves a remainder.
        """
        if not other.coeffs:
            raise ZeroDivisionError("division by zero LaurentPoly")
        if not self.coeffs:
            return LaurentPoly.zero()
        rem = list(self.coeffs)
        div = other.coeffs
        d0 = div[0]
        qlen = len(rem) - len(div) + 1
        if qlen <= 0:
            raise NonPolynomialError("degree of divisor exceeds dividend")
        quot = [0] * qlen
        int_path = d0 in (1, -1) and all(type(c) is int for c in rem) \
            and all(type(c) is int for c in div)
        for i in range(qlen):
            c = rem[i]
            if c == 0:
                continue
            q = c * d0 if int_path else Fraction(c) / Fraction(d0)
            quot[i] = q
            for j, dv in enumerate(div):
                rem[i + j] -= q * dv
        if any(rem):
            raise NonPolynomialError("Laurent division left a remainder")
        return LaurentPoly(quot, self.min_exp - other.min_exp)

    # -- the operations the rest of the package relies on ------------------

    def eval_at_one(self) -> Coeff:
        """Sum of all coefficients (the Euler-characteristic specialization)."""
        return _norm_coeff(sum(self.coeffs, start=Fraction(0)))

    def is_palindromic(self) -> bool:
        """True iff p(v) == p(1/v)."""
        return self == self.reciprocal()

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "min_exp": self.min_exp,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPoly":
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        return cls(coeffs, obj["min_exp"])

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + i
            if e == 0:
                terms.append(f"{c}")
            elif e == 1:
                terms.append(f"{c}*v")
            else:
                terms.append(f"{c}*v^{e}")
        return "LaurentPoly(" + " + ".join(terms) + ")"


def quantum_integer(n: int) -> LaurentPoly:
    """[n]_v = v^(n-1) + v^(n-3) + ... + v^(1-n); [0]_v = 0."""
    if n < 0:
        raise ValueError("quantum_integer requires n >= 0")
    if n == 0:
        return LaurentPoly.zero()
    coeffs = [0] * (2 * n - 1)
    for i in range(n):
        coeffs[2 * i] = 1
    return LaurentPoly(coeffs, 1 - n)


# -- ordinary-polynomial gcd helpers (dense lists, low degree first) --------


def _trim(a: list) -> list:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = int_gcd(g, abs(c))
        if g == 1:
            break
    return g or 1


def _primitive(a: list[int]) -> list[int]:
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g != 1:
        a = [c // g for c in a]
    return a


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Fraction-free remainder of a by b (defined up to scaling by lc(b)^k)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while True:
        a = _trim(a)
        if len(a) - 1 < db or not a:
            return a
        la = a[-1]
        a = [lb * c for c in a]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        a = _trim(a)


def _poly_gcd_int(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two nonzero primitive integer polynomials."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r) if r else []
    return _primitive(a)


def _div_exact_int(a: list[int], b: list[int]) -> list:
    """Exact quotient of dense polynomial lists; divisor constant term nonzero."""
    b0 = b[0]
    out = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(out)):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, b0)
        if r:
            raise NonPolynomialError("inexact division while reducing")
        out[i] = q
        for j, dv in enumerate(b):
            rem[i + j] -= q * dv
    if any(rem):
        raise NonPolynomialError("inexact division while reducing")
    return out


def _to_int_list(coeffs) -> tuple[list[int], Fraction]:
    """Scale a rational coefficient list to a primitive integer list.

    Returns (primitive list, content) with content * list == original.
    """
    denom = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            denom = denom * c.denominator // int_gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    g = _content(ints)
    if ints[-1] < 0:
        g = -g
    if g != 1:
        ints = [c // g for c in ints]
    return ints, Fraction(g, denom)


class RatFunc:
    """Normalized quotient of two Laurent polynomials in v.

    Canonical form: num and den coprime over the polynomial ring after
    clearing v-powers, den with lowest term 1*v^0.  All v-power content sits
    in the numerator, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = LaurentPoly((1,))):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", LaurentPoly.zero())
            object.__setattr__(self, "den", LaurentPoly.one())
            return
        shift = num.min_exp - den.min_exp
        n_int, n_cont = _to_int_list(list(num.coeffs))
        d_int, d_cont = _to_int_list(list(den.coeffs))
        if len(n_int) > 1 and len(d_int) > 1:
            g = _poly_gcd_int(n_int, d_int)
            if len(g) > 1:
                n_int = _div_exact_int(n_int, g) if g[0] != 0 else n_int
                d_int = _div_exact_int(d_int, g)
        scale = n_cont / (d_cont * d_int[0])
        den_coeffs = [Fraction(c, d_int[0]) for c in d_int]
        num_coeffs = [c * scale for c in n_int]
        object.__setattr__(self, "num", LaurentPoly(num_coeffs, shift))
        object.__setattr__(self, "den", LaurentPoly(den_coeffs, 0))

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(LaurentPoly.one())

    @classmethod
    def of(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(LaurentPoly((x,)))
        if isinstance(x, LaurentPoly):
            return cls(x)
        raise TypeError(f"cannot lift {x!r} to RatFunc")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.of(other) / self

    def v_shift(self, k: int) -> "RatFunc":
        out = object.__new__(RatFunc)
        object.__setattr__(out, "num", self.num.v_shift(k))
        object.__setattr__(out, "den", self.den)
        return out

    def to_laurent(self) -> LaurentPoly:
        """Exact quotient num/den, which must be a Laurent polynomial."""
        if self.den == LaurentPoly.one():
            return self.num
        return self.num.divexact(self.den)

    def is_laurent(self) -> bool:
        return self.den == LaurentPoly.one()

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RatFunc":
        return cls(LaurentPoly.from_json(obj["num"]),
                   LaurentPoly.from_json(obj["den"]))

    def __repr__(self):
        if self.den == LaurentPoly.one():
            return f"RatFunc({self.num!r})"
        return f"RatFunc({self.num!r} / {self.den!r})"
