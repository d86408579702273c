"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Elements are stored as rational coordinate vectors over the power basis
1, z, ..., z^(phi(e)-1) of Q[x]/Phi_e(x), with Phi_e the e-th cyclotomic
polynomial.  Mixed-conductor operands are coerced to the lcm conductor, so
values of characters of different subgroups combine without a global field.

No floating point anywhere; coefficients are fractions.Fraction throughout.
Instances are immutable and deliberately unhashable (hash-based containers
would make iteration order depend on coefficient internals).
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from ._numbers import divisors, euler_phi
from .errors import ConductorOverflow

MAX_CONDUCTOR = 10000


def _poly_divide_exact(num, den):
    # exact division of integer polynomials, den monic; remainder must vanish
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        out[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Coefficients of Phi_e, ascending, as a tuple of ints (monic)."""
    poly = [0] * (e + 1)
    poly[0], poly[e] = -1, 1
    for d in divisors(e)[:-1]:
        poly = _poly_divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(e, coeffs):
    # fold exponents mod e (z^e == 1), then take the remainder mod Phi_e
    folded = [Fraction(0)] * e
    for i, c in enumerate(coeffs):
        if c:
            folded[i % e] += c
    phi = cyclotomic_polynomial(e)
    d = len(phi) - 1
    for i in range(e - 1, d - 1, -1):
        c = folded[i]
        if c:
            for j in range(d + 1):
                folded[i - d + j] -= c * phi[j]
    return tuple(folded[:d])


def _check_conductor(e):
    if e < 1:
        raise ConductorOverflow(f"conductor {e} is not positive")
    if e > MAX_CONDUCTOR:
        raise ConductorOverflow(f"conductor {e} exceeds bound {MAX_CONDUCTOR}")


class Cyclotomic:
    """An exact element of Q(zeta_e)."""

    __slots__ = ("conductor", "coeffs")
    __hash__ = None

    def __init__(self, conductor, coeffs, reduced=False):
        _check_conductor(conductor)
        self.conductor = conductor
        if reduced:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = _reduce(conductor, [Fraction(c) for c in coeffs])

    # ----- coercion -----

    @staticmethod
    def from_rational(q):
        return Cyclotomic(1, (Fraction(q),), reduced=True)

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return NotImplemented

    def to_conductor(self, e2):
        """Rewrite over Q(zeta_e2); e must divide e2."""
        if e2 == self.conductor:
            return self
        if e2 % self.conductor != 0:
            raise ConductorOverflow(
                f"cannot coerce conductor {self.conductor} into {e2}")
        _check_conductor(e2)
        m = e2 // self.conductor
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * m + 1 or 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] += c
        return Cyclotomic(e2, out)

    @staticmethod
    def common(a, b):
        e = lcm(a.conductor, b.conductor)
        return a.to_conductor(e), b.to_conductor(e), e

    # ----- ring operations -----

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, e = Cyclotomic.common(self, other)
        return Cyclotomic(e, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)),
                          reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs),
                          reduced=True)

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, e = Cyclotomic.common(self, other)
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1 or 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic(e, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by rationals only; field inverses are never needed here
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclotomic(self.conductor,
                              tuple(c / q for c in self.coeffs), reduced=True)
        return NotImplemented

    def __eq__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = Cyclotomic.common(self, other)
        return a.coeffs == b.coeffs

    # ----- structure maps -----

    def galois(self, k):
        """Image under zeta_e -> zeta_e^k, valid for k coprime to e."""
        e = self.conductor
        if gcd(k, e) != 1:
            raise ValueError(f"galois exponent {k} not coprime to {e}")
        out = [Fraction(0)] * e
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * k % e] += c
        return Cyclotomic(e, out)

    def conjugate(self):
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    # ----- queries -----

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def as_rational(self):
        """The element as a Fraction when it lies in Q, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def as_integer(self):
        q = self.as_rational()
        if q is None or q.denominator != 1:
            return None
        return q.numerator

    def coeff_key(self, e):
        """Coefficient tuple at conductor e; a total sort key for values of
        characters of a group with exponent dividing e."""
        return self.to_conductor(e).coeffs

    def __repr__(self):
        return f"Cyclotomic({render_value(self)!r})"


def zero(e=1):
    return Cyclotomic(e, (Fraction(0),) * euler_phi(e), reduced=True)


def one(e=1):
    return Cyclotomic.from_rational(1)


def root_of_unity(e, k=1):
    """zeta_e^k as a Cyclotomic of conductor e."""
    _check_conductor(e)
    return Cyclotomic(e, [0] * (k % e) + [1])


def render_value(a):
    """Canonical text form "a0 + a1*z(e)^1 + ...", zero terms omitted."""
    parts = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            parts.append(f"{c}*z({a.conductor})^{i}")
    return " + ".join(parts) if parts else "0"


def parse_value(text):
    """Inverse of render_value."""
    text = text.strip()
    if text == "0":
        return Cyclotomic.from_rational(0)
    conductor = 1
    terms = []
    for raw in text.split(" + "):
        tok = raw.strip()
        if "*z(" in tok:
            coef, rest = tok.split("*z(", 1)
            e_str, k_str = rest.split(")^", 1)
            terms.append((Fraction(coef), int(e_str), int(k_str)))
            conductor = lcm(conductor, int(e_str))
        else:
            terms.append((Fraction(tok), 1, 0))
    out = zero(conductor)
    for coef, e, k in terms:
        out = out + root_of_unity(e, k) * coef if e > 1 else out + coef
    return out
