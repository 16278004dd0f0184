"""Exact coefficient arithmetic underlying every other module.

Two layers:

* ``GaussRational``: complex numbers with exact rational real and
  imaginary parts, the coefficient field for all classes.
* ``Scalar``: Laurent polynomials over the Gaussian rationals in three
  commuting variables, the real parameter ``t`` and the complex
  parameter ``zeta`` together with its formal conjugate ``zetabar``.

``zeta`` and ``zetabar`` are independent variables linked only through
the conjugation involution (which also conjugates coefficients and
fixes ``t``).  This makes real/imaginary decompositions of
``zeta``-dependent quantities exact symbolic operations; no absolute
values or square roots ever appear.

Division is deliberately restricted to single-term divisors, i.e. the
units of the Laurent ring.  Every inverse needed downstream (``1/t``,
``1/(2*zeta)``, ...) is of that shape.
"""

from __future__ import annotations

from fractions import Fraction


class NonUnitDivisor(ArithmeticError):
    """Raised when dividing by anything other than a nonzero monomial."""


class PoleAtSample(ArithmeticError):
    """Raised when a negative exponent is evaluated at zero."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class GaussRational:
    """A complex number ``re + im*i`` with rational parts.

    Immutable value type with exact field arithmetic.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRational(self.re / n, -self.im / n)

    def conj(self):
        return GaussRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if self.im == 1:
            im = "i"
        elif self.im == -1:
            im = "-i"
        else:
            im = f"{self.im}i"
        if not self.re:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"


GR_ZERO = GaussRational(0)
GR_ONE = GaussRational(1)
GR_I = GaussRational(0, 1)


class Scalar:
    """Laurent polynomial in ``t``, ``zeta``, ``zetabar``.

    Terms are stored as a map from exponent triples
    ``(e_t, e_zeta, e_zetabar)`` to nonzero ``GaussRational``
    coefficients; the empty map is zero.  Instances are treated as
    immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v}

    # -- constructors ------------------------------------------------

    @classmethod
    def from_value(cls, x) -> "Scalar":
        """Coerce an int, Fraction, GaussRational, or Scalar."""
        if isinstance(x, Scalar):
            return x
        if isinstance(x, GaussRational):
            return cls({(0, 0, 0): x})
        if isinstance(x, (int, Fraction)):
            return cls({(0, 0, 0): GaussRational(x)})
        raise TypeError(f"cannot interpret {x!r} as a Scalar")

    @classmethod
    def monomial(cls, coeff, e_t=0, e_zeta=0, e_zetabar=0) -> "Scalar":
        c = coeff if isinstance(coeff, GaussRational) else GaussRational(coeff)
        return cls({(e_t, e_zeta, e_zetabar): c})

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls.monomial(1)

    @classmethod
    def i(cls) -> "Scalar":
        return cls.monomial(GR_I)

    @classmethod
    def t(cls) -> "Scalar":
        return cls.monomial(1, e_t=1)

    @classmethod
    def zeta(cls) -> "Scalar":
        return cls.monomial(1, e_zeta=1)

    @classmethod
    def zetabar(cls) -> "Scalar":
        return cls.monomial(1, e_zetabar=1)

    # -- ring operations ---------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction, GaussRational)):
            return Scalar.from_value(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, v in o.terms.items():
            s = terms.get(k, GR_ZERO) + v
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return Scalar(terms)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in o.terms.items():
                k = (a1 + a2, b1 + b2, c1 + c2)
                s = terms.get(k, GR_ZERO) + v1 * v2
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
        return Scalar(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.unit_inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.unit_inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.unit_inverse() ** (-n)
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def unit_inverse(self) -> "Scalar":
        """Inverse of a monomial; raises ``NonUnitDivisor`` otherwise."""
        if len(self.terms) != 1:
            raise NonUnitDivisor(
                f"divisor must be a single nonzero monomial, got {self}"
            )
        ((a, b, c), v), = self.terms.items()
        return Scalar({(-a, -b, -c): v.inverse()})

    # -- structure ----------------------------------------------------

    def conj(self) -> "Scalar":
        """Conjugation: fixes t, swaps zeta and zetabar, conjugates coefficients."""
        return Scalar({(a, c, b): v.conj() for (a, b, c), v in self.terms.items()})

    def eval(self, t0=None, zeta0=None) -> GaussRational:
        """Substitute ``t = t0``, ``zeta = zeta0``, ``zetabar = conj(zeta0)``.

        Raises ``PoleAtSample`` when a negative exponent meets a zero
        sample, and ``ValueError`` when a needed sample is missing.
        """
        tv = None if t0 is None else _as_fraction(t0)
        zv = None
        if zeta0 is not None:
            zv = zeta0 if isinstance(zeta0, GaussRational) else GaussRational(zeta0)
        out = GR_ZERO
        for (a, b, c), v in self.terms.items():
            term = v
            if a:
                if tv is None:
                    raise ValueError("scalar depends on t but no t sample given")
                if tv == 0 and a < 0:
                    raise PoleAtSample("t^negative evaluated at t = 0")
                term = term * GaussRational(tv**a)
            if b or c:
                if zv is None:
                    raise ValueError("scalar depends on zeta but no zeta sample given")
                if not zv and (b < 0 or c < 0):
                    raise PoleAtSample("zeta^negative evaluated at zeta = 0")
                if b:
                    term = term * zv**b
                if c:
                    term = term * zv.conj() ** c
            out = out + term
        return out

    def zeta_coefficient(self, k: int) -> "Scalar":
        """Coefficient of ``zeta**k`` among terms free of ``zetabar``."""
        return Scalar(
            {(a, 0, 0): v for (a, b, c), v in self.terms.items() if b == k and c == 0}
        )

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> GaussRational:
        """The value of a constant scalar; raises if any variable appears."""
        if not self.terms:
            return GR_ZERO
        if set(self.terms) == {(0, 0, 0)}:
            return self.terms[(0, 0, 0)]
        raise ValueError(f"{self} is not constant")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, reverse=True):
            v = self.terms[key]
            factors = []
            for name, e in zip(("t", "zeta", "zetabar"), key):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            coeff = str(v)
            if ("+" in coeff[1:]) or ("-" in coeff[1:]):
                coeff = f"({coeff})"
            if factors and coeff == "1":
                parts.append("*".join(factors))
            elif factors and coeff == "-1":
                parts.append("-" + "*".join(factors))
            elif factors:
                parts.append(coeff + "*" + "*".join(factors))
            else:
                parts.append(coeff)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Scalar<{self}>"


def as_scalar(x) -> Scalar:
    return Scalar.from_value(x)


# Thin named wrappers for the three core operations; most code uses the
# operators directly.

def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def scalar_div_unit(a: Scalar, b: Scalar) -> Scalar:
    return a / b


def scalar_eval(a: Scalar, t0=None, zeta0=None) -> GaussRational:
    return a.eval(t0, zeta0)
