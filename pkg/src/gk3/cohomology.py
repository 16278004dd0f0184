"""Even cohomology of an elliptic K3 surface with a section.

Classes live in the span of six generators:

* ``1`` and ``eta``, the degree-0 and degree-4 generators,
* ``C`` (section) and ``F`` (fibre) with intersection numbers
  ``C.C = -2``, ``C.F = 1``, ``F.F = 0``,
* ``sigma`` and ``sigmabar``, a holomorphic two-form and its conjugate,
  normalized so that ``sigma*sigmabar = 4*eta``.

The dual fibration has structurally identical cohomology, so one
representation serves both sides; the transform maps in
:mod:`gk3.harmonic` are the relabelings from one side to the other.

The Mukai pairing of ``(a, v, b)`` and ``(a', v', b')`` is
``Q(v, v') - a*b' - a'*b`` where ``Q`` is the symmetric intersection
form on degree two.  With this sign the transform on even cohomology
is an isometry, which the test suite checks on all basis pairs.
"""

from __future__ import annotations

from .scalar import Scalar, as_scalar


class CohClass:
    """Element ``a*1 + cC*C + cF*F + cs*sigma + csb*sigmabar + b*eta``.

    All six coefficients are :class:`~gk3.scalar.Scalar` values, so a
    single class can carry symbolic dependence on ``t`` and ``zeta``.
    """

    __slots__ = ("a", "cC", "cF", "cs", "csb", "b")

    def __init__(self, a=0, cC=0, cF=0, cs=0, csb=0, b=0):
        self.a = as_scalar(a)
        self.cC = as_scalar(cC)
        self.cF = as_scalar(cF)
        self.cs = as_scalar(cs)
        self.csb = as_scalar(csb)
        self.b = as_scalar(b)

    def components(self):
        return (self.a, self.cC, self.cF, self.cs, self.csb, self.b)

    def __add__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return CohClass(*(x + y for x, y in zip(self.components(), other.components())))

    def __sub__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return CohClass(*(x - y for x, y in zip(self.components(), other.components())))

    def __neg__(self):
        return CohClass(*(-x for x in self.components()))

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        return CohClass(*(x * s for x in self.components()))

    __rmul__ = __mul__

    def conj(self) -> "CohClass":
        """Conjugate all coefficients and swap the sigma/sigmabar slots."""
        return CohClass(
            a=self.a.conj(),
            cC=self.cC.conj(),
            cF=self.cF.conj(),
            cs=self.csb.conj(),
            csb=self.cs.conj(),
            b=self.b.conj(),
        )

    def wedge(self, other: "CohClass") -> "CohClass":
        return wedge(self, other)

    def zeta_coefficient(self, k: int) -> "CohClass":
        return CohClass(*(x.zeta_coefficient(k) for x in self.components()))

    def eval(self, t0=None, zeta0=None) -> "CohClass":
        return CohClass(*(x.eval(t0, zeta0) for x in self.components()))

    def __bool__(self):
        return any(self.components())

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.components() == other.components()

    def __str__(self):
        names = ("one", "C", "F", "sigma", "sigmabar", "eta")
        parts = [f"({c})*{n}" for c, n in zip(self.components(), names) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CohClass<{self}>"


ZERO = CohClass()
ONE = CohClass(a=1)
C = CohClass(cC=1)
F = CohClass(cF=1)
SIGMA = CohClass(cs=1)
SIGMABAR = CohClass(csb=1)
ETA = CohClass(b=1)


def _q(x: CohClass, y: CohClass) -> Scalar:
    # Symmetric form on degree two: Q(C,C) = -2, Q(C,F) = 1, Q(F,F) = 0,
    # Q(sigma, sigmabar) = 4, everything else involving sigma vanishes.
    return (
        Scalar.from_value(-2) * x.cC * y.cC
        + x.cC * y.cF
        + x.cF * y.cC
        + Scalar.from_value(4) * (x.cs * y.csb + x.csb * y.cs)
    )


def wedge(x: CohClass, y: CohClass) -> CohClass:
    """Cup product truncated to even degree at most four."""
    return CohClass(
        a=x.a * y.a,
        cC=x.a * y.cC + y.a * x.cC,
        cF=x.a * y.cF + y.a * x.cF,
        cs=x.a * y.cs + y.a * x.cs,
        csb=x.a * y.csb + y.a * x.csb,
        b=x.a * y.b + y.a * x.b + _q(x, y),
    )


def mukai_pairing(x: CohClass, y: CohClass) -> Scalar:
    """``<(a,v,b), (a',v',b')> = Q(v,v') - a*b' - a'*b``."""
    return _q(x, y) - x.a * y.b - y.a * x.b


def real_part(x: CohClass) -> CohClass:
    return (x + x.conj()) * Scalar.monomial("1/2")


def imag_part(x: CohClass) -> CohClass:
    from .scalar import GaussRational

    return (x - x.conj()) * Scalar.monomial(GaussRational(0, "-1/2"))


def todd_half(sign: int) -> CohClass:
    """Square root of the Todd class or its inverse: ``1 + eta`` or ``1 - eta``."""
    if sign == 1:
        return ONE + ETA
    if sign == -1:
        return ONE - ETA
    raise ValueError("sign must be +1 or -1")


def alpha_class(t) -> CohClass:
    """The polarizing degree-two class ``(1/t)*C + ((t^2+1)/t)*F``."""
    t = as_scalar(t)
    return CohClass(cC=Scalar.one() / t, cF=(t * t + 1) / t)


def twistor_period(t, zeta) -> CohClass:
    """Period of the hyperkaehler rotation family through the polarized surface.

    ``sigma + 2*zeta*alpha(t) - zeta^2*sigmabar``; its self-intersection
    vanishes identically, as a period must.
    """
    t = as_scalar(t)
    z = as_scalar(zeta)
    return SIGMA + alpha_class(t) * (2 * z) - SIGMABAR * (z * z)


def gualtieri_spinor_class(t, zeta) -> CohClass:
    """Class of the interpolation family's pure spinor on the dual side.

    ``sigma + 2*zeta*((1/t)*1 - t*eta) - zeta^2*sigmabar``, using
    ``sigma*sigmabar = 4*eta`` to rewrite the middle term.
    """
    t = as_scalar(t)
    z = as_scalar(zeta)
    mid = CohClass(a=Scalar.one() / t, b=-t)
    return SIGMA + mid * (2 * z) - SIGMABAR * (z * z)
