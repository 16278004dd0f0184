"""Polyvector-side degree-two classes and the induced transform maps.

The degree-two polyvector cohomology of the K3 is spanned by four
elements: ``sigma^-1`` (the bivector inverting the holomorphic
two-form), ``sigma^-1*C`` and ``sigma^-1*F`` (the images of the section
and fibre classes under the bundle isomorphism induced by ``sigma``),
and ``sigmabar``.

Contraction against ``sigma`` identifies this space with the span of
``{1, C, F, eta}`` inside even cohomology:

    sigma^-1   -> 4*1        sigma^-1*C -> C
    sigmabar   -> 4*eta      sigma^-1*F -> F

The transform on polyvectors, ``phi_ht``, is *computed* by conjugating
the even-cohomology transform with this contraction, and ``phi_t`` is
its twist by the square root of the Todd class.  Closed-form tables for
both maps are known; the test suite checks that the compositions here
reproduce them on every basis vector.
"""

from __future__ import annotations

from .cohomology import CohClass
from .scalar import Scalar, as_scalar


class NotInImage(ValueError):
    """Input has sigma/sigmabar components, outside the contraction image."""


class HTClass:
    """Element ``p*sigma^-1 + qC*sigma^-1*C + qF*sigma^-1*F + r*sigmabar``."""

    __slots__ = ("p", "qC", "qF", "r")

    def __init__(self, p=0, qC=0, qF=0, r=0):
        self.p = as_scalar(p)
        self.qC = as_scalar(qC)
        self.qF = as_scalar(qF)
        self.r = as_scalar(r)

    def components(self):
        return (self.p, self.qC, self.qF, self.r)

    def __add__(self, other):
        if not isinstance(other, HTClass):
            return NotImplemented
        return HTClass(*(x + y for x, y in zip(self.components(), other.components())))

    def __sub__(self, other):
        if not isinstance(other, HTClass):
            return NotImplemented
        return HTClass(*(x - y for x, y in zip(self.components(), other.components())))

    def __neg__(self):
        return HTClass(*(-x for x in self.components()))

    def __mul__(self, scalar):
        s = as_scalar(scalar)
        return HTClass(*(x * s for x in self.components()))

    __rmul__ = __mul__

    def eval(self, t0=None, zeta0=None) -> "HTClass":
        return HTClass(*(x.eval(t0, zeta0) for x in self.components()))

    def __bool__(self):
        return any(self.components())

    def __eq__(self, other):
        if not isinstance(other, HTClass):
            return NotImplemented
        return self.components() == other.components()

    def __str__(self):
        names = ("sigma^-1", "sigma^-1*C", "sigma^-1*F", "sigmabar")
        parts = [f"({c})*{n}" for c, n in zip(self.components(), names) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"HTClass<{self}>"


SIGMA_INV = HTClass(p=1)
SIGMA_INV_C = HTClass(qC=1)
SIGMA_INV_F = HTClass(qF=1)
SIGMABAR = HTClass(r=1)


def contract_sigma(x: HTClass) -> CohClass:
    """Contraction against the holomorphic two-form."""
    four = Scalar.from_value(4)
    return CohClass(a=four * x.p, cC=x.qC, cF=x.qF, b=four * x.r)


def contract_sigma_inv(x: CohClass) -> HTClass:
    """Inverse of :func:`contract_sigma` on the span of ``{1, C, F, eta}``."""
    if x.cs or x.csb:
        raise NotInImage(
            "class has sigma/sigmabar components and is not a contraction image"
        )
    quarter = Scalar.monomial("1/4")
    return HTClass(p=quarter * x.a, qC=x.cC, qF=x.cF, r=quarter * x.b)


def phi_homega(x: CohClass) -> CohClass:
    """Even-cohomology transform from the elliptic surface to its dual.

    Basis action: ``1 -> -C - F``, ``eta -> F``, ``C -> 1 + eta``,
    ``F -> -eta``, and ``sigma``, ``sigmabar`` map to the equally named
    generators on the dual side.
    """
    return CohClass(
        a=x.cC,
        cC=-x.a,
        cF=-x.a + x.b,
        cs=x.cs,
        csb=x.csb,
        b=x.cC - x.cF,
    )


def phi_ht(x: HTClass) -> HTClass:
    """Polyvector transform: conjugate of phi_homega by the contraction.

    The intermediate class always stays inside the contraction image,
    so this never raises on genuine polyvector input.
    """
    return contract_sigma_inv(phi_homega(contract_sigma(x)))


def todd_contract(x: HTClass, sign: int) -> HTClass:
    """Multiply by ``1 +/- eta`` in the polyvector module structure.

    ``eta`` lowers the polyvector degree by two while raising form
    degree, so it sends ``sigma^-1`` to ``sigmabar`` and kills the
    other three generators.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return HTClass(p=x.p, qC=x.qC, qF=x.qF, r=x.r + sign * x.p)


def phi_t(x: HTClass) -> HTClass:
    """Todd-twisted polyvector transform."""
    return todd_contract(phi_ht(todd_contract(x, -1)), +1)


#: The three transform maps exposed on the command line, each a
#: relabeling from the elliptic surface ("X side") to its dual
#: fibration ("Y side").
TRANSFORMS = {
    "phiOmega": (phi_homega, CohClass, "even cohomology, X side to Y side"),
    "phiHT": (phi_ht, HTClass, "polyvector classes, X side to Y side"),
    "phiT": (phi_t, HTClass, "Todd-twisted polyvector classes, X side to Y side"),
}
