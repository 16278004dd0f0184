"""Lattice-level data of the two deformation families.

For each real parameter ``t > 1`` the twistor family deforms the
elliptic surface in a direction ``u_t`` inside the polyvector classes,
while the interpolation family deforms the dual fibration in a
direction ``v_t``.  The Todd-twisted transform carries ``u_t`` to
``v_t`` up to the correction ``-(1/(2t)) * sigmabar``, an exact Laurent
identity in ``t``; the untwisted transform carries ``u_t`` to ``v_t``
on the nose.  Everything here is symbolic in ``t`` unless a numeric
value is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cohomology
from .cohomology import alpha_class, gualtieri_spinor_class, mukai_pairing, twistor_period
from .harmonic import HTClass, contract_sigma_inv, phi_ht, phi_t
from .scalar import Scalar, as_scalar


@dataclass
class FamilyReport:
    """Reproducible summary of one parameter value of the two families."""

    tag: str
    direction_x: HTClass
    direction_y: HTClass
    correction: HTClass
    verdicts: dict = field(default_factory=dict)

    def all_pass(self) -> bool:
        return all(self.verdicts.values())


def direction_X(t) -> HTClass:
    """Deformation direction of the twistor family.

    Minus twice the polarizing class, pulled back through the
    contraction isomorphism: ``-(2/t)*sigma^-1*C -
    (2(t^2+1)/t)*sigma^-1*F``.
    """
    t = as_scalar(t)
    return contract_sigma_inv(alpha_class(t)) * (-2)


def direction_Y(t) -> HTClass:
    """Deformation direction of the interpolation family.

    ``(1/2) * (-(1/t)*sigma^-1 + t*sigmabar)``.
    """
    t = as_scalar(t)
    half = Scalar.monomial("1/2")
    return HTClass(p=-half / t, r=half * t)


def direction_X_infinity() -> HTClass:
    """Renormalized large-parameter direction ``-2*sigma^-1*F``."""
    return HTClass(qF=-2)


def direction_Y_infinity() -> HTClass:
    """Renormalized large-parameter direction ``(1/2)*sigmabar``."""
    return HTClass(r=Scalar.monomial("1/2"))


def bfield_correction(t) -> HTClass:
    """``phi_t(u_t) - v_t``; equals ``-(1/(2t))*sigmabar`` identically."""
    t = as_scalar(t)
    return phi_t(direction_X(t)) - direction_Y(t)


def bfield_correction_untwisted(t) -> HTClass:
    """``phi_ht(u_t) - v_t``; vanishes identically."""
    t = as_scalar(t)
    return phi_ht(direction_X(t)) - direction_Y(t)


def direction_from_spinor_family(family: str, t) -> HTClass:
    """Recover a deformation direction from its family of period classes.

    Takes the coefficient of ``zeta`` in the family's period or spinor
    class, applies the inverse contraction, and negates.  ``family`` is
    ``"X"`` (twistor periods) or ``"Y"`` (interpolation spinor classes).
    """
    t = as_scalar(t)
    z = Scalar.zeta()
    if family == "X":
        cls = twistor_period(t, z)
    elif family == "Y":
        cls = gualtieri_spinor_class(t, z)
    else:
        raise ValueError("family must be 'X' or 'Y'")
    linear = cls.zeta_coefficient(1)
    return -contract_sigma_inv(linear)


def kahler_checks(t) -> FamilyReport:
    """Assemble the identity verdicts for one value of ``t``.

    Covers the intersection numbers of the polarizing class
    (``alpha.C = (t^2-1)/t``, ``alpha.F = 1/t``, ``alpha^2 = 2``, and
    ``alpha.C = 0`` at ``t = 1``), both correction identities, and the
    recovery of the directions from their families.
    """
    t = as_scalar(t)
    tag = str(t)
    alpha = alpha_class(t)
    one = Scalar.one()
    u_t = direction_X(t)
    v_t = direction_Y(t)
    correction = bfield_correction(t)
    expected_correction = HTClass(r=-(Scalar.monomial("1/2") / t))

    alpha_1 = alpha_class(Scalar.one())
    verdicts = {
        "alpha-dot-C": mukai_pairing(alpha, cohomology.C) == (t * t - 1) / t,
        "alpha-dot-F": mukai_pairing(alpha, cohomology.F) == one / t,
        "alpha-squared": mukai_pairing(alpha, alpha) == 2 * one,
        "alpha-dot-C-at-t-1": mukai_pairing(alpha_1, cohomology.C) == Scalar.zero(),
        "correction-is-halved-inverse-t": correction == expected_correction,
        "untwisted-correction-vanishes": not bfield_correction_untwisted(t),
        "twistor-direction-recovered": direction_from_spinor_family("X", t) == u_t,
        "interpolation-direction-recovered": direction_from_spinor_family("Y", t) == v_t,
    }
    return FamilyReport(
        tag=tag,
        direction_x=u_t,
        direction_y=v_t,
        correction=correction,
        verdicts=verdicts,
    )
