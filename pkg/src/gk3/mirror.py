"""Lattice-level mirror map on K3 period/Kaehler data.

The map acts on triples (marked surface, complexified Kaehler class,
period class) relative to a hyperbolic-plane frame with generators
``f`` and ``c`` satisfying ``f.f = 0``, ``c.c = -2``, ``f.c = 1`` (here
the fibre and section classes).  Writing ``n = f . Re(period)``, the
mirror data satisfies, modulo ``f``:

    mirror period           =  n^-1 * (c + kahler)
    mirror Kaehler class    =  n^-1 * period - c

Congruence classes modulo ``f`` are canonicalized by zeroing the
``F``-coefficient.  Real and imaginary parts are taken with the formal
conjugation (``zeta <-> zetabar``), so the verification of the mirror
relationship between the two families is an exact identity in the
Laurent ring rather than a sampled check.
"""

from __future__ import annotations

from . import cohomology
from .cohomology import CohClass, imag_part, mukai_pairing, real_part, wedge
from .scalar import NonUnitDivisor, Scalar, as_scalar


class DegeneratePeriod(ValueError):
    """``f . Re(period)`` vanishes; the mirror map is undefined."""


class NonUnitNormalizer(ValueError):
    """``f . Re(period)`` is not invertible in the Laurent ring."""


class UnderdeterminedNormalization(ValueError):
    """The normalization system does not have a unique solution."""


class HyperbolicFrame:
    """Pair of classes spanning a hyperbolic plane in degree two."""

    __slots__ = ("fclass", "cclass")

    def __init__(self, fclass: CohClass, cclass: CohClass):
        if mukai_pairing(fclass, fclass) != Scalar.zero():
            raise ValueError("fclass must have square zero")
        if mukai_pairing(cclass, cclass) != Scalar.from_value(-2):
            raise ValueError("cclass must have square -2")
        if mukai_pairing(fclass, cclass) != Scalar.one():
            raise ValueError("fclass and cclass must pair to 1")
        self.fclass = fclass
        self.cclass = cclass

    @classmethod
    def unchecked(cls, fclass: CohClass, cclass: CohClass) -> "HyperbolicFrame":
        """Skip the invariant checks; for deliberately invalid frames."""
        frame = object.__new__(cls)
        frame.fclass = fclass
        frame.cclass = cclass
        return frame


def standard_frame() -> HyperbolicFrame:
    return HyperbolicFrame(cohomology.F, cohomology.C)


class MirrorTriple:
    """Period and/or complexified Kaehler data of a marked surface.

    Either slot may be ``None``; a present period must have vanishing
    self-intersection.
    """

    __slots__ = ("period", "complexified_kahler")

    def __init__(self, period=None, complexified_kahler=None):
        if period is not None and wedge(period, period):
            raise ValueError("period class must have vanishing self-intersection")
        self.period = period
        self.complexified_kahler = complexified_kahler

    @classmethod
    def _mod_f_representative(cls, period, complexified_kahler) -> "MirrorTriple":
        # Mirror outputs hold canonical mod-F representatives; the
        # period congruence class contains a square-zero representative
        # but the zeroed-F one generally is not it, so skip the check.
        triple = object.__new__(cls)
        triple.period = period
        triple.complexified_kahler = complexified_kahler
        return triple

    def is_normalized(self, frame: HyperbolicFrame) -> bool:
        """True when Im(period) pairs to zero with the frame's fibre class."""
        if self.period is None:
            return True
        return not mukai_pairing(frame.fclass, imag_part(self.period))


def _mod_f(x: CohClass) -> CohClass:
    """Canonical representative modulo the fibre class: F-coefficient zero."""
    return CohClass(a=x.a, cC=x.cC, cF=0, cs=x.cs, csb=x.csb, b=x.b)


def gross_mirror(tr: MirrorTriple, frame: HyperbolicFrame) -> MirrorTriple:
    """Apply the mirror map; outputs are canonical mod-F representatives."""
    if tr.period is None:
        raise DegeneratePeriod("mirror map needs a period class on the input")
    n = mukai_pairing(frame.fclass, real_part(tr.period))
    if not n:
        raise DegeneratePeriod("fibre class pairs to zero with Re(period)")
    try:
        n_inv = n.unit_inverse()
    except NonUnitDivisor as exc:
        raise NonUnitNormalizer(f"normalizer {n} is not a unit") from exc

    kahler = _mod_f(tr.period * n_inv - frame.cclass)
    period = None
    if tr.complexified_kahler is not None:
        period = _mod_f((frame.cclass + tr.complexified_kahler) * n_inv)
    return MirrorTriple._mod_f_representative(period, kahler)


def _solve_unit_system(rows, nvars):
    """Solve a linear system over the scalar ring by unit-pivot elimination.

    ``rows`` is a list of ``(coefficients, rhs)`` pairs.  Every pivot
    that elimination selects must be a monomial unit; raises
    :class:`UnderdeterminedNormalization` when no unique solution
    exists (including inconsistent input).
    """
    rows = [([c for c in coeffs], rhs) for coeffs, rhs in rows]
    pivots = {}
    for col in range(nvars):
        pivot_row = None
        for idx, (coeffs, _) in enumerate(rows):
            if idx in pivots.values() or not coeffs[col]:
                continue
            if any(coeffs[c] for c in range(col)):
                continue
            if coeffs[col].is_monomial():
                pivot_row = idx
                break
        if pivot_row is None:
            continue
        pivots[col] = pivot_row
        pc, prhs = rows[pivot_row]
        inv = pc[col].unit_inverse()
        for idx, (coeffs, rhs) in enumerate(rows):
            if idx == pivot_row or not coeffs[col]:
                continue
            f = coeffs[col] * inv
            new_coeffs = [a - f * b for a, b in zip(coeffs, pc)]
            rows[idx] = (new_coeffs, rhs - f * prhs)
    if len(pivots) < nvars:
        missing = [c for c in range(nvars) if c not in pivots]
        raise UnderdeterminedNormalization(
            f"normalization multipliers {missing} are not determined"
        )
    for idx, (coeffs, rhs) in enumerate(rows):
        if idx not in pivots.values() and (any(coeffs) or rhs):
            raise UnderdeterminedNormalization(
                "normalization constraints are inconsistent"
            )
    solution = [None] * nvars
    for col, idx in pivots.items():
        coeffs, rhs = rows[idx]
        solution[col] = rhs / coeffs[col]
    return solution


def normalize_mod_F(classes, frame: HyperbolicFrame):
    """Fix the mod-F ambiguity of ``(B, omega, Re sigma, Im sigma)``.

    Adds a multiple of the fibre class to each input so that the three
    geometric classes have equal squares and pairwise vanishing
    products.  Since ``f.f = 0`` those constraints are linear in the
    multipliers.  The B-field class genuinely lives modulo the fibre
    class, so its multiplier is fixed by canonicalization (zero
    F-coefficient) rather than by a pairing.
    """
    b, omega, re_sigma, im_sigma = classes
    f = frame.fclass
    mu = mukai_pairing
    two = Scalar.from_value(2)

    fw = mu(f, omega)
    fr = mu(f, re_sigma)
    fm = mu(f, im_sigma)
    w2 = mu(omega, omega)
    r2 = mu(re_sigma, re_sigma)
    m2 = mu(im_sigma, im_sigma)

    # Unknowns: multipliers for (omega, Re sigma, Im sigma).
    rows = [
        (([Scalar.zero(), two * fr, -(two * fm)]), m2 - r2),   # Re^2 = Im^2
        (([-(two * fw), Scalar.zero(), two * fm]), w2 - m2),   # Im^2 = omega^2
        (([-(two * fw), two * fr, Scalar.zero()]), w2 - r2),   # Re^2 = omega^2
        (([fr, fw, Scalar.zero()]), -mu(omega, re_sigma)),     # omega . Re = 0
        (([fm, Scalar.zero(), fw]), -mu(omega, im_sigma)),     # omega . Im = 0
        (([Scalar.zero(), fm, fr]), -mu(re_sigma, im_sigma)),  # Re . Im = 0
    ]
    lam_w, lam_r, lam_m = _solve_unit_system(rows, 3)
    return (
        _mod_f(b),
        omega + cohomology.F * lam_w,
        re_sigma + cohomology.F * lam_r,
        im_sigma + cohomology.F * lam_m,
    )


def mirror_target(t, zeta) -> CohClass:
    """The interpolation family's complexified Kaehler class.

    ``t*sigma/(2*zeta) - zeta*t*sigmabar/2``, written on the dual side.
    """
    t = as_scalar(t)
    z = as_scalar(zeta)
    half = Scalar.monomial("1/2")
    return cohomology.SIGMA * (half * t / z) - cohomology.SIGMABAR * (half * t * z)


def normalized_twistor_period(t, zeta) -> CohClass:
    """Twistor period scaled by ``1/(2*zeta)`` so its fibre pairing is real."""
    t = as_scalar(t)
    z = as_scalar(zeta)
    return cohomology.twistor_period(t, z) * (Scalar.monomial("1/2") / z)


def verify_theorem4(t, zeta, frame: HyperbolicFrame | None = None) -> bool:
    """Check that the two families are mirror partners.

    Builds the normalized twistor period, applies the mirror map with
    the given frame, and compares the resulting complexified Kaehler
    class against the interpolation family's class modulo the fibre
    class.  With symbolic ``t`` and ``zeta`` this is an exact identity
    in the Laurent ring.
    """
    if frame is None:
        frame = standard_frame()
    period = normalized_twistor_period(t, zeta)
    mirrored = gross_mirror(MirrorTriple(period=period), frame)
    return mirrored.complexified_kahler == _mod_f(mirror_target(t, zeta))
