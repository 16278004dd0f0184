"""Generalized complex structures on the flat local model.

A generalized complex structure is an endomorphism of ``T + T*`` that
squares to minus the identity and is orthogonal for the natural
pairing ``<X + xi, Y + eta> = (xi(Y) + eta(X))/2``.  Complex and
symplectic structures give the two basic examples; the one-parameter
interpolation family between them is realized here pointwise as exact
8x8 matrices over the Gaussian rationals, after evaluating the
parameters ``zeta`` (complex) and ``t`` (real) at rational samples.

All two-forms are taken from :mod:`gk3.spinor`, with Gram and map
matrices derived mechanically from the form coefficients so that the
two modules cannot drift apart on conventions.  Coordinates on
``T + T*`` are tangent-first: ``(dx1*, dy1*, dx2*, dy2*, dx1, dy1,
dx2, dy2)``, matching the annihilator coordinates in
:mod:`gk3.spinor`.
"""

from __future__ import annotations

from fractions import Fraction

from . import spinor as sp
from .linalg import CMatrix, NotAGraph, eigenspace_i, graph_extract, kernel
from .scalar import GR_ZERO, GaussRational
from .spinor import Spinor


class DegenerateForm(ValueError):
    """A two-form that must be nondegenerate is singular."""


def form_gram(form: Spinor) -> CMatrix:
    """Gram matrix ``G[j][k] = form(e_j, e_k)`` of a degree-two form."""
    if not form.is_homogeneous(2):
        raise DegenerateForm("expected a homogeneous two-form")
    g = [[GR_ZERO] * 4 for _ in range(4)]
    for j in range(4):
        for k in range(j + 1, 4):
            c = form.coefficient((1 << j) | (1 << k))
            g[j][k] = c
            g[k][j] = -c
    return CMatrix(g)


def form_map_matrix(form: Spinor) -> CMatrix:
    """Matrix of ``v -> form(v, .)`` from tangent to cotangent coordinates."""
    return form_gram(form).transpose()


def _from_columns(cols) -> CMatrix:
    return CMatrix([[col[i] for col in cols] for i in range(len(cols[0]))])


def _block_matrix(a, p, q, d) -> CMatrix:
    n = a.rows
    out = []
    for i in range(n):
        out.append(list(a.entries[i]) + list(p.entries[i]))
    for i in range(n):
        out.append(list(q.entries[i]) + list(d.entries[i]))
    return CMatrix(out)


# Complex structure of the model: I dx_k* = dy_k*, I dy_k* = -dx_k*.
I_MATRIX = CMatrix(
    [
        [0, -1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, -1],
        [0, 0, 1, 0],
    ]
)

#: Gram matrix of twice the natural pairing; orthogonality statements
#: are invariant under this rescaling.
PAIRING = _block_matrix(
    CMatrix.zeros(4, 4), CMatrix.identity(4), CMatrix.identity(4), CMatrix.zeros(4, 4)
)


class GCStructure:
    """An endomorphism of ``(T + T*) (x) C`` at a point of the model."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: CMatrix):
        if (matrix.rows, matrix.cols) != (8, 8):
            raise ValueError("expected an 8x8 matrix")
        self.matrix = matrix

    @classmethod
    def from_blocks(cls, a, p, q, d) -> "GCStructure":
        return cls(_block_matrix(a, p, q, d))

    def blocks(self):
        m = self.matrix
        r4, r8 = range(4), range(4, 8)
        return (
            m.submatrix(r4, r4),
            m.submatrix(r4, r8),
            m.submatrix(r8, r4),
            m.submatrix(r8, r8),
        )

    def squares_to_minus_identity(self) -> bool:
        return self.matrix * self.matrix == CMatrix.identity(8).scale(-1)

    def is_orthogonal(self) -> bool:
        return self.matrix.transpose() * PAIRING * self.matrix == PAIRING

    def __neg__(self):
        return GCStructure(-self.matrix)

    def __eq__(self, other):
        if not isinstance(other, GCStructure):
            return NotImplemented
        return self.matrix == other.matrix

    def __repr__(self):
        return f"GCStructure({self.matrix!r})"


def j_complex() -> GCStructure:
    """Structure of complex type: blocks ``(-I, 0; 0, I*)``."""
    z = CMatrix.zeros(4, 4)
    return GCStructure.from_blocks(-I_MATRIX, z, z, I_MATRIX.transpose())


def j_symplectic(omega: Spinor) -> GCStructure:
    """Structure of symplectic type: blocks ``(0, -omega^-1; omega, 0)``."""
    m = form_map_matrix(omega)
    try:
        m_inv = m.inverse()
    except ValueError as exc:
        raise DegenerateForm("symplectic form is degenerate") from exc
    z = CMatrix.zeros(4, 4)
    return GCStructure.from_blocks(z, -m_inv, m, z)


def b_transform(j: GCStructure, b: Spinor) -> GCStructure:
    """Conjugate by the shear of a two-form: ``(1,0;-B,1) j (1,0;B,1)``."""
    m = form_map_matrix(b)
    a, p, q, d = j.blocks()
    # (1,0;-B,1) (A,P;Q,D) (1,0;B,1) worked out blockwise.
    a2 = a + p * m
    q2 = q + d * m - m * a2
    d2 = d - m * p
    return GCStructure.from_blocks(a2, p, q2, d2)


def _family_coefficients(zeta: GaussRational):
    n = zeta.norm_sq()
    den = 1 + n
    return (
        Fraction(1 - n, 1) / den,
        Fraction(-2) * zeta.im / den,
        Fraction(2) * zeta.re / den,
    )


def j_zeta(zeta, t) -> GCStructure:
    """Member of the interpolation family at ``zeta``, forms scaled by ``t``.

    The convex combination
    ``cI*J_complex + cJ*J_{t*omega_j} + cK*J_{t*omega_k}`` with the
    stereographic coefficients ``cI = (1-|z|^2)/(1+|z|^2)``,
    ``cJ = -2 Im z/(1+|z|^2)``, ``cK = 2 Re z/(1+|z|^2)``.
    """
    if not isinstance(zeta, GaussRational):
        zeta = GaussRational(zeta)
    t = Fraction(t)
    ci, cj, ck = _family_coefficients(zeta)
    m = j_complex().matrix.scale(GaussRational(ci))
    if cj:
        m = m + j_symplectic(sp.omega_j() * t).matrix.scale(GaussRational(cj))
    if ck:
        m = m + j_symplectic(sp.omega_k() * t).matrix.scale(GaussRational(ck))
    return GCStructure(m)


def j_zeta_infinity() -> GCStructure:
    """The family's value at infinity: minus the complex-type structure."""
    return -j_complex()


# -- Dolbeault frames ------------------------------------------------

def _half():
    return GaussRational(Fraction(1, 2))


def _half_i():
    return GaussRational(0, Fraction(1, 2))


def tangent_frame() -> CMatrix:
    """Columns ``(dz1bar*, dz2bar*, dz1*, dz2*)`` in real tangent coordinates."""
    h, hi = _half(), _half_i()
    return _from_columns(
        [
            [h, hi, GR_ZERO, GR_ZERO],
            [GR_ZERO, GR_ZERO, h, hi],
            [h, -hi, GR_ZERO, GR_ZERO],
            [GR_ZERO, GR_ZERO, h, -hi],
        ]
    )


def covector_frame() -> CMatrix:
    """Columns ``(dz1, dz2, dz1bar, dz2bar)`` in real cotangent coordinates."""
    one, i = GaussRational(1), GaussRational(0, 1)
    return _from_columns(
        [
            [one, i, GR_ZERO, GR_ZERO],
            [GR_ZERO, GR_ZERO, one, i],
            [one, -i, GR_ZERO, GR_ZERO],
            [GR_ZERO, GR_ZERO, one, -i],
        ]
    )


def dolbeault_frame() -> CMatrix:
    """Frame adapted to the graph decomposition of deformed eigenspaces.

    Column order: base block ``(dz1bar*, dz2bar*, dz1, dz2)`` then
    fiber block ``(dz1bar, dz2bar, dz1*, dz2*)``, all expressed in the
    real tangent-first coordinates.
    """
    tf = tangent_frame()
    cf = covector_frame()

    def tangent_col(j):
        return [tf.entries[i][j] for i in range(4)] + [GR_ZERO] * 4

    def covector_col(j):
        return [GR_ZERO] * 4 + [cf.entries[i][j] for i in range(4)]

    cols = [
        tangent_col(0),  # dz1bar*
        tangent_col(1),  # dz2bar*
        covector_col(0),  # dz1
        covector_col(1),  # dz2
        covector_col(2),  # dz1bar
        covector_col(3),  # dz2bar
        tangent_col(2),  # dz1*
        tangent_col(3),  # dz2*
    ]
    return _from_columns(cols)


def _holomorphic_sigma_block(form: Spinor) -> CMatrix:
    """Matrix of ``w -> form(w, .)`` from ``T^{1,0}`` to ``(dz1, dz2)``."""
    m = form_map_matrix(form)
    tf = tangent_frame()
    cf_inv = covector_frame().inverse()
    cols = []
    for j in (2, 3):  # dz1*, dz2* columns of the tangent frame
        v = [tf.entries[i][j] for i in range(4)]
        w = cf_inv.apply(m.apply(v))
        if w[2] or w[3]:
            raise DegenerateForm("form is not of type (2,0)")
        cols.append(w[:2])
    return _from_columns(cols)


def twistor_pointwise_graph(zeta, t=None) -> CMatrix:
    """Graph of the deformed antiholomorphic tangent space, twistor side.

    The kernel of ``sigma + 2*zeta*omega_i - zeta^2*sigmabar`` on the
    complexified tangent space is two-dimensional; expressed over the
    base ``(dz1bar*, dz2bar*)`` it is the graph of a map to
    ``(dz1*, dz2*)``, returned as a 2x2 matrix.  The result does not
    depend on ``t``.
    """
    if not isinstance(zeta, GaussRational):
        zeta = GaussRational(zeta)
    form = (
        sp.sigma()
        + sp.omega_i() * (2 * zeta)
        - sp.sigmabar() * (zeta * zeta)
    )
    m = form_map_matrix(form)
    ker = kernel(m)
    if ker.dim != 2:
        raise NotAGraph(f"kernel has dimension {ker.dim}, expected 2")
    in_frame = ker.transformed(tangent_frame().inverse())
    return graph_extract(in_frame, 2)


def twistor_direction_matrix(zeta) -> CMatrix:
    """Closed form of the same graph: ``-2*zeta*sigma^-1(omega_i(., .))``.

    Built mechanically from the form data: contract a base vector into
    ``omega_i``, then invert the bundle map induced by ``sigma``.
    """
    if not isinstance(zeta, GaussRational):
        zeta = GaussRational(zeta)
    s_block = _holomorphic_sigma_block(sp.sigma())
    s_inv = s_block.inverse()
    m_omega = form_map_matrix(sp.omega_i())
    tf = tangent_frame()
    cf_inv = covector_frame().inverse()
    cols = []
    for j in (0, 1):  # dz1bar*, dz2bar*
        v = [tf.entries[i][j] for i in range(4)]
        w = cf_inv.apply(m_omega.apply(v))
        if w[2] or w[3]:
            raise DegenerateForm("omega_i image of an antiholomorphic vector "
                                 "should be a (1,0)-form")
        image = s_inv.apply(w[:2])
        cols.append([x * (-2 * zeta) for x in image])
    return _from_columns(cols)


def deformation_graph_Y(zeta, t) -> CMatrix:
    """Graph of the +i eigenspace of the interpolation family member.

    The eigenspace is expressed over the base
    ``(dz1bar*, dz2bar*, dz1, dz2)`` of the undeformed +i eigenspace;
    the returned 4x4 matrix maps it into ``(dz1bar, dz2bar, dz1*,
    dz2*)``.  Raises :class:`NotAGraph` outside the graph chart.
    """
    j = j_zeta(zeta, t)
    frame = dolbeault_frame()
    conjugated = frame.inverse() * j.matrix * frame
    space = eigenspace_i(conjugated)
    return graph_extract(space, 4)


def deformation_direction_matrix(zeta, t) -> CMatrix:
    """Closed form of the same graph.

    This is the action of ``(zeta/2) * (-(1/t)*sigma^-1 + t*sigmabar)``
    with the polyvector normalization of :mod:`gk3.harmonic`: a base
    vector ``Z`` in the antiholomorphic tangent block maps to
    ``(zeta*t/2) * sigmabar(Z, .)``, and a base one-form ``xi`` in the
    holomorphic cotangent block maps to ``-(zeta/(2t)) * sigma^-1(xi)``
    where the bivector ``sigma^-1`` acts on one-forms as four times the
    inverse of the bundle map ``w -> sigma(w, .)`` (the same
    normalization that makes its contraction with ``sigma`` equal 4).
    """
    if not isinstance(zeta, GaussRational):
        zeta = GaussRational(zeta)
    t = Fraction(t)
    m_sigmabar = form_map_matrix(sp.sigmabar())
    tf = tangent_frame()
    cf_inv = covector_frame().inverse()
    s_inv = _holomorphic_sigma_block(sp.sigma()).inverse()

    cols = []
    for j in (0, 1):  # dz1bar*, dz2bar* -> one-forms in (dz1bar, dz2bar)
        v = [tf.entries[i][j] for i in range(4)]
        w = cf_inv.apply(m_sigmabar.apply(v))
        if w[0] or w[1]:
            raise DegenerateForm("sigmabar image of an antiholomorphic vector "
                                 "should be a (0,1)-form")
        scale = zeta * t / 2
        cols.append([w[2] * scale, w[3] * scale, GR_ZERO, GR_ZERO])
    for j in (0, 1):  # dz1, dz2 -> tangent vectors in (dz1*, dz2*)
        xi = [GaussRational(1 if k == j else 0) for k in range(2)]
        image = s_inv.apply(xi)
        scale = -zeta / GaussRational(2 * t) * 4
        cols.append([GR_ZERO, GR_ZERO, image[0] * scale, image[1] * scale])
    return _from_columns(cols)
