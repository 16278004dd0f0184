from fractions import Fraction

import pytest

from gk3 import gcs
from gk3 import spinor as sp
from gk3.gcs import (
    DegenerateForm,
    GCStructure,
    b_transform,
    deformation_direction_matrix,
    deformation_graph_Y,
    j_complex,
    j_symplectic,
    j_zeta,
    j_zeta_infinity,
    twistor_direction_matrix,
    twistor_pointwise_graph,
)
from gk3.linalg import CMatrix, NotAGraph, eigenspace_i, kernel
from gk3.scalar import GaussRational

HALF = Fraction(1, 2)
ZETAS = [
    GaussRational(HALF),
    GaussRational(Fraction(1, 3)),
    GaussRational(0, 1),
    GaussRational(Fraction(3, 5), Fraction(4, 5)),
    GaussRational(1, -1),
    GaussRational(Fraction(-2, 3), Fraction(1, 4)),
]
TSAMPLES = [Fraction(3, 2), Fraction(2), Fraction(5)]


def test_flat_model_invariants():
    assert gcs.I_MATRIX * gcs.I_MATRIX == CMatrix.identity(4).scale(-1)
    # omega_j, omega_k nondegenerate; sigma gram singular on T (x) C
    j_symplectic(sp.omega_j())
    j_symplectic(sp.omega_k())
    with pytest.raises(ValueError):
        gcs.form_map_matrix(sp.sigma()).inverse()


def test_j_complex_algebra():
    j = j_complex()
    assert j.squares_to_minus_identity()
    assert j.is_orthogonal()


def test_j_symplectic_algebra():
    for form in (sp.omega_i(), sp.omega_j(), sp.omega_k()):
        j = j_symplectic(form)
        assert j.squares_to_minus_identity()
        assert j.is_orthogonal()


def test_j_symplectic_degenerate():
    with pytest.raises(DegenerateForm):
        j_symplectic(sp.DX1.wedge(sp.DY1))  # rank 2


def test_b_transform_basics():
    j = j_symplectic(sp.omega_j())
    assert b_transform(j, sp.Spinor.zero()) == j
    b = sp.omega_k() * Fraction(2, 7) + sp.DX1.wedge(sp.DX2) * 3
    jb = b_transform(j, b)
    assert jb.squares_to_minus_identity()
    assert jb.is_orthogonal()


def test_b_transform_group_action():
    j = j_complex()
    b1 = sp.omega_j() * HALF
    b2 = sp.DX1.wedge(sp.DY2) * Fraction(-3, 4)
    assert b_transform(j, b1 + b2) == b_transform(b_transform(j, b2), b1)


def test_theta_family_factorization():
    # cos/sin from a Pythagorean pair: the interpolation at angle theta
    # equals the B-field transform of csc(theta) omega_j by -cot(theta) omega_k.
    cos, sin = Fraction(3, 5), Fraction(4, 5)
    j_theta = GCStructure(
        j_complex().matrix.scale(GaussRational(cos))
        + j_symplectic(sp.omega_j()).matrix.scale(GaussRational(sin))
    )
    expected = b_transform(
        j_symplectic(sp.omega_j() * (1 / sin)), sp.omega_k() * (-cos / sin)
    )
    assert j_theta == expected


def test_j_zeta_special_values():
    t = Fraction(2)
    assert j_zeta(GaussRational(0), t) == j_complex()
    assert j_zeta_infinity() == -j_complex()
    assert j_zeta_infinity().squares_to_minus_identity()
    conj_space = eigenspace_i(j_zeta_infinity().matrix)
    assert conj_space == eigenspace_i(j_complex().matrix).conj()


def test_j_zeta_algebra_and_unit_circle():
    for t in TSAMPLES:
        for z in ZETAS:
            j = j_zeta(z, t)
            assert j.squares_to_minus_identity()
            assert j.is_orthogonal()
            if z.norm_sq() == 1:
                assert j.blocks()[0].is_zero()


def test_j_zeta_bfield_factorization():
    for t in TSAMPLES[:2]:
        for z in ZETAS:
            if not z:
                continue
            b, om = sp.bfield_symplectic_data(z, t)
            assert b_transform(j_symplectic(om), b) == j_zeta(z, t)


def test_eigenspace_transverse_to_conjugate():
    for z in ZETAS:
        space = eigenspace_i(j_zeta(z, Fraction(2)).matrix)
        assert space.dim == 4
        assert space.intersection(space.conj()).dim == 0


def test_twistor_kernel_dimension():
    for z in ZETAS:
        form = sp.sigma() + sp.omega_i() * (2 * z) - sp.sigmabar() * (z * z)
        assert kernel(gcs.form_map_matrix(form)).dim == 2


def test_twistor_graph_matches_closed_form():
    for z in ZETAS:
        assert twistor_pointwise_graph(z) == twistor_direction_matrix(z)
    assert twistor_pointwise_graph(GaussRational(0)) == CMatrix.zeros(2, 2)


def test_twistor_graph_explicit_value():
    # at zeta = 1/3 the graph is -(2/3) sigma^-1 omega_i: off-diagonal +-i/3
    z = GaussRational(Fraction(1, 3))
    third_i = GaussRational(0, Fraction(1, 3))
    assert twistor_pointwise_graph(z) == CMatrix([[0, third_i], [-third_i, 0]])


def test_deformation_graph_matches_closed_form():
    for t in TSAMPLES:
        for z in ZETAS:
            assert deformation_graph_Y(z, t) == deformation_direction_matrix(z, t)


def test_deformation_graph_zero_and_blocks():
    t = Fraction(2)
    assert deformation_graph_Y(GaussRational(0), t) == CMatrix.zeros(4, 4)
    z = GaussRational(HALF)
    g = deformation_graph_Y(z, t)
    # sigmabar block scale: zeta t / 2; bivector block scale: -zeta/(2t)
    # times the operator normalization 4
    assert g.entries[1][0] == z * t / 2
    assert g.entries[0][1] == -(z * t / 2)
    assert g.entries[3][2] == z * 2 / t
    assert g.entries[2][3] == -(z * 2 / t)


def test_deformation_graph_linear_in_zeta():
    t = Fraction(3, 2)
    z1, z2 = GaussRational(HALF), GaussRational(Fraction(1, 5), 1)
    g1 = deformation_graph_Y(z1, t)
    g2 = deformation_graph_Y(z2, t)
    assert g1 + g2 == deformation_graph_Y(z1 + z2, t)


def test_deformation_eigenvector_equations():
    # the defining relations of the graph: xi^{0,1} = (zeta/2) sbar Z^{0,1}
    # and Z^{1,0} = -(zeta/2) s^-1 xi^{1,0} with s the t-scaled form,
    # checked against the raw eigenspace in real coordinates
    t = Fraction(2)
    z = GaussRational(HALF, Fraction(1, 3))
    j = j_zeta(z, t)
    frame = gcs.dolbeault_frame()
    space = eigenspace_i(j.matrix)
    graph = deformation_direction_matrix(z, t)
    for v in space.basis:
        coords = frame.inverse().apply(list(v))
        base, fiber = coords[:4], coords[4:]
        assert graph.apply(base) == fiber


def test_not_a_graph_signals():
    # conjugate family eigenspace projects vertically at infinity
    frame = gcs.dolbeault_frame()
    conj = frame.inverse() * j_zeta_infinity().matrix * frame
    from gk3.linalg import graph_extract

    with pytest.raises(NotAGraph):
        graph_extract(eigenspace_i(conj), 4)
