
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gk3.linalg import (
    CMatrix,
    NotAGraph,
    Subspace,
    eigenspace_i,
    graph_extract,
    kernel,
)
from gk3.scalar import GaussRational


def test_kernel_trivial_cases():
    assert kernel(CMatrix.identity(4)).dim == 0
    assert kernel(CMatrix.zeros(4, 4)).dim == 4


def test_kernel_vectors_are_annihilated():
    m = CMatrix([[1, 2, 3], [2, 4, 6]])
    ker = kernel(m)
    assert ker.dim == 2
    for v in ker.basis:
        assert not any(m.apply(list(v)))


def test_eigenspace_i():
    # rotation by 90 degrees has eigenvalues +-i
    rot = CMatrix([[0, -1], [1, 0]])
    space = eigenspace_i(rot)
    assert space.dim == 1
    v = list(space.basis[0])
    assert rot.apply(v) == [GaussRational(0, 1) * x for x in v]
    conj_space = eigenspace_i(rot.scale(-1))
    assert conj_space == space.conj()
    assert space.intersection(conj_space).dim == 0


def test_subspace_canonical_form_is_intrinsic():
    s1 = Subspace([[1, 0, 2], [0, 1, 3]])
    s2 = Subspace([[1, 1, 5], [2, 1, 7]])  # same row space, different basis
    assert s1 == s2
    assert s1.basis == s2.basis


def test_subspace_contains():
    s = Subspace([[1, 0, 1], [0, 1, 1]])
    assert s.contains([1, 1, 2])
    assert not s.contains([1, 1, 3])


def test_graph_extract_zero_graph():
    base = Subspace([[1, 0, 0, 0], [0, 1, 0, 0]])
    assert graph_extract(base, 2) == CMatrix.zeros(2, 2)


def test_graph_extract_roundtrip():
    a = CMatrix([[1, 2], [3, GaussRational(0, 1)]])
    vectors = []
    for j in range(2):
        v = [GaussRational(1 if k == j else 0) for k in range(2)]
        vectors.append(v + a.apply(v))
    assert graph_extract(Subspace(vectors), 2) == a


def test_graph_extract_vertical_fails():
    vertical = Subspace([[0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(NotAGraph):
        graph_extract(vertical, 2)
    with pytest.raises(NotAGraph):
        graph_extract(Subspace([[1, 0, 0, 0]]), 2)


def test_matrix_inverse():
    m = CMatrix([[1, 2], [3, 4]])
    assert m * m.inverse() == CMatrix.identity(2)
    with pytest.raises(ValueError):
        CMatrix([[1, 2], [2, 4]]).inverse()


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=5)
entries = st.builds(GaussRational, fractions, fractions)


@given(st.lists(st.lists(entries, min_size=4, max_size=4), min_size=2, max_size=4))
def test_rank_nullity(rows):
    m = CMatrix(rows)
    rank = Subspace(rows, ambient=4).dim
    assert rank + kernel(m).dim == 4


@given(st.lists(st.lists(entries, min_size=2, max_size=2), min_size=2, max_size=2))
def test_graph_roundtrip_random(rows):
    a = CMatrix(rows)
    vectors = []
    for j in range(2):
        v = [GaussRational(1 if k == j else 0) for k in range(2)]
        vectors.append(v + a.apply(v))
    assert graph_extract(Subspace(vectors), 2) == a
