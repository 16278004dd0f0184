"""Exact dense linear algebra over the Gaussian rationals.

Everything here works on sampled (constant) data; parametrized
identities are checked by evaluating the parameters at rational sample
points first and then running exact elimination.  Subspaces are stored
in reduced row echelon form, which is canonical: two subspaces are
equal exactly when their stored bases are identical.
"""

from __future__ import annotations

from .scalar import GR_I, GR_ONE, GR_ZERO, GaussRational


class NotAGraph(ValueError):
    """The subspace does not project isomorphically onto the base block."""


def _coerce_entry(x) -> GaussRational:
    if isinstance(x, GaussRational):
        return x
    return GaussRational(x)


class CMatrix:
    """Rectangular matrix with GaussRational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = [[_coerce_entry(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("rows have unequal lengths")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[GR_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)])

    def __add__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return CMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CMatrix([[-x for x in row] for row in self.entries])

    def scale(self, c) -> "CMatrix":
        c = _coerce_entry(c)
        return CMatrix([[c * x for x in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, CMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in product")
            cols = list(zip(*other.entries))
            return CMatrix(
                [
                    [sum((a * b for a, b in zip(row, col)), GR_ZERO) for col in cols]
                    for row in self.entries
                ]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vec):
        """Matrix times coordinate vector (a list of entries)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        vec = [_coerce_entry(x) for x in vec]
        return [sum((a * b for a, b in zip(row, vec)), GR_ZERO) for row in self.entries]

    def transpose(self) -> "CMatrix":
        return CMatrix([list(col) for col in zip(*self.entries)])

    def conj(self) -> "CMatrix":
        return CMatrix([[x.conj() for x in row] for row in self.entries])

    def submatrix(self, row_range, col_range) -> "CMatrix":
        return CMatrix([[self.entries[i][j] for j in col_range] for i in row_range])

    def inverse(self) -> "CMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(row) + list(ident) for row, ident in
               zip(self.entries, CMatrix.identity(n).entries)]
        reduced, pivots = _rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return CMatrix([row[n:] for row in reduced])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)

    def __repr__(self):
        return f"CMatrix({self.rows}x{self.cols})"


def _rref(rows):
    """Reduced row echelon form (in place on a copied list of lists).

    Returns ``(rows, pivot_columns)``.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


class Subspace:
    """Linear subspace with a canonical reduced-echelon basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, vectors, ambient=None):
        vectors = [[_coerce_entry(x) for x in v] for v in vectors]
        if ambient is None:
            if not vectors:
                raise ValueError("ambient dimension required for empty basis")
            ambient = len(vectors[0])
        if any(len(v) != ambient for v in vectors):
            raise ValueError("vector length mismatch")
        reduced, pivots = _rref(vectors)
        self.ambient = ambient
        self.basis = tuple(tuple(reduced[i]) for i in range(len(pivots)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec) -> bool:
        probe = [list(b) for b in self.basis] + [[_coerce_entry(x) for x in vec]]
        _, pivots = _rref(probe)
        return len(pivots) == self.dim

    def intersection(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: reduce rows (u | u) and (v | 0); rows with zero
        # left half have right halves spanning the intersection.
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        n = self.ambient
        block = [list(b) + list(b) for b in self.basis]
        block += [list(b) + [GR_ZERO] * n for b in other.basis]
        reduced, _ = _rref(block)
        vectors = [row[n:] for row in reduced if not any(row[:n]) and any(row[n:])]
        return Subspace(vectors, ambient=n)

    def conj(self) -> "Subspace":
        return Subspace([[x.conj() for x in b] for b in self.basis], ambient=self.ambient)

    def transformed(self, m: CMatrix) -> "Subspace":
        """Image of the subspace under an injective linear map."""
        return Subspace([m.apply(list(b)) for b in self.basis], ambient=m.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __str__(self):
        if not self.basis:
            return f"Subspace(0 in {self.ambient})"
        rows = "; ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis)
        return f"Subspace[{rows}]"

    __repr__ = __str__


def kernel(m: CMatrix) -> Subspace:
    """Exact null space with canonical basis."""
    reduced, pivots = _rref(m.entries)
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [GR_ZERO] * m.cols
        v[f] = GR_ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        vectors.append(v)
    return Subspace(vectors, ambient=m.cols)


def eigenspace_i(m: CMatrix) -> Subspace:
    """Eigenspace for eigenvalue ``i`` as ``kernel(m - i*Id)``."""
    if m.rows != m.cols:
        raise ValueError("eigenspace of a non-square matrix")
    shifted = m - CMatrix.identity(m.rows).scale(GR_I)
    return kernel(shifted)


def graph_extract(space: Subspace, base_dim: int) -> CMatrix:
    """Matrix ``A`` with ``space = {(v, A v)}`` over the leading coordinates.

    The first ``base_dim`` coordinates are the base block; raises
    :class:`NotAGraph` when the projection onto them is not an
    isomorphism.
    """
    if space.dim != base_dim:
        raise NotAGraph(
            f"subspace dimension {space.dim} differs from base dimension {base_dim}"
        )
    cols = [list(b) for b in space.basis]  # as columns: ambient x dim
    top = CMatrix([[cols[j][i] for j in range(base_dim)] for i in range(base_dim)])
    bottom = CMatrix(
        [[cols[j][i] for j in range(base_dim)] for i in range(base_dim, space.ambient)]
    )
    try:
        top_inv = top.inverse()
    except ValueError as exc:
        raise NotAGraph("projection onto the base block is singular") from exc
    return bottom * top_inv
