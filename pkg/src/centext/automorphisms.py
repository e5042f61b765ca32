"""Automorphisms of the null-filiform algebra and their action on
bilinear forms and cohomology classes.

An automorphism is determined by the image of e_1: if phi(e_1) has
coordinates (a_1, ..., a_n) with a_1 != 0, then phi(e_j) = phi(e_1)^j,
so column j of the matrix is the j-fold convolution of column 1 with
itself, truncated to n entries. The action on a form is
(phi . theta)(x, y) = theta(phi(x), phi(y)), i.e. M^T C M on matrices.
"""

from __future__ import annotations

from .algebra import Algebra
from .cohomology import CohomologySpace
from .errors import DimMismatch, NotInvertible
from .fields import Field
from .forms import BilinearForm
from .linalg import mat_mul, rref, transpose, vec_is_zero


def _convolve(u, v, n: int, field: Field):
    """1-based convolution w_i = sum over a+b=i of u_a v_b, truncated to n."""
    z = field.zero
    out = [z] * n
    for i0 in range(n):
        acc = z
        for a0 in range(i0):
            x, y = u[a0], v[i0 - 1 - a0]
            if x.is_zero or y.is_zero:
                continue
            acc = acc + x * y
        out[i0] = acc
    return tuple(out)


class Automorphism:
    """An automorphism of the n-dimensional null-filiform algebra,
    stored as its first column and the full (lower triangular) matrix
    with entries matrix[i][j] = phi_{i+1, j+1}."""

    __slots__ = ("field", "n", "first_col", "matrix")

    def __init__(self, field: Field, first_col):
        col = tuple(field.scalar(x) for x in first_col)
        n = len(col)
        if n < 1:
            raise DimMismatch("empty column")
        if col[0].is_zero:
            raise NotInvertible("phi_{1,1} must be nonzero")
        cols = [col]
        for _ in range(1, n):
            cols.append(_convolve(cols[-1], col, n, field))
        matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "first_col", col)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("Automorphism is immutable")

    @property
    def phi11(self):
        return self.first_col[0]

    def apply(self, x):
        """Image of a coordinate vector."""
        if len(x) != self.n:
            raise DimMismatch("vector length does not match")
        return tuple(
            sum((self.matrix[i][j] * x[j] for j in range(self.n) if not x[j].is_zero),
                self.field.zero)
            for i in range(self.n)
        )

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other: (self . other)(x) = self(other(x))."""
        if other.n != self.n or other.field != self.field:
            raise DimMismatch("automorphisms of different algebras")
        return Automorphism(self.field, self.apply(other.first_col))

    def __eq__(self, o):
        return (
            isinstance(o, Automorphism)
            and o.field == self.field
            and o.first_col == self.first_col
        )

    def __hash__(self):
        return hash((self.field, self.first_col))

    def __repr__(self):
        col = ",".join(x.literal() for x in self.first_col)
        return f"Automorphism(n={self.n}, col=[{col}])"


def automorphism_from_column(n: int, field: Field, col) -> Automorphism:
    col = tuple(field.scalar(x) for x in col)
    if len(col) != n:
        raise DimMismatch(f"column length {len(col)} != {n}")
    return Automorphism(field, col)


def is_automorphism(a: Algebra, matrix) -> bool:
    """Whether the matrix (columns = images of basis vectors) is an
    invertible multiplicative map of the algebra."""
    n = a.dim
    rows = tuple(tuple(a.field.scalar(x) for x in row) for row in matrix)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimMismatch("matrix size does not match the algebra")
    reduced, _ = rref(rows)
    if len(reduced) != n:
        return False
    cols = transpose(rows)
    for i in range(n):
        for j in range(n):
            lhs = tuple(
                sum((rows[k][m] * a.table[i][j][m] for m in range(n)), a.field.zero)
                for k in range(n)
            )
            rhs = a.multiply(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def act_on_cocycle(phi: Automorphism, theta: BilinearForm) -> BilinearForm:
    """(phi . theta)(x, y) = theta(phi x, phi y), i.e. M^T C M."""
    if theta.n != phi.n or theta.field != phi.field:
        raise DimMismatch("form and automorphism sizes differ")
    mt = transpose(phi.matrix)
    return BilinearForm(phi.field, mat_mul(mat_mul(mt, theta.rows), phi.matrix))


def act_on_class(h: CohomologySpace, phi: Automorphism, coords):
    """Action on class coordinates in the h_reps basis."""
    theta = h.rep_from_coords(coords)
    return h.reduce_class(act_on_cocycle(phi, theta))


def class_action_matrix(h: CohomologySpace, phi: Automorphism):
    """Matrix of the (linear) action on class coordinates: column k is
    the reduced class of phi acting on the k-th representative."""
    cols = [h.reduce_class(act_on_cocycle(phi, rep)) for rep in h.h_reps]
    d = h.dim_h
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
