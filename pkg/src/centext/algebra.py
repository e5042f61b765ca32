"""Finite-dimensional nonassociative algebras given by structure constants.

An Algebra stores the product table table[i][j] = e_i * e_j as a vector
of scalars (0-based indices internally; JSON and printed labels are
1-based). The n-dimensional null-filiform algebra has e_i * e_j =
e_{i+j} when i + j <= n and 0 otherwise; that zero convention is baked
into the constructor only, not into any later computation.
"""

from __future__ import annotations

import itertools

from .errors import DimMismatch, InvalidDim, NotInVariety
from .fields import Field
from .identities import VarietySpec, evaluate_tree
from .linalg import (
    Subspace,
    basis_vec,
    kernel_basis,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)


class Algebra:
    __slots__ = ("field", "dim", "table")

    def __init__(self, field: Field, table):
        table = tuple(
            tuple(tuple(field.scalar(x) for x in vec) for vec in row) for row in table
        )
        dim = len(table)
        if dim == 0:
            raise InvalidDim("algebra must have dimension >= 1")
        for row in table:
            if len(row) != dim or any(len(vec) != dim for vec in row):
                raise DimMismatch("structure constant table must be dim x dim x dim")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    def basis_vector(self, i: int):
        """Basis vector e_i, 1-based."""
        return basis_vec(self.field, self.dim, i - 1)

    def multiply(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimMismatch("vector length does not match algebra dimension")
        acc = zero_vec(self.field, self.dim)
        for i, xi in enumerate(x):
            if xi.is_zero:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj.is_zero:
                    continue
                vec = row[j]
                if vec_is_zero(vec):
                    continue
                acc = vec_add(acc, vec_scale(xi * yj, vec))
        return acc

    def annihilator(self) -> Subspace:
        """Elements x with x*A = 0 and A*x = 0."""
        rows = []
        n = self.dim
        for j in range(n):
            for k in range(n):
                rows.append(tuple(self.table[i][j][k] for i in range(n)))  # x * e_j
                rows.append(tuple(self.table[j][i][k] for i in range(n)))  # e_j * x
        basis = kernel_basis(rows, n, self.field)
        return Subspace(self.field, n, basis)

    def _subspace_product(self, u_space: Subspace, v_space: Subspace) -> list:
        return [
            self.multiply(u, v) for u in u_space.basis for v in v_space.basis
        ]

    def power_dims(self):
        """Dimensions of the descending power series A, A^2, A^3, ...
        where A^k = sum over i+j=k of A^i * A^j; the sequence is reported
        up to (and including) its first repeated value."""
        full = Subspace(self.field, self.dim, [basis_vec(self.field, self.dim, i) for i in range(self.dim)])
        powers = [full]
        dims = [full.dim]
        while True:
            k = len(powers) + 1
            vectors = []
            for a in range(1, k):
                vectors.extend(self._subspace_product(powers[a - 1], powers[k - a - 1]))
            nxt = Subspace(self.field, self.dim, vectors)
            if nxt.dim == dims[-1]:
                break
            powers.append(nxt)
            dims.append(nxt.dim)
            if nxt.dim == 0:
                break
        return tuple(dims)

    def is_null_filiform(self) -> bool:
        n = self.dim
        return self.power_dims() == tuple(range(n, -1, -1))

    def opposite(self) -> "Algebra":
        n = self.dim
        return Algebra(
            self.field,
            tuple(tuple(self.table[j][i] for j in range(n)) for i in range(n)),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.field, self.table))

    def to_json(self) -> dict:
        products = []
        for i in range(self.dim):
            for j in range(self.dim):
                vec = self.table[i][j]
                if vec_is_zero(vec):
                    continue
                out = [
                    {"k": k + 1, "c": x.literal()}
                    for k, x in enumerate(vec)
                    if not x.is_zero
                ]
                products.append({"i": i + 1, "j": j + 1, "out": out})
        return {"dim": self.dim, "field": self.field.spec(), "products": products}

    @classmethod
    def from_json(cls, data: dict) -> "Algebra":
        field = Field.from_spec(data["field"])
        n = int(data["dim"])
        if n < 1:
            raise InvalidDim(f"dimension {n} must be >= 1")
        z = field.zero
        table = [[[z] * n for _ in range(n)] for _ in range(n)]
        for entry in data.get("products", ()):
            i, j = int(entry["i"]), int(entry["j"])
            if not (1 <= i <= n and 1 <= j <= n):
                raise DimMismatch(f"product index ({i},{j}) outside 1..{n}")
            for term in entry["out"]:
                k = int(term["k"])
                if not (1 <= k <= n):
                    raise DimMismatch(f"output index {k} outside 1..{n}")
                table[i - 1][j - 1][k - 1] = field.scalar(term["c"])
        return cls(field, table)

    def __repr__(self):
        return f"Algebra(dim={self.dim}, field={self.field.spec()})"


def null_filiform(n: int, field: Field) -> Algebra:
    """The n-dimensional null-filiform associative algebra:
    e_i * e_j = e_{i+j} for i + j <= n, and 0 otherwise."""
    if n < 1:
        raise InvalidDim(f"dimension {n} must be >= 1")
    z, o = field.zero, field.one
    table = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j <= n:
                table[i - 1][j - 1][i + j - 1] = o
    return Algebra(field, table)


def is_standard_null_filiform(a: Algebra) -> bool:
    """Structural check: the table equals the null-filiform table verbatim."""
    return a.table == null_filiform(a.dim, a.field).table


def satisfies_variety(a: Algebra, variety: VarietySpec) -> bool:
    """Whether the algebra satisfies all identities of the variety,
    checked via the multilinearized identities on all basis tuples.
    Raises CharTooSmall when that replacement is not valid."""
    variety.char_gate(a.field)
    n = a.dim
    basis = [a.basis_vector(i) for i in range(1, n + 1)]
    for ident in variety.multilinear_identities:
        k = len(ident.variables)
        for combo in itertools.product(basis, repeat=k):
            env = dict(zip(ident.variables, combo))
            acc = zero_vec(a.field, n)
            for mono in ident.monomials:
                val = evaluate_tree(mono.tree, env, a.multiply)
                if vec_is_zero(val):
                    continue
                acc = vec_add(acc, vec_scale(a.field.scalar(mono.coeff), val))
            if not vec_is_zero(acc):
                return False
    return True


def require_in_variety(a: Algebra, variety: VarietySpec) -> None:
    if not satisfies_variety(a, variety):
        raise NotInVariety(f"algebra does not satisfy {variety.name}")
