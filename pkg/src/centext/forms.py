"""Bilinear forms on F^n with values in F, plus the named forms used
throughout: delta(i, j) is the form picking out the (e_i, e_j) pair, and
nabla(j) = sum of delta(k, j+1-k) for k = 1..j.

Indices in the public constructors are 1-based, matching the basis
labels e_1..e_n; internal storage is a 0-based matrix of entries."""

from __future__ import annotations

from .errors import DimMismatch, FieldMismatch, IndexOutOfRange
from .fields import Field, Scalar
from .linalg import vec_is_zero


class BilinearForm:
    """An n-by-n matrix of scalars, acting as theta(x, y) = x^T C y."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.scalar(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise DimMismatch("bilinear form matrix must be square")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BilinearForm is immutable")

    @classmethod
    def zero(cls, field: Field, n: int) -> "BilinearForm":
        z = field.zero
        return cls(field, tuple(tuple(z for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_vector(cls, field: Field, n: int, vec) -> "BilinearForm":
        """Rebuild from a row-major vector of length n*n."""
        if len(vec) != n * n:
            raise DimMismatch(f"expected {n * n} entries, got {len(vec)}")
        return cls(field, tuple(tuple(vec[i * n + j] for j in range(n)) for i in range(n)))

    def as_vector(self):
        """Row-major flattening; entry (i, j) sits at position i*n + j.
        This fixes the variable order c_11, c_12, ..., c_nn used by all
        echelon computations."""
        return tuple(x for row in self.rows for x in row)

    def entry(self, i: int, j: int) -> Scalar:
        """Entry at 1-based indices (i, j)."""
        return self.rows[i - 1][j - 1]

    def evaluate(self, x, y) -> Scalar:
        if len(x) != self.n or len(y) != self.n:
            raise DimMismatch("vector length does not match form size")
        acc = self.field.zero
        for i, xi in enumerate(x):
            if xi.is_zero:
                continue
            row = self.rows[i]
            for j, yj in enumerate(y):
                if yj.is_zero or row[j].is_zero:
                    continue
                acc = acc + xi * row[j] * yj
        return acc

    @property
    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for row in self.rows)

    def transpose(self) -> "BilinearForm":
        return BilinearForm(self.field, tuple(zip(*self.rows)))

    def __add__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch("cannot add forms over different fields")
        if other.n != self.n:
            raise DimMismatch("cannot add forms of different size")
        return BilinearForm(
            self.field,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self + (-1) * other

    def __rmul__(self, c):
        c = self.field.scalar(c)
        return BilinearForm(self.field, tuple(tuple(c * x for x in row) for row in self.rows))

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, BilinearForm)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def to_json(self) -> dict:
        return {
            "dim": self.n,
            "field": self.field.spec(),
            "matrix": [x.literal() for x in self.as_vector()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BilinearForm":
        field = Field.from_spec(data["field"])
        n = data["dim"]
        vec = [field.scalar(lit) for lit in data["matrix"]]
        return cls.from_vector(field, n, vec)

    def __repr__(self):
        entries = [
            f"({i + 1},{j + 1})={x.literal()}"
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
            if not x.is_zero
        ]
        body = ", ".join(entries) if entries else "0"
        return f"BilinearForm[{self.n}; {body}]"


def delta(i: int, j: int, n: int, field: Field) -> BilinearForm:
    """The form with a single 1 in entry (i, j), 1-based."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"delta({i},{j}) does not fit in size {n}")
    z, o = field.zero, field.one
    rows = [[z] * n for _ in range(n)]
    rows[i - 1][j - 1] = o
    return BilinearForm(field, rows)


def nabla(j: int, n: int, field: Field) -> BilinearForm:
    """Sum of delta(k, j+1-k) over k = 1..j: ones along the j-th antidiagonal."""
    if not (1 <= j <= n):
        raise IndexOutOfRange(f"nabla({j}) does not fit in size {n}")
    z, o = field.zero, field.one
    rows = [[z] * n for _ in range(n)]
    for k in range(1, j + 1):
        rows[k - 1][j - k] = o
    return BilinearForm(field, rows)
