"""Cocycles, coboundaries, and second cohomology of an algebra with
scalar coefficients, relative to a variety of nonassociative algebras.

A bilinear form theta is a cocycle for variety V when, for every
multilinear defining identity and every tuple of basis elements, the sum
of theta(p1, p2) over the identity's monomials p = p1*p2 vanishes, where
the factors p1, p2 are evaluated inside the algebra. Coboundaries are
the forms (x, y) -> f(x*y) for linear functionals f. Cocycle classes
are taken modulo coboundaries.
"""

from __future__ import annotations

import itertools

from .algebra import Algebra, is_standard_null_filiform, require_in_variety
from .errors import DimMismatch, NotACocycle
from .forms import BilinearForm, delta, nabla
from .identities import VarietySpec, evaluate_tree, format_identity
from .linalg import (
    Subspace,
    kernel_basis,
    mat_vec,
    rref,
    rref_with_transform,
    vec_is_zero,
)


def _basis_env(a: Algebra):
    return [a.basis_vector(i) for i in range(1, a.dim + 1)]


def _equation_rows(a: Algebra, variety: VarietySpec):
    """Linear constraints on the entries c_ij (row-major) of a cocycle,
    one row per (identity, basis tuple), deduplicated in first-seen order."""
    n = a.dim
    basis = _basis_env(a)
    z = a.field.zero
    rows = {}
    for ident in variety.multilinear_identities:
        split = [(m.coeff, *m.split_root()) for m in ident.monomials]
        for combo in itertools.product(basis, repeat=len(ident.variables)):
            env = dict(zip(ident.variables, combo))
            acc = [z] * (n * n)
            touched = False
            for coeff, left, right in split:
                u = evaluate_tree(left, env, a.multiply)
                w = evaluate_tree(right, env, a.multiply)
                c = a.field.scalar(coeff)
                for i, ui in enumerate(u):
                    if ui.is_zero:
                        continue
                    for j, wj in enumerate(w):
                        if wj.is_zero:
                            continue
                        pos = i * n + j
                        acc[pos] = acc[pos] + c * ui * wj
                        touched = True
            if touched and not all(x.is_zero for x in acc):
                rows.setdefault(tuple(acc), None)
    return list(rows)


def cocycle_space(a: Algebra, variety: VarietySpec):
    """Canonical echelonized basis of the cocycle space Z^2(A, F) for the
    variety, as a list of BilinearForm."""
    require_in_variety(a, variety)
    rows = _equation_rows(a, variety)
    n = a.dim
    basis = kernel_basis(rows, n * n, a.field)
    return [BilinearForm.from_vector(a.field, n, v) for v in basis]


def check_cocycle(a: Algebra, variety: VarietySpec, theta: BilinearForm) -> None:
    """Raise NotACocycle (naming a violated equation) unless theta
    satisfies every cocycle equation of the variety over this algebra."""
    variety.char_gate(a.field)
    if theta.n != a.dim or theta.field != a.field:
        raise DimMismatch("form does not match the algebra")
    basis = _basis_env(a)
    for ident in variety.multilinear_identities:
        split = [(m.coeff, *m.split_root()) for m in ident.monomials]
        for combo in itertools.product(range(1, a.dim + 1), repeat=len(ident.variables)):
            env = {v: basis[i - 1] for v, i in zip(ident.variables, combo)}
            acc = a.field.zero
            for coeff, left, right in split:
                u = evaluate_tree(left, env, a.multiply)
                w = evaluate_tree(right, env, a.multiply)
                val = theta.evaluate(u, w)
                if not val.is_zero:
                    acc = acc + a.field.scalar(coeff) * val
            if not acc.is_zero:
                args = ", ".join(
                    f"{v}=e_{i}" for v, i in zip(ident.variables, combo)
                )
                raise NotACocycle(
                    f"cocycle equation from '{format_identity(ident)}' fails at {args}"
                )


def is_cocycle(a: Algebra, variety: VarietySpec, theta: BilinearForm) -> bool:
    try:
        check_cocycle(a, variety, theta)
    except NotACocycle:
        return False
    return True


def coboundary_space(a: Algebra):
    """Canonical echelonized basis of the coboundary space: forms
    (x, y) -> f(x*y) for the dual basis functionals f."""
    n = a.dim
    vectors = []
    for k in range(n):
        vec = tuple(a.table[i][j][k] for i in range(n) for j in range(n))
        if not vec_is_zero(vec):
            vectors.append(vec)
    reduced, _ = rref(vectors)
    return [BilinearForm.from_vector(a.field, n, v) for v in reduced]


def cocycle_annihilator(a: Algebra, theta: BilinearForm) -> Subspace:
    """Elements x with theta(x, A) = 0 and theta(A, x) = 0."""
    if theta.n != a.dim or theta.field != a.field:
        raise DimMismatch("form does not match the algebra")
    n = a.dim
    rows = []
    for j in range(n):
        rows.append(tuple(theta.rows[i][j] for i in range(n)))  # theta(x, e_j)
        rows.append(tuple(theta.rows[j][i] for i in range(n)))  # theta(e_j, x)
    return Subspace(a.field, n, kernel_basis(rows, n, a.field))


def annihilator_intersection(a: Algebra, thetas) -> Subspace:
    """Ann(A) intersected with the annihilators of all the given forms."""
    space = a.annihilator()
    for theta in thetas:
        space = space.intersect(cocycle_annihilator(a, theta))
    return space


def _preferred_h_reps(a: Algebra, variety: VarietySpec):
    """The distinguished cohomology representatives for the null-filiform
    algebra in the left-commutative and bicommutative varieties: nabla_n
    first, then delta(i, 1) in ascending i."""
    if a.dim < 2 or not is_standard_null_filiform(a):
        return None
    n, field = a.dim, a.field
    if variety.name == "left_commutative":
        forms = [nabla(n, n, field)] + [delta(i, 1, n, field) for i in range(2, n + 1)]
        labels = [f"nabla{n}"] + [f"delta{i}_1" for i in range(2, n + 1)]
        return forms, labels
    if variety.name == "bicommutative":
        return [nabla(n, n, field), delta(2, 1, n, field)], [f"nabla{n}", "delta2_1"]
    return None


class CohomologySpace:
    """Second cohomology data: cocycle basis, coboundary basis, chosen
    class representatives, and the reduction map onto class coordinates."""

    __slots__ = (
        "algebra",
        "variety",
        "z_basis",
        "b_basis",
        "h_reps",
        "h_labels",
        "preferred_basis_used",
        "_transform",
        "_ncols",
    )

    def __init__(self, algebra, variety, z_basis, b_basis, h_reps, h_labels, preferred):
        self.algebra = algebra
        self.variety = variety
        self.z_basis = tuple(z_basis)
        self.b_basis = tuple(b_basis)
        self.h_reps = tuple(h_reps)
        self.h_labels = tuple(h_labels)
        self.preferred_basis_used = preferred
        cols = [f.as_vector() for f in self.b_basis] + [f.as_vector() for f in self.h_reps]
        n2 = algebra.dim * algebra.dim
        rows = [tuple(col[r] for col in cols) for r in range(n2)]
        _, transform, pivots, rank = rref_with_transform(rows, algebra.field)
        if rank != len(cols) or pivots != list(range(len(cols))):
            raise RuntimeError("coboundary/representative columns are not independent")
        self._transform = transform
        self._ncols = len(cols)

    @property
    def dim_z(self) -> int:
        return len(self.z_basis)

    @property
    def dim_b(self) -> int:
        return len(self.b_basis)

    @property
    def dim_h(self) -> int:
        return len(self.h_reps)

    def reduce_class(self, theta: BilinearForm):
        """Coordinates of the class [theta] in the h_reps basis.
        Raises NotACocycle when theta is outside the cocycle span."""
        if theta.n != self.algebra.dim or theta.field != self.algebra.field:
            raise DimMismatch("form does not match the cohomology space")
        w = mat_vec(self._transform, theta.as_vector())
        for r in range(self._ncols, len(w)):
            if not w[r].is_zero:
                raise NotACocycle("form lies outside the cocycle space")
        return tuple(w[self.dim_b : self._ncols])

    def rep_from_coords(self, coords) -> BilinearForm:
        if len(coords) != self.dim_h:
            raise DimMismatch(f"expected {self.dim_h} coordinates")
        acc = BilinearForm.zero(self.algebra.field, self.algebra.dim)
        for c, rep in zip(coords, self.h_reps):
            c = self.algebra.field.scalar(c)
            if not c.is_zero:
                acc = acc + c * rep
        return acc

    def class_is_zero(self, theta: BilinearForm) -> bool:
        return all(c.is_zero for c in self.reduce_class(theta))

    def __repr__(self):
        return (
            f"CohomologySpace({self.variety.name}, dim={self.algebra.dim}, "
            f"Z={self.dim_z}, B={self.dim_b}, H={self.dim_h})"
        )


def second_cohomology(a: Algebra, variety: VarietySpec) -> CohomologySpace:
    z_forms = cocycle_space(a, variety)
    b_forms = coboundary_space(a)
    n2 = a.dim * a.dim
    z_sub = Subspace(a.field, n2, [f.as_vector() for f in z_forms])
    for b in b_forms:
        if not z_sub.contains(b.as_vector()):
            raise RuntimeError("coboundary outside the cocycle space")
    preferred = _preferred_h_reps(a, variety)
    h_reps, h_labels, used_preferred = None, None, False
    if preferred is not None:
        forms, labels = preferred
        stack = [f.as_vector() for f in b_forms] + [f.as_vector() for f in forms]
        reduced, _ = rref(stack)
        ok = (
            len(forms) + len(b_forms) == len(z_forms)
            and len(reduced) == len(z_forms)
            and all(z_sub.contains(f.as_vector()) for f in forms)
        )
        if ok:
            h_reps, h_labels, used_preferred = forms, labels, True
    if h_reps is None:
        h_reps, h_labels = [], []
        current = [f.as_vector() for f in b_forms]
        span = Subspace(a.field, n2, current)
        for idx, z in enumerate(z_forms):
            if not span.contains(z.as_vector()):
                h_reps.append(z)
                h_labels.append(f"z{idx + 1}")
                current.append(z.as_vector())
                span = Subspace(a.field, n2, current)
    return CohomologySpace(a, variety, z_forms, b_forms, h_reps, h_labels, used_preferred)
