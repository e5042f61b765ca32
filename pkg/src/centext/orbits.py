"""Orbits of cohomology classes under the automorphism group of the
null-filiform algebra, over finite prime fields.

The automorphism group is enumerated exactly (one automorphism per
first column with nonzero leading entry), the induced linear action on
class coordinates is precomputed per automorphism, and orbits are found
with a union-find over the full point set (all of H^2) or over the
Grassmannian lines whose cocycle annihilator meets the algebra
annihilator trivially (the T_1 condition).

Representatives over algebraically closed fields of characteristic zero
are tabulated for the left-commutative and bicommutative varieties; over
a finite field they are matched against the computed orbits, and orbits
that no tabulated representative hits are reported as extra
(field-dependent).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .algebra import Algebra, null_filiform, satisfies_variety
from .automorphisms import Automorphism, class_action_matrix
from .cohomology import annihilator_intersection, second_cohomology
from .errors import (
    BudgetExceeded,
    FieldMismatch,
    InvalidDim,
    TableMismatch,
    UnsupportedVariety,
)
from .extensions import central_extension
from .fields import Field, Scalar
from .forms import BilinearForm, delta, nabla
from .identities import VarietySpec, builtin_variety

DEFAULT_BUDGET = 500_000
BUDGET_ENV_VAR = "CENTEXT_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def automorphism_count(n: int, field: Field) -> int:
    if not field.is_finite:
        raise FieldMismatch("the automorphism group is finite only over finite fields")
    return (field.p - 1) * field.p ** (n - 1)


def enumerate_automorphisms(n: int, field: Field, budget: int | None = None):
    """All automorphisms of the n-dimensional null-filiform algebra over
    a finite prime field, one per admissible first column, in
    lexicographic column order."""
    count = automorphism_count(n, field)
    limit = resolve_budget(budget)
    if count > limit:
        raise BudgetExceeded(f"{count} automorphisms exceed budget {limit}")
    p = field.p
    for head in range(1, p):
        for tail in itertools.product(range(p), repeat=n - 1):
            yield Automorphism(field, [head, *tail])


# ---------------------------------------------------------------------------
# roots-of-unity subgroups and their cosets

@dataclass(frozen=True)
class RootSubgroup:
    """R(i, n): the (i+1)-st powers of the (n+1)-st roots of unity,
    a subgroup of the multiplicative group."""

    i: int
    n: int
    field: Field
    elements: tuple

    def contains(self, x: Scalar) -> bool:
        return x in self.elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self) -> int:
        if not self.field.is_finite:
            raise FieldMismatch("index is only defined over finite fields")
        return (self.field.p - 1) // self.order

    def same_coset(self, x: Scalar, y: Scalar) -> bool:
        return self.contains(x / y)


def roots_of_unity_subgroup(i: int, n: int, field: Field) -> RootSubgroup:
    if i < 0 or n < 1:
        raise InvalidDim(f"bad parameters i={i}, n={n}")
    if field.is_finite:
        candidates = field.nonzero_elements()
    else:
        candidates = [field.one, -field.one]  # the rational roots of unity
    roots = [x for x in candidates if (x ** (n + 1)).is_one]
    powers = {x ** (i + 1) for x in roots}
    elements = tuple(sorted(powers))
    # subgroup sanity: closed under products and inverses
    for a in elements:
        for b in elements:
            assert a * b in powers
        assert a.inv() in powers
    return RootSubgroup(i=i, n=n, field=field, elements=elements)


def coset_representatives(subgroup: RootSubgroup):
    """Deterministic representatives of F* / R(i, n), smallest residue first."""
    if not subgroup.field.is_finite:
        raise FieldMismatch("coset enumeration needs a finite field")
    reps = []
    seen = set()
    for x in subgroup.field.nonzero_elements():
        if x in seen:
            continue
        reps.append(x)
        seen.update(x * r for r in subgroup.elements)
    return reps


# ---------------------------------------------------------------------------
# tabulated representatives

@dataclass(frozen=True)
class NamedClass:
    label: str
    form: BilinearForm
    family: str
    trivial: bool = False          # class of the trivial (split-free) tower step
    t1: bool = True                # lies in the T_1 Grassmannian
    ann_dim: int | None = None     # annihilator dim of the 1-dim extension
    mu: Scalar | None = None


def _mu_values(field: Field, mu_sample):
    if mu_sample is not None:
        return [field.scalar(m) for m in mu_sample]
    if field.is_finite:
        return field.elements()
    return [field.scalar(m) for m in (0, 1, -1, 2)]


def _nabla_mu_label(n: int, i: int, mu: Scalar) -> str:
    if mu.is_zero:
        return f"nabla{n}"
    if mu.is_one:
        return f"nabla{n}+delta{i}_1"
    lit = mu.literal()
    if lit.startswith("-"):
        head = "-" if lit == "-1" else f"-{lit[1:]}*"
        return f"nabla{n}{head}delta{i}_1"
    return f"nabla{n}+{lit}*delta{i}_1"


def closed_field_representatives(
    variety,
    n: int,
    field: Field,
    level: str = "T1",
    mu_sample=None,
):
    """The classification's orbit representatives (valid verbatim over an
    algebraically closed field of characteristic 0), instantiated over the
    given field. level="H2" lists class representatives; level="T1" lists
    Grassmannian-line representatives plus the non-T_1 classes that still
    give non-split one-dimensional extensions (with two-dimensional
    annihilator)."""
    if isinstance(variety, VarietySpec):
        vname = variety.name
    else:
        vname = builtin_variety(variety).name
    if vname not in ("left_commutative", "bicommutative"):
        raise UnsupportedVariety(f"no tabulated representatives for {vname!r}")
    if n < 2:
        raise InvalidDim("representatives are tabulated for n >= 2")
    if level not in ("H2", "T1"):
        raise ValueError(f"level must be 'H2' or 'T1', not {level!r}")
    mus = _mu_values(field, mu_sample)
    nab = nabla(n, n, field)
    out = []

    def _add(label, form, family, **kw):
        out.append(NamedClass(label=label, form=form, family=family, **kw))

    if vname == "left_commutative":
        if level == "H2":
            _add("zero", BilinearForm.zero(field, n), "zero", trivial=False, t1=False)
            for i in range(2, n + 1):
                _add(f"delta{i}_1", delta(i, 1, n, field), "delta_i_1")
            for mu in mus:
                _add(
                    _nabla_mu_label(n, n, mu),
                    nab + mu * delta(n, 1, n, field),
                    "nabla+mu*delta_n_1",
                    trivial=mu.is_zero,
                    mu=mu,
                )
            for i in range(2, n):
                if field.is_finite:
                    mubars = coset_representatives(roots_of_unity_subgroup(i, n, field))
                else:
                    mubars = [m for m in mus if not m.is_zero]
                for mu in mubars:
                    _add(
                        _nabla_mu_label(n, i, mu),
                        nab + mu * delta(i, 1, n, field),
                        "nabla+mubar*delta_i_1",
                        mu=mu,
                    )
        else:
            _add(f"delta{n}_1", delta(n, 1, n, field), "delta_n_1", ann_dim=1)
            for mu in mus:
                _add(
                    _nabla_mu_label(n, n, mu),
                    nab + mu * delta(n, 1, n, field),
                    "nabla+mu*delta_n_1",
                    trivial=mu.is_zero,
                    ann_dim=1,
                    mu=mu,
                )
            for i in range(2, n):
                _add(
                    f"nabla{n}+delta{i}_1",
                    nab + delta(i, 1, n, field),
                    "nabla+delta_i_1",
                    ann_dim=1,
                )
            for k in range(2, n):
                _add(
                    f"delta{k}_1",
                    delta(k, 1, n, field),
                    "delta_k_1_wide_annihilator",
                    t1=False,
                    ann_dim=2,
                )
    else:  # bicommutative
        if level == "H2":
            _add("zero", BilinearForm.zero(field, n), "zero", trivial=False, t1=False)
            _add("delta2_1", delta(2, 1, n, field), "delta_2_1")
            if n == 2:
                for mu in mus:
                    _add(
                        _nabla_mu_label(n, 2, mu),
                        nab + mu * delta(2, 1, n, field),
                        "nabla+mu*delta_2_1",
                        trivial=mu.is_zero,
                        mu=mu,
                    )
            else:
                _add(f"nabla{n}", nab, "nabla", trivial=True)
                if field.is_finite:
                    mubars = coset_representatives(roots_of_unity_subgroup(2, n, field))
                else:
                    mubars = [m for m in mus if not m.is_zero]
                for mu in mubars:
                    _add(
                        _nabla_mu_label(n, 2, mu),
                        nab + mu * delta(2, 1, n, field),
                        "nabla+mubar*delta_2_1",
                        mu=mu,
                    )
        else:
            if n == 2:
                _add("delta2_1", delta(2, 1, n, field), "delta_2_1", ann_dim=1)
                for mu in mus:
                    _add(
                        _nabla_mu_label(n, 2, mu),
                        nab + mu * delta(2, 1, n, field),
                        "nabla+mu*delta_2_1",
                        trivial=mu.is_zero,
                        ann_dim=1,
                        mu=mu,
                    )
            else:
                _add(f"nabla{n}", nab, "nabla", trivial=True, ann_dim=1)
                _add(
                    f"nabla{n}+delta2_1",
                    nab + delta(2, 1, n, field),
                    "nabla+delta_2_1",
                    ann_dim=1,
                )
                _add(
                    "delta2_1",
                    delta(2, 1, n, field),
                    "delta_2_1_wide_annihilator",
                    t1=False,
                    ann_dim=2,
                )
    return out


# ---------------------------------------------------------------------------
# orbit computation

@dataclass(frozen=True)
class Orbit:
    representative: tuple      # class coordinates (T1: normalized line coords)
    size: int
    members: tuple
    labels: tuple


@dataclass(frozen=True)
class OrbitReport:
    variety: str
    n: int
    field: Field
    kind: str                  # "H2_points" or "T1_lines"
    domain_size: int
    orbits: tuple
    matched_labels: dict

    def orbit_of(self, coords) -> int:
        residues = tuple(c.value for c in coords)
        for idx, orbit in enumerate(self.orbits):
            if residues in orbit.members:
                return idx
        raise KeyError(f"{residues} not in the enumerated domain")

    def to_json(self, include_members: bool = False) -> dict:
        orbits = []
        for orbit in self.orbits:
            entry = {
                "representative": [str(x) for x in orbit.representative],
                "size": orbit.size,
                "labels": list(orbit.labels),
            }
            if not orbit.labels:
                entry["note"] = "extra (field-dependent)"
            if include_members:
                entry["members"] = [[str(x) for x in m] for m in orbit.members]
            orbits.append(entry)
        return {
            "variety": self.variety,
            "n": self.n,
            "field": self.field.spec(),
            "kind": self.kind,
            "domain_size": self.domain_size,
            "orbit_count": len(self.orbits),
            "orbits": orbits,
            "matched_labels": {k: v for k, v in sorted(self.matched_labels.items())},
        }


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _union(parent, x, y):
    rx, ry = _find(parent, x), _find(parent, y)
    if rx != ry:
        parent[max(rx, ry)] = min(rx, ry)


class ClassAction:
    """The automorphism action on H^2 class coordinates over a finite
    field, reduced to integer matrices mod p for enumeration work."""

    def __init__(self, n: int, variety, field: Field, budget: int | None = None):
        if not field.is_finite:
            raise FieldMismatch("orbit enumeration requires a finite field")
        if isinstance(variety, str):
            variety = builtin_variety(variety)
        self.n = n
        self.variety = variety
        self.field = field
        self.p = field.p
        self.budget = resolve_budget(budget)
        self.algebra = null_filiform(n, field)
        self.h = second_cohomology(self.algebra, variety)
        self.dim_h = self.h.dim_h
        self._matrices = None

    @property
    def matrices(self):
        """Integer class-action matrices, one per automorphism."""
        if self._matrices is None:
            mats = []
            for phi in enumerate_automorphisms(self.n, self.field, self.budget):
                rows = class_action_matrix(self.h, phi)
                mats.append(tuple(tuple(x.value for x in row) for row in rows))
            self._matrices = mats
        return self._matrices

    def apply(self, mat, point):
        p = self.p
        return tuple(
            sum(mrow[j] * point[j] for j in range(self.dim_h)) % p for mrow in mat
        )

    def coords_of(self, theta: BilinearForm):
        return tuple(c.value for c in self.h.reduce_class(theta))

    def scalars(self, residues):
        return tuple(self.field.scalar(r) for r in residues)

    def all_points(self):
        return [tuple(pt) for pt in itertools.product(range(self.p), repeat=self.dim_h)]

    def normalize_line(self, point):
        for c in point:
            if c != 0:
                inv = pow(c, -1, self.p)
                return tuple((x * inv) % self.p for x in point)
        raise ValueError("zero vector spans no line")

    def all_lines(self):
        lines = []
        p, d = self.p, self.dim_h
        for lead in range(d):
            for tail in itertools.product(range(p), repeat=d - lead - 1):
                lines.append((0,) * lead + (1,) + tail)
        return lines

    def line_in_t1(self, line) -> bool:
        theta = self.h.rep_from_coords(self.scalars(line))
        return annihilator_intersection(self.algebra, [theta]).dim == 0

    def orbit_of_class(self, coords) -> frozenset:
        """BFS orbit of a single class point under the full group."""
        if isinstance(coords[0], Scalar):
            coords = tuple(c.value for c in coords)
        seen = {tuple(coords)}
        frontier = [tuple(coords)]
        while frontier:
            nxt = []
            for pt in frontier:
                for mat in self.matrices:
                    img = self.apply(mat, pt)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return frozenset(seen)

    def same_orbit(self, coords_a, coords_b) -> bool:
        if isinstance(coords_b[0], Scalar):
            coords_b = tuple(c.value for c in coords_b)
        return tuple(coords_b) in self.orbit_of_class(coords_a)


def _match_labels(action: ClassAction, reps, members_to_orbit, to_domain):
    matched = {}
    for named in reps:
        point = to_domain(named)
        if point is None:
            continue
        idx = members_to_orbit.get(point)
        if idx is not None:
            matched[named.label] = idx
    return matched


def _collect_orbits(parent, points):
    groups: dict = {}
    for idx, pt in enumerate(points):
        groups.setdefault(_find(parent, idx), []).append(pt)
    orbit_members = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])
    return orbit_members


def orbits_on_H2(
    n: int,
    variety,
    field: Field,
    budget: int | None = None,
    mu_sample=None,
) -> OrbitReport:
    """Partition all of H^2 (as coordinate tuples over F_p) into orbits
    by applying every automorphism's class action."""
    action = ClassAction(n, variety, field, budget)
    total = action.p ** action.dim_h
    if total > action.budget:
        raise BudgetExceeded(f"{total} points exceed budget {action.budget}")
    points = action.all_points()
    index = {pt: i for i, pt in enumerate(points)}
    parent = list(range(len(points)))
    for i, pt in enumerate(points):
        for mat in action.matrices:
            _union(parent, i, index[action.apply(mat, pt)])
    orbit_members = _collect_orbits(parent, points)
    members_to_orbit = {
        pt: k for k, group in enumerate(orbit_members) for pt in group
    }
    labels: dict = {}
    try:
        reps = closed_field_representatives(
            action.variety, n, field, level="H2", mu_sample=mu_sample
        )
    except UnsupportedVariety:
        reps = []
    matched = _match_labels(
        action, reps, members_to_orbit, lambda named: action.coords_of(named.form)
    )
    for label, idx in matched.items():
        labels.setdefault(idx, []).append(label)
    orbits = tuple(
        Orbit(
            representative=action.scalars(group[0]),
            size=len(group),
            members=tuple(group),
            labels=tuple(labels.get(k, ())),
        )
        for k, group in enumerate(orbit_members)
    )
    assert sum(o.size for o in orbits) == total
    return OrbitReport(
        variety=action.variety.name,
        n=n,
        field=field,
        kind="H2_points",
        domain_size=total,
        orbits=orbits,
        matched_labels=matched,
    )


def orbits_on_T1(
    n: int,
    variety,
    field: Field,
    budget: int | None = None,
    mu_sample=None,
) -> OrbitReport:
    """Partition the T_1 Grassmannian lines (normalized class coordinate
    vectors with trivial annihilator overlap) into orbits."""
    action = ClassAction(n, variety, field, budget)
    all_lines = action.all_lines()
    if len(all_lines) > action.budget:
        raise BudgetExceeded(f"{len(all_lines)} lines exceed budget {action.budget}")
    lines = [ln for ln in all_lines if action.line_in_t1(ln)]
    index = {ln: i for i, ln in enumerate(lines)}
    parent = list(range(len(lines)))
    for i, ln in enumerate(lines):
        for mat in action.matrices:
            img = action.normalize_line(action.apply(mat, ln))
            j = index.get(img)
            if j is None:
                raise RuntimeError(
                    "T_1 lines are not closed under the action; "
                    f"{ln} maps outside the domain"
                )
            _union(parent, i, j)
    orbit_members = _collect_orbits(parent, lines)
    members_to_orbit = {
        ln: k for k, group in enumerate(orbit_members) for ln in group
    }

    def line_of(named: NamedClass):
        if not named.t1:
            return None
        coords = action.coords_of(named.form)
        if all(c == 0 for c in coords):
            return None
        return action.normalize_line(coords)

    labels: dict = {}
    try:
        reps = closed_field_representatives(
            action.variety, n, field, level="T1", mu_sample=mu_sample
        )
    except UnsupportedVariety:
        reps = []
    matched = _match_labels(action, reps, members_to_orbit, line_of)
    for label, idx in matched.items():
        labels.setdefault(idx, []).append(label)
    orbits = tuple(
        Orbit(
            representative=action.scalars(group[0]),
            size=len(group),
            members=tuple(group),
            labels=tuple(labels.get(k, ())),
        )
        for k, group in enumerate(orbit_members)
    )
    assert sum(o.size for o in orbits) == len(lines)
    return OrbitReport(
        variety=action.variety.name,
        n=n,
        field=field,
        kind="T1_lines",
        domain_size=len(lines),
        orbits=orbits,
        matched_labels=matched,
    )


# ---------------------------------------------------------------------------
# the table of one-dimensional extensions

@dataclass(frozen=True)
class TableRow:
    label: str
    cocycle: BilinearForm
    expected: Algebra
    expected_ann_dim: int
    expected_t1: bool


def _pattern_algebra(n: int, field: Field, products) -> Algebra:
    """Build the expected (n+1)-dimensional algebra from a dict
    (i, j) -> list of (k, scalar)."""
    m = n + 1
    z = field.zero
    table = [[[z] * m for _ in range(m)] for _ in range(m)]
    for (i, j), terms in products.items():
        for k, c in terms:
            table[i - 1][j - 1][k - 1] = field.scalar(c)
    return Algebra(field, table)


def classification_table(n: int, field: Field, mu_sample=None):
    """Rows of the classification table of one-dimensional non-split
    extensions of the n-dimensional null-filiform algebra, with their
    expected product patterns."""
    if n < 2:
        raise InvalidDim("the table is defined for n >= 2")
    rows = []
    one = field.one

    def base_products(limit, skip=()):
        prods = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i + j <= limit and (i, j) not in skip:
                    prods[(i, j)] = [(i + j, one)]
        return prods

    # e_n e_1 = e_{n+1}, all other products as in the base algebra
    prods = base_products(n)
    prods[(n, 1)] = [(n + 1, one)]
    rows.append(
        TableRow(
            label=f"delta{n}_1",
            cocycle=delta(n, 1, n, field),
            expected=_pattern_algebra(n, field, prods),
            expected_ann_dim=1,
            expected_t1=True,
        )
    )
    # e_k e_1 = e_{k+1} + e_{n+1}: annihilator gains a second dimension
    for k in range(2, n):
        prods = base_products(n, skip=((k, 1),))
        prods[(k, 1)] = [(k + 1, one), (n + 1, one)]
        rows.append(
            TableRow(
                label=f"delta{k}_1",
                cocycle=delta(k, 1, n, field),
                expected=_pattern_algebra(n, field, prods),
                expected_ann_dim=2,
                expected_t1=False,
            )
        )
    # nabla_n + delta_k_1, 2 <= k <= n-1
    for k in range(2, n):
        prods = base_products(n + 1, skip=((k, 1),))
        prods[(k, 1)] = [(k + 1, one), (n + 1, one)]
        rows.append(
            TableRow(
                label=f"nabla{n}+delta{k}_1",
                cocycle=nabla(n, n, field) + delta(k, 1, n, field),
                expected=_pattern_algebra(n, field, prods),
                expected_ann_dim=1,
                expected_t1=True,
            )
        )
    # nabla_n + mu * delta_n_1
    for mu in _mu_values(field, mu_sample):
        prods = base_products(n + 1, skip=((n, 1),))
        coeff = one + mu
        if not coeff.is_zero:
            prods[(n, 1)] = [(n + 1, coeff)]
        rows.append(
            TableRow(
                label=_nabla_mu_label(n, n, mu),
                cocycle=nabla(n, n, field) + mu * delta(n, 1, n, field),
                expected=_pattern_algebra(n, field, prods),
                expected_ann_dim=1,
                expected_t1=True,
            )
        )
    return rows


def _check_row(row: TableRow, n: int, field: Field) -> dict:
    lc = builtin_variety("left_commutative")
    base = null_filiform(n, field)
    result = central_extension(base, [row.cocycle], lc)
    ext = result.extended
    if ext.table != row.expected.table:
        for i in range(ext.dim):
            for j in range(ext.dim):
                if ext.table[i][j] != row.expected.table[i][j]:
                    raise TableMismatch(
                        f"row {row.label}: product e_{i + 1} e_{j + 1} is "
                        f"{ext.table[i][j]}, expected {row.expected.table[i][j]}"
                    )
    if not satisfies_variety(ext, lc):
        raise TableMismatch(f"row {row.label}: extension is not left-commutative")
    if not result.non_split:
        raise TableMismatch(f"row {row.label}: extension class is dependent")
    if result.annihilator_dim != row.expected_ann_dim:
        raise TableMismatch(
            f"row {row.label}: annihilator dim {result.annihilator_dim}, "
            f"expected {row.expected_ann_dim}"
        )
    if ext.annihilator().dim != row.expected_ann_dim:
        raise TableMismatch(f"row {row.label}: extended annihilator disagrees")
    t1 = annihilator_intersection(base, [row.cocycle]).dim == 0
    if t1 != row.expected_t1:
        raise TableMismatch(
            f"row {row.label}: T_1 membership {t1}, expected {row.expected_t1}"
        )
    bicom = satisfies_variety(ext, builtin_variety("bicommutative"))
    return {
        "label": row.label,
        "ok": True,
        "non_split": result.non_split,
        "annihilator_dim": result.annihilator_dim,
        "t1": t1,
        "bicommutative": bicom,
    }


def build_table1(n: int, field: Field, mu_sample=None):
    """Construct and verify every table row; raises TableMismatch on the
    first row whose extension does not match its stated pattern."""
    return [_check_row(row, n, field) for row in classification_table(n, field, mu_sample)]


def check_table1(n: int, field: Field, mu_sample=None):
    """Like build_table1 but collects per-row pass/fail instead of raising."""
    out = []
    for row in classification_table(n, field, mu_sample):
        try:
            out.append(_check_row(row, n, field))
        except TableMismatch as exc:
            out.append({"label": row.label, "ok": False, "detail": str(exc)})
    return out
