"""Polynomial identities for nonassociative varieties.

A monomial is a full binary tree over named variables together with an
integer coefficient; an identity is a sum of monomials equated to zero.

Text syntax: products use ``*`` and every nested product is written with
explicit parentheses ("(x*y)*z", never "x*y*z"); terms are joined with
``+``/``-``; an optional integer coefficient may prefix a term; an
identity is written "lhs = rhs" or "expr = 0", and chains
"a = b = c" denote the pair a - b = 0, a - c = 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CharTooSmall, DegreeError, IdentitySyntaxError, UnknownVariety
from .fields import Field

# ---------------------------------------------------------------------------
# monomials and identities

# A tree is either a variable name (str) or a pair (left, right).
Tree = object


def tree_degree(tree) -> int:
    if isinstance(tree, str):
        return 1
    return tree_degree(tree[0]) + tree_degree(tree[1])


def tree_leaves(tree):
    if isinstance(tree, str):
        yield tree
    else:
        yield from tree_leaves(tree[0])
        yield from tree_leaves(tree[1])


def evaluate_tree(tree, env, mul):
    """Evaluate with variables bound to vectors and mul a vector product."""
    if isinstance(tree, str):
        return env[tree]
    return mul(evaluate_tree(tree[0], env, mul), evaluate_tree(tree[1], env, mul))


@dataclass(frozen=True)
class Monomial:
    coeff: int
    tree: Tree

    @property
    def degree(self) -> int:
        return tree_degree(self.tree)

    def multiplicities(self) -> dict:
        counts: dict = {}
        for v in tree_leaves(self.tree):
            counts[v] = counts.get(v, 0) + 1
        return counts

    def split_root(self):
        """The two factors of the outermost product."""
        if isinstance(self.tree, str):
            raise DegreeError("monomial of degree 1 has no outermost product")
        return self.tree[0], self.tree[1]


@dataclass(frozen=True)
class IdentitySchema:
    monomials: tuple
    variables: tuple

    @property
    def degree(self) -> int:
        return max(m.degree for m in self.monomials)

    @property
    def is_multilinear(self) -> bool:
        want = set(self.variables)
        for m in self.monomials:
            counts = m.multiplicities()
            if set(counts) != want or any(c != 1 for c in counts.values()):
                return False
        return True


def _make_schema(monomials):
    """Combine like monomials, drop zeros, validate degrees, fix variable order."""
    combined: dict = {}
    for m in monomials:
        combined[m.tree] = combined.get(m.tree, 0) + m.coeff
    kept = tuple(Monomial(c, t) for t, c in combined.items() if c != 0)
    if not kept:
        raise DegreeError("identity is trivially zero")
    for m in kept:
        if m.degree < 2:
            raise DegreeError(f"monomial of degree {m.degree}; need degree >= 2")
    seen = []
    for m in kept:
        for v in tree_leaves(m.tree):
            if v not in seen:
                seen.append(v)
    return IdentitySchema(kept, tuple(seen))


# ---------------------------------------------------------------------------
# parsing

_OPS = set("*+-()=")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            tokens.append(("IDENT", text[i:j], i))
            i = j
            continue
        raise IdentitySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise IdentitySyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_sides(self):
        sides = [self.parse_expr()]
        while self.peek()[0] == "=":
            self.advance()
            sides.append(self.parse_expr())
        tok = self.peek()
        if tok[0] != "END":
            raise IdentitySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        if len(sides) < 2:
            raise IdentitySyntaxError("identity needs an '='", len(self.text))
        return sides

    def parse_expr(self):
        monomials = []
        sign = 1
        tok = self.peek()
        if tok[0] in "+-":
            self.advance()
            sign = -1 if tok[0] == "-" else 1
        monomials.extend(self.parse_term(sign))
        while self.peek()[0] in "+-":
            op = self.advance()
            sign = -1 if op[0] == "-" else 1
            monomials.extend(self.parse_term(sign))
        return monomials

    def parse_term(self, sign: int):
        coeff = 1
        tok = self.peek()
        if tok[0] == "INT":
            self.advance()
            coeff = tok[1]
            nxt = self.peek()
            if nxt[0] == "*":
                self.advance()
            elif nxt[0] not in ("IDENT", "("):
                # bare integer term: only 0 is allowed, and contributes nothing
                if coeff == 0:
                    return []
                raise DegreeError(f"constant term {coeff} has degree 0")
        tree = self.parse_product()
        return [Monomial(sign * coeff, tree)]

    def parse_product(self):
        left = self.parse_factor()
        if self.peek()[0] != "*":
            return left
        self.advance()
        right = self.parse_factor()
        tok = self.peek()
        if tok[0] == "*":
            raise IdentitySyntaxError(
                "ambiguous product; parenthesize nested products", tok[2]
            )
        return (left, right)

    def parse_factor(self):
        tok = self.advance()
        if tok[0] == "IDENT":
            return tok[1]
        if tok[0] == "(":
            inner = self.parse_product()
            self.expect(")")
            return inner
        raise IdentitySyntaxError(f"expected a variable or '(', found {tok[1]!r}", tok[2])


def parse_identities(text: str):
    """Parse an identity, expanding an equality chain a = b = c into
    the pair a - b = 0, a - c = 0. Returns a list of IdentitySchema."""
    sides = _Parser(text).parse_sides()
    first = sides[0]
    schemas = []
    for other in sides[1:]:
        negated = [Monomial(-m.coeff, m.tree) for m in other]
        schemas.append(_make_schema(list(first) + negated))
    return schemas


def parse_identity(text: str) -> IdentitySchema:
    """Parse a single (non-chained) identity."""
    schemas = parse_identities(text)
    if len(schemas) != 1:
        raise IdentitySyntaxError("chained identity where a single one was expected", 0)
    return schemas[0]


# ---------------------------------------------------------------------------
# printing

def _tree_str(tree) -> str:
    if isinstance(tree, str):
        return tree
    left, right = tree
    ls = _tree_str(left) if isinstance(left, str) else f"({_tree_str(left)})"
    rs = _tree_str(right) if isinstance(right, str) else f"({_tree_str(right)})"
    return f"{ls}*{rs}"


def format_identity(schema: IdentitySchema) -> str:
    parts = []
    for k, m in enumerate(schema.monomials):
        mag = abs(m.coeff)
        body = _tree_str(m.tree)
        if mag != 1:
            body = f"{mag}*{body}"
        if k == 0:
            parts.append(body if m.coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if m.coeff > 0 else "- ") + body)
    return " ".join(parts) + " = 0"


# ---------------------------------------------------------------------------
# multilinearization

def _fresh_names(base: str, count: int, taken: set):
    names = []
    for k in range(1, count + 1):
        cand = f"{base}{k}"
        while cand in taken:
            cand += "_"
        taken.add(cand)
        names.append(cand)
    return names


def _relabel(tree, copies, counters):
    if isinstance(tree, str):
        if tree in copies:
            k = counters[tree]
            counters[tree] += 1
            return copies[tree][k]
        return tree
    return (_relabel(tree[0], copies, counters), _relabel(tree[1], copies, counters))


def multilinearize(schema: IdentitySchema):
    """Replace an identity by its multilinear components.

    Monomials are grouped by multidegree; in each group every variable of
    multiplicity m is replaced by a sum of m fresh variables and the
    component in which each fresh variable occurs exactly once is kept
    (all m! ways of distributing the copies over the occurrences).
    Equivalent to the original identity when the characteristic is 0 or
    exceeds the identity degree. Already-multilinear identities are
    returned unchanged.
    """
    groups: dict = {}
    for m in schema.monomials:
        counts = m.multiplicities()
        key = tuple(counts.get(v, 0) for v in schema.variables)
        groups.setdefault(key, []).append(m)
    out = []
    for key in groups:
        monos = groups[key]
        multi = {
            v: mult
            for v, mult in zip(schema.variables, key)
            if mult > 1
        }
        if not multi:
            out.append(_make_schema(monos))
            continue
        taken = set(schema.variables)
        copies = {v: _fresh_names(v, mult, taken) for v, mult in multi.items()}
        expanded = []
        for m in monos:
            perm_spaces = [
                [dict(zip(range(mult), perm)) for perm in itertools.permutations(copies[v])]
                for v, mult in multi.items()
            ]
            var_order = list(multi)
            for combo in itertools.product(*perm_spaces):
                chosen = {
                    v: [assignment[k] for k in range(multi[v])]
                    for v, assignment in zip(var_order, combo)
                }
                counters = {v: 0 for v in multi}
                expanded.append(Monomial(m.coeff, _relabel(m.tree, chosen, counters)))
        out.append(_make_schema(expanded))
    return out


# ---------------------------------------------------------------------------
# built-in varieties

@dataclass(frozen=True)
class VarietySpec:
    name: str
    identity_texts: tuple
    identities: tuple
    multilinear_identities: tuple
    char_exclusions: frozenset

    def char_gate(self, field: Field) -> None:
        """Multilinearized identities replace the originals only when the
        characteristic is 0 or exceeds the identity degree; refuse otherwise."""
        char = field.characteristic
        if char == 0:
            return
        for ident in self.identities:
            if not ident.is_multilinear and char <= ident.degree:
                raise CharTooSmall(
                    f"variety {self.name!r} has a non-multilinear identity of degree "
                    f"{ident.degree}; characteristic {char} is too small"
                )


_CATALOG_TEXTS = {
    "associative": ("(x*y)*z = x*(y*z)",),
    "left_alternative": ("x*(x*y) = (x*x)*y",),
    "alternative": ("x*(x*y) = (x*x)*y", "(x*y)*y = x*(y*y)"),
    "jordan": ("x*y = y*x", "(x*x)*(y*x) = ((x*x)*y)*x"),
    "left_commutative": ("x*(y*z) = y*(x*z)",),
    "right_commutative": ("(x*y)*z = (x*z)*y",),
    "bicommutative": ("x*(y*z) = y*(x*z)", "(x*y)*z = (x*z)*y"),
    "assosymmetric": ("(x*y)*z - x*(y*z) = (y*x)*z - y*(x*z) = (x*z)*y - x*(z*y)",),
    "novikov": ("(x*y)*z = (x*z)*y", "(x*y)*z - x*(y*z) = (y*x)*z - y*(x*z)"),
    "left_symmetric": ("(x*y)*z - x*(y*z) = (y*x)*z - y*(x*z)",),
}

_CHAR_EXCLUSIONS = {
    "left_alternative": frozenset({2}),
    "alternative": frozenset({2}),
    "jordan": frozenset({2, 3}),
}

VARIETY_NAMES = tuple(_CATALOG_TEXTS)

VARIETY_ALIASES = {
    "lc": "left_commutative",
    "rc": "right_commutative",
    "bc": "bicommutative",
}

_cache: dict = {}


def builtin_variety(name: str) -> VarietySpec:
    key = VARIETY_ALIASES.get(name, name)
    if key not in _CATALOG_TEXTS:
        raise UnknownVariety(f"no built-in variety named {name!r}")
    if key not in _cache:
        texts = _CATALOG_TEXTS[key]
        idents = tuple(s for t in texts for s in parse_identities(t))
        multi = tuple(s for ident in idents for s in multilinearize(ident))
        _cache[key] = VarietySpec(
            name=key,
            identity_texts=texts,
            identities=idents,
            multilinear_identities=multi,
            char_exclusions=_CHAR_EXCLUSIONS.get(key, frozenset()),
        )
    return _cache[key]
