"""Exact scalar arithmetic over the rationals and over prime fields.

Scalars are immutable, carry their field, and never leave exact
representations: rationals are stored as reduced ``fractions.Fraction``
values, prime-field elements as canonical residues in ``0..p-1``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CompositeModulus, DivisionByZero, FieldMismatch


def _is_prime(p: int) -> bool:
    # deterministic trial division; moduli stay small in practice
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The field of rationals (``p is None``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise CompositeModulus(f"modulus {p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def from_spec(cls, spec: str) -> "Field":
        """Parse a field spec string: ``"Q"`` or ``"Fp:<p>"``."""
        if spec == "Q":
            return cls(None)
        if spec.startswith("Fp:"):
            try:
                p = int(spec[3:])
            except ValueError:
                raise CompositeModulus(f"bad field spec {spec!r}") from None
            return cls(p)
        raise CompositeModulus(f"bad field spec {spec!r}; expected 'Q' or 'Fp:<p>'")

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def spec(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, literal string, or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar of {value.field} used in {self}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot build a scalar from {value!r}")
        if self.p is None:
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator of {value} vanishes mod {self.p}")
            num = value.numerator % self.p
            den = pow(value.denominator % self.p, -1, self.p)
            return Scalar(self, (num * den) % self.p)
        return Scalar(self, value % self.p)

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)

    def elements(self):
        """All field elements, in canonical residue order (finite fields only)."""
        if self.p is None:
            raise FieldMismatch("the rationals are not enumerable")
        return [Scalar(self, r) for r in range(self.p)]

    def nonzero_elements(self):
        if self.p is None:
            raise FieldMismatch("the rationals are not enumerable")
        return [Scalar(self, r) for r in range(1, self.p)]

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return f"Field({self.spec()})"


class Scalar:
    """An immutable field element supporting exact arithmetic."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        # callers outside this module should go through Field.scalar
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot combine scalars of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        if p is None:
            return Scalar(self.field, self.value + o.value)
        return Scalar(self.field, (self.value + o.value) % p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        if p is None:
            return Scalar(self.field, self.value - o.value)
        return Scalar(self.field, (self.value - o.value) % p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        if p is None:
            return Scalar(self.field, self.value * o.value)
        return Scalar(self.field, (self.value * o.value) % p)

    __rmul__ = __mul__

    def __neg__(self):
        p = self.field.p
        if p is None:
            return Scalar(self.field, -self.value)
        return Scalar(self.field, (-self.value) % p)

    def inv(self) -> "Scalar":
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        p = self.field.p
        if p is None:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        p = self.field.p
        if p is None:
            return Scalar(self.field, self.value**k)
        return Scalar(self.field, pow(self.value, k, p))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    def literal(self) -> str:
        """Canonical text form: decimal integer or ``a/b``."""
        return str(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self.field.scalar(other)
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o.value

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value <= o.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __repr__(self):
        return f"{self.literal()}@{self.field.spec()}"


RATIONALS = Field(None)
