"""Exact scalars over the rationals and over prime fields.

A :class:`Field` is a small immutable descriptor; the scalars themselves are
plain Python values (``fractions.Fraction`` over Q, ``int`` residues in
``[0, p)`` over F_p).  Keeping scalars unboxed matters because the tensor
expansions push millions of them through dictionaries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import CharTwoError, DivisionByZero, NotPrimeError, ParseError

Scalar = Union[Fraction, int]

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either Q (``modulus is None``) or the prime field F_p."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and (not isinstance(self.modulus, int) or self.modulus < 2):
            raise NotPrimeError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    # -- descriptors -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    def check(self, allow_char_two: bool = False) -> None:
        """Raise unless the field is admissible.

        Composite moduli are always rejected. Characteristic 2 is rejected
        unless ``allow_char_two`` (used by constructions that never divide).
        """
        if self.modulus is None:
            return
        if not is_prime(self.modulus):
            raise NotPrimeError(f"modulus {self.modulus} is not prime")
        if self.modulus == 2 and not allow_char_two:
            raise CharTwoError()

    @property
    def tag(self) -> str:
        return "Q" if self.modulus is None else f"Fp:{self.modulus}"

    @classmethod
    def from_tag(cls, text: str) -> "Field":
        """Parse ``Q`` / ``Fp:7`` (case-insensitive, ``fp7`` also accepted)."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return QQ
        m = re.fullmatch(r"f_?p:?(\d+)", t)
        if not m:
            raise ParseError(f"unknown field {text!r}; expected Q or Fp:<p>")
        return cls(int(m.group(1)))

    def __str__(self):
        return self.tag

    # -- construction ------------------------------------------------------

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.modulus is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.modulus, value.denominator % self.modulus)
        return int(value) % self.modulus

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def parse(self, text: str) -> Scalar:
        m = _SCALAR_RE.match(text.strip())
        if not m:
            raise ParseError(f"bad scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return self(Fraction(num, den))

    def format(self, a: Scalar) -> str:
        if self.modulus is None:
            return str(a)
        return str(a % self.modulus)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.modulus is None:
            return a + b
        return (a + b) % self.modulus

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.modulus is None:
            return a - b
        return (a - b) % self.modulus

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.modulus is None:
            return a * b
        return (a * b) % self.modulus

    def neg(self, a: Scalar) -> Scalar:
        if self.modulus is None:
            return -a
        return (-a) % self.modulus

    def inv(self, a: Scalar) -> Scalar:
        if self.modulus is None:
            if a == 0:
                raise DivisionByZero("inverse of 0")
            return 1 / Fraction(a)
        a %= self.modulus
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return _inverse_mod(a, self.modulus)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def eq(self, a: Scalar, b: Scalar) -> bool:
        return self(a) == self(b)

    def is_zero(self, a: Scalar) -> bool:
        return a == 0 if self.modulus is None else a % self.modulus == 0

    def is_unit_sign(self, a: Scalar) -> int:
        """Return +1 / -1 if ``a`` is 1 / -1, else 0 (1 wins in char 2)."""
        if self.eq(a, 1):
            return 1
        if self.eq(a, -1):
            return -1
        return 0

    def half(self) -> Scalar:
        self.check()
        return self.inv(self(2))


def _inverse_mod(a: int, p: int) -> int:
    # extended Euclid
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise DivisionByZero(f"{a} is not invertible modulo {p}")
    return s0 % p


QQ = Field()


def GF(p: int) -> Field:
    """Prime field F_p. Primality is checked lazily by :meth:`Field.check`."""
    return Field(p)


def field_validate(spec: Field) -> None:
    spec.check()


def scalar_half(spec: Field) -> Scalar:
    return spec.half()
