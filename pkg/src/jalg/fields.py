"""Ground fields for exact linear algebra: Q and prime fields F_p, p >= 5.

A Field object wraps raw scalar values (Fraction over Q, int in range(p) over
F_p) with a uniform arithmetic interface, so the rest of the package never
branches on characteristic.  Characteristics 2 and 3 are rejected: the theory
divides by 2, and the degree-3 identities would not determine their
polarizations in characteristic 3.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, JalgError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (characteristic 0) or F_p for a prime p >= 5.

    Instances are interned: Field(5) is Field(5).  Raw element values are
    Fraction for Q and plain int (reduced mod p) for F_p.
    """

    _cache: dict[int, "Field"] = {}

    characteristic: int

    def __new__(cls, characteristic: int = 0):
        got = cls._cache.get(characteristic)
        if got is not None:
            return got
        if characteristic != 0:
            if not _is_prime(characteristic):
                raise JalgError(f"characteristic {characteristic} is not prime")
            if characteristic < 5:
                raise JalgError(
                    f"characteristic {characteristic} not supported (need 0 or p >= 5)"
                )
        self = super().__new__(cls)
        self.characteristic = characteristic
        cls._cache[characteristic] = self
        return self

    # -- basic constants ---------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def __repr__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    # -- arithmetic on raw values ------------------------------------------

    def add(self, a, b):
        if self.characteristic == 0:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.characteristic == 0:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a, b):
        if self.characteristic == 0:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a):
        if self.characteristic == 0:
            return -a
        return (-a) % self.characteristic

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / a
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return self.sub(a, b) == 0

    # -- conversion ---------------------------------------------------------

    def coerce(self, value):
        """Turn an int, Fraction, or same-field raw value into a raw value.

        Over F_p a Fraction is accepted when its denominator is invertible.
        """
        if self.characteristic == 0:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise JalgError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % self.characteristic
        if isinstance(value, Fraction):
            num = value.numerator % self.characteristic
            den = value.denominator % self.characteristic
            return self.mul(num, self.inv(den))
        raise JalgError(f"cannot coerce {value!r} into F{self.characteristic}")

    def parse(self, text: str):
        """Parse 'n' or 'n/d' (optionally signed) into a raw value."""
        text = text.strip()
        try:
            return self.coerce(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise JalgError(f"bad scalar {text!r} over {self}: {exc}") from None

    def format(self, a) -> str:
        if self.characteristic == 0:
            return str(a)
        return str(a % self.characteristic)

    def elements(self):
        """Iterate all field elements.  Finite fields only."""
        if self.characteristic == 0:
            raise JalgError("cannot enumerate Q")
        return range(self.characteristic)

    def transport(self, value, target: "Field"):
        """Move a raw value into another field (Q -> F_p reduction, or identity).

        F_p -> Q and F_p -> F_q are rejected: there is no canonical lift.
        """
        if target is self:
            return value
        if self.characteristic == 0:
            return target.coerce(value)
        raise FieldMismatchError(f"no canonical map {self} -> {target}")


QQ = Field(0)
