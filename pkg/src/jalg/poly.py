"""Sparse multivariate polynomials over a ground field.

Used in two roles:

* generic-element verification: algebra axioms are checked by expanding
  products of generic elements (coordinates become indeterminates) and
  testing that every coefficient of the resulting polynomial vanishes;
* parametric structure constants: one-parameter families of algebras and
  deformation maps keep symbolic entries like ``alpha`` or ``1 - 2*alpha``.

Both fit in degree <= 4 with a handful of variables, so a dict keyed by
exponent tuples is plenty.  Polynomials are immutable.
"""

from __future__ import annotations

from .errors import FieldMismatchError, JalgError
from .fields import Field


class PolyRing:
    """Polynomial ring F[names].  Interned on (field, sorted names).

    Exposes the same raw-arithmetic protocol as Field (add, mul, coerce,
    is_zero, ...) with Poly instances as the raw values, so code that walks
    structure-constant tables can stay agnostic about whether entries are
    scalars or parameter polynomials.
    """

    _cache: dict[tuple, "PolyRing"] = {}

    field: Field
    names: tuple[str, ...]

    def __new__(cls, field: Field, names: tuple[str, ...] | list[str]):
        names = tuple(sorted(names))
        if len(set(names)) != len(names):
            raise JalgError(f"duplicate variable names in {names}")
        key = (field.characteristic, names)
        got = cls._cache.get(key)
        if got is not None:
            return got
        self = super().__new__(cls)
        self.field = field
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}
        self._zero_exp = (0,) * len(names)
        cls._cache[key] = self
        return self

    def __repr__(self) -> str:
        return f"{self.field}[{', '.join(self.names)}]"

    # -- constructors --------------------------------------------------------

    def const(self, value) -> "Poly":
        c = self.field.coerce(value)
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {self._zero_exp: c})

    def var(self, name: str) -> "Poly":
        try:
            i = self._index[name]
        except KeyError:
            raise JalgError(f"{name!r} is not a variable of {self}") from None
        exp = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return Poly(self, {exp: self.field.one})

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def coerce(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring is self:
                return value
            if value.ring.field is not self.field:
                raise FieldMismatchError(f"{value.ring} vs {self}")
            return value.embed(self)
        return self.const(value)

    # -- arithmetic protocol (delegates to Poly) ------------------------------

    def add(self, a: "Poly", b: "Poly") -> "Poly":
        return a + b

    def sub(self, a: "Poly", b: "Poly") -> "Poly":
        return a - b

    def mul(self, a: "Poly", b: "Poly") -> "Poly":
        return a * b

    def neg(self, a: "Poly") -> "Poly":
        return -a

    def is_zero(self, a: "Poly") -> bool:
        return not a.terms

    def eq(self, a: "Poly", b: "Poly") -> bool:
        return a.terms == b.terms

    def format(self, a: "Poly") -> str:
        return str(a)


class Poly:
    """Immutable sparse polynomial: {exponent tuple: nonzero field value}."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return self.ring.coerce(other)
        if other.ring is not self.ring:
            raise FieldMismatchError(f"{other.ring} vs {self.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = f.add(out.get(exp, f.zero), c)
            if f.is_zero(s):
                out.pop(exp, None)
            else:
                out[exp] = s
        return Poly(self.ring, out)

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        f = self.ring.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(i + j for i, j in zip(e1, e2))
                s = f.add(out.get(exp, f.zero), f.mul(c1, c2))
                if f.is_zero(s):
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return Poly(self.ring, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, raw) -> "Poly":
        """Multiply by a raw field value (fast path, no dict product)."""
        f = self.ring.field
        if f.is_zero(raw):
            return Poly(self.ring, {})
        return Poly(self.ring, {e: f.mul(c, raw) for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise JalgError("negative power")
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_value(self):
        """The raw field value of a constant polynomial."""
        if not self.terms:
            return self.ring.field.zero
        if len(self.terms) == 1:
            (exp, c), = self.terms.items()
            if not any(exp):
                return c
        raise JalgError(f"{self} is not constant")

    def coefficient(self, assignment: dict[str, int]):
        """Raw coefficient of the monomial given as {name: exponent}."""
        exp = [0] * len(self.ring.names)
        for name, e in assignment.items():
            exp[self.ring._index[name]] = e
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def eval(self, values: dict[str, object]):
        """Substitute a raw field value for every variable; returns a raw value."""
        f = self.ring.field
        vals = []
        for name in self.ring.names:
            if name not in values:
                raise JalgError(f"no value given for {name}")
            vals.append(f.coerce(values[name]))
        total = f.zero
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                for _ in range(e):
                    term = f.mul(term, v)
            total = f.add(total, term)
        return total

    def embed(self, target: PolyRing) -> "Poly":
        """Rewrite in a ring whose variables contain this ring's."""
        if target.field is not self.ring.field:
            raise FieldMismatchError(f"{self.ring} vs {target}")
        try:
            positions = [target._index[n] for n in self.ring.names]
        except KeyError as exc:
            raise JalgError(f"{target} does not contain variable {exc}") from None
        width = len(target.names)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * width
            for pos, e in zip(positions, exp):
                new[pos] = e
            out[tuple(new)] = c
        return Poly(target, out)

    # -- comparison / display --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        try:
            other = self.ring.coerce(other)
        except JalgError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.ring), frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        names = self.ring.names
        parts = []
        for exp in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[exp]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exp)
                if e
            )
            if not mono:
                parts.append(f.format(c))
            elif f.eq(c, f.one):
                parts.append(mono)
            else:
                parts.append(f"{f.format(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"
