"""Commutative algebras presented by structure constants, and their parts:
elements, linear maps, subspaces, bimodules, jordanization, dual action,
null split extension.

An Algebra's entries live in its scalar ring: the ground field itself, or
a polynomial ring in declared parameters for one-parameter families.  Both
expose the same arithmetic protocol, so all expansion code is shared.
"""

from __future__ import annotations

from . import identities, linalg
from .errors import (
    DimensionError,
    FieldMismatchError,
    JalgError,
    VerificationError,
)
from .fields import Field
from .poly import Poly, PolyRing


def transport_entry(value, src: Field, dst: Field):
    if isinstance(value, Poly):
        ring = PolyRing(dst, value.ring.names)
        out = ring.zero
        for exp, c in value.terms.items():
            out = out + Poly(ring, {exp: src.transport(c, dst)})
        return out
    return src.transport(value, dst)


def format_combination(ring, coords, labels) -> str:
    """Human form of a coordinate vector, e.g. '1/2 u + v'."""
    parts = []
    for c, label in zip(coords, labels):
        if ring.is_zero(c):
            continue
        if ring.eq(c, ring.one):
            parts.append(label)
        else:
            text = ring.format(c)
            if not text.replace("-", "").replace("/", "").isdigit():
                text = f"({text})"
            parts.append(f"{text} {label}")
    return " + ".join(parts) if parts else "0"


class Algebra:
    """dim, basis labels, and the symmetric tensor c[i][j][k]: e_i e_j = sum c e_k."""

    def __init__(self, field: Field, basis, sc, params=(), name: str | None = None):
        self.field = field
        self.params = tuple(params)
        self.ring = PolyRing(field, self.params) if self.params else field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.name = name
        if len(set(self.basis)) != self.dim:
            raise JalgError(f"duplicate basis labels {self.basis}")
        if len(sc) != self.dim:
            raise DimensionError(f"tensor has {len(sc)} rows, dim is {self.dim}")
        table = []
        for i in range(self.dim):
            if len(sc[i]) != self.dim:
                raise DimensionError(f"tensor row {i} has length {len(sc[i])}")
            row = []
            for j in range(self.dim):
                cell = sc[i][j]
                if len(cell) != self.dim:
                    raise DimensionError(f"tensor cell ({i},{j}) has length {len(cell)}")
                row.append(tuple(self.ring.coerce(c) for c in cell))
            table.append(tuple(row))
        self.sc = tuple(table)
        for i in range(self.dim):
            for j in range(i):
                if self.sc[i][j] != self.sc[j][i]:
                    raise VerificationError(
                        f"structure constants not symmetric at "
                        f"({self.basis[i]}, {self.basis[j]})"
                    )
        self._jordan: identities.Verdict | None = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_products(cls, field: Field, basis, products, params=(), name=None):
        """products: {(label, label): {label: coefficient}}; missing pairs are 0."""
        basis = tuple(basis)
        index = {lab: i for i, lab in enumerate(basis)}
        n = len(basis)
        ring = PolyRing(field, tuple(params)) if params else field
        sc = [[[ring.zero] * n for _ in range(n)] for _ in range(n)]
        for (x, y), combo in products.items():
            for lab in (x, y, *combo):
                if lab not in index:
                    raise JalgError(f"unknown basis label {lab!r}")
            i, j = index[x], index[y]
            vec = [ring.zero] * n
            for lab, c in combo.items():
                vec[index[lab]] = ring.coerce(c)
            sc[i][j] = vec
            sc[j][i] = vec
        return cls(field, basis, sc, params=params, name=name)

    @classmethod
    def abelian(cls, field: Field, basis, name=None):
        return cls.from_products(field, basis, {}, name=name)

    # -- elements --------------------------------------------------------------

    def element(self, coords) -> "Element":
        coords = tuple(self.ring.coerce(c) for c in coords)
        if len(coords) != self.dim:
            raise DimensionError(f"expected {self.dim} coordinates, got {len(coords)}")
        return Element(self, coords)

    def basis_element(self, i) -> "Element":
        """Basis vector by index or label."""
        if isinstance(i, str):
            if i not in self.basis:
                raise JalgError(f"unknown basis label {i!r}")
            i = self.basis.index(i)
        if not 0 <= i < self.dim:
            raise DimensionError(f"basis index {i} out of range for dim {self.dim}")
        return self.element(
            [self.ring.one if j == i else self.ring.zero for j in range(self.dim)]
        )

    def from_combination(self, combo: dict) -> "Element":
        index = {lab: i for i, lab in enumerate(self.basis)}
        coords = [self.ring.zero] * self.dim
        for lab, c in combo.items():
            coords[index[lab]] = self.ring.coerce(c)
        return self.element(coords)

    @property
    def zero(self) -> "Element":
        return self.element([self.ring.zero] * self.dim)

    def mul_coords(self, x, y):
        ring = self.ring
        out = [ring.zero] * self.dim
        for i, xi in enumerate(x):
            if ring.is_zero(xi):
                continue
            row = self.sc[i]
            for j, yj in enumerate(y):
                if ring.is_zero(yj):
                    continue
                f = ring.mul(xi, yj)
                cell = row[j]
                for k in range(self.dim):
                    if not ring.is_zero(cell[k]):
                        out[k] = ring.add(out[k], ring.mul(f, cell[k]))
        return out

    def mul(self, x: "Element", y: "Element") -> "Element":
        if x.algebra is not self or y.algebra is not self:
            raise JalgError("elements belong to a different algebra")
        return Element(self, tuple(self.mul_coords(x.coords, y.coords)))

    # -- verification ------------------------------------------------------------

    def jordan_check(self) -> identities.Verdict:
        if self._jordan is None:
            self._jordan = identities.jordan_verdict(self.field, self.sc, self.params)
        return self._jordan

    @property
    def is_jordan(self) -> bool:
        return self.jordan_check().ok

    @property
    def is_abelian(self) -> bool:
        return all(
            self.ring.is_zero(c) for row in self.sc for cell in row for c in cell
        )

    # -- conversions ---------------------------------------------------------------

    def table_key(self):
        return (self.field.characteristic, self.params, self.sc)

    def to_field(self, target: Field) -> "Algebra":
        if target is self.field:
            return self
        sc = [
            [[transport_entry(c, self.field, target) for c in cell] for cell in row]
            for row in self.sc
        ]
        return Algebra(target, self.basis, sc, params=self.params, name=self.name)

    def substitute_params(self, assignment: dict) -> "Algebra":
        if not self.params:
            return self
        sc = [
            [[c.eval(assignment) for c in cell] for cell in row] for row in self.sc
        ]
        return Algebra(self.field, self.basis, sc, name=self.name)

    def relabel(self, basis) -> "Algebra":
        return Algebra(self.field, basis, self.sc, params=self.params, name=self.name)

    def __eq__(self, other):
        # labels are cosmetic: equality is equality of tables over one field
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.field is other.field
            and self.params == other.params
            and self.sc == other.sc
        )

    def __hash__(self):
        return hash(self.table_key())

    def __repr__(self):
        label = self.name or "Algebra"
        return f"{label}(dim={self.dim}, field={self.field})"

    def format_table(self) -> str:
        lines = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                if any(not self.ring.is_zero(c) for c in self.sc[i][j]):
                    prod = format_combination(self.ring, self.sc[i][j], self.basis)
                    lines.append(f"{self.basis[i]} {self.basis[j]} = {prod}")
        return "\n".join(lines) if lines else "(abelian: all products zero)"


class Element:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: tuple):
        self.algebra = algebra
        self.coords = coords

    def __add__(self, other: "Element") -> "Element":
        ring = self.algebra.ring
        return Element(
            self.algebra,
            tuple(ring.add(a, b) for a, b in zip(self.coords, other.coords)),
        )

    def __sub__(self, other: "Element") -> "Element":
        ring = self.algebra.ring
        return Element(
            self.algebra,
            tuple(ring.sub(a, b) for a, b in zip(self.coords, other.coords)),
        )

    def __mul__(self, other: "Element") -> "Element":
        return self.algebra.mul(self, other)

    def scale(self, c) -> "Element":
        ring = self.algebra.ring
        c = ring.coerce(c)
        return Element(self.algebra, tuple(ring.mul(c, a) for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return all(self.algebra.ring.is_zero(c) for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        return format_combination(self.algebra.ring, self.coords, self.algebra.basis)


class LinearMap:
    """cols[j] = coordinates of the image of source basis vector j."""

    def __init__(self, field: Field, source_dim: int, target_dim: int, cols):
        self.field = field
        self.source_dim = source_dim
        self.target_dim = target_dim
        cols = tuple(tuple(field.coerce(c) for c in col) for col in cols)
        if len(cols) != source_dim or any(len(c) != target_dim for c in cols):
            raise DimensionError(
                f"expected {source_dim} columns of length {target_dim}"
            )
        self.cols = cols

    @classmethod
    def identity(cls, field: Field, dim: int) -> "LinearMap":
        return cls(field, dim, dim, linalg.identity(field, dim))

    @classmethod
    def zero(cls, field: Field, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(
            field, source_dim, target_dim, [[field.zero] * target_dim] * source_dim
        )

    @classmethod
    def from_images(cls, source: Algebra, target: Algebra, images: dict) -> "LinearMap":
        """images: {source label: {target label: coeff}}; missing labels map to 0."""
        if source.field is not target.field:
            raise FieldMismatchError(f"{source.field} vs {target.field}")
        tindex = {lab: i for i, lab in enumerate(target.basis)}
        cols = []
        for lab in source.basis:
            vec = [target.field.zero] * target.dim
            for tlab, c in images.get(lab, {}).items():
                vec[tindex[tlab]] = target.field.coerce(c)
            cols.append(vec)
        return cls(source.field, source.dim, target.dim, cols)

    def apply(self, coords):
        if len(coords) != self.source_dim:
            raise DimensionError(f"expected {self.source_dim} coordinates")
        out = [self.field.zero] * self.target_dim
        for j, xj in enumerate(coords):
            if self.field.is_zero(xj):
                continue
            col = self.cols[j]
            for k in range(self.target_dim):
                out[k] = self.field.add(out[k], self.field.mul(xj, col[k]))
        return out

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        if inner.target_dim != self.source_dim:
            raise DimensionError("composition dimension mismatch")
        cols = [self.apply(col) for col in inner.cols]
        return LinearMap(self.field, inner.source_dim, self.target_dim, cols)

    def add(self, other: "LinearMap") -> "LinearMap":
        cols = [
            [self.field.add(a, b) for a, b in zip(c1, c2)]
            for c1, c2 in zip(self.cols, other.cols)
        ]
        return LinearMap(self.field, self.source_dim, self.target_dim, cols)

    def neg(self) -> "LinearMap":
        cols = [[self.field.neg(a) for a in col] for col in self.cols]
        return LinearMap(self.field, self.source_dim, self.target_dim, cols)

    def rows(self) -> list[list]:
        return [
            [self.cols[j][k] for j in range(self.source_dim)]
            for k in range(self.target_dim)
        ]

    def is_invertible(self) -> bool:
        return self.source_dim == self.target_dim and linalg.is_invertible(
            self.field, self.rows()
        )

    def inverse(self) -> "LinearMap":
        inv_rows = linalg.invert(self.field, self.rows())
        if inv_rows is None:
            raise JalgError("map is singular")
        cols = [
            [inv_rows[k][j] for k in range(self.source_dim)]
            for j in range(self.target_dim)
        ]
        return LinearMap(self.field, self.target_dim, self.source_dim, cols)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.field is other.field
            and self.cols == other.cols
            and self.target_dim == other.target_dim
        )

    def __hash__(self):
        return hash((self.field.characteristic, self.target_dim, self.cols))

    def __repr__(self):
        return f"LinearMap({self.source_dim}->{self.target_dim}, cols={self.cols})"


def hom_check(f: LinearMap, A: Algebra, B: Algebra) -> bool:
    """f(e_i e_j) = f(e_i) f(e_j) on all basis pairs; exact by bilinearity."""
    if A.params or B.params:
        raise JalgError("hom_check handles scalar algebras only")
    if f.source_dim != A.dim or f.target_dim != B.dim:
        raise DimensionError("map shape does not match the algebras")
    images = [f.cols[i] for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(i, A.dim):
            lhs = f.apply(A.sc[i][j])
            rhs = B.mul_coords(images[i], images[j])
            if lhs != rhs:
                return False
    return True


class Subspace:
    """Subspace of a scalar algebra's underlying space, canonicalized by RREF."""

    def __init__(self, ambient: Algebra, vectors):
        if ambient.params:
            raise JalgError("subspaces require scalar structure constants")
        self.ambient = ambient
        rows = [list(ambient.ring.coerce(c) for c in v) for v in vectors]
        for r in rows:
            if len(r) != ambient.dim:
                raise DimensionError("vector length does not match ambient dimension")
        reduced, _ = linalg.rref(ambient.field, rows)
        self.rows = tuple(tuple(r) for r in reduced)

    @classmethod
    def span_of_labels(cls, ambient: Algebra, labels) -> "Subspace":
        index = {lab: i for i, lab in enumerate(ambient.basis)}
        vecs = []
        for lab in labels:
            v = [ambient.field.zero] * ambient.dim
            v[index[lab]] = ambient.field.one
            vecs.append(v)
        return cls(ambient, vecs)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, coords) -> bool:
        return linalg.express(self.ambient.field, list(self.rows), list(coords)) is not None

    def coordinates(self, coords):
        return linalg.express(self.ambient.field, list(self.rows), list(coords))

    def sum(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace(self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        # solve u . self_rows = w . other_rows by a nullspace computation
        field = self.ambient.field
        n = self.ambient.dim
        stacked = []
        for k in range(n):
            row = [self.rows[i][k] for i in range(self.dim)]
            row += [field.neg(other.rows[j][k]) for j in range(other.dim)]
            stacked.append(row)
        vectors = []
        for sol in linalg.nullspace(field, stacked):
            combo = [field.zero] * n
            for i in range(self.dim):
                for k in range(n):
                    combo[k] = field.add(combo[k], field.mul(sol[i], self.rows[i][k]))
            vectors.append(combo)
        return Subspace(self.ambient, vectors)

    def _same_ambient(self, other: "Subspace"):
        if self.ambient is not other.ambient:
            raise JalgError("subspaces live in different ambient algebras")

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient is other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((id(self.ambient), self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient!r})"


def complement_check(E: Algebra, U: Subspace, W: Subspace) -> bool:
    if U.ambient is not E or W.ambient is not E:
        raise JalgError("subspaces do not live in the given algebra")
    if U.dim + W.dim != E.dim:
        return False
    if U.intersect(W).dim != 0:
        return False
    return U.sum(W).dim == E.dim


def subalgebra_check(E: Algebra, U: Subspace) -> bool:
    return subalgebra_witness(E, U) is None


def subalgebra_witness(E: Algebra, U: Subspace):
    """None if closed, else (i, j, product coordinates) for an escaping product."""
    if U.ambient is not E:
        raise JalgError("subspace does not live in the given algebra")
    for i in range(U.dim):
        for j in range(i, U.dim):
            prod = E.mul_coords(U.rows[i], U.rows[j])
            if not U.contains(prod):
                return (i, j, prod)
    return None


def induced_subalgebra(E: Algebra, U: Subspace):
    """The algebra on U's canonical basis plus its inclusion map into E."""
    if not subalgebra_check(E, U):
        raise VerificationError("subspace is not closed under multiplication")
    labels = []
    for idx, row in enumerate(U.rows):
        ones = [k for k, c in enumerate(row) if not E.ring.is_zero(c)]
        if len(ones) == 1 and E.ring.eq(row[ones[0]], E.ring.one):
            labels.append(E.basis[ones[0]])
        else:
            labels.append(f"s{idx}")
    n = U.dim
    sc = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = E.mul_coords(U.rows[i], U.rows[j])
            row.append(U.coordinates(prod))
        sc.append(row)
    sub = Algebra(E.field, labels, sc)
    incl = LinearMap(E.field, n, E.dim, [list(r) for r in U.rows])
    return sub, incl


class Bimodule:
    """Module over an algebra with one action tensor act[i][m] = e_i . m_m.

    The two-sided symmetry compatibility is structural: a single tensor
    represents both xa and ax.
    """

    def __init__(self, algebra: Algebra, module_dim: int, act, labels=None):
        self.algebra = algebra
        self.module_dim = module_dim
        ring = algebra.ring
        if len(act) != algebra.dim:
            raise DimensionError("action tensor must have one row per algebra basis vector")
        table = []
        for row in act:
            if len(row) != module_dim:
                raise DimensionError("action row length does not match module dimension")
            table.append(
                tuple(tuple(ring.coerce(c) for c in cell) for cell in row)
            )
            if any(len(cell) != module_dim for cell in row):
                raise DimensionError("action values must live in the module")
        self.act = tuple(table)
        self.labels = tuple(labels) if labels else tuple(f"m{i}" for i in range(module_dim))
        self._verdict: identities.Verdict | None = None

    @classmethod
    def regular(cls, algebra: Algebra) -> "Bimodule":
        return cls(algebra, algebra.dim, algebra.sc, labels=algebra.basis)

    @classmethod
    def zero(cls, algebra: Algebra, module_dim: int, labels=None) -> "Bimodule":
        z = algebra.ring.zero
        act = [
            [[z] * module_dim for _ in range(module_dim)] for _ in range(algebra.dim)
        ]
        return cls(algebra, module_dim, act, labels=labels)

    def check(self) -> identities.Verdict:
        if self._verdict is None:
            self._verdict = identities.bimodule_verdict(
                self.algebra.field, self.algebra.sc, self.act, self.algebra.params
            )
        return self._verdict


def bimodule_check(A: Algebra, M: Bimodule) -> identities.Verdict:
    if M.algebra is not A:
        raise JalgError("bimodule belongs to a different algebra")
    if not A.is_jordan:
        raise VerificationError("base algebra fails the Jordan identity")
    return M.check()


def dual_action(A: Algebra) -> Bimodule:
    """Transpose action (a . phi)(b) := phi(a b) on the dual space.

    Always satisfies the one-variable action law when A is Jordan; the law
    is still verified and a failure raises.
    """
    if not A.is_jordan:
        raise VerificationError("dual action requires a Jordan algebra")
    n = A.dim
    act = [
        [[A.sc[i][k][j] for k in range(n)] for j in range(n)] for i in range(n)
    ]
    labels = tuple(f"{lab}*" for lab in A.basis)
    mod = Bimodule(A, n, act, labels=labels)
    verdict = identities.action_law_verdict(
        A.field, A.sc, mod.act, A.params, acting_prefix="a", module_prefix="f",
        axiom="action-law",
    )
    if not verdict.ok:
        raise VerificationError("dual action violates the action law:\n" + verdict.describe())
    return mod


def jordanize(field: Field, basis, assoc, params=(), name=None) -> Algebra:
    """Symmetrize an associative multiplication: x . y = (xy + yx) / 2.

    Associativity of the input is checked on basis triples (exact by
    trilinearity); the result is verified Jordan even though that is
    guaranteed.
    """
    n = len(basis)
    ring = PolyRing(field, tuple(params)) if params else field
    m = [[[ring.coerce(c) for c in cell] for cell in row] for row in assoc]

    def bimul(x, y):
        out = [ring.zero] * n
        for i, xi in enumerate(x):
            if ring.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if ring.is_zero(yj):
                    continue
                f = ring.mul(xi, yj)
                for k in range(n):
                    c = m[i][j][k]
                    if not ring.is_zero(c):
                        out[k] = ring.add(out[k], ring.mul(f, c))
        return out

    unit = lambda i: [ring.one if t == i else ring.zero for t in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = bimul(bimul(unit(i), unit(j)), unit(k))
                rhs = bimul(unit(i), bimul(unit(j), unit(k)))
                if lhs != rhs:
                    raise VerificationError(
                        f"input multiplication is not associative at basis triple "
                        f"({basis[i]}, {basis[j]}, {basis[k]})"
                    )
    half = field.inv(field.coerce(2))
    sc = []
    for i in range(n):
        row = []
        for j in range(n):
            cell = [
                ring.mul(ring.coerce(half), ring.add(m[i][j][k], m[j][i][k]))
                for k in range(n)
            ]
            row.append(cell)
        sc.append(row)
    out = Algebra(field, basis, sc, params=params, name=name)
    verdict = out.jordan_check()
    if not verdict.ok:
        raise VerificationError("jordanization failed its own check:\n" + verdict.describe())
    return out


def null_split_extension(A: Algebra, M: Bimodule, name=None) -> Algebra:
    """Algebra on A x M with (a,x)(b,y) = (ab, xb + ya); M squares to zero."""
    verdict = bimodule_check(A, M)
    if not verdict.ok:
        raise VerificationError("bimodule axioms fail:\n" + verdict.describe())
    n, m = A.dim, M.module_dim
    dim = n + m
    ring = A.ring
    z = ring.zero
    labels = tuple(A.basis) + tuple(M.labels)
    if len(set(labels)) != dim:
        raise JalgError("algebra and module labels overlap")
    sc = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            sc[i][j] = list(A.sc[i][j]) + [z] * m
    for i in range(n):
        for x in range(m):
            cell = [z] * n + list(M.act[i][x])
            sc[i][n + x] = cell
            sc[n + x][i] = cell
    out = Algebra(A.field, labels, sc, params=A.params, name=name)
    check = out.jordan_check()
    if not check.ok:
        raise VerificationError("null split extension is not Jordan:\n" + check.describe())
    return out
