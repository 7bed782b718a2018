"""Complement deformation machinery.

A linear map r : V -> A satisfying the deformation identity bends the
multiplication of V into a new Jordan algebra V_r whose graph inside the
bicrossed product is again a complement of A.  Enumerating the maps and
grouping them by equivalence computes the factorization index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .algebra import (
    Algebra,
    LinearMap,
    Subspace,
    complement_check,
    format_combination,
    hom_check,
    induced_subalgebra,
    subalgebra_witness,
)
from .errors import BudgetError, DimensionError, JalgError, VerificationError
from .fields import Field
from .matched_pair import (
    BicrossedProduct,
    Factorization,
    MatchedPair,
    bicross,
    canonical_pair,
)
from .morphism import iso_search
from .poly import PolyRing


class DeformationMap:
    """Linear map from the complement factor V into A, with optional
    polynomial parameters for whole families at once."""

    __slots__ = ("mp", "params", "ring", "cols")

    def __init__(self, mp: MatchedPair, cols, params=()):
        if mp.A.params:
            raise JalgError("the underlying matched pair must be scalar")
        self.mp = mp
        self.params = tuple(params)
        ring = PolyRing(mp.A.field, self.params) if self.params else mp.A.field
        self.ring = ring
        cols = tuple(tuple(ring.coerce(c) for c in col) for col in cols)
        if len(cols) != mp.V.dim or any(len(col) != mp.A.dim for col in cols):
            raise DimensionError(
                f"need {mp.V.dim} columns of length {mp.A.dim}"
            )
        self.cols = cols

    @classmethod
    def zero(cls, mp: MatchedPair) -> "DeformationMap":
        z = mp.A.field.zero
        return cls(mp, [[z] * mp.A.dim for _ in range(mp.V.dim)])

    @classmethod
    def from_images(cls, mp: MatchedPair, images, params=()) -> "DeformationMap":
        """images: {V label: {A label: coefficient}}; missing labels map to 0."""
        ring = PolyRing(mp.A.field, tuple(params)) if params else mp.A.field
        unknown = set(images) - set(mp.V.basis)
        if unknown:
            raise JalgError(f"unknown labels {sorted(unknown)}")
        cols = []
        for lab in mp.V.basis:
            combo = images.get(lab, {})
            bad = set(combo) - set(mp.A.basis)
            if bad:
                raise JalgError(f"unknown labels {sorted(bad)}")
            cols.append(
                [ring.coerce(combo.get(t, 0)) for t in mp.A.basis]
            )
        return cls(mp, cols, params)

    def apply(self, x_coords):
        R = self.ring
        out = [R.zero] * self.mp.A.dim
        for j, c in enumerate(x_coords):
            c = R.coerce(c)
            if R.is_zero(c):
                continue
            col = self.cols[j]
            for k in range(len(out)):
                if not R.is_zero(col[k]):
                    out[k] = R.add(out[k], R.mul(c, col[k]))
        return out

    @property
    def is_zero(self) -> bool:
        R = self.ring
        return all(R.is_zero(c) for col in self.cols for c in col)

    def substitute(self, assignment) -> "DeformationMap":
        """Pin every parameter to a field value."""
        if not self.params:
            raise JalgError("map has no parameters")
        missing = [p for p in self.params if p not in assignment]
        if missing:
            raise JalgError(f"missing values for {missing}")
        f = self.mp.A.field
        vals = {p: f.coerce(assignment[p]) for p in self.params}
        cols = [[c.eval(vals) for c in col] for col in self.cols]
        return DeformationMap(self.mp, cols)

    def check(self) -> "DeformationVerdict":
        return deformation_check(self.mp, self)

    def describe(self) -> str:
        parts = []
        for j, lab in enumerate(self.mp.V.basis):
            parts.append(
                f"r({lab}) = "
                + format_combination(self.ring, self.cols[j], self.mp.A.basis)
            )
        return ", ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, DeformationMap):
            return NotImplemented
        return (
            self.mp == other.mp
            and self.params == other.params
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.params, self.cols))

    def __repr__(self):
        return f"DeformationMap({self.describe()})"


@dataclass(frozen=True)
class DeformationVerdict:
    ok: bool
    failures: tuple  # (x label, y label, residual coordinate vector)

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "deformation identity holds"
        lines = []
        for x, y, res in self.failures:
            lines.append(f"fails at ({x}, {y}): residual {res}")
        return "\n".join(lines)


def _mixed_mul(ring, base_field, sc, u, v, out_dim):
    """Product with structure constants over base_field, coords over ring."""
    out = [ring.zero] * out_dim
    for i, ui in enumerate(u):
        if ring.is_zero(ui):
            continue
        for j, vj in enumerate(v):
            if ring.is_zero(vj):
                continue
            w = ring.mul(ui, vj)
            cell = sc[i][j]
            for k in range(out_dim):
                c = cell[k]
                if base_field.is_zero(c):
                    continue
                out[k] = ring.add(out[k], ring.mul(w, ring.coerce(c)))
    return out


def _act_basis(ring, base_field, tensor, idx, a_vec, out_dim):
    """Action of the idx-th basis vector on a ring-valued A vector."""
    out = [ring.zero] * out_dim
    row = tensor[idx]
    for a, c in enumerate(a_vec):
        if ring.is_zero(c):
            continue
        cell = row[a]
        for k in range(out_dim):
            e = cell[k]
            if base_field.is_zero(e):
                continue
            out[k] = ring.add(out[k], ring.mul(c, ring.coerce(e)))
    return out


def _act_vec(ring, base_field, tensor, x_vec, a_vec, out_dim):
    out = [ring.zero] * out_dim
    for x, cx in enumerate(x_vec):
        if ring.is_zero(cx):
            continue
        part = _act_basis(ring, base_field, tensor, x, a_vec, out_dim)
        for k in range(out_dim):
            if not ring.is_zero(part[k]):
                out[k] = ring.add(out[k], ring.mul(cx, part[k]))
    return out


def deformation_check(mp: MatchedPair, r: DeformationMap) -> DeformationVerdict:
    """r(xy) - r(x)r(y) = x |> r(y) + y |> r(x) - r(x <| r(y) + y <| r(x)).

    Bilinear in (x, y), so checking basis pairs is exact; with parameters
    the verdict covers every specialization at once.
    """
    if r.mp is not mp and r.mp != mp:
        raise JalgError("deformation map belongs to a different matched pair")
    A, V = mp.A, mp.V
    f = A.field
    R = r.ring
    nA, nV = A.dim, V.dim
    failures = []
    for i in range(nV):
        for j in range(i, nV):
            ri, rj = r.cols[i], r.cols[j]
            lhs = r.apply(V.sc[i][j])
            rr = _mixed_mul(R, f, A.sc, ri, rj, nA)
            lhs = [R.sub(lhs[k], rr[k]) for k in range(nA)]
            rhs = _act_basis(R, f, mp.left.tensor, i, rj, nA)
            part = _act_basis(R, f, mp.left.tensor, j, ri, nA)
            rhs = [R.add(rhs[k], part[k]) for k in range(nA)]
            inner = _act_basis(R, f, mp.right.tensor, i, rj, nV)
            part = _act_basis(R, f, mp.right.tensor, j, ri, nV)
            inner = [R.add(inner[k], part[k]) for k in range(nV)]
            ri_inner = r.apply(inner)
            rhs = [R.sub(rhs[k], ri_inner[k]) for k in range(nA)]
            res = [R.sub(lhs[k], rhs[k]) for k in range(nA)]
            if any(not R.is_zero(c) for c in res):
                failures.append(
                    (V.basis[i], V.basis[j], tuple(R.format(c) for c in res))
                )
    return DeformationVerdict(not failures, tuple(failures))


def r_deform(mp: MatchedPair, r: DeformationMap, name=None) -> Algebra:
    """The deformed algebra V_r with x . y = xy + x <| r(y) + y <| r(x)."""
    verdict = deformation_check(mp, r)
    if not verdict.ok:
        raise VerificationError(
            "map does not satisfy the deformation identity:\n" + verdict.describe()
        )
    A, V = mp.A, mp.V
    f = A.field
    R = r.ring
    nV = V.dim
    table = [[None] * nV for _ in range(nV)]
    for i in range(nV):
        for j in range(i, nV):
            cell = [R.coerce(c) for c in V.sc[i][j]]
            part = _act_basis(R, f, mp.right.tensor, i, r.cols[j], nV)
            cell = [R.add(cell[k], part[k]) for k in range(nV)]
            part = _act_basis(R, f, mp.right.tensor, j, r.cols[i], nV)
            cell = [R.add(cell[k], part[k]) for k in range(nV)]
            table[i][j] = table[j][i] = tuple(cell)
    out = Algebra(f, V.basis, table, params=r.params, name=name)
    if not out.jordan_check().ok:
        raise VerificationError("deformed table is not Jordan; this should not happen")
    return out


@dataclass(frozen=True)
class GraphComplement:
    extension: BicrossedProduct
    deformed: Algebra  # V_r in its own coordinates
    subspace: Subspace  # image of x -> (r(x), x) inside the product
    witness: LinearMap  # V_r -> product, an injective homomorphism


def graph_complement(mp: MatchedPair, r: DeformationMap) -> GraphComplement:
    if r.params:
        raise JalgError("graph construction needs a scalar map; substitute first")
    bp = bicross(mp)
    E = bp.product
    deformed = r_deform(mp, r)
    f = mp.A.field
    nA, nV = mp.A.dim, mp.V.dim
    cols = []
    for j in range(nV):
        tail = [f.one if k == j else f.zero for k in range(nV)]
        cols.append(list(r.cols[j]) + tail)
    witness = LinearMap(f, nV, nA + nV, cols)
    sub = Subspace(E, cols)
    if sub.dim != nV:
        raise VerificationError("graph collapsed; this should not happen")
    wit = subalgebra_witness(E, sub)
    if wit is not None:
        raise VerificationError(f"graph is not a subalgebra: {wit}")
    a_sub = bp.a_embedding
    if not complement_check(E, a_sub, sub):
        raise VerificationError("graph is not a complement of A")
    if not hom_check(witness, deformed, E):
        raise VerificationError("graph map is not a homomorphism from V_r")
    return GraphComplement(bp, deformed, sub, witness)


def equiv_check(
    mp: MatchedPair, r: DeformationMap, s: DeformationMap, sigma: LinearMap
) -> bool:
    """Whether sigma intertwines the deformations of r and s.

    sigma(xy) - sigma(x)sigma(y)
        = sigma(x) <| s(sigma(y)) - sigma(x <| r(y))
        + sigma(y) <| s(sigma(x)) - sigma(y <| r(x))

    Holds exactly when sigma : V_r -> V_s is an algebra isomorphism.
    """
    V = mp.V
    f = mp.A.field
    if sigma.source_dim != V.dim or sigma.target_dim != V.dim:
        raise DimensionError("sigma must be an endomorphism of V")
    if not sigma.is_invertible():
        raise JalgError("sigma must be invertible")
    if r.params != s.params:
        raise JalgError("maps must share the same parameter list")
    R = r.ring
    nV = V.dim

    def lin(map_cols, vec, out_dim):
        out = [R.zero] * out_dim
        for j, c in enumerate(vec):
            if R.is_zero(c):
                continue
            col = map_cols[j]
            for k in range(out_dim):
                e = col[k]
                if f.is_zero(e):
                    continue
                out[k] = R.add(out[k], R.mul(c, R.coerce(e)))
        return out

    sig_cols = [[R.coerce(c) for c in col] for col in sigma.cols]
    for i in range(nV):
        for j in range(i, nV):
            si = sig_cols[i]
            sj = sig_cols[j]
            lhs = [R.coerce(c) for c in sigma.apply(V.sc[i][j])]
            prod = _mixed_mul(R, f, V.sc, si, sj, nV)
            lhs = [R.sub(lhs[k], prod[k]) for k in range(nV)]
            rhs = _act_vec(R, f, mp.right.tensor, si, s.apply(sj), nV)
            part = _act_vec(R, f, mp.right.tensor, sj, s.apply(si), nV)
            rhs = [R.add(rhs[k], part[k]) for k in range(nV)]
            inner = _act_basis(R, f, mp.right.tensor, i, r.cols[j], nV)
            part = lin(sigma.cols, inner, nV)
            rhs = [R.sub(rhs[k], part[k]) for k in range(nV)]
            inner = _act_basis(R, f, mp.right.tensor, j, r.cols[i], nV)
            part = lin(sigma.cols, inner, nV)
            rhs = [R.sub(rhs[k], part[k]) for k in range(nV)]
            for k in range(nV):
                if not R.is_zero(R.sub(lhs[k], rhs[k])):
                    return False
    return True


def _deformation_conditions(mp: MatchedPair):
    """Residuals of the deformation identity with a fully generic map;
    the nonzero entries are the polynomial conditions a map must satisfy."""
    nA, nV = mp.A.dim, mp.V.dim
    params = tuple(f"r{j}_{k}" for j in range(nV) for k in range(nA))
    ring = PolyRing(mp.A.field, params)
    cols = [
        [ring.var(f"r{j}_{k}") for k in range(nA)] for j in range(nV)
    ]
    generic = DeformationMap(mp, cols, params)
    return params, _raw_conditions(mp, generic)


def _raw_conditions(mp: MatchedPair, generic: DeformationMap):
    A, V = mp.A, mp.V
    f = A.field
    R = generic.ring
    nA, nV = A.dim, V.dim
    out = []
    seen = set()
    for i in range(nV):
        for j in range(i, nV):
            ri, rj = generic.cols[i], generic.cols[j]
            lhs = generic.apply(V.sc[i][j])
            rr = _mixed_mul(R, f, A.sc, ri, rj, nA)
            lhs = [R.sub(lhs[k], rr[k]) for k in range(nA)]
            rhs = _act_basis(R, f, mp.left.tensor, i, rj, nA)
            part = _act_basis(R, f, mp.left.tensor, j, ri, nA)
            rhs = [R.add(rhs[k], part[k]) for k in range(nA)]
            inner = _act_basis(R, f, mp.right.tensor, i, rj, nV)
            part = _act_basis(R, f, mp.right.tensor, j, ri, nV)
            inner = [R.add(inner[k], part[k]) for k in range(nV)]
            ri_inner = generic.apply(inner)
            rhs = [R.sub(rhs[k], ri_inner[k]) for k in range(nA)]
            for k in range(nA):
                res = R.sub(lhs[k], rhs[k])
                if not R.is_zero(res) and res not in seen:
                    seen.add(res)
                    out.append(res)
    return out


def enumerate_deformations(
    mp: MatchedPair, max_candidates: int | None = None
) -> tuple[DeformationMap, ...]:
    """All deformation maps over a finite field, in lexicographic order of
    the flattened coefficient tuple (images of V basis vectors, A coords)."""
    f = mp.A.field
    p = f.characteristic
    if not p:
        raise JalgError("enumeration needs a finite field")
    nA, nV = mp.A.dim, mp.V.dim
    cells = nA * nV
    if cells > 9:
        raise BudgetError(
            f"{p}^{cells} candidate maps exceed the enumeration budget"
        )
    total = p**cells
    if max_candidates is not None and total > max_candidates:
        raise BudgetError(
            f"{total} candidate maps exceed the requested cap {max_candidates}"
        )
    params, conditions = _deformation_conditions(mp)
    found = []
    for flat in itertools.product(f.elements(), repeat=cells):
        vals = dict(zip(params, flat))
        if any(c.eval(vals) != 0 for c in conditions):
            continue
        cols = [flat[j * nA : (j + 1) * nA] for j in range(nV)]
        found.append(DeformationMap(mp, cols))
    # the symbolic filter must agree with the direct check
    for r in found:
        if not deformation_check(mp, r).ok:
            raise VerificationError(
                "condition filter admitted a non-deformation; this should not happen"
            )
    return tuple(found)


@dataclass(frozen=True)
class ComplementReport:
    field: Field
    maps: tuple[DeformationMap, ...]
    deformed: tuple[Algebra, ...]
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    witnesses: dict
    index: int
    note: str

    def describe(self) -> str:
        lines = [
            f"deformation maps over {self.field}: {len(self.maps)}",
            f"equivalence classes: {self.index}",
        ]
        for c, cls in enumerate(self.classes):
            rep = self.maps[cls[0]]
            table = self.deformed[cls[0]]
            lines.append(
                f"  class {c + 1} ({len(cls)} map{'s' if len(cls) != 1 else ''}): "
                f"{rep.describe()}"
            )
            body = table.format_table().replace("\n", "; ")
            lines.append(f"    complement table: {body}")
        lines.append(f"index = {self.index}")
        lines.append(self.note)
        return "\n".join(lines)


def _general_linear(f: Field, n: int):
    p = f.characteristic
    out = []
    for flat in itertools.product(range(p), repeat=n * n):
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        if linalg.rank(f, [list(r) for r in rows]) != n:
            continue
        cols = [[rows[k][j] for k in range(n)] for j in range(n)]
        out.append(LinearMap(f, n, n, cols))
    return out


def factorization_index(mp: MatchedPair) -> ComplementReport:
    """Count complements of A in the bicrossed product up to equivalence.

    Every deformation map is enumerated, maps are grouped by the sigma
    relation, and the grouping is cross-checked against isomorphism of
    the deformed algebras (the two partitions must coincide).
    """
    f = mp.A.field
    if not f.characteristic:
        raise JalgError("index computation needs a finite field")
    maps = enumerate_deformations(mp)
    deformed = tuple(r_deform(mp, r) for r in maps)
    gl = _general_linear(f, mp.V.dim)
    classes: list[list[int]] = []
    witnesses = {}
    for idx, r in enumerate(maps):
        placed = False
        for cls in classes:
            rep = maps[cls[0]]
            for sigma in gl:
                if equiv_check(mp, r, rep, sigma):
                    cls.append(idx)
                    witnesses[idx] = sigma
                    placed = True
                    break
            if placed:
                break
        if not placed:
            classes.append([idx])
            witnesses[idx] = LinearMap.identity(f, mp.V.dim)
    # oracle redundancy: sigma classes must match isomorphism classes
    for cls in classes:
        rep_table = deformed[cls[0]]
        for idx in cls[1:]:
            if not iso_search(deformed[idx], rep_table, "exhaustive-Fp").is_isomorphic:
                raise VerificationError(
                    "equivalent maps produced non-isomorphic complements"
                )
    for a in range(len(classes)):
        for b in range(a + 1, len(classes)):
            if iso_search(
                deformed[classes[a][0]], deformed[classes[b][0]], "exhaustive-Fp"
            ).is_isomorphic:
                raise VerificationError(
                    "distinct classes produced isomorphic complements"
                )
    return ComplementReport(
        field=f,
        maps=maps,
        deformed=deformed,
        classes=tuple(tuple(c) for c in classes),
        representatives=tuple(c[0] for c in classes),
        witnesses=witnesses,
        index=len(classes),
        note=f"count taken over {f}; other fields may give a different index",
    )


def complement_recover(
    E: Algebra, a_sub: Subspace, b_sub: Subspace, bbar_sub: Subspace
) -> DeformationMap:
    """Recover the deformation map whose graph is the complement bbar.

    Decomposes each basis vector of B over A + bbar and returns r = -u,
    where u is the A component; checks the result against the identity
    and verifies the bbar component is an isomorphism from V_r.
    """
    fact = Factorization(E, a_sub, b_sub)
    mp = canonical_pair(fact)
    wit = subalgebra_witness(E, bbar_sub)
    if wit is not None:
        raise VerificationError(f"bbar is not a subalgebra: {wit}")
    if not complement_check(E, a_sub, bbar_sub):
        raise VerificationError("bbar is not a complement of A")
    f = E.field
    na, nb = a_sub.dim, b_sub.dim
    stacked = [list(row) for row in a_sub.rows] + [list(row) for row in bbar_sub.rows]
    r_cols = []
    v_cols = []
    for row in b_sub.rows:
        coords = linalg.express(f, stacked, list(row))
        if coords is None:
            raise VerificationError("decomposition over A + bbar failed")
        r_cols.append([f.neg(c) for c in coords[:na]])
        v_cols.append(list(coords[na:]))
    r = DeformationMap(mp, r_cols)
    verdict = deformation_check(mp, r)
    if not verdict.ok:
        raise VerificationError(
            "recovered map fails the deformation identity:\n" + verdict.describe()
        )
    deformed = r_deform(mp, r)
    bbar_alg, _ = induced_subalgebra(E, bbar_sub)
    v_map = LinearMap(f, nb, bbar_sub.dim, v_cols)
    if not v_map.is_invertible() or not hom_check(v_map, deformed, bbar_alg):
        raise VerificationError("bbar component is not an isomorphism from V_r")
    return r
