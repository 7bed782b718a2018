"""Morphisms between bicrossed products via (r, s, t, q) quadruples,
isomorphism decision at desk scale, and a two-dimensional classifier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import Algebra, LinearMap
from .errors import DimensionError, JalgError
from .matched_pair import MatchedPair


@dataclass(frozen=True)
class QuadrupleVerdict:
    ok: bool
    violated: tuple[str, ...]

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class MorphismQuadruple:
    source: MatchedPair
    target: MatchedPair
    r: LinearMap  # A  -> A'
    s: LinearMap  # A  -> V'
    t: LinearMap  # V  -> A'
    q: LinearMap  # V  -> V'

    def shapes_ok(self) -> bool:
        src, tgt = self.source, self.target
        return (
            self.r.source_dim == src.A.dim
            and self.r.target_dim == tgt.A.dim
            and self.s.source_dim == src.A.dim
            and self.s.target_dim == tgt.V.dim
            and self.t.source_dim == src.V.dim
            and self.t.target_dim == tgt.A.dim
            and self.q.source_dim == src.V.dim
            and self.q.target_dim == tgt.V.dim
        )


def quadruple_check(qd: MorphismQuadruple) -> QuadrupleVerdict:
    """The six compatibilities; each is bilinear, so basis pairs are exact."""
    if not qd.shapes_ok():
        raise DimensionError("quadruple shapes do not match the matched pairs")
    src, tgt = qd.source, qd.target
    if src.A.params or tgt.A.params:
        raise JalgError("quadruple_check handles scalar pairs only")
    A, V = src.A, src.V
    A2, V2 = tgt.A, tgt.V
    f = A.field
    r, s, t, q = qd.r, qd.s, qd.t, qd.q

    def vsub(u, v):
        return [f.sub(a, b) for a, b in zip(u, v)]

    def vadd(u, v):
        return [f.add(a, b) for a, b in zip(u, v)]

    violated = []

    def run(name, residuals):
        if any(any(not f.is_zero(c) for c in res) for res in residuals):
            violated.append(name)

    # C1/C2 on A-basis pairs
    res1, res2 = [], []
    for i in range(A.dim):
        for j in range(i, A.dim):
            ab = A.sc[i][j]
            ri, rj = r.cols[i], r.cols[j]
            si, sj = s.cols[i], s.cols[j]
            lhs1 = vsub(r.apply(ab), A2.mul_coords(ri, rj))
            rhs1 = vadd(tgt.left.apply(si, rj), tgt.left.apply(sj, ri))
            res1.append(vsub(lhs1, rhs1))
            lhs2 = vsub(s.apply(ab), V2.mul_coords(si, sj))
            rhs2 = vadd(tgt.right.apply(si, rj), tgt.right.apply(sj, ri))
            res2.append(vsub(lhs2, rhs2))
    run("C1", res1)
    run("C2", res2)

    # C3/C4 on V-basis pairs
    res3, res4 = [], []
    for i in range(V.dim):
        for j in range(i, V.dim):
            xy = V.sc[i][j]
            ti, tj = t.cols[i], t.cols[j]
            qi, qj = q.cols[i], q.cols[j]
            lhs3 = vsub(t.apply(xy), A2.mul_coords(ti, tj))
            rhs3 = vadd(tgt.left.apply(qi, tj), tgt.left.apply(qj, ti))
            res3.append(vsub(lhs3, rhs3))
            lhs4 = vsub(q.apply(xy), V2.mul_coords(qi, qj))
            rhs4 = vadd(tgt.right.apply(qi, tj), tgt.right.apply(qj, ti))
            res4.append(vsub(lhs4, rhs4))
    run("C3", res3)
    run("C4", res4)

    # C5/C6 on mixed pairs
    res5, res6 = [], []
    for x in range(V.dim):
        for a in range(A.dim):
            xa_left = src.left.tensor[x][a]
            xa_right = src.right.tensor[x][a]
            ra, sa = r.cols[a], s.cols[a]
            tx, qx = t.cols[x], q.cols[x]
            lhs5 = vadd(r.apply(xa_left), t.apply(xa_right))
            rhs5 = vadd(
                vadd(A2.mul_coords(ra, tx), tgt.left.apply(sa, tx)),
                tgt.left.apply(qx, ra),
            )
            res5.append(vsub(lhs5, rhs5))
            lhs6 = vadd(s.apply(xa_left), q.apply(xa_right))
            rhs6 = vadd(
                vadd(V2.mul_coords(sa, qx), tgt.right.apply(sa, tx)),
                tgt.right.apply(qx, ra),
            )
            res6.append(vsub(lhs6, rhs6))
    run("C5", res5)
    run("C6", res6)

    return QuadrupleVerdict(not violated, tuple(violated))


def quadruple_to_map(qd: MorphismQuadruple) -> LinearMap:
    """psi(a, x) = (r(a) + t(x), s(a) + q(x)) as one block matrix."""
    src, tgt = qd.source, qd.target
    f = src.A.field
    cols = []
    for j in range(src.A.dim):
        cols.append(list(qd.r.cols[j]) + list(qd.s.cols[j]))
    for j in range(src.V.dim):
        cols.append(list(qd.t.cols[j]) + list(qd.q.cols[j]))
    return LinearMap(f, src.A.dim + src.V.dim, tgt.A.dim + tgt.V.dim, cols)


def map_to_quadruple(
    psi: LinearMap, source: MatchedPair, target: MatchedPair
) -> MorphismQuadruple:
    na, nv = source.A.dim, source.V.dim
    ma, mv = target.A.dim, target.V.dim
    if psi.source_dim != na + nv or psi.target_dim != ma + mv:
        raise DimensionError("map shape does not match the product spaces")
    f = psi.field
    r_cols = [psi.cols[j][:ma] for j in range(na)]
    s_cols = [psi.cols[j][ma:] for j in range(na)]
    t_cols = [psi.cols[na + j][:ma] for j in range(nv)]
    q_cols = [psi.cols[na + j][ma:] for j in range(nv)]
    return MorphismQuadruple(
        source,
        target,
        LinearMap(f, na, ma, r_cols),
        LinearMap(f, na, mv, s_cols),
        LinearMap(f, nv, ma, t_cols),
        LinearMap(f, nv, mv, q_cols),
    )


# ---------------------------------------------------------------------------
# isomorphism search


@dataclass(frozen=True)
class IsoVerdict:
    kind: str  # "isomorphic" | "non-isomorphic" | "unknown"
    witness: LinearMap | None = None
    certificate: str | None = None
    note: str | None = None

    @property
    def is_isomorphic(self) -> bool:
        return self.kind == "isomorphic"

    def __repr__(self):
        detail = self.certificate or self.note or ""
        return f"IsoVerdict({self.kind}{', ' + detail if detail else ''})"


def _trace_form_ranks(A: Algebra):
    """(rank of (x,y) -> tr L_{xy},  rank of (x,y) -> tr(L_x L_y))."""
    f = A.field
    n = A.dim
    ops = []
    for i in range(n):
        ops.append([[A.sc[i][j][k] for j in range(n)] for k in range(n)])
    traces = []
    for k in range(n):
        tr = f.zero
        for d in range(n):
            tr = f.add(tr, ops[k][d][d])
        traces.append(tr)
    # tr L_{e_i e_j} = sum_k (e_i e_j)_k tr L_{e_k}
    t1 = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = f.zero
            prod = A.sc[i][j]
            for k in range(n):
                if not f.is_zero(prod[k]):
                    acc = f.add(acc, f.mul(prod[k], traces[k]))
            t1[i][j] = acc
    # tr(L_{e_i} L_{e_j})
    t2 = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            comp = linalg.mat_mul(f, ops[i], ops[j])
            tr = f.zero
            for d in range(n):
                tr = f.add(tr, comp[d][d])
            t2[i][j] = tr
    return linalg.rank(f, t1), linalg.rank(f, t2)


def _product_span_dim(A: Algebra) -> int:
    rows = [list(A.sc[i][j]) for i in range(A.dim) for j in range(A.dim)]
    return linalg.rank(A.field, rows)


def invariant_signature(A: Algebra):
    """Cheap exact isomorphism invariants valid over any field."""
    r1, r2 = _trace_form_ranks(A)
    return (_product_span_dim(A), r1, r2)


@dataclass(frozen=True)
class Dim2Signature:
    product_span_dim: int
    trace_mul_rank: int
    trace_op_rank: int
    idempotents: int | None  # exact element counts, finite fields only
    square_zero: int | None

    def as_tuple(self):
        return (
            self.product_span_dim,
            self.trace_mul_rank,
            self.trace_op_rank,
            self.idempotents,
            self.square_zero,
        )


def classify_dim2(A: Algebra) -> Dim2Signature:
    """Invariant tuple for 2-dimensional algebras.

    Over a finite field the idempotent and square-zero element counts are
    exact (every element is scanned); over Q they are omitted, since a
    bounded search would not be an isomorphism invariant.
    """
    if A.dim != 2:
        raise DimensionError("classifier is for dimension 2")
    if not A.is_jordan:
        raise JalgError("classifier expects a Jordan algebra")
    span, r1, r2 = invariant_signature(A)
    idem = sqz = None
    f = A.field
    if f.characteristic:
        idem = 0
        sqz = 0
        for x0 in f.elements():
            for x1 in f.elements():
                sq = A.mul_coords([x0, x1], [x0, x1])
                if sq == [x0, x1]:
                    idem += 1
                if all(f.is_zero(c) for c in sq) and not (x0 == 0 and x1 == 0):
                    sqz += 1
    return Dim2Signature(span, r1, r2, idem, sqz)


def _hom_images_ok(A: Algebra, B: Algebra, images) -> bool:
    f = A.field
    for i in range(A.dim):
        for j in range(i, A.dim):
            src = A.sc[i][j]
            lhs = [f.zero] * B.dim
            for k in range(A.dim):
                c = src[k]
                if f.is_zero(c):
                    continue
                img = images[k]
                for d in range(B.dim):
                    lhs[d] = f.add(lhs[d], f.mul(c, img[d]))
            if lhs != B.mul_coords(images[i], images[j]):
                return False
    return True


def _exhaustive_fp(A: Algebra, B: Algebra, budget: int | None) -> IsoVerdict:
    f = A.field
    p = f.characteristic
    n = A.dim
    if n > 3:
        raise JalgError("exhaustive search is capped at dimension 3")
    seen = 0
    for flat in itertools.product(range(p), repeat=n * n):
        seen += 1
        if budget is not None and seen > budget:
            return IsoVerdict(
                "unknown", note=f"budget exhausted after {budget} of {p ** (n * n)} candidates"
            )
        rows = [flat[i * n : (i + 1) * n] for i in range(n)]
        images = [[rows[k][i] for k in range(n)] for i in range(n)]
        if not _hom_images_ok(A, B, images):
            continue
        if linalg.rank(f, rows) != n:
            continue
        return IsoVerdict("isomorphic", witness=LinearMap(f, n, n, images))
    return IsoVerdict("non-isomorphic", certificate="exhausted GL over the field")


def _height_values(budget: int):
    vals = {Fraction(0)}
    for num in range(1, budget + 1):
        for den in range(1, budget + 1):
            vals.add(Fraction(num, den))
            vals.add(Fraction(-num, den))
    return sorted(vals)


def _bounded_q_search(A: Algebra, B: Algebra, budget: int) -> LinearMap | None:
    n = A.dim
    values = _height_values(budget)
    f = A.field
    for flat in itertools.product(values, repeat=n * n):
        rows = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
        images = [[rows[k][i] for k in range(n)] for i in range(n)]
        if not _hom_images_ok(A, B, images):
            continue
        if linalg.rank(f, rows) != n:
            continue
        return LinearMap(f, n, n, images)
    return None


def iso_search(
    A: Algebra, B: Algebra, mode: str = "auto", budget: int | None = None
) -> IsoVerdict:
    """Decide isomorphism where feasible.

    exhaustive-Fp scans every matrix over the field (dim <= 3) and is a
    complete decision procedure; invariants-Q compares exact invariants
    and falls back to a bounded-height witness search, answering unknown
    when neither settles it.
    """
    if A.field is not B.field:
        return IsoVerdict("non-isomorphic", certificate="different ground fields")
    if A.params or B.params:
        raise JalgError("iso_search handles scalar algebras only")
    if A.dim != B.dim:
        return IsoVerdict(
            "non-isomorphic", certificate=f"dimensions differ: {A.dim} vs {B.dim}"
        )
    if mode == "auto":
        mode = "exhaustive-Fp" if A.field.characteristic else "invariants-Q"
    if mode == "exhaustive-Fp":
        if not A.field.characteristic:
            raise JalgError("exhaustive mode needs a finite field")
        return _exhaustive_fp(A, B, budget)
    if mode != "invariants-Q":
        raise JalgError(f"unknown mode {mode!r}")

    sig_a, sig_b = invariant_signature(A), invariant_signature(B)
    if sig_a != sig_b:
        return IsoVerdict(
            "non-isomorphic",
            certificate=f"(product span, trace ranks) differ: {sig_a} vs {sig_b}",
        )
    if A.dim == 2 and A.field.characteristic and A.is_jordan and B.is_jordan:
        sig2_a, sig2_b = classify_dim2(A), classify_dim2(B)
        if sig2_a != sig2_b:
            return IsoVerdict(
                "non-isomorphic",
                certificate=f"dim-2 signatures differ: {sig2_a.as_tuple()} vs {sig2_b.as_tuple()}",
            )
    height = 2 if budget is None else budget
    if A.dim <= 2 and not A.field.characteristic:
        witness = _bounded_q_search(A, B, height)
        if witness is not None:
            return IsoVerdict("isomorphic", witness=witness)
    return IsoVerdict(
        "unknown",
        note=f"invariants agree; no witness of height <= {height} found",
    )
