"""Matched pairs of Jordan algebras and everything built from them:
bicrossed products, semidirect products, canonical pairs extracted from a
factorization, split monomorphisms, and the abelian-pair classification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from . import identities, linalg
from .algebra import (
    Algebra,
    LinearMap,
    Subspace,
    complement_check,
    hom_check,
    induced_subalgebra,
    subalgebra_check,
)
from .errors import DimensionError, FieldMismatchError, JalgError, VerificationError
from .fields import Field
from .identities import Verdict
from .poly import PolyRing


def _coerce_action(V: Algebra, A: Algebra, tensor, out_dim: int):
    if V.field is not A.field:
        raise FieldMismatchError(f"{V.field} vs {A.field}")
    if V.params != A.params:
        raise JalgError("factors must share their parameter set")
    ring = A.ring
    if len(tensor) != V.dim:
        raise DimensionError("action tensor must have one row per V basis vector")
    rows = []
    for row in tensor:
        if len(row) != A.dim:
            raise DimensionError("action row length must equal dim A")
        cells = []
        for cell in row:
            if len(cell) != out_dim:
                raise DimensionError("action value has the wrong dimension")
            cells.append(tuple(ring.coerce(c) for c in cell))
        rows.append(tuple(cells))
    return tuple(rows)


class RightAction:
    """tensor[x][a] = coordinates in V of e_x <| e_a."""

    def __init__(self, V: Algebra, A: Algebra, tensor):
        self.V = V
        self.A = A
        self.tensor = _coerce_action(V, A, tensor, V.dim)

    @classmethod
    def zero(cls, V: Algebra, A: Algebra) -> "RightAction":
        z = A.ring.zero
        return cls(V, A, [[[z] * V.dim for _ in range(A.dim)] for _ in range(V.dim)])

    @classmethod
    def from_images(cls, V: Algebra, A: Algebra, images: dict) -> "RightAction":
        """images: {(x label, a label): {V label: coeff}}."""
        vidx = {lab: i for i, lab in enumerate(V.basis)}
        aidx = {lab: i for i, lab in enumerate(A.basis)}
        z = A.ring.zero
        tensor = [[[z] * V.dim for _ in range(A.dim)] for _ in range(V.dim)]
        for (x, a), combo in images.items():
            if x not in vidx or a not in aidx:
                raise JalgError(f"unknown basis label in action pair ({x!r}, {a!r})")
            vec = [z] * V.dim
            for lab, c in combo.items():
                if lab not in vidx:
                    raise JalgError(f"unknown basis label {lab!r}")
                vec[vidx[lab]] = c
            tensor[vidx[x]][aidx[a]] = vec
        return cls(V, A, tensor)

    def check(self) -> Verdict:
        # A acts on the space of V: transpose to acting-first indexing
        act = [
            [self.tensor[x][a] for x in range(self.V.dim)] for a in range(self.A.dim)
        ]
        return identities.action_law_verdict(
            self.A.field,
            self.A.sc,
            act,
            self.A.params,
            acting_prefix="a",
            module_prefix="x",
            axiom="right-action",
        )

    def apply(self, x_coords, a_coords):
        ring = self.A.ring
        out = [ring.zero] * self.V.dim
        for i, xi in enumerate(x_coords):
            if ring.is_zero(xi):
                continue
            for j, aj in enumerate(a_coords):
                if ring.is_zero(aj):
                    continue
                f = ring.mul(xi, aj)
                cell = self.tensor[i][j]
                for k in range(self.V.dim):
                    if not ring.is_zero(cell[k]):
                        out[k] = ring.add(out[k], ring.mul(f, cell[k]))
        return out

    def is_zero(self) -> bool:
        ring = self.A.ring
        return all(
            ring.is_zero(c) for row in self.tensor for cell in row for c in cell
        )

    def __eq__(self, other):
        return (
            isinstance(other, RightAction)
            and self.V == other.V
            and self.A == other.A
            and self.tensor == other.tensor
        )

    def __hash__(self):
        return hash(self.tensor)


class LeftAction:
    """tensor[x][a] = coordinates in A of e_x |> e_a."""

    def __init__(self, V: Algebra, A: Algebra, tensor):
        self.V = V
        self.A = A
        self.tensor = _coerce_action(V, A, tensor, A.dim)

    @classmethod
    def zero(cls, V: Algebra, A: Algebra) -> "LeftAction":
        z = A.ring.zero
        return cls(V, A, [[[z] * A.dim for _ in range(A.dim)] for _ in range(V.dim)])

    @classmethod
    def from_images(cls, V: Algebra, A: Algebra, images: dict) -> "LeftAction":
        """images: {(x label, a label): {A label: coeff}}."""
        vidx = {lab: i for i, lab in enumerate(V.basis)}
        aidx = {lab: i for i, lab in enumerate(A.basis)}
        z = A.ring.zero
        tensor = [[[z] * A.dim for _ in range(A.dim)] for _ in range(V.dim)]
        for (x, a), combo in images.items():
            if x not in vidx or a not in aidx:
                raise JalgError(f"unknown basis label in action pair ({x!r}, {a!r})")
            vec = [z] * A.dim
            for lab, c in combo.items():
                if lab not in aidx:
                    raise JalgError(f"unknown basis label {lab!r}")
                vec[aidx[lab]] = c
            tensor[vidx[x]][aidx[a]] = vec
        return cls(V, A, tensor)

    def check(self) -> Verdict:
        # V is the acting algebra; tensor is already acting-first
        return identities.action_law_verdict(
            self.V.field,
            self.V.sc,
            self.tensor,
            self.V.params,
            acting_prefix="x",
            module_prefix="a",
            axiom="left-action",
        )

    def apply(self, x_coords, a_coords):
        ring = self.A.ring
        out = [ring.zero] * self.A.dim
        for i, xi in enumerate(x_coords):
            if ring.is_zero(xi):
                continue
            for j, aj in enumerate(a_coords):
                if ring.is_zero(aj):
                    continue
                f = ring.mul(xi, aj)
                cell = self.tensor[i][j]
                for k in range(self.A.dim):
                    if not ring.is_zero(cell[k]):
                        out[k] = ring.add(out[k], ring.mul(f, cell[k]))
        return out

    def is_zero(self) -> bool:
        ring = self.A.ring
        return all(
            ring.is_zero(c) for row in self.tensor for cell in row for c in cell
        )

    def __eq__(self, other):
        return (
            isinstance(other, LeftAction)
            and self.V == other.V
            and self.A == other.A
            and self.tensor == other.tensor
        )

    def __hash__(self):
        return hash(self.tensor)


class MatchedPair:
    """(A, V, <|, |>) with a cached verification state."""

    def __init__(self, A: Algebra, V: Algebra, right: RightAction, left: LeftAction,
                 name: str | None = None):
        if right.V is not V or right.A is not A or left.V is not V or left.A is not A:
            raise JalgError("actions do not connect the given algebras")
        self.A = A
        self.V = V
        self.right = right
        self.left = left
        self.name = name
        self._verdict: Verdict | None = None

    @classmethod
    def with_zero_actions(cls, A: Algebra, V: Algebra) -> "MatchedPair":
        return cls(A, V, RightAction.zero(V, A), LeftAction.zero(V, A))

    def to_field(self, target) -> "MatchedPair":
        """Transport a scalar pair along Q -> F_p reduction."""
        if self.A.params:
            raise JalgError("cannot transport a parametric pair")
        if target is self.A.field:
            return self
        src = self.A.field
        A2 = self.A.to_field(target)
        V2 = self.V.to_field(target)

        def move(tensor):
            return [
                [[src.transport(c, target) for c in cell] for cell in row]
                for row in tensor
            ]

        return MatchedPair(
            A2,
            V2,
            RightAction(V2, A2, move(self.right.tensor)),
            LeftAction(V2, A2, move(self.left.tensor)),
            name=self.name,
        )

    def mp_check(self, stop_early: bool = False) -> Verdict:
        """The six compatibility conditions only (assumes actions already lawful)."""
        return identities.matched_pair_verdict(
            self.A.field,
            self.A.sc,
            self.V.sc,
            [list(map(list, row)) for row in self.right.tensor],
            [list(map(list, row)) for row in self.left.tensor],
            self.A.params,
            stop_early=stop_early,
        )

    def verify(self, stop_early: bool = False) -> Verdict:
        """Everything: both factors Jordan, both action laws, MP1-MP6."""
        if self._verdict is not None and not stop_early:
            return self._verdict
        pieces: list[tuple[str, Verdict]] = []
        pieces.append(("jordan-A", self.A.jordan_check()))
        pieces.append(("jordan-V", self.V.jordan_check()))
        if all(v.ok for _, v in pieces) or not stop_early:
            pieces.append(("right-action", self.right.check()))
            pieces.append(("left-action", self.left.check()))
        if all(v.ok for _, v in pieces) or not stop_early:
            pieces.append(("mp", self.mp_check(stop_early=stop_early)))
        failures = []
        checked = []
        for prefix, v in pieces:
            checked.extend(v.checked if prefix == "mp" else [prefix])
            for f in v.failures:
                name = f.axiom if prefix in ("mp", "right-action", "left-action") else prefix
                failures.append(
                    identities.AxiomFailure(name, f.space, f.index, f.residual)
                )
        verdict = Verdict(not failures, tuple(failures), tuple(checked))
        if not stop_early:
            self._verdict = verdict
        elif verdict.ok:
            self._verdict = verdict
        return verdict

    @property
    def is_matched(self) -> bool:
        return self.verify().ok

    def __eq__(self, other):
        return (
            isinstance(other, MatchedPair)
            and self.A == other.A
            and self.V == other.V
            and self.right.tensor == other.right.tensor
            and self.left.tensor == other.left.tensor
        )

    def __hash__(self):
        return hash((self.A, self.V, self.right.tensor, self.left.tensor))

    def __repr__(self):
        label = self.name or "MatchedPair"
        return f"{label}(dim A={self.A.dim}, dim V={self.V.dim})"


def _product_labels(A: Algebra, V: Algebra):
    labels = list(A.basis)
    for lab in V.basis:
        new = lab
        while new in labels:
            new += "'"
        labels.append(new)
    return labels


def bicross_table(mp: MatchedPair) -> Algebra:
    """The candidate product algebra on A x V, built without verification.

    (a,x)(b,y) = (ab + x|>b + y|>a, x<|b + y<|a + xy).  Used both by the
    verified constructor and by equivalence scans that need the table for
    pairs that may fail the axioms.
    """
    A, V = mp.A, mp.V
    n, m = A.dim, V.dim
    dim = n + m
    ring = A.ring
    z = ring.zero
    sc = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            sc[i][j] = list(A.sc[i][j]) + [z] * m
    for x in range(m):
        for y in range(m):
            sc[n + x][n + y] = [z] * n + list(V.sc[x][y])
    for i in range(n):
        for x in range(m):
            cell = list(mp.left.tensor[x][i]) + list(mp.right.tensor[x][i])
            sc[i][n + x] = cell
            sc[n + x][i] = cell
    name = f"{A.name}|x|{V.name}" if A.name and V.name else None
    return Algebra(A.field, _product_labels(A, V), sc, params=A.params, name=name)


@dataclass
class BicrossedProduct:
    product: Algebra
    pair: MatchedPair
    a_embedding: Subspace
    v_embedding: Subspace

    def include_a(self) -> LinearMap:
        cols = [list(r) for r in self.a_embedding.rows]
        return LinearMap(self.product.field, self.pair.A.dim, self.product.dim, cols)

    def include_v(self) -> LinearMap:
        cols = [list(r) for r in self.v_embedding.rows]
        return LinearMap(self.product.field, self.pair.V.dim, self.product.dim, cols)


def bicross(mp: MatchedPair) -> BicrossedProduct:
    verdict = mp.verify()
    if not verdict.ok:
        raise VerificationError("not a matched pair:\n" + verdict.describe())
    product = bicross_table(mp)
    check = product.jordan_check()
    if not check.ok:
        raise VerificationError(
            "bicrossed product failed the Jordan identity:\n" + check.describe()
        )
    n, dim = mp.A.dim, product.dim
    if mp.A.params:
        return BicrossedProduct(product, mp, None, None)
    f = product.field
    unit = lambda i: [f.one if k == i else f.zero for k in range(dim)]
    a_emb = Subspace(product, [unit(i) for i in range(n)])
    v_emb = Subspace(product, [unit(n + x) for x in range(dim - n)])
    if not subalgebra_check(product, a_emb) or not subalgebra_check(product, v_emb):
        raise VerificationError("bicrossed embeddings are not subalgebras")
    if not complement_check(product, a_emb, v_emb):
        raise VerificationError("bicrossed embeddings are not complementary")
    return BicrossedProduct(product, mp, a_emb, v_emb)


def semidirect_left(A: Algebra, V: Algebra, la: LeftAction) -> Algebra:
    """A |x V: multiplication (ab + x|>b + y|>a, xy); needs L1-L3."""
    for alg in (A, V):
        if not alg.is_jordan:
            raise VerificationError(f"{alg!r} fails the Jordan identity")
    law = la.check()
    if not law.ok:
        raise VerificationError("left action law fails:\n" + law.describe())
    verdict = identities.left_semidirect_verdict(
        A.field, A.sc, V.sc,
        [list(map(list, row)) for row in la.tensor], A.params,
    )
    if not verdict.ok:
        raise VerificationError("semidirect axioms fail:\n" + verdict.describe())
    mp = MatchedPair(A, V, RightAction.zero(V, A), la)
    return bicross_table(mp)


def semidirect_right(A: Algebra, V: Algebra, ra: RightAction) -> Algebra:
    """A x| V: multiplication (ab, x<|b + y<|a + xy); needs R1-R3."""
    for alg in (A, V):
        if not alg.is_jordan:
            raise VerificationError(f"{alg!r} fails the Jordan identity")
    law = ra.check()
    if not law.ok:
        raise VerificationError("right action law fails:\n" + law.describe())
    verdict = identities.right_semidirect_verdict(
        A.field, A.sc, V.sc,
        [list(map(list, row)) for row in ra.tensor], A.params,
    )
    if not verdict.ok:
        raise VerificationError("semidirect axioms fail:\n" + verdict.describe())
    mp = MatchedPair(A, V, ra, LeftAction.zero(V, A))
    return bicross_table(mp)


class Factorization:
    """E together with complementary subalgebras A and B, and the projection
    onto A along B."""

    def __init__(self, E: Algebra, A_sub: Subspace, B_sub: Subspace):
        if not subalgebra_check(E, A_sub):
            raise VerificationError("first subspace is not a subalgebra")
        if not subalgebra_check(E, B_sub):
            raise VerificationError("second subspace is not a subalgebra")
        if not complement_check(E, A_sub, B_sub):
            raise VerificationError("subspaces are not complementary")
        self.E = E
        self.A_sub = A_sub
        self.B_sub = B_sub
        self.pi_A = _projection(E, A_sub, B_sub)


def _projection(E: Algebra, A_sub: Subspace, B_sub: Subspace) -> LinearMap:
    """E -> E with image A, kernel B."""
    f = E.field
    basis = list(A_sub.rows) + list(B_sub.rows)
    cols = []
    for k in range(E.dim):
        unit = [f.one if t == k else f.zero for t in range(E.dim)]
        coeffs = linalg.express(f, basis, unit)
        if coeffs is None:
            raise VerificationError("decomposition failed; not complementary")
        image = [f.zero] * E.dim
        for i in range(A_sub.dim):
            for t in range(E.dim):
                image[t] = f.add(image[t], f.mul(coeffs[i], A_sub.rows[i][t]))
        cols.append(image)
    return LinearMap(f, E.dim, E.dim, cols)


def canonical_pair(fact: Factorization) -> MatchedPair:
    """Actions x |> a := pi_A(xa), x <| a := xa - pi_A(xa) on the factors.

    Also rebuilds the bicrossed product of the result and checks that
    (a, x) -> a + x is an isomorphism onto E.
    """
    E = fact.E
    f = E.field
    A_alg, _ = induced_subalgebra(E, fact.A_sub)
    B_alg, _ = induced_subalgebra(E, fact.B_sub)
    left_rows = []
    right_rows = []
    for x in range(B_alg.dim):
        lrow = []
        rrow = []
        for a in range(A_alg.dim):
            prod = E.mul_coords(fact.B_sub.rows[x], fact.A_sub.rows[a])
            proj = fact.pi_A.apply(prod)
            rest = [f.sub(p, q) for p, q in zip(prod, proj)]
            la = fact.A_sub.coordinates(proj)
            rv = fact.B_sub.coordinates(rest)
            if la is None or rv is None:
                raise VerificationError("projection left the factorization")
            lrow.append(la)
            rrow.append(rv)
        left_rows.append(lrow)
        right_rows.append(rrow)
    mp = MatchedPair(
        A_alg,
        B_alg,
        RightAction(B_alg, A_alg, right_rows),
        LeftAction(B_alg, A_alg, left_rows),
    )
    verdict = mp.verify()
    if not verdict.ok:
        raise VerificationError(
            "canonical actions fail the matched-pair axioms:\n" + verdict.describe()
        )
    product = bicross_table(mp)
    cols = [list(r) for r in fact.A_sub.rows] + [list(r) for r in fact.B_sub.rows]
    phi = LinearMap(f, product.dim, E.dim, cols)
    if not phi.is_invertible() or not hom_check(phi, product, E):
        raise VerificationError("(a, x) -> a + x is not an isomorphism onto E")
    return mp


def split_mono_decompose(E: Algebra, p: LinearMap):
    """Decompose E along an idempotent algebra projection p.

    Returns (right semidirect product on im p x ker p, iso (a,x) -> a+x).
    """
    if p.source_dim != E.dim or p.target_dim != E.dim:
        raise DimensionError("projection must be an endomorphism of E")
    if not hom_check(p, E, E):
        raise VerificationError("projection is not an algebra map")
    if p.compose(p) != p:
        raise VerificationError("projection is not idempotent")
    f = E.field
    image = Subspace(E, [list(col) for col in p.cols])
    kernel = Subspace(E, linalg.nullspace(f, p.rows()))
    A_alg, _ = induced_subalgebra(E, image)
    V_alg, _ = induced_subalgebra(E, kernel)
    rows = []
    for x in range(V_alg.dim):
        row = []
        for a in range(A_alg.dim):
            prod = E.mul_coords(kernel.rows[x], image.rows[a])
            coords = kernel.coordinates(prod)
            if coords is None:
                raise VerificationError("kernel is not stable under the action")
            row.append(coords)
        rows.append(row)
    ra = RightAction(V_alg, A_alg, rows)
    product = semidirect_right(A_alg, V_alg, ra)
    cols = [list(r) for r in image.rows] + [list(r) for r in kernel.rows]
    psi = LinearMap(f, product.dim, E.dim, cols)
    if not psi.is_invertible() or not hom_check(psi, product, E):
        raise VerificationError("(a, x) -> a + x is not an isomorphism onto E")
    return product, psi


# ---------------------------------------------------------------------------
# abelian pairs: one-dimensional abelian complement


def pair_from_nilpotent(A0: Algebra, D: LinearMap, label: str = "t") -> MatchedPair:
    """The pair with <| = 0 and x |> a = D(a) on a 1-dim abelian factor.

    Not verified here: verify() passes exactly when D^3 = 0.
    """
    if not A0.is_abelian:
        raise JalgError("base algebra must be abelian")
    if D.source_dim != A0.dim or D.target_dim != A0.dim:
        raise DimensionError("D must be an endomorphism of the base algebra")
    V = Algebra.abelian(A0.field, [label])
    left = LeftAction(V, A0, [[list(D.cols[j]) for j in range(A0.dim)]])
    return MatchedPair(A0, V, RightAction.zero(V, A0), left)


@dataclass
class AbelianPairCensus:
    field: Field
    n: int
    candidates: int
    pairs: list = dc_field(default_factory=list)  # (lambda tuple, D cols, MatchedPair)

    @property
    def count(self) -> int:
        return len(self.pairs)


def _abelian_pair_conditions(field: Field, n: int):
    """MP residual coefficients as polynomials in the action entries.

    One symbolic verification with indeterminate entries; a candidate
    (lambda, D) is a matched pair iff every returned polynomial vanishes
    at it.  Action laws are automatic here (both factors are abelian).
    """
    lam_names = tuple(f"l{i}" for i in range(n))
    d_names = tuple(f"d{i}{j}" for i in range(n) for j in range(n))
    params = lam_names + d_names
    ring = PolyRing(field, params)
    z = [[field.zero] * n for _ in range(n)]
    mul_a = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    mul_v = [[[field.zero]]]
    right = [[[ring.var(f"l{j}")] for j in range(n)]]
    left = [[[ring.var(f"d{i}{j}") for i in range(n)] for j in range(n)]]
    verdict = identities.matched_pair_verdict(
        field, mul_a, mul_v, right, left, params=params
    )
    conditions = []
    seen = set()
    for failure in verdict.failures:
        for poly in identities.coefficients_by_generics(failure.residual, params):
            if poly not in seen:
                seen.add(poly)
                conditions.append(poly)
    return params, conditions


def enumerate_abelian_pairs(
    n: int, field: Field, allow_large: bool = False
) -> AbelianPairCensus:
    """All matched pairs (abelian n-dim, abelian 1-dim) over a finite field.

    Scans every (lambda, D) in F^n x F^(n x n) against the exact MP
    conditions; each surviving candidate is re-verified with the full
    symbolic check before being admitted.  n = 3 means 5^12 candidates and
    runs for hours; it is refused unless allow_large is set.
    """
    if field.characteristic == 0:
        raise JalgError("enumeration needs a finite field")
    if n > 3 or (n == 3 and not allow_large):
        raise JalgError(f"n = {n} enumeration is too large (pass allow_large for n = 3)")
    params, conditions = _abelian_pair_conditions(field, n)
    A0 = Algebra.abelian(field, [f"e{i}" for i in range(n)], name=f"A0({n})")
    census = AbelianPairCensus(field, n, field.characteristic ** (n + n * n))
    elems = list(field.elements())
    for lam in itertools.product(elems, repeat=n):
        for dvals in itertools.product(elems, repeat=n * n):
            assignment = dict(zip(params, lam + dvals))
            if any(not field.is_zero(c.eval(assignment)) for c in conditions):
                continue
            # D entries are listed row-major: dvals[i*n + j] = d_ij
            cols = [[dvals[i * n + j] for i in range(n)] for j in range(n)]
            D = LinearMap(field, n, n, cols)
            mp = pair_from_nilpotent(A0, D)
            if not lam == (field.zero,) * n:
                right = RightAction(mp.V, A0, [[[lj] for lj in lam]])
                mp = MatchedPair(A0, mp.V, right, mp.left)
            verdict = mp.verify()
            if not verdict.ok:
                raise VerificationError(
                    "condition scan admitted a candidate the full check rejects"
                )
            census.pairs.append((lam, tuple(map(tuple, cols)), mp))
    _assert_nilpotent_bijection(census, field, n)
    return census


def _matrix_cube_is_zero(field: Field, cols, n: int) -> bool:
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    sq = linalg.mat_mul(field, rows, rows)
    cb = linalg.mat_mul(field, sq, rows)
    return all(field.is_zero(c) for row in cb for c in row)


def _assert_nilpotent_bijection(census: AbelianPairCensus, field: Field, n: int):
    """The valid set must be exactly {(lambda = 0, D) : D^3 = 0}."""
    found = {(lam, cols) for lam, cols, _ in census.pairs}
    zero_lam = (field.zero,) * n
    expected = set()
    for dvals in itertools.product(list(field.elements()), repeat=n * n):
        cols = tuple(
            tuple(dvals[i * n + j] for i in range(n)) for j in range(n)
        )
        if _matrix_cube_is_zero(field, cols, n):
            expected.add((zero_lam, cols))
    if found != expected:
        raise VerificationError(
            f"abelian census mismatch: scan found {len(found)} pairs, "
            f"nilpotency predicts {len(expected)}"
        )
