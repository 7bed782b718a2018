"""Symbolic verification of algebra and matched-pair axioms.

Every "for all elements" axiom is decided by generic-element expansion:
substitute vectors of fresh indeterminates for the quantified elements,
expand both sides through the structure-constant tensors, and test that
every coordinate of the difference is the zero polynomial.  Over Q this
is exactly the functional identity; over F_p it is equivalent because
every axiom here has per-indeterminate degree <= 3 < p.

Tensor conventions (entries are raw field values, or Poly in declared
parameters for one-parameter families):

* multiplication  mul[i][j]   = coordinate vector of e_i e_j
* right action    right[x][a] = coordinate vector of e_x <| e_a  (in V)
* left action     left[x][a]  = coordinate vector of e_x |> e_a  (in A)
* module action   act[i][m]   = coordinate vector of e_i . m_m   (in M)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import JalgError
from .fields import Field
from .poly import Poly, PolyRing

MP_AXIOMS = ("MP1", "MP2", "MP3", "MP4", "MP5", "MP6")
LEFT_AXIOMS = ("L1", "L2", "L3")
RIGHT_AXIOMS = ("R1", "R2", "R3")

# With one action zero the other three MP axioms hold for degree reasons;
# the surviving three specialize to the semidirect compatibilities.
_LEFT_FROM_MP = {"MP1": "L1", "MP4": "L2", "MP6": "L3"}
_RIGHT_FROM_MP = {"MP2": "R1", "MP3": "R2", "MP5": "R3"}


@dataclass(frozen=True)
class AxiomFailure:
    """One nonzero coordinate of an expanded axiom."""

    axiom: str
    space: str  # which side of the product the coordinate lives in
    index: int
    residual: Poly

    def witness(self) -> str:
        """One offending monomial with its coefficient."""
        exp = next(iter(self.residual.terms))
        coeff = self.residual.terms[exp]
        ring = self.residual.ring
        mono = Poly(ring, {exp: ring.field.one})
        return f"coefficient {ring.field.format(coeff)} at {mono}"

    def __str__(self) -> str:
        return f"{self.axiom}[{self.space}:{self.index}] residual {self.residual}"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    failures: tuple[AxiomFailure, ...]
    checked: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok

    def failed_axioms(self) -> tuple[str, ...]:
        out: list[str] = []
        for f in self.failures:
            if f.axiom not in out:
                out.append(f.axiom)
        return tuple(out)

    def describe(self) -> str:
        if self.ok:
            return "pass (" + ", ".join(self.checked) + ")"
        lines = ["fail"]
        lines += [f"  {f}" for f in self.failures]
        return "\n".join(lines)


def _verdict(failures: list[AxiomFailure], checked) -> Verdict:
    return Verdict(not failures, tuple(failures), tuple(checked))


# ---------------------------------------------------------------------------
# working ring construction


def generic_ring(field: Field, params, groups):
    """Ring in the parameters plus one indeterminate per generic coordinate.

    groups: sequence of (prefix, dim).  Returns (ring, {prefix: vector}).
    """
    names = list(params)
    taken = set(names)
    if len(taken) != len(names):
        raise JalgError(f"duplicate parameter names in {params}")
    specs: list[tuple[str, list[str]]] = []
    for prefix, dim in groups:
        group = [f"{prefix}{i}" for i in range(dim)]
        for name in group:
            if name in taken:
                raise JalgError(f"parameter {name!r} collides with a generic coordinate")
            taken.add(name)
        names.extend(group)
        specs.append((prefix, group))
    ring = PolyRing(field, tuple(names))
    vectors = {prefix: [ring.var(n) for n in group] for prefix, group in specs}
    return ring, vectors


def _embed2(ring: PolyRing, table) -> list[list[list[Poly]]]:
    """Coerce a 2-index tensor of vectors into ring elements."""
    return [[[ring.coerce(c) for c in cell] for cell in row] for row in table]


def _bilinear(ring: PolyRing, tensor, u, v, out_dim: int) -> list[Poly]:
    """Expand the bilinear map given by tensor on coordinate vectors u, v."""
    out = [ring.zero] * out_dim
    for i, ui in enumerate(u):
        if ui.is_zero:
            continue
        row = tensor[i]
        for j, vj in enumerate(v):
            if vj.is_zero:
                continue
            cell = row[j]
            prod = ui * vj
            for k in range(out_dim):
                c = cell[k]
                if c.terms:
                    out[k] = out[k] + prod * c
    return out


def _vadd(u, v):
    return [a + b for a, b in zip(u, v)]


def _vsub(u, v):
    return [a - b for a, b in zip(u, v)]


def _vscale(u, raw):
    return [a.scale(raw) for a in u]


def _collect(failures, axiom, space, residual_vec, stop_early) -> bool:
    """Append nonzero coordinates; returns True if the axiom failed."""
    failed = False
    for k, p in enumerate(residual_vec):
        if not p.is_zero:
            failures.append(AxiomFailure(axiom, space, k, p))
            failed = True
            if stop_early:
                return True
    return failed


# ---------------------------------------------------------------------------
# single-algebra axioms


def symmetry_failures(mul, is_zero) -> list[tuple[int, int, int]]:
    """Commutativity is a property of the stored tensor, not a polynomial."""
    bad = []
    n = len(mul)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                if not is_zero(mul[i][j][k]) or not is_zero(mul[j][i][k]):
                    diff_ok = mul[i][j][k] == mul[j][i][k]
                    if not diff_ok:
                        bad.append((i, j, k))
    return bad


def jordan_verdict(field: Field, mul, params=(), stop_early: bool = False) -> Verdict:
    """(a^2 b) a = a^2 (b a) with generic a, b."""
    dim = len(mul)
    ring, gen = generic_ring(field, params, [("a", dim), ("b", dim)])
    t = _embed2(ring, mul)
    a, b = gen["a"], gen["b"]

    def M(u, v):
        return _bilinear(ring, t, u, v, dim)

    a2 = M(a, a)
    residual = _vsub(M(M(a2, b), a), M(a2, M(b, a)))
    failures: list[AxiomFailure] = []
    _collect(failures, "jordan", "A", residual, stop_early)
    return _verdict(failures, ["jordan"])


def action_law_verdict(
    field: Field,
    mul_acting,
    act,
    params=(),
    acting_prefix: str = "x",
    module_prefix: str = "m",
    axiom: str = "action-law",
) -> Verdict:
    """w (w^2 m) = w^2 (w m) for a generic acting element w and module element m.

    act[w][m] is the coordinate vector of basis vector w acting on module
    basis vector m.  This single law covers the right-action axiom (A acting
    on V), the left-action axiom (V acting on A), and the first bimodule
    compatibility: they differ only in which algebra acts.
    """
    dim_w = len(mul_acting)
    dim_m = len(act[0]) if dim_w else 0
    ring, gen = generic_ring(
        field, params, [(acting_prefix, dim_w), (module_prefix, dim_m)]
    )
    mul_t = _embed2(ring, mul_acting)
    act_t = _embed2(ring, act)
    w, m = gen[acting_prefix], gen[module_prefix]

    def S(u, v):
        return _bilinear(ring, act_t, u, v, dim_m)

    w2 = _bilinear(ring, mul_t, w, w, dim_w)
    residual = _vsub(S(w, S(w2, m)), S(w2, S(w, m)))
    failures: list[AxiomFailure] = []
    _collect(failures, axiom, "M", residual, False)
    return _verdict(failures, [axiom])


def bimodule_verdict(field: Field, mul, act, params=()) -> Verdict:
    """Both bimodule compatibilities for act[i][m] = e_i . m_m.

    The symmetry compatibility is structural (a single action tensor is
    stored).  Checked here:
      square law   a (a^2 m) = a^2 (a m)
      linearized   (a^2 b) m - a^2 (b m) = 2 [ (ab)(am) - a (b (am)) ]
    """
    dim = len(mul)
    dim_m = len(act[0]) if dim else 0
    ring, gen = generic_ring(field, params, [("a", dim), ("b", dim), ("m", dim_m)])
    mul_t = _embed2(ring, mul)
    act_t = _embed2(ring, act)
    a, b, m = gen["a"], gen["b"], gen["m"]
    two = field.coerce(2)

    def M(u, v):
        return _bilinear(ring, mul_t, u, v, dim)

    def S(u, v):
        return _bilinear(ring, act_t, u, v, dim_m)

    failures: list[AxiomFailure] = []
    a2 = M(a, a)
    square = _vsub(S(a, S(a2, m)), S(a2, S(a, m)))
    _collect(failures, "bim-square", "M", square, False)
    am = S(a, m)
    lhs = _vsub(S(M(a2, b), m), S(a2, S(b, m)))
    rhs = _vscale(_vsub(S(M(a, b), am), S(a, S(b, am))), two)
    _collect(failures, "bim-linear", "M", _vsub(lhs, rhs), False)
    return _verdict(failures, ["bim-square", "bim-linear"])


# ---------------------------------------------------------------------------
# matched-pair axioms


def matched_pair_verdict(
    field: Field,
    mul_a,
    mul_v,
    right,
    left,
    params=(),
    axioms=MP_AXIOMS,
    stop_early: bool = False,
) -> Verdict:
    """MP1-MP6 with generic a, b in A and x, y in V.

    right[x][a] is V-valued, left[x][a] is A-valued.  The action laws
    themselves are separate checks (action_law_verdict); this covers the
    six compatibilities only.
    """
    dim_a = len(mul_a)
    dim_v = len(mul_v)
    ring, gen = generic_ring(
        field, params, [("a", dim_a), ("b", dim_a), ("x", dim_v), ("y", dim_v)]
    )
    mt = _embed2(ring, mul_a)
    nt = _embed2(ring, mul_v)
    rt = _embed2(ring, right)
    lt = _embed2(ring, left)
    a, b, x, y = gen["a"], gen["b"], gen["x"], gen["y"]
    two = field.coerce(2)

    def M(u, v):
        return _bilinear(ring, mt, u, v, dim_a)

    def N(u, v):
        return _bilinear(ring, nt, u, v, dim_v)

    def R(xv, av):
        return _bilinear(ring, rt, xv, av, dim_v)

    def L(xv, av):
        return _bilinear(ring, lt, xv, av, dim_a)

    a2 = M(a, a)
    x2 = N(x, x)

    def mp1():
        lhs = _vadd(M(a, L(x, a2)), L(R(x, a2), a))
        rhs = _vadd(M(a2, L(x, a)), L(R(x, a), a2))
        return "A", _vsub(lhs, rhs)

    def mp2():
        lhs = _vadd(R(x, L(x2, a)), N(R(x2, a), x))
        rhs = _vadd(R(x2, L(x, a)), N(x2, R(x, a)))
        return "V", _vsub(lhs, rhs)

    def mp3():
        xa = R(x, a)
        xb = R(x, b)
        big = _vadd(
            _vadd(R(R(xa, b), a), R(x, M(L(x, a), b))),
            _vadd(R(x, L(xa, b)), N(R(xa, b), x)),
        )
        lhs = _vadd(_vscale(big, two), _vadd(R(R(x2, b), a), R(x, M(b, a2))))
        big2 = _vadd(
            _vadd(R(xa, M(b, a)), R(xa, L(x, b))),
            _vadd(R(xb, L(x, a)), N(xa, xb)),
        )
        rhs = _vadd(_vscale(big2, two), _vadd(R(x2, M(b, a)), R(xb, a2)))
        return "V", _vsub(lhs, rhs)

    def mp4():
        lxa = L(x, a)
        ylxa = L(y, lxa)
        big = _vadd(
            _vadd(M(ylxa, a), L(x, ylxa)),
            _vadd(L(R(y, lxa), a), L(N(R(x, a), y), a)),
        )
        lhs = _vadd(_vscale(big, two), _vadd(L(N(x2, y), a), L(x, L(y, a2))))
        big2 = _vadd(
            _vadd(M(L(y, a), lxa), L(N(x, y), lxa)),
            _vadd(L(R(y, a), lxa), L(R(x, a), L(y, a))),
        )
        rhs = _vadd(_vscale(big2, two), _vadd(L(x2, L(y, a)), L(N(x, y), a2)))
        return "A", _vsub(lhs, rhs)

    def mp5():
        lxa = L(x, a)
        xa = R(x, a)
        ylxa = R(y, lxa)
        xay = N(xa, y)
        big = _vadd(
            _vadd(_vadd(R(ylxa, a), R(xay, a)), R(x, L(y, lxa))),
            _vadd(N(ylxa, x), N(xay, x)),
        )
        lhs = _vadd(
            _vscale(big, two),
            _vadd(_vadd(R(N(x2, y), a), R(x, L(y, a2))), N(R(y, a2), x)),
        )
        big2 = _vadd(
            _vadd(_vadd(R(xa, L(y, a)), R(R(y, a), lxa)), R(N(x, y), lxa)),
            _vadd(N(xa, N(x, y)), N(xa, R(y, a))),
        )
        rhs = _vadd(
            _vscale(big2, two),
            _vadd(_vadd(R(x2, L(y, a)), R(N(x, y), a2)), N(x2, R(y, a))),
        )
        return "V", _vsub(lhs, rhs)

    def mp6():
        lxa = L(x, a)
        xa = R(x, a)
        big = _vadd(
            _vadd(_vadd(M(M(lxa, b), a), M(L(xa, b), a)), L(R(xa, b), a)),
            _vadd(L(x, M(lxa, b)), L(x, L(xa, b))),
        )
        lhs = _vadd(
            _vscale(big, two),
            _vadd(_vadd(M(L(x2, b), a), L(R(x2, b), a)), L(x, M(a2, b))),
        )
        big2 = _vadd(
            _vadd(_vadd(M(lxa, M(a, b)), L(xa, M(b, a))), M(lxa, L(x, b))),
            _vadd(L(R(x, b), lxa), L(xa, L(x, b))),
        )
        rhs = _vadd(
            _vscale(big2, two),
            _vadd(_vadd(L(x2, M(b, a)), L(R(x, b), a2)), M(a2, L(x, b))),
        )
        return "A", _vsub(lhs, rhs)

    table = {"MP1": mp1, "MP2": mp2, "MP3": mp3, "MP4": mp4, "MP5": mp5, "MP6": mp6}
    failures: list[AxiomFailure] = []
    checked = []
    for name in axioms:
        checked.append(name)
        space, residual = table[name]()
        if _collect(failures, name, space, residual, stop_early) and stop_early:
            break
    return _verdict(failures, checked)


def _zero_action(field: Field, dim_v: int, dim_a: int, out_dim: int):
    zero = field.zero
    return [[[zero] * out_dim for _ in range(dim_a)] for _ in range(dim_v)]


def left_semidirect_verdict(field, mul_a, mul_v, left, params=()) -> Verdict:
    """L1-L3: the matched-pair conditions surviving when the right action is 0."""
    dim_a, dim_v = len(mul_a), len(mul_v)
    inner = matched_pair_verdict(
        field,
        mul_a,
        mul_v,
        _zero_action(field, dim_v, dim_a, dim_v),
        left,
        params=params,
        axioms=tuple(_LEFT_FROM_MP),
    )
    return _rename(inner, _LEFT_FROM_MP)


def right_semidirect_verdict(field, mul_a, mul_v, right, params=()) -> Verdict:
    """R1-R3: the matched-pair conditions surviving when the left action is 0."""
    dim_a, dim_v = len(mul_a), len(mul_v)
    inner = matched_pair_verdict(
        field,
        mul_a,
        mul_v,
        right,
        _zero_action(field, dim_v, dim_a, dim_a),
        params=params,
        axioms=tuple(_RIGHT_FROM_MP),
    )
    return _rename(inner, _RIGHT_FROM_MP)


def _rename(verdict: Verdict, mapping) -> Verdict:
    failures = tuple(
        AxiomFailure(mapping[f.axiom], f.space, f.index, f.residual)
        for f in verdict.failures
    )
    checked = tuple(mapping[name] for name in verdict.checked)
    return Verdict(verdict.ok, failures, checked)


# ---------------------------------------------------------------------------
# parametric condition extraction


def coefficients_by_generics(residual: Poly, params: tuple[str, ...]) -> list[Poly]:
    """Split a residual into its generic-monomial coefficients.

    The residual lives in k[params + generics]; the identity holds for a
    concrete parameter assignment iff every returned polynomial (living in
    k[params]) vanishes there.  Used to turn one symbolic verification run
    into a fast membership test for tensor scans.
    """
    ring = residual.ring
    param_ring = PolyRing(ring.field, params)
    param_pos = [ring._index[p] for p in params]
    param_set = set(param_pos)
    generic_pos = [i for i in range(len(ring.names)) if i not in param_set]
    grouped: dict[tuple, dict] = {}
    for exp, c in residual.terms.items():
        g = tuple(exp[i] for i in generic_pos)
        pe = tuple(exp[i] for i in param_pos)
        # exponents follow param_ring's own sorted name order
        pe_sorted = tuple(
            pe[params.index(name)] for name in param_ring.names
        )
        grouped.setdefault(g, {})[pe_sorted] = c
    return [Poly(param_ring, terms) for terms in grouped.values()]
