"""Algebra construction, the commutative cube law, subspaces, extensions."""

from fractions import Fraction

import pytest

from jalg import (
    Algebra,
    Bimodule,
    DimensionError,
    Field,
    JalgError,
    QQ,
    Subspace,
    bimodule_check,
    dual_action,
    induced_subalgebra,
    jordanize,
    null_split_extension,
    subalgebra_check,
    subalgebra_witness,
)

F5 = Field(5)
half = Fraction(1, 2)


def test_j5_product_table(j5):
    def prod(x, y):
        return j5.mul(j5.basis_element(x), j5.basis_element(y))

    a, b, u, v = (j5.basis_element(lab) for lab in "abuv")
    assert prod("a", "a").coords == a.coords
    assert prod("b", "b").coords == b.coords
    assert prod("a", "u").coords == u.scale(half).coords
    assert prod("b", "u").coords == u.scale(half).coords
    assert prod("a", "v").coords == v.coords
    assert prod("b", "v").is_zero
    assert prod("u", "v").is_zero
    # commutativity is built into the stored table
    for x in j5.basis:
        for y in j5.basis:
            assert prod(x, y).coords == prod(y, x).coords


def test_j5_satisfies_cube_law(j5):
    verdict = j5.jordan_check()
    assert verdict.ok
    assert j5.is_jordan


def test_cube_law_failure_has_numeric_witness(j5):
    # raise the a.u weight from 1/2 to 1: the cube law breaks
    products = {}
    for i, x in enumerate(j5.basis):
        for j, y in enumerate(j5.basis[i:], start=i):
            coords = j5.sc[i][j]
            combo = {
                lab: c for lab, c in zip(j5.basis, coords) if not QQ.is_zero(c)
            }
            if combo:
                products[(x, y)] = combo
    products[("a", "u")] = {"u": 1}
    broken = Algebra.from_products(QQ, j5.basis, products)
    verdict = broken.jordan_check()
    assert not verdict.ok
    assert not broken.is_jordan
    failure = verdict.failures[0]
    assert failure.axiom == "jordan"
    # the residual is symbolic in generic coefficients; pin it numerically
    # at X = a + u, Y = b, where ((X.X).Y).X and (X.X).(Y.X) disagree
    witness = {f"a{i}": c for i, c in enumerate([1, 0, 1, 0])}
    witness |= {f"b{i}": c for i, c in enumerate([0, 1, 0, 0])}
    value = failure.residual.eval(witness)
    assert not QQ.is_zero(value)
    assert value == Fraction(1, 2)
    # the same witness evaluated through the product: lhs u vs rhs u/2
    X = broken.element([1, 0, 1, 0])
    Y = broken.element([0, 1, 0, 0])
    Xsq = broken.mul(X, X)
    lhs = broken.mul(Xsq, broken.mul(Y, X))
    rhs = broken.mul(broken.mul(Xsq, Y), X)
    assert lhs.coords != rhs.coords
    assert "jordan" in verdict.describe()


def test_element_arithmetic(j5):
    a = j5.basis_element("a")
    u = j5.basis_element("u")
    x = j5.element([1, 0, 1, 0])
    assert j5.mul(x, x).coords == j5.element([1, 0, 1, 0]).coords  # (a+u)^2 = a+u
    assert a.scale(Fraction(3)).coords == (3, 0, 0, 0)
    assert u.is_zero is False
    assert j5.zero.is_zero
    with pytest.raises(DimensionError):
        j5.element([1, 0])


def test_from_products_rejects_unknown_labels():
    with pytest.raises(JalgError):
        Algebra.from_products(QQ, ("a",), {("a", "z"): {"a": 1}})
    with pytest.raises(JalgError):
        Algebra.from_products(QQ, ("a",), {("a", "a"): {"z": 1}})


def test_abelian():
    A = Algebra.abelian(QQ, ["x", "y"])
    assert A.is_abelian
    assert A.is_jordan
    assert A.mul(A.basis_element("x"), A.basis_element("y")).is_zero


def test_to_field(j5):
    j5f = j5.to_field(F5)
    assert j5f.field is F5
    u = j5f.basis_element("u")
    prod = j5f.mul(j5f.basis_element("a"), u)
    assert prod.coords == u.scale(3).coords  # 1/2 becomes 3 mod 5
    assert j5f.is_jordan


def test_jordanize_matrix_units():
    # 2x2 matrix units under genuine matrix multiplication
    basis = ["e11", "e12", "e21", "e22"]
    idx = {lab: k for k, lab in enumerate(basis)}

    def unit_product(x, y):
        # e_ij e_kl = delta_jk e_il
        i, j = x[1], x[2]
        k, l = y[1], y[2]
        out = [QQ.zero] * 4
        if j == k:
            out[idx[f"e{i}{l}"]] = QQ.one
        return out

    assoc = [[unit_product(x, y) for y in basis] for x in basis]
    J = jordanize(QQ, basis, assoc)
    e11 = J.basis_element("e11")
    e12 = J.basis_element("e12")
    prod = J.mul(e11, e12)
    assert prod.coords == e12.scale(half).coords
    assert J.is_jordan
    # squares agree with the associative squares
    assert J.mul(e11, e11).coords == e11.coords


def test_jordanize_rejects_nonassociative():
    # x*x = y, x*y = x is not associative: (xx)y != x(xy)
    assoc = [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]
    with pytest.raises(JalgError):
        jordanize(QQ, ["x", "y"], assoc)


def test_dual_action_values():
    A = Algebra.from_products(QQ, ("a",), {("a", "a"): {"a": 1}})
    M = dual_action(A)
    assert M.labels == ("a*",)
    # a acting on a* gives a* back: act[i][m] are module coordinates
    assert M.act[0][0] == (Fraction(1),)
    assert bimodule_check(A, M).ok


def test_regular_bimodule():
    A2 = Algebra.from_products(
        QQ, ("a", "b"), {("a", "a"): {"a": 1}, ("b", "b"): {"b": 1}}
    )
    M = Bimodule.regular(A2)
    assert bimodule_check(A2, M).ok


def test_bimodule_failure_detected():
    A = Algebra.from_products(QQ, ("a",), {("a", "a"): {"a": 1}})
    # doubling the regular action breaks the compatibility law
    M = Bimodule(A, 1, [[[2]]], labels=("m",))
    assert not bimodule_check(A, M).ok
    ok = Bimodule(A, 1, [[[1]]], labels=("m",))
    assert bimodule_check(A, ok).ok


def test_null_split_extension():
    A = Algebra.from_products(
        QQ, ("a", "b"), {("a", "a"): {"a": 1}, ("b", "b"): {"b": 1}}
    )
    E = null_split_extension(A, dual_action(A))
    assert E.basis == ("a", "b", "a*", "b*")
    assert E.is_jordan
    # the module part squares to zero
    astar = E.basis_element("a*")
    assert E.mul(astar, astar).is_zero
    # algebra part multiplies as in A
    assert E.mul(E.basis_element("a"), E.basis_element("a")).coords == (
        1, 0, 0, 0,
    )


def test_subspace_basics(j17):
    U = Subspace.span_of_labels(j17, ["a", "b"])
    assert U.dim == 2
    assert U.contains([1, 4, 0, 0, 0])
    assert not U.contains([0, 0, 1, 0, 0])
    assert U.coordinates([2, 3, 0, 0, 0]) is not None
    assert U.coordinates([0, 0, 1, 0, 0]) is None
    W = Subspace.span_of_labels(j17, ["b", "c"])
    assert U.intersect(W).dim == 1
    assert U.sum(W).dim == 3
    # spanning vectors may be redundant; the reduced dimension rules
    R = Subspace(j17, [[1, 0, 0, 0, 0], [2, 0, 0, 0, 0]])
    assert R.dim == 1


def test_j17_two_label_subalgebras(j17):
    import itertools

    # every product of two distinct basis vectors lands in the span of one
    # of its factors, so all 10 label pairs close
    for pair in itertools.combinations(j17.basis, 2):
        U = Subspace.span_of_labels(j17, pair)
        assert subalgebra_check(j17, U)
        assert subalgebra_witness(j17, U) is None


def test_subalgebra_witness_escaping_product(j17):
    # span{a+b, c}: (a+b)(a+b) = a + 2b which leaves the span
    U = Subspace(j17, [[1, 1, 0, 0, 0], [0, 0, 1, 0, 0]])
    assert not subalgebra_check(j17, U)
    i, j, prod = subalgebra_witness(j17, U)
    assert (i, j) == (0, 0)
    assert prod == [1, 2, 0, 0, 0]
    assert not U.contains(prod)


def test_induced_subalgebra(j17):
    U = Subspace.span_of_labels(j17, ["a", "u"])
    sub, incl = induced_subalgebra(j17, U)
    assert sub.dim == 2
    assert sub.is_jordan
    # inclusion is a homomorphism onto the span
    from jalg import hom_check

    assert hom_check(incl, sub, j17)


def test_induced_subalgebra_rejects_open_span(j17):
    U = Subspace(j17, [[1, 1, 0, 0, 0], [0, 0, 1, 0, 0]])
    with pytest.raises(JalgError):
        induced_subalgebra(j17, U)


def test_mul_coords_against_direct_contraction(j17):
    """Cross-check the table contraction on fixed numeric vectors."""
    x = [Fraction(k) for k in (0, 1, 2, 3, 1)]
    y = [Fraction(k) for k in (1, 0, 1, 2, 0)]
    expect = [QQ.zero] * j17.dim
    for i in range(j17.dim):
        for j in range(j17.dim):
            c = QQ.mul(x[i], y[j])
            if QQ.is_zero(c):
                continue
            for k in range(j17.dim):
                expect[k] = QQ.add(expect[k], QQ.mul(c, j17.sc[i][j][k]))
    assert list(j17.mul_coords(x, y)) == expect


def test_format_table_roundtrip_text(j5):
    text = j5.format_table()
    assert "a a = a" in text or "a.a = a" in text or "a*a" in text


def test_relabel(j5):
    renamed = j5.relabel(["p", "q", "m", "n"])
    assert renamed.basis == ("p", "q", "m", "n")
    m = renamed.basis_element("m")
    assert renamed.mul(renamed.basis_element("p"), m).coords == m.scale(half).coords


def test_dim_zero_algebra_allowed():
    Z = Algebra(QQ, (), ())
    assert Z.dim == 0
    assert Z.is_jordan
    assert Z.zero.coords == ()
