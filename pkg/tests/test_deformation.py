"""Complement-deformation maps, deformed products, graphs, equivalence."""

from fractions import Fraction

import pytest

from jalg import (
    BudgetError,
    DeformationMap,
    Field,
    JalgError,
    LinearMap,
    QQ,
    Subspace,
    VerificationError,
    bicross,
    catalog,
    complement_check,
    complement_recover,
    deformation_check,
    deformation_families,
    enumerate_deformations,
    equiv_check,
    factorization_index,
    graph_complement,
    hom_check,
    iso_search,
    r_deform,
    subalgebra_check,
)

F5 = Field(5)


# -- the defining identity -------------------------------------------------------


@pytest.mark.parametrize("key", ["def1", "def2", "def3", "def4", "def5", "def6"])
def test_families_pass_identically(key):
    """Each family satisfies the identity for the symbolic parameter, hence
    for every value at once."""
    r = deformation_families(QQ)[key]
    verdict = r.check()
    assert verdict.ok, verdict.describe()


def test_zero_map_always_passes(defmap_pair):
    r = DeformationMap.zero(defmap_pair)
    assert r.is_zero
    assert r.check().ok


def test_failing_map_reports_basis_pair(defmap_pair):
    r = DeformationMap.from_images(defmap_pair, {"u": {"a": 1}, "v": {"a": 1}})
    verdict = r.check()
    assert not verdict.ok
    assert verdict.failures
    x, y, residual = verdict.failures[0]
    assert x in ("u", "v") and y in ("u", "v")
    text = verdict.describe()
    assert "residual" in text


def test_deformation_check_rejects_foreign_pair(defmap_pair):
    other = catalog("J5-pair")
    r = DeformationMap.zero(defmap_pair)
    with pytest.raises(JalgError):
        deformation_check(other, r)


def test_apply_and_describe(defmap_pair):
    r = deformation_families(QQ)["def3"]
    assert r.describe() == "r(u) = a + b, r(v) = (alpha) b"
    # r(u + v) = a + (1 + alpha) b, evaluated at alpha = 2
    img = r.substitute({"alpha": 2}).apply([1, 1])
    assert img == [Fraction(1), Fraction(3)]


def test_substitute_specializes(defmap_pair):
    r = deformation_families(QQ)["def1"]
    r2 = r.substitute({"alpha": Fraction(7)})
    assert r2.params == ()
    assert r2.check().ok
    assert r2.apply([0, 1]) == [Fraction(0), Fraction(7)]


# -- deformed products -----------------------------------------------------------


def test_deformed_table_def3(defmap_pair):
    B = r_deform(defmap_pair, deformation_families(QQ)["def3"])
    assert B.params == ("alpha",)
    # u.u = u, u.v = v, v.v = alpha v
    assert B.format_table() == "u u = u\nu v = v\nv v = (alpha) v"
    # every specialization is a genuine product satisfying the cube law
    assert B.substitute_params({"alpha": Fraction(5)}).is_jordan


def test_deformed_table_def5_recovers_weighted_table(defmap_pair):
    B = r_deform(defmap_pair, deformation_families(QQ)["def5"])
    assert B.substitute_params({"alpha": 0}).table_key() == catalog("V3").table_key()


def test_r_deform_rejects_failing_map(defmap_pair):
    r = DeformationMap.from_images(defmap_pair, {"u": {"a": 1}, "v": {"a": 1}})
    with pytest.raises(VerificationError):
        r_deform(defmap_pair, r)


def test_zero_map_deforms_to_original_factor(defmap_pair):
    B = r_deform(defmap_pair, DeformationMap.zero(defmap_pair))
    assert B.table_key() == defmap_pair.V.table_key()


# -- graphs as complements -------------------------------------------------------


def test_graph_complement_structure(defmap_pair):
    r = deformation_families(QQ)["def1"].substitute({"alpha": Fraction(2)})
    gc = graph_complement(defmap_pair, r)
    E = gc.extension.product
    assert subalgebra_check(E, gc.subspace)
    assert complement_check(E, gc.extension.a_embedding, gc.subspace)
    assert hom_check(gc.witness, gc.deformed, E)
    # graph vectors are r(x) + x
    assert gc.witness.cols[1][:2] == (Fraction(0), Fraction(2))


def test_graph_complement_rejects_parametric(defmap_pair):
    r = deformation_families(QQ)["def1"]
    with pytest.raises(JalgError):
        graph_complement(defmap_pair, r)


def test_recover_roundtrip(defmap_pair):
    r = deformation_families(QQ)["def4"].substitute({"alpha": Fraction(3)})
    gc = graph_complement(defmap_pair, r)
    E = gc.extension.product
    back = complement_recover(
        E, gc.extension.a_embedding, gc.extension.v_embedding, gc.subspace
    )
    assert back.cols == r.cols
    assert back.mp == defmap_pair


def test_recover_the_canonical_complement_is_zero(defmap_pair):
    bp = bicross(defmap_pair)
    back = complement_recover(
        bp.product, bp.a_embedding, bp.v_embedding, bp.v_embedding
    )
    assert back.is_zero


def test_recover_rejects_non_complement(defmap_pair):
    bp = bicross(defmap_pair)
    E = bp.product
    bad = Subspace.span_of_labels(E, ["a", "b"])
    with pytest.raises(JalgError):
        complement_recover(E, bp.a_embedding, bp.v_embedding, bad)


# -- equivalence -----------------------------------------------------------------


def test_equiv_check_matches_hom_property():
    mp = catalog("defmap-pair", field=F5)
    maps = enumerate_deformations(mp)
    assert len(maps) == 20
    r = maps[0]
    # sigma = identity relates r to itself
    ident = LinearMap.identity(F5, 2)
    assert equiv_check(mp, r, r, ident)
    # spot-check the equivalence relation against the hom formulation on a
    # fixed invertible sigma for a few map pairs
    sigma = LinearMap(F5, 2, 2, [[1, 0], [1, 1]])
    for r in maps[:5]:
        for s in maps[:5]:
            lhs = equiv_check(mp, r, s, sigma)
            rhs = hom_check(sigma, r_deform(mp, r), r_deform(mp, s))
            assert lhs == rhs


def test_equiv_check_requires_invertible():
    mp = catalog("defmap-pair", field=F5)
    maps = enumerate_deformations(mp)
    sigma = LinearMap(F5, 2, 2, [[1, 0], [0, 0]])
    with pytest.raises(JalgError):
        equiv_check(mp, maps[0], maps[0], sigma)


# -- enumeration and classification ----------------------------------------------


def test_enumeration_count_is_twenty():
    mp = catalog("defmap-pair", field=F5)
    maps = enumerate_deformations(mp)
    assert len(maps) == 20
    # deterministic order: repeat gives the same tuple
    assert maps == enumerate_deformations(mp)
    # every survivor passes the identity; every survivor is distinct
    assert len(set(maps)) == 20
    for r in maps:
        assert r.check().ok


def test_enumeration_matches_family_specializations():
    """Over F5 the six families cover all twenty enumerated maps."""
    mp = catalog("defmap-pair", field=F5)
    enumerated = {r.cols for r in enumerate_deformations(mp)}
    fams = deformation_families(F5)
    covered = set()
    for key, fam in fams.items():
        for val in range(5):
            covered.add(fam.substitute({"alpha": val}).cols)
    assert covered == enumerated


def test_enumeration_needs_finite_field(defmap_pair):
    with pytest.raises(JalgError):
        enumerate_deformations(defmap_pair)


def test_enumeration_budget():
    mp = catalog("defmap-pair", field=F5)
    with pytest.raises(BudgetError):
        enumerate_deformations(mp, max_candidates=100)


def test_factorization_index_report():
    mp = catalog("defmap-pair", field=F5)
    report = factorization_index(mp)
    assert report.index == 4
    assert sorted(len(c) for c in report.classes) == [1, 1, 2, 16]
    assert len(report.maps) == 20
    assert len(report.representatives) == 4
    # classes hold indices into report.maps; the zero map sits alone
    zero_class = [
        c for c in report.classes if any(report.maps[i].is_zero for i in c)
    ]
    assert len(zero_class) == 1 and len(zero_class[0]) == 1
    text = report.describe()
    assert "index = 4" in text
    assert "20" in text
    # witnesses certify membership: sigma relates each member to its
    # class representative
    for ci, cls in enumerate(report.classes):
        rep = report.maps[report.representatives[ci]]
        for i in cls:
            sigma = report.witnesses[i]
            assert equiv_check(mp, report.maps[i], rep, sigma)


def test_representative_tables_match_weighted_catalog():
    mp = catalog("defmap-pair", field=F5)
    report = factorization_index(mp)
    targets = {
        "V": mp.V,
        "V1": catalog("V1", field=F5),
        "V2": catalog("V2", field=F5),
        "V3": catalog("V3", field=F5),
    }
    matched = set()
    for rep_index in report.representatives:
        B = r_deform(mp, report.maps[rep_index])
        for name, target in targets.items():
            if iso_search(B, target).is_isomorphic:
                matched.add(name)
    assert matched == {"V", "V1", "V2", "V3"}
