"""Exact computations with finite-dimensional Jordan algebras: matched
pairs, bicrossed products, and complement deformations over Q and F_p."""

from .errors import (
    BudgetError,
    DimensionError,
    FieldMismatchError,
    JalgError,
    ParseError,
    VerificationError,
)
from .fields import Field, QQ
from .poly import Poly, PolyRing
from .identities import AxiomFailure, Verdict, MP_AXIOMS
from .algebra import (
    Algebra,
    Bimodule,
    Element,
    LinearMap,
    Subspace,
    bimodule_check,
    complement_check,
    dual_action,
    hom_check,
    induced_subalgebra,
    jordanize,
    null_split_extension,
    subalgebra_check,
    subalgebra_witness,
)
from .matched_pair import (
    AbelianPairCensus,
    BicrossedProduct,
    Factorization,
    LeftAction,
    MatchedPair,
    RightAction,
    bicross,
    bicross_table,
    canonical_pair,
    enumerate_abelian_pairs,
    pair_from_nilpotent,
    semidirect_left,
    semidirect_right,
    split_mono_decompose,
)
from .morphism import (
    Dim2Signature,
    IsoVerdict,
    MorphismQuadruple,
    QuadrupleVerdict,
    classify_dim2,
    invariant_signature,
    iso_search,
    map_to_quadruple,
    quadruple_check,
    quadruple_to_map,
)
from .deformation import (
    ComplementReport,
    DeformationMap,
    DeformationVerdict,
    GraphComplement,
    complement_recover,
    deformation_check,
    enumerate_deformations,
    equiv_check,
    factorization_index,
    graph_complement,
    r_deform,
)
from .fileio import (
    load_algebra,
    load_pair,
    parse_algebra,
    parse_pair,
    write_algebra,
    write_pair,
)
from .catalog import catalog, deformation_families, names as catalog_names

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AbelianPairCensus",
    "AxiomFailure",
    "BicrossedProduct",
    "Bimodule",
    "BudgetError",
    "ComplementReport",
    "DeformationMap",
    "DeformationVerdict",
    "Dim2Signature",
    "DimensionError",
    "Element",
    "Factorization",
    "Field",
    "FieldMismatchError",
    "GraphComplement",
    "IsoVerdict",
    "JalgError",
    "LeftAction",
    "LinearMap",
    "MP_AXIOMS",
    "MatchedPair",
    "MorphismQuadruple",
    "ParseError",
    "Poly",
    "PolyRing",
    "QQ",
    "QuadrupleVerdict",
    "RightAction",
    "Subspace",
    "Verdict",
    "VerificationError",
    "bicross",
    "bicross_table",
    "bimodule_check",
    "canonical_pair",
    "catalog",
    "catalog_names",
    "classify_dim2",
    "complement_check",
    "complement_recover",
    "deformation_check",
    "deformation_families",
    "dual_action",
    "enumerate_abelian_pairs",
    "enumerate_deformations",
    "equiv_check",
    "factorization_index",
    "graph_complement",
    "hom_check",
    "induced_subalgebra",
    "invariant_signature",
    "iso_search",
    "jordanize",
    "load_algebra",
    "load_pair",
    "map_to_quadruple",
    "null_split_extension",
    "pair_from_nilpotent",
    "parse_algebra",
    "parse_pair",
    "quadruple_check",
    "quadruple_to_map",
    "r_deform",
    "semidirect_left",
    "semidirect_right",
    "split_mono_decompose",
    "subalgebra_check",
    "subalgebra_witness",
    "write_algebra",
    "write_pair",
]
