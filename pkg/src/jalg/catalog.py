"""Built-in worked examples, shipped as data files and verified at load."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .deformation import DeformationMap
from .errors import JalgError, VerificationError
from .fields import Field, QQ
from .fileio import parse_algebra, parse_pair
from .matched_pair import MatchedPair
from .poly import PolyRing

ALGEBRA_NAMES = (
    "A2",
    "J17",
    "J5",
    "J7",
    "V-abelian-2",
    "V1",
    "V2",
    "V3",
    "defmap-J",
)
PAIR_NAMES = ("J17-pair", "J5-pair", "J7-pair", "defmap-pair")


def names() -> tuple[str, ...]:
    return tuple(sorted(ALGEBRA_NAMES + PAIR_NAMES))


def _read(fname: str) -> str:
    return resources.files("jalg.data").joinpath(fname).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def catalog(name: str, field: Field | None = None):
    """Load a named example; algebras come back Jordan-verified and pairs
    fully verified.  `field` transports the object (entries are over Q)."""
    if name in ALGEBRA_NAMES:
        alg = parse_algebra(_read(name + ".jalg"), name=name)
        if field is not None:
            alg = alg.to_field(field)
        verdict = alg.jordan_check()
        if not verdict.ok:
            raise VerificationError(
                f"catalog entry {name} failed its load check:\n{verdict.describe()}"
            )
        return alg
    if name in PAIR_NAMES:
        mp = parse_pair(_read(name + ".jpair"))
        mp.name = name
        if field is not None:
            mp = mp.to_field(field)
        verdict = mp.verify()
        if not verdict.ok:
            raise VerificationError(
                f"catalog entry {name} failed its load check:\n{verdict.describe()}"
            )
        return mp
    raise JalgError(f"unknown catalog name {name!r}; available: {', '.join(names())}")


def deformation_families(field: Field = QQ):
    """The six one-parameter families of deformation maps for the running
    example, keyed def1..def6 in a fixed order.  Families def5 and def6
    are single maps; the parameter is carried but unused."""
    mp = catalog("defmap-pair", None if field is QQ else field)
    if not isinstance(mp, MatchedPair):
        raise JalgError("defmap-pair is not a pair; catalog data is broken")
    ring = PolyRing(field, ("alpha",))
    alpha = ring.var("alpha")
    specs = {
        "def1": {"v": {"b": alpha}},
        "def2": {"v": {"a": alpha}},
        "def3": {"u": {"a": 1, "b": 1}, "v": {"b": alpha}},
        "def4": {"u": {"a": 1, "b": 1}, "v": {"a": alpha}},
        "def5": {"u": {"a": 1}},
        "def6": {"u": {"b": 1}},
    }
    return {
        key: DeformationMap.from_images(mp, images, params=("alpha",))
        for key, images in specs.items()
    }
