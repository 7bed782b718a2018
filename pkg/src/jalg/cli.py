"""Command line interface.

Inputs are .jalg / .jpair paths or catalog:<name> pseudo-paths.  Exit codes:
0 success, 1 mathematical failure (axiom violated, not isomorphic), 2 usage
or parse error.  --json swaps the text report for a structured one.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileio
from .catalog import PAIR_NAMES, catalog as load_catalog, names as catalog_names
from .algebra import Algebra, Subspace, format_combination
from .deformation import (
    DeformationMap,
    deformation_check,
    enumerate_deformations,
    factorization_index,
    r_deform,
)
from .errors import BudgetError, JalgError, ParseError, VerificationError
from .fields import Field, QQ
from .matched_pair import (
    Factorization,
    MatchedPair,
    bicross,
    canonical_pair,
    enumerate_abelian_pairs,
    semidirect_left,
    semidirect_right,
)
from .morphism import classify_dim2, iso_search
from .poly import PolyRing


def _parse_field_flag(text: str) -> Field:
    if text == "Q":
        return QQ
    if text.startswith("F"):
        try:
            return Field(int(text[1:]))
        except (ValueError, JalgError) as exc:
            raise ParseError(f"bad --field {text!r}: {exc}") from None
    raise ParseError(f"bad --field {text!r} (expected Q or F<p>)")


def _load(spec: str, field: Field | None):
    if spec.startswith("catalog:"):
        obj = load_catalog(spec[len("catalog:") :], field)
        return obj
    if spec.endswith(".jalg"):
        obj = fileio.load_algebra(spec)
    elif spec.endswith(".jpair"):
        obj = fileio.load_pair(spec)
    else:
        raise ParseError(
            f"cannot tell what {spec!r} is; use a .jalg/.jpair path or catalog:<name>"
        )
    if field is not None:
        obj = obj.to_field(field)
    return obj


def _algebra(spec: str, field: Field | None) -> Algebra:
    obj = _load(spec, field)
    if not isinstance(obj, Algebra):
        raise ParseError(f"{spec} holds a matched pair; an algebra is needed")
    return obj


def _pair(spec: str, field: Field | None) -> MatchedPair:
    obj = _load(spec, field)
    if not isinstance(obj, MatchedPair):
        raise ParseError(f"{spec} holds an algebra; a matched pair is needed")
    return obj


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _matrix(f: Field, rows) -> list:
    return [[f.format(c) for c in row] for row in rows]


def _table_dict(A: Algebra) -> dict:
    out = {}
    for i in range(A.dim):
        for j in range(i, A.dim):
            cell = A.sc[i][j]
            if any(not A.ring.is_zero(c) for c in cell):
                key = f"{A.basis[i]} {A.basis[j]}"
                out[key] = format_combination(A.ring, cell, A.basis)
    return out


# ---------------------------------------------------------------------------
# commands


def _cmd_check(args) -> int:
    A = _algebra(args.input, args.field)
    verdict = A.jordan_check()
    status = "PASS" if verdict.ok else "FAIL"
    lines = [f"algebra: {A.name or args.input} (dim {A.dim} over {A.field})"]
    lines.append(f"Jordan identity: {status}")
    if not verdict.ok:
        lines.append(verdict.describe())
    _emit(
        args,
        {
            "command": "check",
            "input": args.input,
            "dim": A.dim,
            "field": str(A.field),
            "jordan": verdict.ok,
            "failures": [str(f) for f in verdict.failures],
        },
        "\n".join(lines),
    )
    return 0 if verdict.ok else 1


def _cmd_mp_check(args) -> int:
    mp = _pair(args.input, args.field)
    verdict = mp.verify()
    failed = set(verdict.failed_axioms())
    lines = [
        f"pair: {mp.name or args.input} "
        f"(dim A = {mp.A.dim}, dim V = {mp.V.dim}, over {mp.A.field})"
    ]
    checks = {}
    for name in verdict.checked:
        ok = name not in failed
        checks[name] = ok
        lines.append(f"{name}: {'PASS' if ok else 'FAIL'}")
    lines.append(f"matched pair: {'PASS' if verdict.ok else 'FAIL'}")
    if not verdict.ok:
        lines.append(verdict.describe())
    _emit(
        args,
        {
            "command": "mp-check",
            "input": args.input,
            "ok": verdict.ok,
            "checks": checks,
            "failures": [str(f) for f in verdict.failures],
        },
        "\n".join(lines),
    )
    return 0 if verdict.ok else 1


def _cmd_bicross(args) -> int:
    mp = _pair(args.input, args.field)
    bp = bicross(mp)
    E = bp.product
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(fileio.write_algebra(E))
    lines = [
        f"bicrossed product: dim {E.dim} over {E.field}",
        E.format_table(),
    ]
    _emit(
        args,
        {
            "command": "bicross",
            "input": args.input,
            "dim": E.dim,
            "basis": list(E.basis),
            "table": _table_dict(E),
        },
        "\n".join(lines),
    )
    return 0


def _cmd_semidirect(args) -> int:
    mp = _pair(args.input, args.field)
    if args.side == "right":
        if not mp.left.is_zero():
            raise JalgError("pair has a nonzero left action; not a right semidirect")
        E = semidirect_right(mp.A, mp.V, mp.right)
    else:
        if not mp.right.is_zero():
            raise JalgError("pair has a nonzero right action; not a left semidirect")
        E = semidirect_left(mp.A, mp.V, mp.left)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(fileio.write_algebra(E))
    lines = [
        f"{args.side} semidirect product: dim {E.dim} over {E.field}",
        E.format_table(),
    ]
    _emit(
        args,
        {
            "command": "semidirect",
            "side": args.side,
            "input": args.input,
            "dim": E.dim,
            "basis": list(E.basis),
            "table": _table_dict(E),
        },
        "\n".join(lines),
    )
    return 0


def _split_labels(text: str) -> list[str]:
    labels = [t for t in text.replace(",", " ").split() if t]
    if not labels:
        raise ParseError("empty label list")
    return labels


def _factorization(args) -> tuple[Algebra, Factorization]:
    E = _algebra(args.input, args.field)
    first = Subspace.span_of_labels(E, _split_labels(args.first))
    second = Subspace.span_of_labels(E, _split_labels(args.second))
    return E, Factorization(E, first, second)


def _cmd_factorize(args) -> int:
    E, fact = _factorization(args)
    lines = [
        f"factorization: PASS",
        f"subalgebra dims: {fact.A_sub.dim} + {fact.B_sub.dim} = {E.dim}",
    ]
    _emit(
        args,
        {
            "command": "factorize",
            "input": args.input,
            "ok": True,
            "first_dim": fact.A_sub.dim,
            "second_dim": fact.B_sub.dim,
        },
        "\n".join(lines),
    )
    return 0


def _cmd_canonical_pair(args) -> int:
    E, fact = _factorization(args)
    mp = canonical_pair(fact)
    text = fileio.write_pair(mp)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    _emit(
        args,
        {
            "command": "canonical-pair",
            "input": args.input,
            "ok": True,
            "pair": text,
        },
        text.rstrip("\n"),
    )
    return 0


def _cmd_iso(args) -> int:
    A = _algebra(args.first_input, args.field)
    B = _algebra(args.second_input, args.field)
    verdict = iso_search(A, B, mode=args.mode, budget=args.budget)
    lines = [f"verdict: {verdict.kind}"]
    witness = None
    if verdict.witness is not None:
        witness = _matrix(A.field, verdict.witness.rows())
        lines.append(f"witness rows: {witness}")
    if verdict.certificate:
        lines.append(f"certificate: {verdict.certificate}")
    if verdict.note:
        lines.append(verdict.note)
    _emit(
        args,
        {
            "command": "iso",
            "verdict": verdict.kind,
            "witness": witness,
            "certificate": verdict.certificate,
            "note": verdict.note,
        },
        "\n".join(lines),
    )
    return 0 if verdict.is_isomorphic else 1


def _cmd_classify2(args) -> int:
    A = _algebra(args.input, args.field)
    sig = classify_dim2(A)
    lines = [
        f"algebra: {A.name or args.input} over {A.field}",
        f"product span dim: {sig.product_span_dim}",
        f"trace form rank (multiplication): {sig.trace_mul_rank}",
        f"trace form rank (operator): {sig.trace_op_rank}",
    ]
    if sig.idempotents is not None:
        lines.append(f"idempotent elements: {sig.idempotents}")
        lines.append(f"nonzero square-zero elements: {sig.square_zero}")
    else:
        lines.append("element counts omitted over Q (not enumerable)")
    _emit(
        args,
        {
            "command": "classify2",
            "input": args.input,
            "signature": {
                "product_span_dim": sig.product_span_dim,
                "trace_mul_rank": sig.trace_mul_rank,
                "trace_op_rank": sig.trace_op_rank,
                "idempotents": sig.idempotents,
                "square_zero": sig.square_zero,
            },
        },
        "\n".join(lines),
    )
    return 0


def _parse_map_flag(mp: MatchedPair, spec: str, params: tuple[str, ...]) -> DeformationMap:
    """--map 'u: a + b; v: alpha b' with optional parameter names."""
    f = mp.A.field
    ring = PolyRing(f, params) if params else f
    images = {}
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ParseError(f"bad map entry {chunk!r}; expected '<label>: <combination>'")
        lab, combo = chunk.split(":", 1)
        lab = lab.strip()
        if lab not in mp.V.basis:
            raise ParseError(f"unknown complement label {lab!r}")
        tokens = combo.split()
        coords = {}
        if tokens == ["0"] or not tokens:
            images[lab] = {}
            continue
        index = {t: k for k, t in enumerate(mp.A.basis)}
        negate = False
        pending = None
        for tok in tokens:
            if tok in ("+", "-"):
                if pending is not None:
                    raise ParseError(f"dangling scalar before {tok!r} in {chunk!r}")
                negate = tok == "-"
                continue
            if tok in index:
                coeff = ring.one if pending is None else pending
                if negate:
                    coeff = ring.neg(coeff)
                prev = coords.get(tok, ring.zero)
                coords[tok] = ring.add(prev, coeff)
                pending = None
                negate = False
                continue
            if tok in params:
                val = ring.var(tok)
            else:
                try:
                    val = ring.coerce(f.parse(tok))
                except JalgError:
                    raise ParseError(
                        f"unknown token {tok!r} in map entry {chunk!r}"
                    ) from None
            pending = val if pending is None else ring.mul(pending, val)
        if pending is not None:
            raise ParseError(f"map entry {chunk!r} ends with a scalar")
        images[lab] = coords
    return DeformationMap.from_images(mp, images, params=params)


def _cmd_deform_check(args) -> int:
    mp = _pair(args.input, args.field)
    params = tuple(_split_labels(args.params)) if args.params else ()
    r = _parse_map_flag(mp, args.map, params)
    verdict = deformation_check(mp, r)
    lines = [f"map: {r.describe()}", f"deformation identity: {'PASS' if verdict.ok else 'FAIL'}"]
    if not verdict.ok:
        lines.append(verdict.describe())
    _emit(
        args,
        {
            "command": "deform-check",
            "map": r.describe(),
            "ok": verdict.ok,
            "failures": [
                {"x": x, "y": y, "residual": list(res)} for x, y, res in verdict.failures
            ],
        },
        "\n".join(lines),
    )
    return 0 if verdict.ok else 1


def _cmd_deform_enum(args) -> int:
    mp = _pair(args.input, args.field)
    maps = enumerate_deformations(mp, max_candidates=args.budget)
    lines = [f"deformation maps over {mp.A.field}: {len(maps)}"]
    for k, r in enumerate(maps, start=1):
        lines.append(f"  {k:3d}. {r.describe()}")
    _emit(
        args,
        {
            "command": "deform-enum",
            "field": str(mp.A.field),
            "count": len(maps),
            "maps": [r.describe() for r in maps],
        },
        "\n".join(lines),
    )
    return 0


def _cmd_complements(args) -> int:
    mp = _pair(args.input, args.field)
    report = factorization_index(mp)
    classes_json = []
    for c, cls in enumerate(report.classes):
        members = []
        for idx in cls:
            members.append(
                {
                    "map": report.maps[idx].describe(),
                    "witness_rows": _matrix(report.field, report.witnesses[idx].rows()),
                }
            )
        classes_json.append(
            {
                "size": len(cls),
                "representative": report.maps[cls[0]].describe(),
                "table": _table_dict(report.deformed[cls[0]]),
                "members": members,
            }
        )
    text = report.describe()
    witness_lines = []
    for c, cls in enumerate(report.classes):
        for idx in cls[1:]:
            rows = _matrix(report.field, report.witnesses[idx].rows())
            witness_lines.append(
                f"  map {idx + 1} -> class {c + 1} representative via rows {rows}"
            )
    if witness_lines:
        text += "\nwitnesses:\n" + "\n".join(witness_lines)
    _emit(
        args,
        {
            "command": "complements",
            "field": str(report.field),
            "maps": [r.describe() for r in report.maps],
            "classes": classes_json,
            "index": report.index,
            "note": report.note,
        },
        text,
    )
    return 0


def _cmd_catalog(args) -> int:
    if not args.name:
        rows = []
        for name in catalog_names():
            kind = "pair" if name in PAIR_NAMES else "algebra"
            rows.append((name, kind))
        _emit(
            args,
            {"command": "catalog", "names": {n: k for n, k in rows}},
            "\n".join(f"{n:14s} {k}" for n, k in rows),
        )
        return 0
    obj = load_catalog(args.name, args.field)
    if isinstance(obj, Algebra):
        text = fileio.write_algebra(obj).rstrip("\n")
        payload = {
            "command": "catalog",
            "name": args.name,
            "kind": "algebra",
            "dim": obj.dim,
            "table": _table_dict(obj),
        }
    else:
        text = fileio.write_pair(obj).rstrip("\n")
        payload = {
            "command": "catalog",
            "name": args.name,
            "kind": "pair",
            "dims": [obj.A.dim, obj.V.dim],
            "pair": text,
        }
    _emit(args, payload, text)
    return 0


def _cmd_abelian_pairs(args) -> int:
    field = args.field if args.field is not None else Field(5)
    census = enumerate_abelian_pairs(args.dim, field, allow_large=args.allow_large)
    lines = [
        f"abelian matched pairs with a 1-dim abelian complement over {field}",
        f"dimension: {args.dim}",
        f"candidates: {census.candidates}",
        f"valid pairs: {census.count}",
        "every valid pair has zero weight and a cube-zero operator",
    ]
    _emit(
        args,
        {
            "command": "abelian-pairs",
            "field": str(field),
            "dim": args.dim,
            "candidates": census.candidates,
            "valid": census.count,
        },
        "\n".join(lines),
    )
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jalg",
        description="Exact computations with Jordan algebra factorizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, inputs=1):
        p = sub.add_parser(name, help=help_text)
        if inputs == 1:
            p.add_argument("input", help=".jalg/.jpair path or catalog:<name>")
        elif inputs == 2:
            p.add_argument("first_input", help="first algebra")
            p.add_argument("second_input", help="second algebra")
        p.add_argument(
            "--field",
            type=_parse_field_flag,
            default=None,
            help="transport the input to this field (Q or F<p>)",
        )
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(handler=handler)
        return p

    add("check", _cmd_check, "verify the Jordan identity for an algebra")
    add("mp-check", _cmd_mp_check, "verify all matched-pair conditions")
    p = add("bicross", _cmd_bicross, "build the bicrossed product of a pair")
    p.add_argument("--out", help="write the product as a .jalg file")
    p = add("semidirect", _cmd_semidirect, "build a one-sided product")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--out", help="write the product as a .jalg file")
    p = add("factorize", _cmd_factorize, "check a two-subalgebra factorization")
    p.add_argument("--first", required=True, help="labels of the first factor, comma separated")
    p.add_argument("--second", required=True, help="labels of the second factor")
    p = add("canonical-pair", _cmd_canonical_pair, "extract the matched pair of a factorization")
    p.add_argument("--first", required=True)
    p.add_argument("--second", required=True)
    p.add_argument("--out", help="write the pair as a .jpair file")
    p = add("iso", _cmd_iso, "decide isomorphism of two algebras", inputs=2)
    p.add_argument(
        "--mode",
        choices=("auto", "exhaustive-Fp", "invariants-Q"),
        default="auto",
    )
    p.add_argument("--budget", type=int, default=None)
    add("classify2", _cmd_classify2, "invariant signature of a 2-dim algebra")
    p = add("deform-check", _cmd_deform_check, "test a map against the deformation identity")
    p.add_argument("--map", required=True, help="e.g. 'u: a + b; v: 2 b'")
    p.add_argument("--params", default=None, help="parameter names, e.g. 'alpha'")
    p = add("deform-enum", _cmd_deform_enum, "enumerate all deformation maps (finite field)")
    p.add_argument("--budget", type=int, default=None, help="cap on candidate count")
    add("complements", _cmd_complements, "classify complements and compute the index")
    p = sub.add_parser("catalog", help="list or show built-in examples")
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--field", type=_parse_field_flag, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_catalog)
    p = sub.add_parser("abelian-pairs", help="census of abelian pairs with a line complement")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--field", type=_parse_field_flag, default=None)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_abelian_pairs)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1
    except JalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
