"""Command-line front end.

Exit codes: 0 ok, 1 invalid data, 2 parse error, 3 degeneracy violation,
4 stabilizer cocycle needed, 5 ambiguous (more user data needed).

Any PATH argument may also be ``catalog:<name>`` (a built-in entry, as from
``catalog dump``) or ``catalog:<name>+group`` (as from ``catalog dump --with-group``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import errors
from .catalog import CATALOG_NAMES, deligne_product, entry, group_hint
from .condense import condense, verify_condensation
from .exactnum import CycloNum, to_float
from .exchange import (
    ExchangeDocument,
    TannakianHints,
    cyclo_to_json,
    dumps,
    load_document,
    parse_document,
)
from .fusion import fp_dims, validate_ring
from .ribbon import CategorySpec, centre, is_modular, s_matrix, validate_ribbon
from .tannakian import (
    CharacterTable,
    FiniteGroup,
    GroupNeeded,
    h2_group,
    maximal_tannakian,
    named_group,
    projective_irrep_profile,
    recognize_group,
    tannakian_from_labels,
)

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_DEGENERACY, EXIT_NEEDS_COCYCLE, EXIT_AMBIGUOUS = range(6)


class _ParseFailure(Exception):
    pass


def _jsonable(x: Any) -> Any:
    if isinstance(x, CycloNum):
        return cyclo_to_json(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, float):
        return round(x, 12)
    return x


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, (errors.StructureError, _ParseFailure, json.JSONDecodeError)):
        return EXIT_PARSE
    if isinstance(exc, errors.DegeneracyViolation):
        return EXIT_DEGENERACY
    if isinstance(exc, errors.NeedsCocycle):
        return EXIT_NEEDS_COCYCLE
    if isinstance(exc, (errors.AmbiguityError, GroupNeeded)):
        return EXIT_AMBIGUOUS
    return EXIT_INVALID


def _error_payload(exc: BaseException) -> dict:
    out: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc), "exit_code": _exit_code(exc)}
    if isinstance(exc, errors.DegeneracyViolation):
        a, b, c, phase = exc.witness
        out["witness"] = {"label": a, "partner": b, "channel": c, "phase": cyclo_to_json(phase)}
    elif isinstance(exc, errors.NeedsCocycle):
        out["candidates"] = _jsonable(exc.candidates)
    elif isinstance(exc, errors.AmbiguityError):
        out["count"] = exc.count
        out["truncated"] = exc.truncated
    elif isinstance(exc, errors.GroupMismatchError) and exc.witness is not None:
        out["witness"] = _jsonable(exc.witness)
    return out


# ---------------------------------------------------------------------------
# input


def _read_document(path: str) -> ExchangeDocument:
    if path.startswith("catalog:"):
        name = path.split(":", 1)[1]
        with_group = name.endswith("+group")
        name = name.removesuffix("+group")
        if name not in CATALOG_NAMES:
            raise _ParseFailure(f"unknown catalog entry {name!r}")
        return _catalog_document(name, with_group=with_group)
    if path == "-":
        try:
            return parse_document(json.load(sys.stdin))
        except json.JSONDecodeError as exc:
            raise errors.StructureError(f"invalid JSON: {exc}") from exc
    try:
        return load_document(path)
    except OSError as exc:
        raise _ParseFailure(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise _ParseFailure(f"{path} is not UTF-8: {exc}") from exc


def _catalog_document(name: str, with_group: bool = False) -> ExchangeDocument:
    e = entry(name)
    hints = None
    if with_group:
        hint = group_hint(name)
        if hint is not None:
            G, table = hint
            hints = TannakianHints(group=G, character_table=table)
    return ExchangeDocument(e.spec, hints, extra={"provenance": e.provenance, "name": name})


def _read_group(arg: str) -> tuple[FiniteGroup, CharacterTable | None, dict | None]:
    """A named group (Z4, S3, D4, Q8, Z2xZ2, ...) or a JSON file."""
    p = Path(arg)
    if not p.exists():
        try:
            return named_group(arg), None, None
        except (errors.RibbonCatError, ValueError, KeyError) as exc:
            raise _ParseFailure(f"{arg!r} is neither a file nor a known group name") from exc
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise _ParseFailure(f"cannot read group file {arg}: {exc}") from exc
    if not isinstance(data, dict):
        raise _ParseFailure("group file must hold a JSON object")
    try:
        if "table" in data:
            return FiniteGroup.from_json(data), None, None
        hints = TannakianHints.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise _ParseFailure(f"malformed group file: {exc}") from exc
    if hints.group is None:
        raise _ParseFailure("group file has no 'group'")
    return hints.group, hints.character_table, hints.label_to_irrep


def _parse_cocycles(arg: str | None) -> dict[str, int]:
    if not arg:
        return {}
    p = Path(arg)
    if p.exists():
        try:
            data = json.loads(p.read_text(encoding="utf-8"))
            return {str(k): int(v) for k, v in data.items()}
        except (OSError, ValueError, AttributeError, json.JSONDecodeError) as exc:
            raise _ParseFailure(f"bad cocycle file {arg}: {exc}") from exc
    out = {}
    for item in arg.split(","):
        label, sep, value = item.partition("=")
        if not sep:
            raise _ParseFailure(f"cocycle override {item!r} is not label=class_id")
        try:
            out[label.strip()] = int(value)
        except ValueError as exc:
            raise _ParseFailure(f"cocycle class id {value!r} is not an integer") from exc
    return out


def _select_subcat(spec: CategorySpec, doc: ExchangeDocument, subcat: str | None):
    if subcat in (None, "auto"):
        if subcat is None and doc.tannakian is not None and doc.tannakian.labels is not None:
            return tannakian_from_labels(spec, doc.tannakian.labels)
        return maximal_tannakian(spec)
    if subcat == "pointed":
        T = maximal_tannakian(spec)
        keep = [l for l, d in zip(T.labels, T.irrep_dims) if d == 1]
        return tannakian_from_labels(spec, keep)
    labels = [s.strip() for s in subcat.split(",") if s.strip()]
    return tannakian_from_labels(spec, labels)


# ---------------------------------------------------------------------------
# output


def _emit(payload: dict, text: str, args) -> None:
    body = dumps(payload) if args.format == "json" else text.rstrip("\n") + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(body, encoding="utf-8")
    else:
        sys.stdout.write(body)


def _fmt(x: CycloNum) -> str:
    if x.is_rational():
        return str(x.to_fraction())
    z = to_float(x)
    if abs(z.imag) < 1e-12:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}i"


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    doc = _read_document(args.path)
    spec = doc.category
    ring_rep = validate_ring(spec.ring)
    rib_rep = validate_ribbon(spec)
    ok = ring_rep.ok and rib_rep.ok
    payload: dict[str, Any] = {"ok": ok, "ring": ring_rep.to_json(), "ribbon": rib_rep.to_json()}
    lines = [f"{'PASS' if ok else 'FAIL'}: rank {spec.rank}, labels {', '.join(spec.names)}"]
    for v in ring_rep.violations + rib_rep.violations:
        lines.append(f"  {v.kind}: {v.message} (witness {', '.join(map(str, v.witness))})")
    for v in ring_rep.warnings + rib_rep.warnings:
        lines.append(f"  warning {v.kind}: {v.message}")
    if ok:
        try:
            fp = fp_dims(spec.ring, spec.dims)
            payload["fp_dims"] = [round(v, 12) for v in fp.values]
            payload["fp_certified"] = fp.certified
        except errors.RibbonCatError as exc:
            payload["ok"] = ok = False
            payload["dims_error"] = str(exc)
            lines[0] = lines[0].replace("PASS", "FAIL")
            lines.append(f"  dims: {exc}")
    _emit(payload, "\n".join(lines), args)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_analyze(args) -> int:
    doc = _read_document(args.path)
    spec = doc.category
    rep = validate_ring(spec.ring)
    rep.extend(validate_ribbon(spec))
    if not rep.ok:
        v = rep.violations[0]
        raise errors.InvalidDataError(f"{v.kind}: {v.message}")
    fp = fp_dims(spec.ring, spec.dims)
    cen = [l.name for l in centre(spec)]
    payload: dict[str, Any] = {
        "labels": list(spec.names),
        "fp_dims": [round(v, 12) for v in fp.values],
        "global_dim": round(fp.global_dim, 12),
        "centre": cen,
    }
    if spec.dims is not None:
        payload["dims"] = [cyclo_to_json(d) for d in spec.dims]
        payload["global_dim_exact"] = cyclo_to_json(spec.global_dim())
    if spec.dims is None and not args.numeric_fallback:
        raise errors.ExactDimsRequired("exact dims missing; pass --numeric-fallback for a numeric verdict")
    mod = is_modular(spec, numeric_fallback=args.numeric_fallback)
    payload["modular"] = mod.modular
    payload["certified"] = mod.certified
    payload["det"] = mod.to_json()["det"]
    if args.s_matrix:
        S = s_matrix(spec, numeric_fallback=args.numeric_fallback)
        if S.certified:
            payload["s_matrix"] = [[cyclo_to_json(x) for x in row] for row in S.entries]
        else:
            payload["s_matrix"] = [[[round(x.real, 12), round(x.imag, 12)] for x in row] for row in S.entries]
    lines = [f"labels: {', '.join(spec.names)}"]
    lines.append("dims: " + ", ".join(f"{n}={v:.12g}" for n, v in zip(spec.names, fp.values)))
    lines.append(f"global dimension: {fp.global_dim:.12g}")
    lines.append(f"centre: {{{', '.join(cen)}}}")
    if mod.modular:
        verdict = "modular"
    else:
        T = maximal_tannakian(spec)
        group_status = T.status
        hints = doc.tannakian
        if not T.pointed and hints is not None and hints.group is not None:
            try:
                T = recognize_group(spec, T, hints.group, hints.character_table, hints.label_to_irrep)
                group_status = "resolved"
            except errors.RibbonCatError as exc:
                group_status = f"group hint rejected: {exc}"
        elif T.pointed:
            T = recognize_group(spec, T)
            group_status = "resolved"
        tjson: dict[str, Any] = {
            "labels": list(T.labels),
            "irrep_dims": list(T.irrep_dims),
            "fermions": list(T.fermions),
            "pointed": T.pointed,
            "group_status": group_status,
        }
        if T.group is not None:
            tjson["group_order"] = T.group.order
            tjson["group_abelian"] = T.group.is_abelian()
        payload["maximal_tannakian"] = tjson
        condensable = len(T.labels) > 1 and group_status == "resolved"
        payload["condensable"] = condensable
        parts = ["not modular", f"centre = {{{', '.join(cen)}}}"]
        if len(T.labels) == 1:
            parts.append("centre is fermionic; no bosonic Tannakian part to condense")
        elif condensable:
            parts.append("condensable")
        else:
            parts.append("group needs user input")
        verdict = "; ".join(parts)
        lines.append(f"maximal Tannakian: {{{', '.join(T.labels)}}} (group: {group_status})")
        if T.fermions:
            lines.append(f"fermionic degenerate labels: {', '.join(T.fermions)}")
    payload["verdict"] = verdict
    lines.append(f"verdict: {verdict}")
    if args.s_matrix and "s_matrix" in payload:
        S = s_matrix(spec, numeric_fallback=args.numeric_fallback)
        lines.append("S~:")
        for row in S.entries:
            lines.append("  " + "  ".join(_fmt(x) if isinstance(x, CycloNum) else f"{x:.6g}" for x in row))
    _emit(payload, "\n".join(lines), args)
    return EXIT_OK


def cmd_condense(args) -> int:
    doc = _read_document(args.path)
    spec = doc.category
    T = _select_subcat(spec, doc, args.subcat)
    group = table = mapping = None
    if args.group:
        group, table, mapping = _read_group(args.group)
    elif doc.tannakian is not None and not T.pointed:
        group, table, mapping = doc.tannakian.group, doc.tannakian.character_table, doc.tannakian.label_to_irrep
    overrides = dict(doc.cocycle_overrides)
    overrides.update(_parse_cocycles(args.cocycle))
    if not T.pointed and group is None:
        raise GroupNeeded(
            f"T = {{{', '.join(T.labels)}}} is not pointed; supply --group with a character table"
        )
    result = condense(spec, T, overrides, group if not T.pointed else None, table, mapping)
    check = verify_condensation(result)
    cond = result.condensed
    info = {
        "method": result.method,
        "tannakian": list(result.tannakian.labels),
        "group_order": result.group_order,
        "source_labels": list(spec.names),
        "phi": result.phi_entries(),
        "orbits": result.report.to_json(),
        "verification": check.to_json(),
    }
    out_doc = ExchangeDocument(cond, extra={"condensation": info})
    lines = [f"condensed by {{{', '.join(result.tannakian.labels)}}} ({result.method}), |G| = {result.group_order}"]
    lines.append(f"result labels: {', '.join(cond.names)}")
    for i, name in enumerate(spec.names):
        parts = [f"{k}*{x}" if k > 1 else x for x, k in result.phi(i).items()]
        lines.append(f"  Phi({name}) = {' + '.join(parts)}")
    for o in result.report.orbits:
        if o.cocycle is not None and o.h2_invariants:
            lines.append(f"  orbit of {o.representative}: stabilizer class {o.cocycle.class_id} ({o.cocycle_status})")
    lines.append(f"verification: {'ok' if check.ok else 'FAILED ' + ', '.join(check.failures())}")
    lines.append(f"condensed centre: {{{', '.join(check.condensed_centre)}}}; modular: {check.condensed_modular}")
    _emit(out_doc.to_json(), "\n".join(lines), args)
    return EXIT_OK if check.ok else EXIT_INVALID


def cmd_catalog_list(args) -> int:
    payload = {"entries": [{"name": n, "rank": entry(n).spec.rank, "provenance": entry(n).provenance} for n in CATALOG_NAMES]}
    text = "\n".join(f"{n:12s} rank {entry(n).spec.rank}  {entry(n).provenance}" for n in CATALOG_NAMES)
    _emit(payload, text, args)
    return EXIT_OK


def cmd_catalog_dump(args) -> int:
    if args.name not in CATALOG_NAMES:
        raise errors.UnknownLabelError(f"unknown catalog entry {args.name!r}; known: {', '.join(CATALOG_NAMES)}")
    doc = _catalog_document(args.name, with_group=args.with_group)
    payload = doc.to_json()
    # the document itself is the only sensible text rendering
    args.format = "json"
    _emit(payload, "", args)
    return EXIT_OK


def cmd_h2(args) -> int:
    G, _, _ = _read_group(args.group_spec)
    mult = h2_group(G)
    payload = {"group_order": G.order, "abelian": G.is_abelian(), **mult.to_json()}
    inv = " x ".join(f"Z{n}" for n in mult.invariants) or "trivial"
    lines = [f"|G| = {G.order}; H^2(G, U(1)) = {inv}"]
    if G.is_abelian():
        profiles = {}
        for c in mult.classes():
            profiles[str(c.class_id)] = projective_irrep_profile(G, c)
        payload["projective_irrep_dims"] = profiles
        for k, v in profiles.items():
            lines.append(f"  class {k}: projective irrep dims {v}")
    _emit(payload, "\n".join(lines), args)
    return EXIT_OK


def cmd_product(args) -> int:
    a = _read_document(args.left).category
    b = _read_document(args.right).category
    doc = ExchangeDocument(deligne_product(a, b))
    args.format = "json"
    _emit(doc.to_json(), "", args)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="PATH", help="write the result here instead of standard output")

    p = argparse.ArgumentParser(prog="ribboncat", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check fusion and ribbon axioms")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", parents=[common], help="dims, centre, modularity, Tannakian part")
    a.add_argument("path")
    a.add_argument("--s-matrix", action="store_true", help="include the unnormalized S-matrix")
    a.add_argument("--numeric-fallback", action="store_true", help="allow a numeric verdict without exact dims")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("condense", parents=[common], help="condense a Tannakian subcategory")
    c.add_argument("path")
    c.add_argument("--subcat", default=None, help="'auto', 'pointed' or comma-separated labels")
    c.add_argument("--group", help="group name or JSON file with group and character table")
    c.add_argument("--cocycle", help="label=class_id[,...] or a JSON file of overrides")
    c.add_argument("--numeric-fallback", action="store_true", help=argparse.SUPPRESS)
    c.set_defaults(func=cmd_condense)

    cat = sub.add_parser("catalog", help="built-in categories")
    catsub = cat.add_subparsers(dest="catalog_command", required=True)
    cl = catsub.add_parser("list", parents=[common])
    cl.set_defaults(func=cmd_catalog_list)
    cd = catsub.add_parser("dump", parents=[common])
    cd.add_argument("name")
    cd.add_argument("--with-group", action="store_true", help="include group and character table hints")
    cd.set_defaults(func=cmd_catalog_dump)

    h = sub.add_parser("h2", parents=[common], help="Schur multiplier of a finite group")
    h.add_argument("group_spec", metavar="GROUP", help="group name (Z6, S3, D4, Q8, Z2xZ2) or JSON file")
    h.set_defaults(func=cmd_h2)

    pr = sub.add_parser("product", parents=[common], help="Deligne product of two documents")
    pr.add_argument("left")
    pr.add_argument("right")
    pr.set_defaults(func=cmd_product)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (errors.RibbonCatError, _ParseFailure, json.JSONDecodeError) as exc:
        payload = _error_payload(exc)
        if getattr(args, "format", "json") == "json":
            sys.stdout.write(dumps(payload))
        else:
            sys.stdout.write(f"error ({payload['error']}): {payload['message']}\n")
            if "witness" in payload:
                sys.stdout.write(f"witness: {json.dumps(payload['witness'], sort_keys=True)}\n")
        print(f"ribboncat: {exc}", file=sys.stderr)
        return payload["exit_code"]
