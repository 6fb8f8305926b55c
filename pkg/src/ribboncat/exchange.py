"""JSON exchange format for categories, groups and condensation results.

Output is UTF-8 JSON with sorted keys; every CycloNum is written in the
smallest cyclotomic field containing it, so equal inputs give byte-identical
documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

import numpy as np

from .errors import StructureError
from .exactnum import CycloNum, zeta
from .fusion import FusionRingData
from .ribbon import CategorySpec

SCHEMA_VERSION = 1

__all__ = [
    "SCHEMA_VERSION",
    "ExchangeDocument",
    "TannakianHints",
    "cyclo_to_json",
    "cyclo_from_json",
    "spec_to_json",
    "spec_from_json",
    "dumps",
    "parse_document",
    "load_document",
]


def cyclo_to_json(x: CycloNum) -> dict:
    c = x.canonical()
    coeffs = c.coeffs
    return {"order": c.order, "num": [q.numerator for q in coeffs], "den": [q.denominator for q in coeffs]}


def cyclo_from_json(data) -> CycloNum:
    if isinstance(data, bool):
        raise StructureError("booleans are not numbers")
    if isinstance(data, int):
        return CycloNum.rational(data)
    if isinstance(data, str):
        return CycloNum.rational(Fraction(data))
    if isinstance(data, Mapping):
        if "zeta" in data:
            n, k = data["zeta"]
            return zeta(int(n), int(k))
        try:
            order = int(data["order"])
            num = data["num"]
            den = data.get("den", [1] * len(num))
        except (KeyError, TypeError) as exc:
            raise StructureError(f"bad CycloNum {data!r}") from exc
        if len(num) != len(den):
            raise StructureError("CycloNum num/den lengths differ")
        try:
            return CycloNum.from_coeffs(order, [Fraction(int(a), int(b)) for a, b in zip(num, den)])
        except (ValueError, ZeroDivisionError) as exc:
            raise StructureError(str(exc)) from exc
    raise StructureError(f"cannot read CycloNum from {data!r}")


def spec_to_json(spec: CategorySpec) -> dict:
    names = spec.names
    N = spec.N
    entries = [[names[a], names[b], names[c], int(N[a, b, c])] for a, b, c in np.argwhere(N > 0)]
    out = {
        "labels": list(names),
        "unit": names[spec.unit],
        "dual": [names[d] for d in spec.ring.dual],
        "N": entries,
        "twists": [cyclo_to_json(t) for t in spec.twists],
    }
    if spec.dims is not None:
        out["dims"] = [cyclo_to_json(d) for d in spec.dims]
    return out


def spec_from_json(data: Mapping) -> CategorySpec:
    try:
        names = [str(n) for n in data["labels"]]
        r = len(names)
        N = np.zeros((r, r, r), dtype=np.int64)
        pos = {n: i for i, n in enumerate(names)}

        def idx(x):
            if isinstance(x, int) and not isinstance(x, bool):
                if not 0 <= x < r:
                    raise StructureError(f"label index {x} out of range")
                return x
            if x not in pos:
                raise StructureError(f"unknown label {x!r} in fusion table")
            return pos[x]

        for quad in data["N"]:
            if len(quad) != 4:
                raise StructureError("fusion entries must be [a, b, c, multiplicity]")
            a, b, c, k = quad
            if not isinstance(k, int) or isinstance(k, bool) or k < 0:
                raise StructureError(f"bad multiplicity {k!r}")
            N[idx(a), idx(b), idx(c)] = k
        ring = FusionRingData(names, idx(data["unit"]), [idx(d) for d in data["dual"]], N)
        twists = [cyclo_from_json(t) for t in data["twists"]]
        dims = [cyclo_from_json(d) for d in data["dims"]] if data.get("dims") is not None else None
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"malformed category: {exc}") from exc
    return CategorySpec(ring, twists, dims)


@dataclass
class TannakianHints:
    labels: tuple[str, ...] | None = None
    group: Any = None  # FiniteGroup
    character_table: Any = None  # CharacterTable
    label_to_irrep: dict[str, int] | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        if self.group is not None:
            out["group"] = self.group.to_json()
        if self.character_table is not None:
            out["character_table"] = self.character_table.to_json()
        if self.label_to_irrep is not None:
            out["label_to_irrep"] = dict(self.label_to_irrep)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> TannakianHints:
        from .tannakian import CharacterTable, FiniteGroup

        return cls(
            labels=tuple(data["labels"]) if data.get("labels") is not None else None,
            group=FiniteGroup.from_json(data["group"]) if data.get("group") is not None else None,
            character_table=(
                CharacterTable.from_json(data["character_table"]) if data.get("character_table") is not None else None
            ),
            label_to_irrep=(
                {str(k): int(v) for k, v in data["label_to_irrep"].items()}
                if data.get("label_to_irrep") is not None
                else None
            ),
        )


@dataclass
class ExchangeDocument:
    category: CategorySpec
    tannakian: TannakianHints | None = None
    cocycle_overrides: dict[str, int] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"schema_version": self.schema_version, "category": spec_to_json(self.category)}
        if self.tannakian is not None:
            out["tannakian"] = self.tannakian.to_json()
        if self.cocycle_overrides:
            out["cocycle_overrides"] = dict(self.cocycle_overrides)
        out.update(self.extra)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExchangeDocument):
            return NotImplemented
        return dumps(self.to_json()) == dumps(other.to_json()) and self.category == other.category


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_document(data: Any) -> ExchangeDocument:
    if not isinstance(data, Mapping):
        raise StructureError("document must be a JSON object")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise StructureError(f"unsupported schema_version {version!r}")
    cat = data.get("category")
    if cat is None:
        raise StructureError("document has no 'category'")
    spec = spec_from_json(cat)
    hints = TannakianHints.from_json(data["tannakian"]) if data.get("tannakian") is not None else None
    overrides = {str(k): int(v) for k, v in (data.get("cocycle_overrides") or {}).items()}
    known = {"schema_version", "category", "tannakian", "cocycle_overrides"}
    extra = {k: v for k, v in data.items() if k not in known}
    return ExchangeDocument(spec, hints, overrides, version, extra)


def load_document(path) -> ExchangeDocument:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise StructureError(f"invalid JSON: {exc}") from exc
    return parse_document(data)
