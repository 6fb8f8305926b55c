"""Fusion rings: labels, formal direct sums, validation and dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import InvalidDataError, StructureError, UnknownLabelError
from .exactnum import CycloNum, as_cyclo, to_float

__all__ = [
    "Label",
    "FusionRingData",
    "ObjectVec",
    "Violation",
    "ValidationReport",
    "FPDims",
    "validate_ring",
    "fuse",
    "fp_dims",
    "decompose",
]


@dataclass(frozen=True, order=True)
class Label:
    index: int
    name: str

    def __str__(self) -> str:
        return self.name


class FusionRingData:
    """Skeletal fusion ring: labels, unit, duality and the dense tensor N.

    ``N[a, b, c]`` is the multiplicity of ``c`` in ``a (x) b``. The object is
    treated as immutable; the array is made read-only.
    """

    def __init__(self, names: Sequence[str], unit: int | str, dual: Sequence[int | str], N) -> None:
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise StructureError("label names must be unique")
        self.labels = tuple(Label(i, n) for i, n in enumerate(names))
        self._by_name = {n: i for i, n in enumerate(names)}
        r = len(names)
        arr = np.asarray(N)
        if arr.shape != (r, r, r):
            raise StructureError(f"fusion tensor has shape {arr.shape}, expected {(r, r, r)}")
        if arr.size and not np.all(np.equal(np.mod(arr, 1), 0)):
            raise StructureError("fusion multiplicities must be integers")
        arr = arr.astype(np.int64)
        if np.any(arr < 0):
            raise StructureError("fusion multiplicities must be nonnegative")
        arr.setflags(write=False)
        self.N = arr
        self.unit = self._resolve(unit)
        if len(dual) != r:
            raise StructureError("dual map must list one label per simple")
        self.dual = tuple(self._resolve(d) for d in dual)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(l.name for l in self.labels)

    def _resolve(self, x) -> int:
        if isinstance(x, Label):
            x = x.index
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if 0 <= x < len(self.labels):
                return int(x)
            raise UnknownLabelError(f"label index {x} out of range")
        if isinstance(x, str) and x in self._by_name:
            return self._by_name[x]
        raise UnknownLabelError(f"unknown label {x!r}")

    def index(self, x) -> int:
        return self._resolve(x)

    def label(self, x) -> Label:
        return self.labels[self._resolve(x)]

    def obj(self, *terms) -> ObjectVec:
        """``ring.obj("1", ("tau", 2))`` builds the formal sum 1 + 2 tau."""
        out: dict[Label, int] = {}
        for t in terms:
            name, mult = (t, 1) if not isinstance(t, tuple) else t
            lab = self.label(name)
            out[lab] = out.get(lab, 0) + int(mult)
        return ObjectVec(out)

    def fusion_matrix(self, a) -> np.ndarray:
        """Left multiplication by ``a`` as the matrix (N[a][b][c])_{b,c}."""
        return self.N[self._resolve(a)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionRingData):
            return NotImplemented
        return (
            self.names == other.names
            and self.unit == other.unit
            and self.dual == other.dual
            and np.array_equal(self.N, other.N)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"FusionRingData(rank={self.rank}, labels={list(self.names)})"


class ObjectVec:
    """A formal direct sum of simples with nonnegative multiplicities."""

    __slots__ = ("_m",)

    def __init__(self, mults: Mapping[Label, int] | None = None) -> None:
        m = {}
        for lab, k in (mults or {}).items():
            if k < 0:
                raise ValueError("multiplicities must be nonnegative")
            if k:
                m[lab] = int(k)
        self._m = m

    def items(self):
        return sorted(self._m.items())

    def __getitem__(self, lab: Label) -> int:
        return self._m.get(lab, 0)

    def __iter__(self):
        return iter(sorted(self._m))

    def __len__(self) -> int:
        return len(self._m)

    def __add__(self, other: ObjectVec) -> ObjectVec:
        out = dict(self._m)
        for lab, k in other._m.items():
            out[lab] = out.get(lab, 0) + k
        return ObjectVec(out)

    def __rmul__(self, k: int) -> ObjectVec:
        return ObjectVec({lab: k * v for lab, v in self._m.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ObjectVec):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        if not self._m:
            return "0"
        return " + ".join(f"{k}*{lab.name}" if k != 1 else lab.name for lab, k in self.items())


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    message: str

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": [str(w) for w in self.witness], "message": self.message}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    warnings: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def first(self, kind: str) -> Violation | None:
        return next((v for v in self.violations if v.kind == kind), None)

    def extend(self, other: ValidationReport) -> ValidationReport:
        self.violations.extend(other.violations)
        self.warnings.extend(other.warnings)
        return self

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [v.to_json() for v in self.violations],
            "warnings": [v.to_json() for v in self.warnings],
        }


def validate_ring(ring: FusionRingData, strict_frobenius: bool = True) -> ValidationReport:
    """Check unit law, rigidity, associativity and Frobenius symmetry.

    Each violated invariant (left and right unit laws count separately) is
    reported once, with the first witness found in index order. With ``strict_frobenius=False`` Frobenius-symmetry failures
    are reported as warnings instead.
    """
    report = ValidationReport()
    N, u, dual, r = ring.N, ring.unit, ring.dual, ring.rank
    name = ring.names

    def add(kind, witness, message, warn=False):
        v = Violation(kind, tuple(name[w] if isinstance(w, int) else w for w in witness), message)
        (report.warnings if warn else report.violations).append(v)

    eye = np.eye(r, dtype=np.int64)
    for side, mat in (("left", N[u]), ("right", N[:, u, :])):
        bad = np.argwhere(mat != eye)
        if bad.size:
            b, c = (int(v) for v in bad[0])
            add("unit", (b, c), f"{side} unit law fails: N[{side}-unit] entry ({name[b]}, {name[c]}) is {mat[b, c]}")

    if dual[u] != u:
        add("rigidity", (u,), "dual of the unit is not the unit")
    for a in range(r):
        if dual[dual[a]] != a:
            add("rigidity", (a,), f"dual is not an involution at {name[a]}")
            break
    for a in range(r):
        expected = np.zeros(r, dtype=np.int64)
        expected[dual[a]] = 1
        row = N[a, :, u]
        if not np.array_equal(row, expected):
            b = int(np.argwhere(row != expected)[0][0])
            add(
                "rigidity",
                (a,),
                f"N[{name[a]}][{name[b]}][unit] = {row[b]}, expected {expected[b]} (dual of {name[a]} is {name[dual[a]]})",
            )
            break

    hit = kernels.associativity_violation(N)
    if hit is not None:
        a, b, c, d, lhs, rhs = hit
        add(
            "associativity",
            (a, b, c, d),
            f"multiplicity of {name[d]} in ({name[a]} {name[b]}) {name[c]} is {lhs}, in {name[a]} ({name[b]} {name[c]}) is {rhs}",
        )

    dual_arr = np.asarray(dual)
    # N[a][b][c] == N[dual a][c][b] == N[c][dual b][a]
    alt1 = N[dual_arr].transpose(0, 2, 1)
    alt2 = N[:, dual_arr, :].transpose(2, 1, 0)
    for alt in (alt1, alt2):
        bad = np.argwhere(N != alt)
        if bad.size:
            a, b, c = (int(v) for v in bad[0])
            add(
                "frobenius",
                (a, b, c),
                f"Frobenius symmetry fails at N[{name[a]}][{name[b]}][{name[c]}] = {N[a, b, c]}",
                warn=not strict_frobenius,
            )
            break
    return report


def fuse(ring: FusionRingData, x: ObjectVec, y: ObjectVec) -> ObjectVec:
    """Bilinear extension of the fusion rules to formal direct sums."""
    for lab in list(x) + list(y):
        if lab.index >= ring.rank or ring.labels[lab.index] != lab:
            raise UnknownLabelError(f"label {lab.name!r} does not belong to this ring")
    total = np.zeros(ring.rank, dtype=np.int64)
    for a, ka in x.items():
        for b, kb in y.items():
            total += ka * kb * ring.N[a.index, b.index]
    return ObjectVec({ring.labels[c]: int(k) for c, k in enumerate(total) if k})


def decompose(x: ObjectVec) -> list[tuple[Label, int]]:
    """Sorted support of a formal direct sum."""
    return x.items()


@dataclass(frozen=True)
class FPDims:
    values: tuple[float, ...]
    global_dim: float
    exact: tuple[CycloNum, ...] | None
    exact_global_dim: CycloNum | None
    certified: bool
    iterations: int

    def __getitem__(self, i: int) -> float:
        return self.values[i]


def _perron_frobenius(ring: FusionRingData, tol: float = 1e-12, max_iter: int = 10_000):
    # The sum of all fusion matrices is entrywise positive with eigenvector (d_c).
    A = ring.N.sum(axis=0).astype(float)
    v = np.ones(ring.rank)
    for it in range(1, max_iter + 1):
        w = A @ v
        w /= w[ring.unit]
        if np.max(np.abs(w - v)) < tol:
            return w, it
        v = w
    return v, max_iter


def fp_dims(ring: FusionRingData, dims: Sequence | None = None, tol: float = 1e-9) -> FPDims:
    """Perron-Frobenius dimensions plus a certificate of d_a d_b = sum_c N d_c.

    When exact ``dims`` are supplied the identity is checked exactly and the
    exact values are also compared with the numerical eigenvector.
    """
    v, iters = _perron_frobenius(ring)
    if np.any(v < 1 - 1e-9):
        bad = int(np.argmin(v))
        raise InvalidDataError(
            f"Perron-Frobenius dimension of {ring.names[bad]} is {v[bad]:.6g} < 1"
        )
    N = ring.N
    r = ring.rank
    exact = None
    exact_global = None
    if dims is not None:
        exact = tuple(as_cyclo(d) for d in dims)
        if len(exact) != r:
            raise StructureError("one exact dimension per label required")
        for a in range(r):
            for b in range(r):
                rhs = sum((int(N[a, b, c]) * exact[c] for c in range(r) if N[a, b, c]), as_cyclo(0))
                if exact[a] * exact[b] != rhs:
                    raise InvalidDataError(
                        f"exact dims violate d({ring.names[a]}) d({ring.names[b]}) = sum_c N d_c"
                    )
        for a in range(r):
            if abs(to_float(exact[a]) - v[a]) > tol:
                raise InvalidDataError(
                    f"exact dim of {ring.names[a]} ({to_float(exact[a]).real:.10g}) is not the Perron-Frobenius value {v[a]:.10g}"
                )
        exact_global = sum((d * d for d in exact), as_cyclo(0))
        certified = True
    else:
        lhs = np.outer(v, v)
        rhs = np.einsum("abc,c->ab", N, v)
        certified = bool(np.max(np.abs(lhs - rhs)) < tol)
    return FPDims(
        values=tuple(float(x) for x in v),
        global_dim=float(np.sum(v * v)),
        exact=exact,
        exact_global_dim=exact_global,
        certified=certified,
        iterations=iters,
    )


def regular_ring(names: Iterable[str], table: Sequence[Sequence[int]], unit: int = 0) -> FusionRingData:
    """Fusion ring of a finite abelian group given by its multiplication table."""
    names = list(names)
    r = len(names)
    N = np.zeros((r, r, r), dtype=np.int64)
    inv = [0] * r
    for a in range(r):
        for b in range(r):
            N[a, b, table[a][b]] = 1
            if table[a][b] == unit:
                inv[a] = b
    return FusionRingData(names, unit, inv, N)
