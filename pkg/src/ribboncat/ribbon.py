"""Twists, channel monodromies, the centre, S-matrices and modularity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    DataInconsistencyError,
    DomainError,
    ExactDimsRequired,
    PreconditionError,
    StructureError,
)
from .exactnum import ONE, ZERO, CycloNum, as_cyclo, determinant, to_float
from .fusion import FusionRingData, Label, ValidationReport, Violation, fp_dims, validate_ring

__all__ = [
    "CategorySpec",
    "SMatrix",
    "DegeneracyResult",
    "ModularityReport",
    "channel_monodromy",
    "is_degenerate",
    "centre",
    "s_matrix",
    "is_modular",
    "verlinde_check",
    "validate_ribbon",
    "degenerate_by_s_matrix",
]


class CategorySpec:
    """A skeletal braided ribbon category: fusion ring, twists, optional exact dims."""

    def __init__(self, ring: FusionRingData, twists: Sequence, dims: Sequence | None = None) -> None:
        if len(twists) != ring.rank:
            raise StructureError("one twist per label required")
        if dims is not None and len(dims) != ring.rank:
            raise StructureError("one dimension per label required")
        self.ring = ring
        self.twists = tuple(as_cyclo(t) for t in twists)
        self.dims = None if dims is None else tuple(as_cyclo(d) for d in dims)

    # Convenience passthroughs.
    @property
    def rank(self) -> int:
        return self.ring.rank

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names

    @property
    def labels(self) -> tuple[Label, ...]:
        return self.ring.labels

    @property
    def unit(self) -> int:
        return self.ring.unit

    @property
    def N(self) -> np.ndarray:
        return self.ring.N

    def index(self, x) -> int:
        return self.ring.index(x)

    @cached_property
    def _twist_inv(self) -> tuple[CycloNum, ...]:
        return tuple(t.conjugate() if t * t.conjugate() == ONE else t.inverse() for t in self.twists)

    @cached_property
    def float_dims(self) -> tuple[float, ...]:
        if self.dims is not None:
            return tuple(to_float(d).real for d in self.dims)
        return fp_dims(self.ring).values

    def theta(self, x) -> CycloNum:
        return self.twists[self.index(x)]

    def dim(self, x) -> CycloNum:
        if self.dims is None:
            raise ExactDimsRequired("exact dims required")
        return self.dims[self.index(x)]

    def global_dim(self) -> CycloNum:
        if self.dims is None:
            raise ExactDimsRequired("exact dims required")
        return sum((d * d for d in self.dims), ZERO)

    def channels(self, a: int, b: int):
        return [int(c) for c in np.flatnonzero(self.ring.N[a, b])]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CategorySpec):
            return NotImplemented
        return self.ring == other.ring and self.twists == other.twists and self.dims == other.dims

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"CategorySpec(rank={self.rank}, labels={list(self.names)})"


@dataclass(frozen=True)
class SMatrix:
    entries: tuple[tuple, ...]
    normalized: bool = False
    certified: bool = True
    convention: str = "S~_ab = sum_c N[dual a][b][c] theta_c/(theta_a theta_b) d_c"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_complex(self) -> np.ndarray:
        return np.array([[to_float(x) if isinstance(x, CycloNum) else complex(x) for x in row] for row in self.entries])


@dataclass(frozen=True)
class DegeneracyResult:
    label: str
    degenerate: bool
    witness: tuple | None  # (b, c, phase)

    def __bool__(self) -> bool:
        return self.degenerate


@dataclass(frozen=True)
class ModularityReport:
    centre: tuple[str, ...]
    det: CycloNum | complex
    modular: bool
    certified: bool = True

    def to_json(self) -> dict:
        from .exchange import cyclo_to_json

        det = cyclo_to_json(self.det) if isinstance(self.det, CycloNum) else [self.det.real, self.det.imag]
        return {"centre": list(self.centre), "det": det, "modular": self.modular, "certified": self.certified}


def channel_monodromy(spec: CategorySpec, a, b, c) -> CycloNum:
    """Scalar of the double braiding of a and b on the fusion channel c."""
    a, b, c = spec.index(a), spec.index(b), spec.index(c)
    if spec.N[a, b, c] == 0:
        raise DomainError(f"{spec.names[c]} is not a fusion channel of {spec.names[a]} x {spec.names[b]}")
    inv = spec._twist_inv
    return spec.twists[c] * inv[a] * inv[b]


def is_degenerate(spec: CategorySpec, a) -> DegeneracyResult:
    a = spec.index(a)
    ta = spec.twists[a]
    for b in range(spec.rank):
        tab = ta * spec.twists[b]
        for c in spec.channels(a, b):
            if spec.twists[c] != tab:
                phase = channel_monodromy(spec, a, b, c)
                return DegeneracyResult(spec.names[a], False, (spec.names[b], spec.names[c], phase))
    return DegeneracyResult(spec.names[a], True, None)


def centre(spec: CategorySpec) -> tuple[Label, ...]:
    """All degenerate simples, in index order. Closure is asserted."""
    members = [a for a in range(spec.rank) if is_degenerate(spec, a)]
    _assert_closed(spec, members, "centre")
    return tuple(spec.labels[a] for a in members)


def _assert_closed(spec: CategorySpec, members: Sequence[int], what: str) -> None:
    inside = set(members)
    if spec.unit not in inside:
        raise DataInconsistencyError(f"{what} does not contain the unit")
    for a in members:
        if spec.ring.dual[a] not in inside:
            raise DataInconsistencyError(f"{what} is not closed under duals at {spec.names[a]}")
        for b in members:
            for c in spec.channels(a, b):
                if c not in inside:
                    raise DataInconsistencyError(
                        f"{what} is not fusion-closed: {spec.names[c]} in {spec.names[a]} x {spec.names[b]}"
                    )


def s_matrix(spec: CategorySpec, numeric_fallback: bool = False) -> SMatrix:
    """Unnormalized S-matrix with dual(a) in the fusion index; first row = dims."""
    if spec.dims is None:
        if not numeric_fallback:
            raise ExactDimsRequired("exact dims required for an exact S-matrix (use numeric fallback)")
        return _s_matrix_numeric(spec)
    cached = spec.__dict__.get("_s_matrix")
    if cached is not None:
        return cached
    r = spec.rank
    N, dual, th, inv, d = spec.N, spec.ring.dual, spec.twists, spec._twist_inv, spec.dims
    rows = [[ZERO] * r for _ in range(r)]
    for a in range(r):
        for b in range(a, r):
            total = ZERO
            for c in np.flatnonzero(N[dual[a], b]):
                total = total + int(N[dual[a], b, c]) * (th[c] * d[c])
            entry = total * inv[a] * inv[b]
            rows[a][b] = entry
            rows[b][a] = entry
    result = SMatrix(tuple(tuple(row) for row in rows))
    spec.__dict__["_s_matrix"] = result
    return result


def _s_matrix_numeric(spec: CategorySpec) -> SMatrix:
    r = spec.rank
    N, dual = spec.N, spec.ring.dual
    th = [to_float(t) for t in spec.twists]
    d = spec.float_dims
    rows = []
    for a in range(r):
        row = []
        for b in range(r):
            total = sum(N[dual[a], b, c] * th[c] * d[c] for c in range(r))
            row.append(complex(total / (th[a] * th[b])))
        rows.append(tuple(row))
    return SMatrix(tuple(rows), certified=False)


def degenerate_by_s_matrix(spec: CategorySpec) -> tuple[Label, ...]:
    """Labels whose S-row is proportional to the dimension row: S~_ab = d_a d_b."""
    S = s_matrix(spec)
    d = spec.dims
    return tuple(
        spec.labels[a] for a in range(spec.rank) if all(S[a, b] == d[a] * d[b] for b in range(spec.rank))
    )


def is_modular(spec: CategorySpec, numeric_fallback: bool = False) -> ModularityReport:
    """Exact determinant verdict, cross-checked against the centre."""
    cen = tuple(l.name for l in centre(spec))
    trivial_centre = cen == (spec.names[spec.unit],)
    S = s_matrix(spec, numeric_fallback=numeric_fallback)
    if not S.certified:
        det = complex(np.linalg.det(S.to_complex()))
        modular = abs(det) > 1e-9
        return ModularityReport(cen, det, modular, certified=False)
    cached = spec.__dict__.get("_det")
    if cached is None:
        cached = determinant(S.entries)
        spec.__dict__["_det"] = cached
    modular = not cached.is_zero()
    if modular != trivial_centre:
        raise DataInconsistencyError(
            f"det(S~) {'!=' if modular else '=='} 0 but centre is {list(cen)}; twists/dims are inconsistent"
        )
    return ModularityReport(cen, cached, modular)


def verlinde_check(spec: CategorySpec, tol: float = 1e-9) -> bool:
    """N_ab^c = sum_x S_ax S_bx conj(S_cx) / S_1x with S = S~/D, D = +sqrt(sum d^2)."""
    if not is_modular(spec).modular:
        raise PreconditionError("Verlinde check requires a modular category")
    St = s_matrix(spec).to_complex()
    D = math.sqrt(sum(x * x for x in spec.float_dims))
    S = St / D
    u = spec.unit
    r = spec.rank
    N = spec.N
    for a in range(r):
        for b in range(r):
            for c in range(r):
                val = np.sum(S[a] * S[b] * np.conj(S[c]) / S[u])
                if abs(val - N[a, b, c]) > tol:
                    return False
    return True


def validate_ribbon(spec: CategorySpec) -> ValidationReport:
    """Twist normalization, duality, unit modulus, dimension consistency and degeneracy closure."""
    report = ValidationReport()
    names = spec.names
    th = spec.twists
    u = spec.unit
    if th[u] != ONE:
        report.violations.append(Violation("twist-unit", (names[u],), f"theta of the unit is {th[u]!r}, not 1"))
    for a in range(spec.rank):
        if th[a] * th[a].conjugate() != ONE:
            report.violations.append(Violation("twist-modulus", (names[a],), f"|theta_{names[a]}| != 1"))
    for a in range(spec.rank):
        da = spec.ring.dual[a]
        if th[da] != th[a]:
            report.violations.append(
                Violation("twist-dual", (names[a], names[da]), f"theta_{names[a]} != theta_{names[da]}")
            )
            break
    if spec.dims is not None:
        d = spec.dims
        for a in range(spec.rank):
            if d[spec.ring.dual[a]] != d[a]:
                report.violations.append(Violation("dims", (names[a], names[spec.ring.dual[a]]), f"d_{names[a]} != d of its dual"))
                break
        else:
            for a in range(spec.rank):
                for b in range(a, spec.rank):
                    total = sum((int(spec.N[a, b, c]) * d[c] for c in spec.channels(a, b)), ZERO)
                    if total != d[a] * d[b]:
                        report.violations.append(
                            Violation("dims", (names[a], names[b]), f"d_{names[a]} d_{names[b]} != sum_c N d_c")
                        )
                        break
                else:
                    continue
                break
    if report.ok:
        # Degenerate labels must act trivially on every channel; check the
        # channel condition both ways round so that a <-> b asymmetric data is caught.
        deg = [a for a in range(spec.rank) if is_degenerate(spec, a)]
        for a in deg:
            for b in range(spec.rank):
                for c in spec.channels(b, a):
                    if th[c] != th[a] * th[b]:
                        report.violations.append(
                            Violation(
                                "degeneracy-closure",
                                (names[a], names[b], names[c]),
                                f"degenerate {names[a]} has nontrivial phase on {names[b]} x {names[a]} -> {names[c]}",
                            )
                        )
                        return report
    return report
