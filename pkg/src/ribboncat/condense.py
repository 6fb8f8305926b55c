"""Condensation of a Tannakian subcategory (de-equivariantization).

The free-module functor C -> C_T is recorded by its decomposition matrix
``m``: ``Phi(eta) = sum_x m[eta][x] x``. Hom spaces between images are

    dim Hom(Phi(a), Phi(b)) = sum_k d_k N[g_k][a][b]        (extended Hom)

so ``M = m m^T``. Condensed dimensions and twists are inherited and the
condensed fusion tensor is the nonnegative integer solution of

    sum_c N[a][b][c] m[c][z] = sum_{x,y} m[a][x] m[b][y] Nc[x][y][z].
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .errors import (
    AmbiguityError,
    DataInconsistencyError,
    DegeneracyViolation,
    DomainError,
    InconsistencyError,
    NeedsCocycle,
)
from .exactnum import ONE, ZERO, CycloNum
from .fusion import FusionRingData, validate_ring
from .ribbon import CategorySpec, centre, is_degenerate, is_modular, validate_ribbon
from .tannakian import (
    CharacterTable,
    CocycleClass,
    FiniteGroup,
    TannakianSubcat,
    h2_group,
    maximal_tannakian,
    projective_irrep_profile,
    recognize_group,
    tannakian_from_labels,
)

__all__ = [
    "OrbitInfo",
    "OrbitReport",
    "CondensationResult",
    "CheckReport",
    "check_tannakian",
    "extended_hom",
    "extended_hom_matrix",
    "orbits_and_stabilizers",
    "condense_pointed",
    "condense_general",
    "condense",
    "verify_condensation",
]

_TOL = 1e-9


@dataclass(frozen=True)
class OrbitInfo:
    members: tuple[str, ...]
    representative: str
    stabilizer: tuple[str, ...] | None  # T-labels fixing the representative; None if not applicable
    index: int | None
    stabilizer_group: FiniteGroup | None = None
    h2_invariants: tuple[int, ...] | None = None
    cocycle: CocycleClass | None = None
    cocycle_status: str = "not-applicable"  # trivial-h2 | inferred | override | required-from-user

    def to_json(self) -> dict:
        out = {
            "members": list(self.members),
            "representative": self.representative,
            "stabilizer": None if self.stabilizer is None else list(self.stabilizer),
            "index": self.index,
            "cocycle_status": self.cocycle_status,
        }
        if self.stabilizer_group is not None:
            out["stabilizer_table"] = self.stabilizer_group.table.tolist()
        if self.h2_invariants is not None:
            out["h2_invariants"] = list(self.h2_invariants)
        if self.cocycle is not None:
            out["cocycle_class_id"] = self.cocycle.class_id
        return out


@dataclass(frozen=True)
class OrbitReport:
    orbits: tuple[OrbitInfo, ...]
    group_order: int | None

    def orbit_of(self, name: str) -> OrbitInfo:
        return next(o for o in self.orbits if name in o.members)

    def to_json(self) -> dict:
        return {"group_order": self.group_order, "orbits": [o.to_json() for o in self.orbits]}


@dataclass
class CondensationResult:
    condensed: CategorySpec
    m: np.ndarray
    report: OrbitReport
    original: CategorySpec
    tannakian: TannakianSubcat
    M: np.ndarray
    method: str
    solutions: int = 1

    @property
    def group_order(self) -> int:
        return sum(d * d for d in self.tannakian.irrep_dims)

    def phi(self, eta) -> dict[str, int]:
        """Decomposition of the image of ``eta`` as {condensed label: multiplicity}."""
        i = self.original.index(eta)
        return {self.condensed.names[x]: int(k) for x, k in enumerate(self.m[i]) if k}

    def phi_entries(self) -> list[list]:
        o, c = self.original.names, self.condensed.names
        return [[o[i], c[x], int(self.m[i, x])] for i, x in np.argwhere(self.m > 0)]


# ---------------------------------------------------------------------------


def _as_tannakian(spec: CategorySpec, T) -> TannakianSubcat:
    if isinstance(T, TannakianSubcat):
        return T
    return tannakian_from_labels(spec, T)


def check_tannakian(spec: CategorySpec, T: TannakianSubcat) -> None:
    """Subcategory closure, degeneracy and bosonic twists of T."""
    inside = set(T.indices)
    if spec.unit not in inside:
        raise DomainError("T does not contain the unit")
    for a in T.indices:
        if spec.ring.dual[a] not in inside:
            raise DomainError(f"T is not closed under duals: {spec.names[spec.ring.dual[a]]} missing")
        for b in T.indices:
            for c in spec.channels(a, b):
                if c not in inside:
                    raise DomainError(
                        f"T is not a subcategory: {spec.names[c]} in {spec.names[a]} x {spec.names[b]} is missing"
                    )
    for a in T.indices:
        res = is_degenerate(spec, a)
        if not res:
            b, c, phase = res.witness
            raise DegeneracyViolation(
                f"{spec.names[a]} is not degenerate: monodromy with {b} on channel {c} is {phase!r}",
                (spec.names[a], b, c, phase),
            )
    for a in T.indices:
        if spec.twists[a] != ONE:
            raise DomainError(f"T contains the non-bosonic label {spec.names[a]}")


def extended_hom(spec: CategorySpec, T, eta1, eta2) -> int:
    """dim Hom(Phi(eta1), Phi(eta2)) = sum_k d_k N[g_k][eta1][eta2]."""
    T = _as_tannakian(spec, T)
    _check_subcategory(spec, T)
    a, b = spec.index(eta1), spec.index(eta2)
    return int(sum(d * spec.N[k, a, b] for k, d in zip(T.indices, T.irrep_dims)))


def _check_subcategory(spec: CategorySpec, T: TannakianSubcat) -> None:
    try:
        names = [spec.names[i] for i in T.indices]
    except IndexError:
        raise DomainError("T refers to labels outside the category") from None
    if list(names) != list(T.labels):
        raise DomainError("T labels do not belong to this category")
    inside = set(T.indices)
    for a in T.indices:
        for b in T.indices:
            if any(c not in inside for c in spec.channels(a, b)):
                raise DomainError("T is not closed under fusion")


def extended_hom_matrix(spec: CategorySpec, T) -> np.ndarray:
    T = _as_tannakian(spec, T)
    _check_subcategory(spec, T)
    return kernels.extended_hom_matrix(spec.N, list(T.indices), list(T.irrep_dims))


def _orbit_partition(spec: CategorySpec, T: TannakianSubcat) -> list[list[int]]:
    parent = list(range(spec.rank))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in T.indices:
        for eta in range(spec.rank):
            for c in spec.channels(g, eta):
                ra, rb = find(eta), find(c)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for x in range(spec.rank):
        groups.setdefault(find(x), []).append(x)
    return [sorted(v) for _, v in sorted(groups.items())]


def orbits_and_stabilizers(spec: CategorySpec, T) -> OrbitReport:
    """Partition the labels under fusion with T; stabilizers in the pointed case."""
    T = _as_tannakian(spec, T)
    _check_subcategory(spec, T)
    orbits = _orbit_partition(spec, T)
    names = spec.names
    pointed = T.pointed
    group = None
    if pointed:
        T = recognize_group(spec, T) if T.group is None else T
        group = T.group
    infos = []
    for orb in orbits:
        rep = orb[0]
        for x in orb[1:]:
            if spec.twists[x] != spec.twists[rep]:
                raise DataInconsistencyError(
                    f"twist is not constant on the orbit of {names[rep]}: theta_{names[x]} != theta_{names[rep]}"
                )
            if pointed and abs(spec.float_dims[x] - spec.float_dims[rep]) > _TOL:
                raise DataInconsistencyError(f"dimension is not constant on the orbit of {names[rep]}")
        if not pointed:
            infos.append(OrbitInfo(tuple(names[x] for x in orb), names[rep], None, None))
            continue
        stab = [i for i, g in enumerate(T.indices) if spec.N[g, rep, rep] == 1]
        if len(orb) * len(stab) != group.order:
            raise DataInconsistencyError(
                f"orbit of {names[rep]} has size {len(orb)} and stabilizer {len(stab)}, not multiplying to |G| = {group.order}"
            )
        H, _ = group.subgroup(stab)
        infos.append(
            OrbitInfo(
                tuple(names[x] for x in orb),
                names[rep],
                tuple(T.labels[i] for i in sorted(stab, key=lambda i: (i != group.identity, i))),
                len(orb),
                H,
                h2_group(H).invariants,
            )
        )
    return OrbitReport(tuple(infos), group.order if group is not None else sum(d * d for d in T.irrep_dims))


# ---------------------------------------------------------------------------
# condensed fusion


def _float_dims(dims: Sequence[CycloNum]) -> list[float]:
    from .exactnum import to_float

    return [to_float(d).real for d in dims]


def _column_classes(m: np.ndarray, twists, dims) -> list[list[int]]:
    key_to_cols: dict = {}
    for x in range(m.shape[1]):
        key = (tuple(int(v) for v in m[:, x]), twists[x], dims[x])
        key_to_cols.setdefault(key, []).append(x)
    return list(key_to_cols.values())


def _canonical_fusion(Nc: np.ndarray, classes: list[list[int]]) -> tuple:
    """Smallest flattening of Nc over relabelings that permute identical columns."""
    rc = Nc.shape[0]
    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in classes)):
        perm = list(range(rc))
        for cls, img in zip(classes, choice):
            for src, dst in zip(cls, img):
                perm[src] = dst
        inv = np.argsort(perm)
        P = Nc[np.ix_(inv, inv, inv)]
        key = tuple(P.ravel().tolist())
        if best is None or key < best:
            best = key
    return best


def _solve_condensed_fusion(
    spec: CategorySpec, m: np.ndarray, dims: Sequence[CycloNum], twists: Sequence[CycloNum], limit: int = 10_000
) -> list[np.ndarray]:
    """All admissible condensed fusion tensors, one per isomorphism class."""
    import sympy

    r, rc = m.shape
    u = int(np.flatnonzero(m[spec.unit])[0])
    fd = _float_dims(dims)
    pairs = [(x, y) for x in range(rc) for y in range(x, rc) if x != u and y != u]
    rows = [(a, b) for a in range(r) for b in range(a, r)]
    N = spec.N
    R = np.einsum("abc,cz->abz", N, m)
    K = sympy.zeros(len(rows), len(pairs))
    for i, (a, b) in enumerate(rows):
        for j, (x, y) in enumerate(pairs):
            v = m[a, x] * m[b, y] + (m[a, y] * m[b, x] if x != y else 0)
            if v:
                K[i, j] = int(v)
    per_z: list[list[dict]] = []
    for z in range(rc):
        rhs = []
        for a, b in rows:
            unit_part = m[a, u] * m[b, z] + (m[b, u] * m[a, z] if z != u else 0)
            rhs.append(int(R[a, b, z] - unit_part))
        if not pairs:
            if any(rhs):
                return []
            per_z.append([{}])
            continue
        aug, pivots = K.row_join(sympy.Matrix(rhs)).rref()
        if len(pairs) in pivots:
            return []
        free = [j for j in range(len(pairs)) if j not in pivots]
        bounds = [int(math.floor(fd[pairs[j][0]] * fd[pairs[j][1]] / fd[z] + _TOL)) for j in free]
        cands = []
        for values in itertools.product(*(range(bd + 1) for bd in bounds)):
            sol = dict(zip((pairs[j] for j in free), values))
            ok = True
            for i, p in enumerate(pivots):
                val = aug[i, len(pairs)] - sum(aug[i, f] * v for f, v in zip(free, values))
                val = Fraction(int(sympy.fraction(val)[0]), int(sympy.fraction(val)[1]))
                if val.denominator != 1 or val < 0:
                    ok = False
                    break
                sol[pairs[p]] = int(val)
            if ok:
                cands.append(sol)
        if not cands:
            return []
        per_z.append(cands)

    classes = _column_classes(m, twists, dims)
    found: dict[tuple, np.ndarray] = {}
    tried = 0
    for combo in itertools.product(*per_z):
        tried += 1
        if tried > limit:
            break
        Nc = np.zeros((rc, rc, rc), dtype=np.int64)
        for y in range(rc):
            Nc[u, y, y] = Nc[y, u, y] = 1
        for z, sol in enumerate(combo):
            for (x, y), v in sol.items():
                Nc[x, y, z] = Nc[y, x, z] = v
        if not _admissible(Nc, u, dims):
            continue
        key = _canonical_fusion(Nc, classes)
        found.setdefault(key, Nc)
    return list(found.values())


def _admissible(Nc: np.ndarray, u: int, dims: Sequence[CycloNum]) -> bool:
    rc = Nc.shape[0]
    for x in range(rc):
        for y in range(x, rc):
            total = ZERO
            for z in np.flatnonzero(Nc[x, y]):
                total = total + int(Nc[x, y, z]) * dims[z]
            if total != dims[x] * dims[y]:
                return False
    dual = []
    for x in range(rc):
        col = Nc[x, :, u]
        if col.sum() != 1 or col.max() != 1:
            return False
        dual.append(int(np.argmax(col)))
    ring = FusionRingData([str(i) for i in range(rc)], u, dual, Nc)
    return validate_ring(ring).ok


# ---------------------------------------------------------------------------
# assembly


def _assemble(
    spec: CategorySpec,
    T: TannakianSubcat,
    m: np.ndarray,
    names: Sequence[str],
    dims: Sequence[CycloNum],
    twists: Sequence[CycloNum],
    Nc: np.ndarray,
    report: OrbitReport,
    M: np.ndarray,
    method: str,
    solutions: int = 1,
) -> CondensationResult:
    u = int(np.flatnonzero(m[spec.unit])[0])
    dual = [int(np.argmax(Nc[x, :, u])) for x in range(Nc.shape[0])]
    ring = FusionRingData(names, u, dual, Nc)
    condensed = CategorySpec(ring, twists, dims)
    return CondensationResult(condensed, m, report, spec, T, M, method, solutions)


def _pointed_block(spec, rep: int, H: FiniteGroup, cocycle: CocycleClass):
    """Multiplicity and dimension of each simple split off from Phi(rep)."""
    profile = projective_irrep_profile(H, cocycle)
    d_rep = spec.dims[rep] if spec.dims is not None else None
    out = []
    for dim_pi in profile:
        d = d_rep * Fraction(dim_pi, H.order) if d_rep is not None else None
        out.append((dim_pi, d))
    return out


def condense_pointed(
    spec: CategorySpec, T=None, cocycle_overrides: Mapping[str, int] | None = None
) -> CondensationResult:
    """Condense a pointed Tannakian T; stabilizer cocycles are inferred when unique."""
    if spec.dims is None:
        from .errors import ExactDimsRequired

        raise ExactDimsRequired("condensation needs exact dims")
    T = maximal_tannakian(spec) if T is None else _as_tannakian(spec, T)
    check_tannakian(spec, T)
    if not T.pointed:
        raise DomainError("condense_pointed needs a pointed T (all dims 1); use condense_general")
    T = recognize_group(spec, T)
    report = orbits_and_stabilizers(spec, T)
    M = extended_hom_matrix(spec, T)
    overrides = dict(cocycle_overrides or {})

    per_orbit: list[list[tuple[CocycleClass, str]]] = []
    for orb in report.orbits:
        H = orb.stabilizer_group
        mult = h2_group(H)
        chosen = None
        for name in orb.members:
            if name in overrides:
                chosen = overrides[name]
                break
        if chosen is not None:
            per_orbit.append([(mult.cocycle(int(chosen)), "override")])
            continue
        if mult.is_trivial:
            per_orbit.append([(mult.cocycle(0), "trivial-h2")])
            continue
        rep = spec.index(orb.representative)
        viable = []
        for c in mult.classes():
            try:
                block = _pointed_block(spec, rep, H, c)
            except DataInconsistencyError:
                continue
            if all(_float_dims([d])[0] >= 1 - _TOL for _, d in block):
                viable.append((c, "inferred"))
        per_orbit.append(viable)

    successes = []
    for combo in itertools.product(*per_orbit):
        built = _build_pointed(spec, report, combo)
        if built is None:
            continue
        m, names, dims, twists = built
        if not np.array_equal(m @ m.T, M):
            continue
        sols = _solve_condensed_fusion(spec, m, dims, twists)
        if sols:
            successes.append((combo, m, names, dims, twists, sols))

    if not successes:
        raise InconsistencyError("no nonnegative integer condensed fusion tensor exists")
    if len(successes) > 1:
        cands = {}
        for combo, *_ in successes:
            for orb, (c, _) in zip(report.orbits, combo):
                cands.setdefault(orb.representative, set()).add(c.class_id)
        amb = {k: sorted(v) for k, v in cands.items() if len(v) > 1}
        raise NeedsCocycle(f"stabilizer cocycle is ambiguous for orbits {sorted(amb)}", amb)
    combo, m, names, dims, twists, sols = successes[0]
    if len(sols) > 1:
        raise AmbiguityError(f"{len(sols)} non-isomorphic condensed fusion rings fit the data", len(sols))
    orbits = tuple(
        OrbitInfo(
            o.members, o.representative, o.stabilizer, o.index, o.stabilizer_group, o.h2_invariants, c, status
        )
        for o, (c, status) in zip(report.orbits, combo)
    )
    report = OrbitReport(orbits, report.group_order)
    return _assemble(spec, T, m, names, dims, twists, sols[0], report, M, "pointed")


def _build_pointed(spec, report: OrbitReport, combo):
    r = spec.rank
    cols: list[tuple[list[int], CycloNum, CycloNum, str]] = []
    for orb, (c, _) in zip(report.orbits, combo):
        rep = spec.index(orb.representative)
        block = _pointed_block(spec, rep, orb.stabilizer_group, c)
        members = [spec.index(x) for x in orb.members]
        for j, (mult, d) in enumerate(block):
            col = [0] * r
            for x in members:
                col[x] = mult
            name = orb.representative if len(block) == 1 else f"{orb.representative}[{j}]"
            cols.append((col, d, spec.twists[rep], name))
    m = np.array([c[0] for c in cols], dtype=np.int64).T
    return m, [c[3] for c in cols], [c[1] for c in cols], [c[2] for c in cols]


def _column_dims(spec: CategorySpec, m: np.ndarray, M: np.ndarray):
    """d_x = d_eta m[eta][x] / M[eta][eta], required to agree for every eta."""
    dims = []
    for x in range(m.shape[1]):
        d = None
        for eta in np.flatnonzero(m[:, x]):
            cand = spec.dims[eta] * Fraction(int(m[eta, x]), int(M[eta, eta]))
            if d is None:
                d = cand
            elif cand != d:
                return None
        dims.append(d)
    return dims


def condense_general(
    spec: CategorySpec,
    T=None,
    group: FiniteGroup | None = None,
    char_table: CharacterTable | None = None,
    label_to_irrep: Mapping[str, int] | None = None,
    limit: int = 1000,
) -> CondensationResult:
    """Condense via nonnegative integer Gram factorization of the extended Hom matrix.

    Succeeds iff exactly one factorization (up to column permutation) yields an
    admissible condensed category.
    """
    if spec.dims is None:
        from .errors import ExactDimsRequired

        raise ExactDimsRequired("condensation needs exact dims")
    T = maximal_tannakian(spec) if T is None else _as_tannakian(spec, T)
    check_tannakian(spec, T)
    if T.group is None:
        T = recognize_group(spec, T, group, char_table, label_to_irrep)
    report = orbits_and_stabilizers(spec, T)
    M = extended_hom_matrix(spec, T)
    G = T.group.order
    order = sorted(range(spec.rank), key=lambda i: (-spec.float_dims[i], i))
    raw, truncated = kernels.gram_factorizations(M, order, limit)
    seen = set()
    factorizations = []
    for rows in raw:
        m = np.array(rows, dtype=np.int64).reshape(spec.rank, -1)
        cols = sorted((tuple(m[:, x]) for x in range(m.shape[1])), reverse=True)
        key = tuple(cols)
        if key in seen:
            continue
        seen.add(key)
        factorizations.append(np.array(cols, dtype=np.int64).T.reshape(spec.rank, len(cols)))

    total = sum((d * d for d in spec.dims), ZERO)
    admissible = []
    for m in factorizations:
        if not np.array_equal(m @ m.T, M):
            continue
        dims = _column_dims(spec, m, M)
        if dims is None:
            continue
        if any(_float_dims([d])[0] < 1 - _TOL for d in dims):
            continue
        if any(sum((int(m[eta, x]) * dims[x] for x in range(m.shape[1])), ZERO) != spec.dims[eta] for eta in range(spec.rank)):
            continue
        if sum((d * d for d in dims), ZERO) * G != total:
            continue
        twists = []
        for x in range(m.shape[1]):
            ts = {spec.twists[eta] for eta in np.flatnonzero(m[:, x])}
            if len(ts) != 1:
                break
            twists.append(ts.pop())
        else:
            sols = _solve_condensed_fusion(spec, m, dims, twists)
            for Nc in sols:
                admissible.append((m, dims, twists, Nc))
    if len(admissible) != 1:
        raise AmbiguityError(
            f"{len(admissible)} admissible factorizations of the extended Hom matrix"
            + (" (search truncated)" if truncated else ""),
            len(admissible),
            truncated,
        )
    m, dims, twists, Nc = admissible[0]
    # order columns by first row containing them, then name them after that row
    firsts = [int(np.flatnonzero(m[:, x])[0]) for x in range(m.shape[1])]
    perm = sorted(range(m.shape[1]), key=lambda x: (firsts[x], -int(m[firsts[x], x]), x))
    m = m[:, perm]
    dims = [dims[x] for x in perm]
    twists = [twists[x] for x in perm]
    Nc = Nc[np.ix_(perm, perm, perm)]
    firsts = [firsts[x] for x in perm]
    counts: dict[int, int] = {}
    for f in firsts:
        counts[f] = counts.get(f, 0) + 1
    seen_rep: dict[int, int] = {}
    names = []
    for f in firsts:
        base = spec.names[f]
        if counts[f] == 1:
            names.append(base)
        else:
            k = seen_rep.get(f, 0)
            seen_rep[f] = k + 1
            names.append(f"{base}[{k}]")
    return _assemble(spec, T, m, names, dims, twists, Nc, report, M, "general", len(admissible))


def condense(
    spec: CategorySpec,
    T=None,
    cocycle_overrides: Mapping[str, int] | None = None,
    group: FiniteGroup | None = None,
    char_table: CharacterTable | None = None,
    label_to_irrep: Mapping[str, int] | None = None,
) -> CondensationResult:
    """Pointed route when T is pointed, Gram factorization otherwise."""
    Tc = maximal_tannakian(spec) if T is None else _as_tannakian(spec, T)
    if Tc.pointed and group is None:
        return condense_pointed(spec, Tc, cocycle_overrides)
    return condense_general(spec, Tc, group, char_table, label_to_irrep)


# ---------------------------------------------------------------------------
# verification


@dataclass
class CheckReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    condensed_modular: bool | None = None
    condensed_centre: tuple[str, ...] = ()
    t_is_full_centre: bool | None = None

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
            "condensed_modular": self.condensed_modular,
            "condensed_centre": list(self.condensed_centre),
            "t_is_full_centre": self.t_is_full_centre,
        }


def verify_condensation(result: CondensationResult, original: CategorySpec | None = None, T=None) -> CheckReport:
    """Re-check every invariant of a condensation result; never raises on failure."""
    original = original if original is not None else result.original
    T = result.tannakian if T is None else _as_tannakian(original, T)
    rep = CheckReport()
    cond = result.condensed
    m = result.m
    r, rc = m.shape
    try:
        M = extended_hom_matrix(original, T)
    except Exception as exc:  # report, don't raise
        rep.add("extended-hom", False, str(exc))
        return rep
    rep.add("gram", np.array_equal(M, m @ m.T), "M = m m^T")
    rep.add("dominance", bool(np.all(m.sum(axis=0) > 0)), "every condensed simple occurs in some Phi(eta)")
    if original.dims is not None and cond.dims is not None:
        bad = [
            original.names[eta]
            for eta in range(r)
            if sum((int(m[eta, x]) * cond.dims[x] for x in range(rc)), ZERO) != original.dims[eta]
        ]
        rep.add("dimension", not bad, f"sum_x m d_x = d_eta fails at {bad}" if bad else "sum_x m d_x = d_eta")
        G = sum(d * d for d in T.irrep_dims)
        lhs = cond.global_dim() * G
        rep.add("global-dimension", lhs == original.global_dim(), "sum d_x^2 = sum d_eta^2 / |G|")
    bad_tw = [
        (original.names[eta], cond.names[x])
        for eta, x in np.argwhere(m > 0)
        if cond.twists[x] != original.twists[eta]
    ]
    rep.add("twist-inheritance", not bad_tw, f"mismatch {bad_tw}" if bad_tw else "theta_x = theta_eta")
    lhs = np.einsum("abc,cz->abz", original.N, m)
    rhs = np.einsum("ax,by,xyz->abz", m, m, cond.N)
    rep.add("ring-homomorphism", np.array_equal(lhs, rhs), "Phi(a x b) = Phi(a) x Phi(b)")
    ring_rep = validate_ring(cond.ring)
    rep.add("condensed-ring", ring_rep.ok, "; ".join(v.message for v in ring_rep.violations))
    rib_rep = validate_ribbon(cond)
    rep.add("condensed-ribbon", rib_rep.ok, "; ".join(v.message for v in rib_rep.violations))
    orig_centre = {l.name for l in centre(original)}
    rep.t_is_full_centre = set(T.labels) == orig_centre
    cc = tuple(l.name for l in centre(cond))
    rep.condensed_centre = cc
    trivial = cc == (cond.names[cond.unit],)
    rep.add(
        "centre-criterion",
        trivial == rep.t_is_full_centre,
        "condensed centre trivial iff T is the full centre of the original",
    )
    if cond.dims is not None:
        try:
            rep.condensed_modular = is_modular(cond).modular
            rep.add("modularity-consistency", rep.condensed_modular == trivial, "det(S~) != 0 iff centre trivial")
        except Exception as exc:  # report, don't raise
            rep.add("modularity-consistency", False, str(exc))
    return rep
