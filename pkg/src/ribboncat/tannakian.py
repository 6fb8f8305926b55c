"""Tannakian subcategories, finite groups and H^2(G, U(1)).

The Schur multiplier is computed from the normalized bar complex with
integer coefficients: ``H^2(G, U(1)) = H^3(G, Z)`` is the torsion of the
cokernel of the coboundary on 2-cochains, whose invariant factors are those
of the boundary matrix on 3-chains. The Smith form is taken one prime at a
time over ``Z/p^k``, which also yields explicit cocycle representatives.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DataInconsistencyError,
    GroupMismatchError,
    ResourceLimitError,
    RibbonCatError,
    StructureError,
    UnsupportedError,
)
from .exactnum import ONE, ZERO, CycloNum, as_cyclo, zeta
from .ribbon import CategorySpec, centre

__all__ = [
    "FiniteGroup",
    "CharacterTable",
    "TannakianSubcat",
    "CocycleClass",
    "SchurMultiplier",
    "GroupNeeded",
    "permutation_group",
    "cyclic_group",
    "direct_product",
    "named_group",
    "maximal_tannakian",
    "recognize_group",
    "h2_group",
    "projective_irrep_profile",
]


class GroupNeeded(RibbonCatError):
    """A non-pointed Tannakian subcategory needs a user-supplied group."""


class FiniteGroup:
    """A finite group given by its multiplication table over indices 0..n-1."""

    def __init__(self, table, identity: int | None = None) -> None:
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0]
        if t.ndim != 2 or t.shape != (n, n) or n == 0:
            raise StructureError("multiplication table must be a nonempty square array")
        if t.min() < 0 or t.max() >= n:
            raise StructureError("table entries must be element indices")
        for row in t:
            if len(set(row.tolist())) != n:
                raise StructureError("multiplication table rows must be permutations (cancellation fails)")
        if identity is None:
            ids = [e for e in range(n) if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))]
            if not ids:
                raise StructureError("no identity element in multiplication table")
            identity = ids[0]
        e = int(identity)
        if not (np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))):
            raise StructureError(f"element {e} is not a two-sided identity")
        # associativity: (ab)c == a(bc)
        lhs = t[t, :]  # lhs[a,b,c] = t[t[a,b], c]
        rhs = t[:, t]  # rhs[a,b,c] = t[a, t[b,c]]
        if not np.array_equal(lhs, rhs):
            a, b, c = (int(x) for x in np.argwhere(lhs != rhs)[0])
            raise StructureError(f"multiplication table is not associative at ({a}, {b}, {c})")
        inv = [int(np.flatnonzero(t[a] == e)[0]) for a in range(n)]
        for a in range(n):
            if t[inv[a], a] != e:
                raise StructureError(f"element {a} has no two-sided inverse")
        t.setflags(write=False)
        self.table = t
        self.identity = e
        self.inverse = tuple(inv)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def conjugacy_classes(self) -> list[list[int]]:
        seen: set[int] = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            cls = sorted({self.mul(self.mul(g, x), self.inverse[g]) for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def subgroup(self, elements: Sequence[int]) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Subgroup on ``elements`` re-indexed with the identity first."""
        elems = sorted(set(int(x) for x in elements), key=lambda x: (x != self.identity, x))
        pos = {x: i for i, x in enumerate(elems)}
        try:
            table = [[pos[self.mul(a, b)] for b in elems] for a in elems]
        except KeyError:
            raise StructureError("elements are not closed under multiplication") from None
        return FiniteGroup(table, 0), tuple(elems)

    def key(self) -> tuple:
        return (self.identity, tuple(map(tuple, self.table.tolist())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, abelian={self.is_abelian()})"

    def to_json(self) -> dict:
        return {"order": self.order, "table": self.table.tolist(), "identity": self.identity}

    @classmethod
    def from_json(cls, data: Mapping) -> FiniteGroup:
        table = data["table"]
        if "order" in data and int(data["order"]) != len(table):
            raise StructureError("group order does not match table size")
        return cls(table, data.get("identity"))


def permutation_group(generators: Sequence[Sequence[int]]) -> FiniteGroup:
    """Closure of permutation generators; elements sorted with the identity first."""
    deg = len(generators[0])
    ident = tuple(range(deg))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[g[i]] for i in range(deg))
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    order = sorted(elems)
    pos = {p: i for i, p in enumerate(order)}
    table = [[pos[tuple(a[b[i]] for i in range(deg))] for b in order] for a in order]
    return FiniteGroup(table, pos[ident])


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], 0)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    m = h.order
    table = [
        [g.mul(a1, b1) * m + h.mul(a2, b2) for b1 in range(g.order) for b2 in range(m)]
        for a1 in range(g.order)
        for a2 in range(m)
    ]
    return FiniteGroup(table, g.identity * m + h.identity)


def _quaternion_group() -> FiniteGroup:
    # elements (sign, unit) with unit in 1,i,j,k; index = 4*(sign<0) + unit
    prod = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }  # fmt: skip
    table = []
    for a in range(8):
        row = []
        for b in range(8):
            s, u = prod[(a % 4, b % 4)]
            if (a >= 4) != (b >= 4):
                s = -s
            row.append(u + (4 if s < 0 else 0))
        table.append(row)
    return FiniteGroup(table, 0)


def named_group(name: str) -> FiniteGroup:
    """Small groups by name: Zn, Z2xZ2, S3, D4, Q8."""
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name == "Z2xZ2":
        return direct_product(cyclic_group(2), cyclic_group(2))
    if name == "S3":
        return permutation_group([(1, 0, 2), (1, 2, 0)])
    if name == "D4":
        return permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)])
    if name == "Q8":
        return _quaternion_group()
    raise KeyError(f"unknown group name {name!r}")


@dataclass(frozen=True)
class CharacterTable:
    """User-supplied character table: class sizes and one row per irrep."""

    classes: tuple[int, ...]
    chars: tuple[tuple[CycloNum, ...], ...]

    def __post_init__(self):
        if any(len(row) != len(self.classes) for row in self.chars):
            raise StructureError("every character needs one value per class")

    @property
    def degrees(self) -> tuple[int, ...]:
        out = []
        for row in self.chars:
            d = row[0]
            if not d.is_rational() or d.to_fraction().denominator != 1:
                raise StructureError("character degrees must be integers (identity class first)")
            out.append(int(d.to_fraction()))
        return tuple(out)

    @property
    def group_order(self) -> int:
        return sum(self.classes)

    def product_multiplicity(self, a: int, b: int, c: int) -> CycloNum:
        """Multiplicity of irrep c in a (x) b from the class sums."""
        total = ZERO
        for size, xa, xb, xc in zip(self.classes, self.chars[a], self.chars[b], self.chars[c]):
            total = total + size * (xa * xb * xc.conjugate())
        return total * CycloNum.rational(1) / self.group_order

    def to_json(self) -> dict:
        from .exchange import cyclo_to_json

        return {"classes": list(self.classes), "chars": [[cyclo_to_json(x) for x in row] for row in self.chars]}

    @classmethod
    def from_json(cls, data: Mapping) -> CharacterTable:
        from .exchange import cyclo_from_json

        return cls(
            tuple(int(s) for s in data["classes"]),
            tuple(tuple(cyclo_from_json(x) for x in row) for row in data["chars"]),
        )


@dataclass(frozen=True)
class TannakianSubcat:
    labels: tuple[str, ...]
    indices: tuple[int, ...]
    irrep_dims: tuple[int, ...]
    group: FiniteGroup | None = None
    label_to_irrep: Mapping[str, int] | None = None
    fermions: tuple[str, ...] = ()

    @property
    def pointed(self) -> bool:
        return all(d == 1 for d in self.irrep_dims)

    @property
    def status(self) -> str:
        if self.group is not None:
            return "resolved"
        return "pointed" if self.pointed else "needs-user-group"

    def with_group(self, group: FiniteGroup, label_to_irrep=None) -> TannakianSubcat:
        return TannakianSubcat(self.labels, self.indices, self.irrep_dims, group, label_to_irrep, self.fermions)


def _label_dims_int(spec: CategorySpec, idx: Sequence[int]) -> tuple[int, ...]:
    out = []
    for a in idx:
        if spec.dims is not None:
            d = spec.dims[a]
            if not d.is_rational() or d.to_fraction().denominator != 1:
                raise DataInconsistencyError(f"Tannakian label {spec.names[a]} has non-integer dimension")
            out.append(int(d.to_fraction()))
        else:
            f = spec.float_dims[a]
            if abs(f - round(f)) > 1e-9:
                raise DataInconsistencyError(f"Tannakian label {spec.names[a]} has non-integer dimension")
            out.append(int(round(f)))
    return tuple(out)


def tannakian_from_labels(spec: CategorySpec, labels: Sequence) -> TannakianSubcat:
    idx = sorted({spec.index(x) for x in labels} | {spec.unit})
    return TannakianSubcat(
        tuple(spec.names[i] for i in idx), tuple(idx), _label_dims_int(spec, idx)
    )


def maximal_tannakian(spec: CategorySpec) -> TannakianSubcat:
    """Bosonic part of the centre (fermionic degenerate labels are excluded and flagged)."""
    cen = [l.index for l in centre(spec)]
    fermions = tuple(spec.names[a] for a in cen if spec.twists[a] != ONE)
    keep = [a for a in cen if spec.twists[a] == ONE]
    changed = True
    while changed:
        changed = False
        inside = set(keep)
        for a in list(keep):
            if spec.ring.dual[a] not in inside or any(
                c not in inside for b in keep for c in spec.channels(a, b)
            ):
                keep.remove(a)
                changed = True
                break
    return TannakianSubcat(
        tuple(spec.names[a] for a in keep), tuple(keep), _label_dims_int(spec, keep), fermions=fermions
    )


def recognize_group(
    spec: CategorySpec,
    T: TannakianSubcat,
    group: FiniteGroup | None = None,
    char_table: CharacterTable | None = None,
    label_to_irrep: Mapping[str, int] | None = None,
) -> TannakianSubcat:
    """Resolve the group of T.

    Pointed T: the labels themselves form an abelian group under fusion, with
    group element i being T's i-th label. Otherwise a user group is required;
    its character ring is matched against the fusion rules of T.
    """
    if T.pointed and group is None:
        pos = {a: i for i, a in enumerate(T.indices)}
        table = []
        for a in T.indices:
            row = []
            for b in T.indices:
                ch = spec.channels(a, b)
                if len(ch) != 1 or spec.N[a, b, ch[0]] != 1 or ch[0] not in pos:
                    raise DataInconsistencyError(
                        f"invertible labels {spec.names[a]}, {spec.names[b]} do not fuse to a single label of T"
                    )
                row.append(pos[ch[0]])
            table.append(row)
        g = FiniteGroup(table, pos[spec.unit])
        if not g.is_abelian():
            raise DataInconsistencyError("braided pointed subcategory with non-abelian fusion")
        return T.with_group(g, {name: i for i, name in enumerate(T.labels)})
    if group is None:
        raise GroupNeeded(
            f"non-pointed Tannakian subcategory {list(T.labels)} (dims {list(T.irrep_dims)}): supply a group"
        )
    total = sum(d * d for d in T.irrep_dims)
    if total != group.order:
        raise GroupMismatchError(f"sum of squared dims is {total} but |G| = {group.order}", None)
    if group.is_abelian() and not T.pointed:
        bad = next(T.labels[i] for i, d in enumerate(T.irrep_dims) if d != 1)
        raise GroupMismatchError(
            f"abelian group of order {group.order} has only 1-dim irreps, but {bad} has dimension "
            f"{T.irrep_dims[T.labels.index(bad)]}",
            (bad,),
        )
    if len(group.conjugacy_classes()) != len(T.labels):
        raise GroupMismatchError(
            f"group has {len(group.conjugacy_classes())} conjugacy classes but T has {len(T.labels)} labels", None
        )
    if char_table is None:
        if T.pointed:
            return T.with_group(group, label_to_irrep)
        raise GroupNeeded("a character table is required to match a non-abelian group")
    if char_table.group_order != group.order:
        raise GroupMismatchError("character table class sizes do not sum to |G|", None)
    if sorted(char_table.classes) != sorted(len(c) for c in group.conjugacy_classes()):
        raise GroupMismatchError("character table class sizes do not match the group's conjugacy classes", None)
    degrees = char_table.degrees
    if label_to_irrep is None:
        label_to_irrep = _match_irreps(spec, T, char_table, degrees)
    mapping = {name: int(label_to_irrep[name]) for name in T.labels}
    _check_character_ring(spec, T, char_table, mapping)
    return T.with_group(group, mapping)


def _match_irreps(spec, T, table, degrees) -> dict[str, int]:
    """First degree-preserving bijection (lexicographic) whose character products match fusion."""
    k = len(T.labels)
    if len(degrees) != k:
        raise GroupMismatchError(f"character table has {len(degrees)} irreps, T has {k} labels", None)
    first_failure = None
    for perm in itertools.permutations(range(k)):
        if any(degrees[perm[i]] != T.irrep_dims[i] for i in range(k)):
            continue
        mapping = {T.labels[i]: perm[i] for i in range(k)}
        try:
            _check_character_ring(spec, T, table, mapping)
        except GroupMismatchError as exc:
            first_failure = first_failure or exc
            continue
        return mapping
    if first_failure is not None:
        raise first_failure
    raise GroupMismatchError("no irrep of matching dimension for some label", None)


def _check_character_ring(spec, T, table, mapping) -> None:
    for x, y, z in itertools.product(range(len(T.labels)), repeat=3):
        a, b, c = T.indices[x], T.indices[y], T.indices[z]
        want = int(spec.N[a, b, c])
        got = table.product_multiplicity(mapping[T.labels[x]], mapping[T.labels[y]], mapping[T.labels[z]])
        if got != want:
            raise GroupMismatchError(
                f"N[{spec.names[a]}][{spec.names[b]}][{spec.names[c]}] = {want} but character product gives {got!r}",
                (spec.names[a], spec.names[b], spec.names[c]),
            )


# ---------------------------------------------------------------------------
# Group cohomology


@dataclass(frozen=True)
class CocycleClass:
    """Normalized U(1)-valued 2-cocycle c(g,h) = zeta_modulus^exponents[g][h]."""

    group: FiniteGroup
    exponents: tuple[tuple[int, ...], ...]
    modulus: int
    class_id: int = 0

    def value(self, g: int, h: int) -> CycloNum:
        return zeta(self.modulus, self.exponents[g][h])

    def values(self) -> list[list[CycloNum]]:
        n = self.group.order
        return [[self.value(g, h) for h in range(n)] for g in range(n)]

    def is_cocycle(self) -> bool:
        """Exact check of c(g,h) c(gh,k) = c(g,hk) c(h,k) in CycloNum arithmetic."""
        G, n = self.group, self.group.order
        vals = self.values()
        for g in range(n):
            for h in range(n):
                gh = G.mul(g, h)
                for k in range(n):
                    if vals[g][h] * vals[gh][k] != vals[g][G.mul(h, k)] * vals[h][k]:
                        return False
        return True

    def is_normalized(self) -> bool:
        e = self.group.identity
        return all(self.exponents[e][g] == 0 and self.exponents[g][e] == 0 for g in range(self.group.order))

    def commutator_phase(self, g: int, h: int) -> CycloNum:
        """c(g,h)/c(h,g); a class invariant on commuting pairs."""
        return zeta(self.modulus, self.exponents[g][h] - self.exponents[h][g])

    def to_json(self) -> dict:
        return {"class_id": self.class_id, "modulus": self.modulus, "exponents": [list(r) for r in self.exponents]}


@dataclass(frozen=True)
class SchurMultiplier:
    """H^2(G, U(1)) as a product of cyclic groups with one cocycle per generator."""

    group: FiniteGroup
    invariants: tuple[int, ...]
    generators: tuple[CocycleClass, ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def is_trivial(self) -> bool:
        return not self.invariants

    def coordinates(self, class_id: int) -> tuple[int, ...]:
        out = []
        for d in self.invariants:
            out.append(class_id % d)
            class_id //= d
        return tuple(out)

    def cocycle(self, class_id: int) -> CocycleClass:
        if not 0 <= class_id < self.order:
            raise ValueError(f"class id {class_id} outside H^2 of order {self.order}")
        n = self.group.order
        mod = n
        exps = [[0] * n for _ in range(n)]
        for coef, gen in zip(self.coordinates(class_id), self.generators):
            scale = mod // gen.modulus
            for g in range(n):
                for h in range(n):
                    exps[g][h] = (exps[g][h] + coef * gen.exponents[g][h] * scale) % mod
        return CocycleClass(self.group, tuple(map(tuple, exps)), mod, class_id)

    def classes(self) -> list[CocycleClass]:
        return [self.cocycle(i) for i in range(self.order)]

    def to_json(self) -> dict:
        return {
            "invariants": list(self.invariants),
            "order": self.order,
            "generators": [g.to_json() for g in self.generators],
        }


def _boundary3(G: FiniteGroup) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Normalized bar boundary C_3 -> C_2 (rows: pairs, cols: triples), trivial action."""
    nonid = [g for g in range(G.order) if g != G.identity]
    pairs = [(g, h) for g in nonid for h in nonid]
    pos = {p: i for i, p in enumerate(pairs)}
    triples = [(g, h, k) for g in nonid for h in nonid for k in nonid]
    A = np.zeros((len(pairs), len(triples)), dtype=np.int64)
    e = G.identity
    for j, (g, h, k) in enumerate(triples):
        gh, hk = G.mul(g, h), G.mul(h, k)
        for sign, p in ((1, (h, k)), (-1, (gh, k)), (1, (g, hk)), (-1, (g, h))):
            if p[0] != e and p[1] != e:
                A[pos[p], j] += sign
    return A, pairs


def _local_smith(A: np.ndarray, p: int, k: int):
    """Smith form of A over Z/p^k tracking row operations.

    Returns (valuations of the pivots, P) where row t of P is the row
    combination that produced pivot t.
    """
    pk = p**k
    val = np.full(pk, k, dtype=np.int64)
    for x in range(1, pk):
        v, y = 0, x
        while y % p == 0:
            y //= p
            v += 1
        val[x] = v
    A = np.mod(A, pk).astype(np.int64)
    m, n = A.shape
    P = np.eye(m, dtype=np.int64)
    vals = []
    for t in range(min(m, n)):
        # A unit is always a pivot of minimal valuation; look for one row by row.
        i = j = -1
        for r in range(t, m):
            hits = np.flatnonzero(A[r, t:] % p)
            if hits.size:
                i, j, v = r, t + int(hits[0]), 0
                break
        if i < 0:
            sub = val[A[t:, t:]]
            flat = int(np.argmin(sub))
            i, j = divmod(flat, sub.shape[1])
            v = int(sub[i, j])
            if v >= k:
                break
            i += t
            j += t
        if i != t:
            A[[t, i]] = A[[i, t]]
            P[[t, i]] = P[[i, t]]
        if j != t:
            A[:, [t, j]] = A[:, [j, t]]
        unit = int(A[t, t]) // p**v
        uinv = pow(unit, -1, pk)
        A[t, t:] = (A[t, t:] * uinv) % pk
        P[t] = (P[t] * uinv) % pk
        rows = t + 1 + np.flatnonzero(A[t + 1 :, t])
        if rows.size:
            factors = A[rows, t] // p**v
            A[np.ix_(rows, np.arange(t, n))] = (A[rows, t:] - np.outer(factors, A[t, t:])) % pk
            P[rows] = (P[rows] - np.outer(factors, P[t])) % pk
        vals.append(v)
    return vals, P


H2_ORDER_BOUND = 16


def h2_group(G: FiniteGroup, bound: int = H2_ORDER_BOUND) -> SchurMultiplier:
    """Schur multiplier H^2(G, U(1)) with explicit normalized representative cocycles."""
    if G.order > bound:
        raise ResourceLimitError(f"|G| = {G.order} exceeds the configured bound {bound}")
    return _h2_cached(G, bound)


@lru_cache(maxsize=64)
def _h2_cached(G: FiniteGroup, bound: int) -> SchurMultiplier:
    n = G.order
    if n == 1:
        return SchurMultiplier(G, (), ())
    A, pairs = _boundary3(G)
    # p-primary parts: cyclic factors p^v with a cochain f = P[t] / p^v (mod 1)
    primary: dict[int, list[tuple[int, np.ndarray]]] = {}
    from sympy import factorint

    for p, e in factorint(n).items():
        k = e + 2
        vals, P = _local_smith(A, p, k)
        parts = [(v, P[t]) for t, v in enumerate(vals) if v > 0]
        parts.sort(key=lambda item: -item[0])
        primary[int(p)] = parts
    width = max((len(v) for v in primary.values()), default=0)
    invariants = []
    generators = []
    for i in range(width):
        order = 1
        expo = np.zeros(len(pairs), dtype=np.int64)
        for p, parts in primary.items():
            if i < len(parts):
                v, row = parts[i]
                q = p**v
                order *= q
                expo = (expo + (row % q) * (n // q)) % n
        invariants.append(order)
        table = [[0] * n for _ in range(n)]
        for (g, h), x in zip(pairs, expo):
            table[g][h] = int(x)
        generators.append(CocycleClass(G, tuple(map(tuple, table)), n, 0))
    # invariant factor order: d_1 | d_2 | ...
    pairs_sorted = sorted(zip(invariants, generators), key=lambda x: x[0])
    invariants = tuple(d for d, _ in pairs_sorted)
    gens = []
    for i, (d, gen) in enumerate(pairs_sorted):
        cid = 1
        for dd in invariants[:i]:
            cid *= dd
        gens.append(CocycleClass(G, gen.exponents, gen.modulus, cid))
    return SchurMultiplier(G, invariants, tuple(gens))


def projective_irrep_profile(H: FiniteGroup, c: CocycleClass) -> list[int]:
    """Dimensions of the c-projective irreps of an abelian group H."""
    if not H.is_abelian():
        raise UnsupportedError("projective irrep profile is implemented for abelian groups only")
    n = H.order
    radical = [
        h for h in range(n) if all((c.exponents[h][k] - c.exponents[k][h]) % c.modulus == 0 for k in range(n))
    ]
    z = len(radical)
    if n % z:
        raise DataInconsistencyError("radical order does not divide |H|")
    d = math.isqrt(n // z)
    if d * d != n // z:
        raise DataInconsistencyError(f"index [H : Z(c)] = {n // z} is not a perfect square")
    return [d] * z
