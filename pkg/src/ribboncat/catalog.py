"""Built-in exact category data and the Deligne product."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UnknownLabelError
from .exactnum import ONE, CycloNum, zeta
from .fusion import FusionRingData, regular_ring
from .ribbon import CategorySpec

__all__ = ["CatalogEntry", "CATALOG_NAMES", "load_named", "entry", "deligne_product", "group_hint"]

SQRT2 = zeta(8, 1) + zeta(8, 7)
PHI = 1 + zeta(5, 1) + zeta(5, 4)  # golden ratio, root of x^2 = x + 1

CATALOG_NAMES = (
    "trivial",
    "rep_z2",
    "rep_z3",
    "rep_z2z2",
    "rep_s3",
    "rep_d4",
    "toric_code",
    "ising",
    "fibonacci",
    "semion",
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: CategorySpec
    provenance: str


def _z2z2_table():
    # elements 1, a, b, ab encoded as bit pairs 0, 1, 2, 3
    return [[x ^ y for y in range(4)] for x in range(4)]


def _cyclic_table(n):
    return [[(x + y) % n for y in range(n)] for x in range(n)]


def _symmetric(ring: FusionRingData, dims) -> CategorySpec:
    return CategorySpec(ring, [ONE] * ring.rank, dims)


def _build(name: str) -> CatalogEntry:
    if name == "trivial":
        ring = FusionRingData(["1"], 0, [0], np.ones((1, 1, 1), dtype=np.int64))
        return CatalogEntry(name, _symmetric(ring, [1]), "Vec: one simple object")
    if name == "rep_z2":
        ring = regular_ring(["1", "eps"], _cyclic_table(2))
        return CatalogEntry(name, _symmetric(ring, [1, 1]), "Rep(Z2): characters of Z2, all twists 1")
    if name == "rep_z3":
        ring = regular_ring(["1", "w", "w2"], _cyclic_table(3))
        return CatalogEntry(name, _symmetric(ring, [1, 1, 1]), "Rep(Z3): characters of Z3, all twists 1")
    if name == "rep_z2z2":
        ring = regular_ring(["1", "a", "b", "ab"], _z2z2_table())
        return CatalogEntry(name, _symmetric(ring, [1] * 4), "Rep(Z2 x Z2): characters, all twists 1")
    if name == "rep_s3":
        N = np.zeros((3, 3, 3), dtype=np.int64)
        one, sgn, std = 0, 1, 2
        for x in range(3):
            N[one, x, x] = N[x, one, x] = 1
        N[sgn, sgn, one] = 1
        N[sgn, std, std] = N[std, sgn, std] = 1
        N[std, std, one] = N[std, std, sgn] = N[std, std, std] = 1
        ring = FusionRingData(["1", "sgn", "std"], 0, [0, 1, 2], N)
        return CatalogEntry(name, _symmetric(ring, [1, 1, 2]), "Rep(S3): products of the S3 character table")
    if name == "rep_d4":
        N = np.zeros((5, 5, 5), dtype=np.int64)
        t = _z2z2_table()
        for x in range(4):
            for y in range(4):
                N[x, y, t[x][y]] = 1
            N[x, 4, 4] = N[4, x, 4] = 1
            N[4, 4, x] = 1
        ring = FusionRingData(["1", "a", "b", "ab", "sigma"], 0, [0, 1, 2, 3, 4], N)
        return CatalogEntry(
            name,
            _symmetric(ring, [1, 1, 1, 1, 2]),
            "Rep(D4): four 1-dim characters trivial on the commutator subgroup, one 2-dim irrep",
        )
    if name == "toric_code":
        ring = regular_ring(["1", "e", "m", "f"], _z2z2_table())
        return CatalogEntry(
            name,
            CategorySpec(ring, [ONE, ONE, ONE, -ONE], [1] * 4),
            "Kitaev Z2 toric code: Z2 x Z2 fusion, fermion f = e x m",
        )
    if name == "ising":
        N = np.zeros((3, 3, 3), dtype=np.int64)
        one, psi, sig = 0, 1, 2
        for x in range(3):
            N[one, x, x] = N[x, one, x] = 1
        N[psi, psi, one] = 1
        N[psi, sig, sig] = N[sig, psi, sig] = 1
        N[sig, sig, one] = N[sig, sig, psi] = 1
        ring = FusionRingData(["1", "psi", "sigma"], 0, [0, 1, 2], N)
        return CatalogEntry(
            name,
            CategorySpec(ring, [ONE, -ONE, zeta(16, 1)], [1, 1, SQRT2]),
            "Ising: theta_sigma fixed to zeta_16 (one of the eight Ising-type choices)",
        )
    if name == "fibonacci":
        N = np.zeros((2, 2, 2), dtype=np.int64)
        N[0, 0, 0] = N[0, 1, 1] = N[1, 0, 1] = 1
        N[1, 1, 0] = N[1, 1, 1] = 1
        ring = FusionRingData(["1", "tau"], 0, [0, 1], N)
        return CatalogEntry(
            name,
            CategorySpec(ring, [ONE, zeta(5, 2)], [1, PHI]),
            "Fibonacci: tau x tau = 1 + tau, theta_tau = zeta_5^2, d_tau = golden ratio",
        )
    if name == "semion":
        ring = regular_ring(["1", "s"], _cyclic_table(2))
        return CatalogEntry(name, CategorySpec(ring, [ONE, zeta(4, 1)], [1, 1]), "Semion: theta_s = i")
    raise UnknownLabelError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}")


_CACHE: dict[str, CatalogEntry] = {}


def entry(name: str) -> CatalogEntry:
    if name not in _CACHE:
        _CACHE[name] = _build(name)
    return _CACHE[name]


def load_named(name: str) -> CategorySpec:
    return entry(name).spec


def deligne_product(a: CategorySpec, b: CategorySpec) -> CategorySpec:
    """Componentwise product; labels are named ``(x,y)`` with index ``i*rank(b)+j``."""
    ra, rb = a.rank, b.rank
    names = [f"({x},{y})" for x in a.names for y in b.names]
    N = np.einsum("ace,bdf->abcdef", a.N, b.N).reshape(ra * rb, ra * rb, ra * rb)
    dual = [a.ring.dual[i] * rb + b.ring.dual[j] for i in range(ra) for j in range(rb)]
    unit = a.unit * rb + b.unit
    ring = FusionRingData(names, unit, dual, N)
    twists = [ta * tb for ta in a.twists for tb in b.twists]
    dims = None
    if a.dims is not None and b.dims is not None:
        dims = [da * db for da in a.dims for db in b.dims]
    return CategorySpec(ring, twists, dims)


def group_hint(name: str):
    """Group and character table for the non-pointed symmetric entries.

    Returns ``(FiniteGroup, CharacterTable)`` for rep_s3 and rep_d4, whose
    character rows are listed in label order, else ``None``.
    """
    from .tannakian import CharacterTable, named_group

    if name == "rep_s3":
        # classes: identity, transpositions, 3-cycles
        rows = [(1, 1, 1), (1, -1, 1), (2, 0, -1)]
        table = CharacterTable((1, 3, 2), tuple(tuple(CycloNum.rational(v) for v in r) for r in rows))
        return named_group("S3"), table
    if name == "rep_d4":
        # classes: e, r^2, {r, r^3}, {s, s r^2}, {s r, s r^3}
        rows = [(1, 1, 1, 1, 1), (1, 1, 1, -1, -1), (1, 1, -1, 1, -1), (1, 1, -1, -1, 1), (2, -2, 0, 0, 0)]
        table = CharacterTable((1, 1, 2, 2, 2), tuple(tuple(CycloNum.rational(v) for v in r) for r in rows))
        return named_group("D4"), table
    return None
