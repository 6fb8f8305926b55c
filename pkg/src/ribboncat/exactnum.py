"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A :class:`CycloNum` stores integer coordinates over the power basis
``1, z, ..., z^(phi(n)-1)`` of ``Q(zeta_n)`` (reduced modulo the n-th
cyclotomic polynomial) together with one positive common denominator.
Operands of different orders are embedded into ``Q(zeta_lcm)``.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "CycloNum",
    "root_of_unity",
    "zeta",
    "to_float",
    "as_cyclo",
    "determinant",
    "ZERO",
    "ONE",
]


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first: (x^n - 1) / prod_{d | n, d < n} Phi_d."""
    # exact integer long division by monic divisors; cheaper than importing a CAS at startup
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        div = _cyclotomic_poly(d)
        k = len(div) - 1
        quot = [0] * (len(num) - k)
        for i in range(len(num) - 1, k - 1, -1):
            c = num[i]
            if c:
                quot[i - k] = c
                for j in range(k + 1):
                    num[i - k + j] -= c * div[j]
        num = quot
    return tuple(num)


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    return len(_cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the reduced coordinate vector of z^e for 0 <= e < n."""
    phi = _totient(n)
    poly = _cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * poly[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _embed_rows(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Images in Q(zeta_m) of the power basis of Q(zeta_n), for n | m."""
    step = m // n
    table = _power_table(m)
    return tuple(table[(j * step) % m] for j in range(_totient(n)))


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


def _reduce_exponents(n: int, coeffs: Sequence[int]) -> list[int]:
    """Reduce a polynomial in z (any length, exponents taken mod n)."""
    phi = _totient(n)
    table = _power_table(n)
    out = [0] * phi
    for e, c in enumerate(coeffs):
        if not c:
            continue
        e %= n
        if e < phi:
            out[e] += c
        else:
            row = table[e]
            for i in range(phi):
                r = row[i]
                if r:
                    out[i] += c * r
    return out


class CycloNum:
    """An element of the cyclotomic field Q(zeta_order). Immutable."""

    __slots__ = ("order", "num", "den", "_canon")

    def __init__(self, order: int, num: Sequence[int], den: int = 1) -> None:
        if order < 1:
            raise ValueError("order must be positive")
        if len(num) != _totient(order):
            raise ValueError(
                f"expected {_totient(order)} coordinates for order {order}, got {len(num)}"
            )
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        self.order = order
        self.num, self.den = _normalize([int(c) for c in num], int(den))
        self._canon = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> CycloNum:
        obj = object.__new__(cls)
        obj.order = order
        obj.num = num
        obj.den = den
        obj._canon = None
        return obj

    @classmethod
    def rational(cls, q: int | Fraction) -> CycloNum:
        q = Fraction(q)
        return cls._raw(1, (q.numerator,), q.denominator)

    @classmethod
    def from_coeffs(cls, order: int, coeffs: Iterable[int | Fraction]) -> CycloNum:
        """Build from rational coordinates over the reduced power basis."""
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        return cls(order, [int(f * den) for f in fr], den)

    @classmethod
    def from_powers(cls, order: int, coeffs: Sequence[int | Fraction]) -> CycloNum:
        """Build sum_j coeffs[j] * zeta_order^j for an arbitrary-length list."""
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        ints = [int(f * den) for f in fr]
        return cls(order, _reduce_exponents(order, ints), den)

    # -- coordinates ------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def embed(self, m: int) -> CycloNum:
        """Same number, expressed in Q(zeta_m); requires order | m."""
        n = self.order
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot embed order {n} into order {m}")
        rows = _embed_rows(n, m)
        out = [0] * _totient(m)
        for c, row in zip(self.num, rows):
            if c:
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return CycloNum._raw(m, tuple(out), self.den)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def galois(self, k: int) -> CycloNum:
        """Image under the automorphism zeta_n -> zeta_n^k (gcd(k, n) = 1)."""
        n = self.order
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        spread = [0] * n
        for j, c in enumerate(self.num):
            if c:
                spread[(j * k) % n] += c
        return CycloNum._raw(n, tuple(_reduce_exponents(n, spread)), self.den)

    def conjugate(self) -> CycloNum:
        return self.galois(-1 % self.order) if self.order > 2 else self

    def canonical(self) -> CycloNum:
        """The same number written in the smallest cyclotomic field containing it."""
        if self._canon is not None:
            return self._canon
        result = self
        if self.is_rational():
            result = CycloNum._raw(1, (self.num[0],), self.den)
        else:
            n = self.order
            for d in _divisors(n):
                if d == n:
                    break
                if all(self.galois(k) == self for k in range(1, n, d) if math.gcd(k, n) == 1):
                    result = _descend(self, d)
                    break
        self._canon = result
        return result

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> CycloNum | None:
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Rational)):
            return CycloNum.rational(Fraction(other))
        return None

    @staticmethod
    def _common(a: CycloNum, b: CycloNum) -> tuple[CycloNum, CycloNum]:
        if a.order == b.order:
            return a, b
        if a.order == 1:
            return a.embed(b.order), b
        if b.order == 1:
            return a, b.embed(a.order)
        m = math.lcm(a.order, b.order)
        return a.embed(m), b.embed(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            den = a.den
        else:
            num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
            den = a.den * b.den
        return CycloNum._raw(a.order, *_normalize(num, den))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum._raw(self.order, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.order == 1:
            c = other.num[0]
            return CycloNum._raw(self.order, *_normalize([x * c for x in self.num], self.den * other.den))
        if self.order == 1:
            return other * self
        a, b = self._common(self, other)
        la, lb = len(a.num), len(b.num)
        conv = [0] * (la + lb - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        num = _reduce_exponents(a.order, conv)
        return CycloNum._raw(a.order, *_normalize(num, a.den * b.den))

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        n = self.order
        prod = self
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                prod = prod * self.galois(k)
        return prod.to_fraction()

    def inverse(self) -> CycloNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero CycloNum")
        if self.order == 1:
            return CycloNum.rational(1 / Fraction(self.num[0], self.den))
        n = self.order
        cofactor = CycloNum.rational(1)
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                cofactor = cofactor * self.galois(k)
        total = (self * cofactor).to_fraction()
        return cofactor * (1 / total)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> CycloNum:
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        return a.den == b.den and a.num == b.num

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.order, c.num, c.den))

    # -- display ----------------------------------------------------------

    def __complex__(self) -> complex:
        return to_float(self)

    def __repr__(self) -> str:
        c = self.canonical()
        if c.order == 1:
            return f"CycloNum({Fraction(c.num[0], c.den)})"
        terms = []
        for j, q in enumerate(c.coeffs):
            if q:
                terms.append(f"{q}*z{c.order}^{j}" if j else f"{q}")
        return "CycloNum(" + " + ".join(terms) + ")"


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _descent_solver(d: int, n: int):
    """Pivot rows and inverse block to read Q(zeta_d) coordinates off Q(zeta_n) ones."""
    rows = _embed_rows(d, n)  # phi(d) vectors of length phi(n)
    k, m = len(rows), _totient(n)
    # Find k linearly independent coordinate positions, then invert that k x k block.
    mat = [[Fraction(rows[j][i]) for j in range(k)] for i in range(m)]
    pivots: list[int] = []
    work: list[list[Fraction]] = []
    for i in range(m):
        v = list(mat[i])
        for p, w in zip(pivots, work):
            lead = next(t for t in range(k) if w[t] != 0)
            if v[lead]:
                f = v[lead] / w[lead]
                v = [a - f * b for a, b in zip(v, w)]
        if any(v):
            pivots.append(i)
            work.append(v)
        if len(pivots) == k:
            break
    block = [mat[i] for i in pivots]
    return tuple(pivots), _invert(block)


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _descend(x: CycloNum, d: int) -> CycloNum:
    pivots, inv = _descent_solver(d, x.order)
    rhs = [Fraction(x.num[i], x.den) for i in pivots]
    coords = [sum(row[j] * rhs[j] for j in range(len(rhs))) for row in inv]
    return CycloNum.from_coeffs(d, coords)


def root_of_unity(n: int, k: int = 1) -> CycloNum:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("n must be positive")
    spread = [0] * n
    spread[k % n] = 1
    return CycloNum._raw(n, tuple(_reduce_exponents(n, spread)), 1).canonical()


zeta = root_of_unity


def to_float(a: CycloNum) -> complex:
    """Evaluate under zeta_n -> exp(2 pi i / n). Display and diagnostics only."""
    if isinstance(a, (int, Rational)):
        return complex(float(a))
    n = a.order
    total = 0j
    for j, c in enumerate(a.num):
        if c:
            total += c * cmath.exp(2j * math.pi * j / n)
    return total / a.den


def as_cyclo(x) -> CycloNum:
    if isinstance(x, CycloNum):
        return x
    return CycloNum.rational(Fraction(x))


ZERO = CycloNum.rational(0)
ONE = CycloNum.rational(1)


def determinant(matrix: Sequence[Sequence[CycloNum]]) -> CycloNum:
    """Exact determinant by Gaussian elimination over the cyclotomic field."""
    a = [[as_cyclo(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        pinv = p.inverse()
        for r in range(col + 1, n):
            if a[r][col].is_zero():
                continue
            f = a[r][col] * pinv
            a[r] = [x if j <= col else x - f * y for j, (x, y) in enumerate(zip(a[r], a[col]))]
    return det
