"""Exact rational arithmetic, dense linear algebra, Pfaffians and Sturm counting.

Scalars are :class:`fractions.Fraction`; matrices are lists of rows.  Nothing in
this module ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

Rational = Fraction
Matrix = list  # list[list[Fraction]]

INF = math.inf


# ---------------------------------------------------------------------------
# scalars

def rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def ratstr(x) -> str:
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational string")
    num, sep, den = s.partition("/")
    try:
        if sep:
            d = int(den)
            if d == 0:
                raise ValueError(f"zero denominator in {s!r}")
            return Fraction(int(num), d)
        return Fraction(int(num))
    except ValueError as exc:
        raise ValueError(f"malformed rational {s!r}") from exc


def binom(a, b: int) -> Fraction:
    """Generalized binomial coefficient; ``a`` may be any rational, ``b < 0`` gives 0."""
    if b < 0:
        return Fraction(0)
    a = rat(a)
    if a.denominator == 1 and a >= 0:
        n = a.numerator
        return Fraction(math.comb(n, b)) if b <= n else Fraction(0)
    num = Fraction(1)
    for t in range(b):
        num *= a - t
    return num / math.factorial(b)


# ---------------------------------------------------------------------------
# matrices

def matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[rat(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt]
            for row in a]


def matvec(a: Matrix, v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def matadd(a: Matrix, b: Matrix, s=1) -> Matrix:
    s = rat(s)
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, s) -> Matrix:
    s = rat(s)
    return [[s * x for x in row] for row in a]


def is_zero_matrix(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def is_skew(m: Matrix) -> bool:
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    return all(m[i][j] == -m[j][i] for i in range(n) for j in range(i, n))


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    """Clear denominators and strip the content of a row."""
    den = reduce(math.lcm, (x.denominator for x in row if x), 1)
    ints = [int(x * den) for x in row]
    g = reduce(math.gcd, ints, 0)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _echelon(m: Matrix, ncols: int) -> dict[int, list[int]]:
    """Fraction-free forward elimination.

    Returns ``{pivot_column: primitive integer row}``.  Rows are absorbed one at
    a time in index order and reduced against existing pivots from the left, so
    the pivot chosen for a column is the lowest-index row that still has a
    nonzero there.
    """
    pivots: dict[int, list[int]] = {}
    for frow in m:
        if len(frow) != ncols:
            raise ValueError("ragged matrix")
        row = _integer_row(frow)
        c = 0
        while True:
            while c < ncols and row[c] == 0:
                c += 1
            if c == ncols:
                break
            prow = pivots.get(c)
            if prow is None:
                if row[c] < 0:
                    row = [-x for x in row]
                pivots[c] = row
                break
            p, a = prow[c], row[c]
            g = math.gcd(p, a)
            p, a = p // g, a // g
            row = [p * x - a * y if y else p * x for x, y in zip(row, prow)]
            g = reduce(math.gcd, row, 0)
            if g > 1:
                row = [x // g for x in row]
            c += 1
    return pivots


def rref(m: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    if ncols is None:
        ncols = shape(m)[1]
    piv = _echelon(m, ncols)
    cols = sorted(piv)
    rows = []
    for c in cols:
        lead = piv[c][c]
        rows.append([Fraction(x, lead) for x in piv[c]])
    for idx in range(len(cols) - 1, -1, -1):
        c = cols[idx]
        for jdx in range(idx):
            f = rows[jdx][c]
            if f:
                rows[jdx] = [x - f * y for x, y in zip(rows[jdx], rows[idx])]
    return rows, cols


def rank(m: Matrix, ncols: int | None = None) -> int:
    if ncols is None:
        ncols = shape(m)[1]
    return len(_echelon(m, ncols))


def nullspace(m: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : m v = 0}`` read off the reduced echelon form.

    One vector per free column, with a 1 in that column; ``ncols`` must be given
    when ``m`` has no rows.
    """
    if ncols is None:
        if not m:
            raise ValueError("ncols required for a matrix without rows")
        ncols = len(m[0])
    rows, cols = rref(m, ncols)
    pivset = set(cols)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(rows, cols):
            v[c] = -row[f]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs: Sequence) -> list[Fraction] | None:
    """One particular solution of ``m x = rhs`` (free variables zero), or None."""
    ncols = shape(m)[1]
    aug = [list(row) + [rat(b)] for row, b in zip(m, rhs)]
    rows, cols = rref(aug, ncols + 1)
    if cols and cols[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(rows, cols):
        x[c] = row[ncols]
    return x


def det(m: Matrix) -> Fraction:
    """Bareiss fraction-free determinant."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    den = 1
    a = []
    for row in m:
        d = reduce(math.lcm, (x.denominator for x in row if x), 1)
        den *= d
        a.append([int(x * d) for x in row])
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (pk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return Fraction(sign * a[n - 1][n - 1], den)


def is_independent(vectors: Sequence[Sequence]) -> bool:
    if not vectors:
        return True
    return rank([list(map(rat, v)) for v in vectors]) == len(vectors)


# ---------------------------------------------------------------------------
# Pfaffians

_EXPANSION_LIMIT = 12


def pfaffian(m: Matrix) -> Fraction:
    n = len(m)
    if not is_skew(m):
        raise ValueError("pfaffian requires a square skew-symmetric matrix")
    if n % 2:
        raise ValueError("pfaffian requires even size")
    m = [[rat(x) for x in row] for row in m]
    if n <= _EXPANSION_LIMIT:
        return _pf_expand(m, tuple(range(n)))
    return _pf_eliminate(m)


def _pf_expand(m: Matrix, idx: tuple[int, ...]) -> Fraction:
    if not idx:
        return Fraction(1)
    i0 = idx[0]
    total = Fraction(0)
    for pos in range(1, len(idx)):
        a = m[i0][idx[pos]]
        if a:
            rest = idx[1:pos] + idx[pos + 1:]
            term = a * _pf_expand(m, rest)
            total += term if pos % 2 else -term
    return total


def _pf_eliminate(m: Matrix) -> Fraction:
    # congruence by unimodular column/row operations keeps the Pfaffian
    a = [row[:] for row in m]
    n = len(a)
    pf = Fraction(1)
    for k in range(0, n - 1, 2):
        j = next((j for j in range(k + 1, n) if a[k][j]), None)
        if j is None:
            return Fraction(0)
        if j != k + 1:
            a[k + 1], a[j] = a[j], a[k + 1]
            for row in a:
                row[k + 1], row[j] = row[j], row[k + 1]
            pf = -pf
        piv = a[k][k + 1]
        pf *= piv
        for i in range(k + 2, n):
            t = a[k][i] / piv
            if t:
                for row in a:
                    row[i] -= t * row[k + 1]
                ri, rp = a[i], a[k + 1]
                for c in range(n):
                    ri[c] -= t * rp[c]
    return pf


# ---------------------------------------------------------------------------
# univariate polynomials

class UniPoly:
    """Dense univariate polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [rat(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-rat(r), 1])
        return p

    def __repr__(self):
        return f"UniPoly({[ratstr(c) for c in self.coeffs]})"

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(rat(other) * c for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        t = rat(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d, lc = other.degree, other.lc
        q = [Fraction(0)] * max(len(r) - d, 0)
        while len(r) - 1 >= d and r:
            shift = len(r) - 1 - d
            f = r[-1] / lc
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] -= f * c
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(q), UniPoly(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def sign_at(self, t) -> int:
        """Sign of the value at a rational point or at +/-infinity."""
        if self.is_zero():
            return 0
        if t == INF:
            return _sgn(self.lc)
        if t == -INF:
            return _sgn(self.lc) * (-1 if self.degree % 2 else 1)
        return _sgn(self(t))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _variations(seq: Sequence[UniPoly], t) -> int:
    signs = [s for s in (q.sign_at(t) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_real_root_count(p: UniPoly, interval=(-INF, INF)) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(a, b]``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    a, b = interval
    a = a if a in (INF, -INF) else rat(a)
    b = b if b in (INF, -INF) else rat(b)
    if not a < b:
        return 0
    if p.degree == 0:
        return 0
    sqfree = p // poly_gcd(p, p.derivative())
    seq = sturm_sequence(sqfree)
    return _variations(seq, a) - _variations(seq, b)


def interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Newton interpolation through distinct rational nodes."""
    xs = [rat(x) for x in xs]
    coef = [rat(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly([coef[-1]]) if coef else UniPoly()
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + UniPoly([coef[i]])
    return p
