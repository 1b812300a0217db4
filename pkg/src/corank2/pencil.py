"""Pencils of skew forms: kernel curve, first Kronecker index and the rank test."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (INF, UniPoly, interpolate, is_skew, nullspace, pfaffian, poly_gcd,
                    rank, rat, ratstr, sturm_real_root_count, zeros)
from .liealg import GradedLieAlgebra


class SkewPencil:
    """``p1*A1 + p2*A2`` with both matrices skew of size 2k+1."""

    def __init__(self, k: int, A1, A2):
        n = 2 * k + 1
        if k < 0:
            raise ValueError("k must be nonnegative")
        self.k = k
        self.A1 = [[rat(x) for x in row] for row in A1]
        self.A2 = [[rat(x) for x in row] for row in A2]
        for name, m in (("A1", self.A1), ("A2", self.A2)):
            if len(m) != n or any(len(r) != n for r in m):
                raise ValueError(f"{name} must be {n}x{n}")
            if not is_skew(m):
                raise ValueError(f"{name} is not skew-symmetric")

    @property
    def size(self) -> int:
        return 2 * self.k + 1

    def eval(self, p1, p2) -> list[list[Fraction]]:
        p1, p2 = rat(p1), rat(p2)
        return [[p1 * a + p2 * b for a, b in zip(r1, r2)] for r1, r2 in zip(self.A1, self.A2)]

    def to_dict(self) -> dict:
        return {"k": self.k,
                "A1": [[ratstr(x) for x in row] for row in self.A1],
                "A2": [[ratstr(x) for x in row] for row in self.A2]}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "SkewPencil":
        try:
            return cls(int(data["k"]), data["A1"], data["A2"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed pencil JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "SkewPencil":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        return (isinstance(other, SkewPencil) and self.k == other.k
                and self.A1 == other.A1 and self.A2 == other.A2)


class BinaryFormVector:
    """Vector-valued binary form ``sum_j b_j p1^(d-j) p2^j``."""

    def __init__(self, degree: int, ambient_dim: int, coeffs: Sequence[Sequence]):
        if len(coeffs) != degree + 1:
            raise ValueError("need degree+1 coefficient vectors")
        self.degree = degree
        self.ambient_dim = ambient_dim
        self.coeffs = [tuple(rat(x) for x in b) for b in coeffs]
        if any(len(b) != ambient_dim for b in self.coeffs):
            raise ValueError("coefficient vector of wrong length")

    def is_zero(self) -> bool:
        return all(x == 0 for b in self.coeffs for x in b)

    def __call__(self, p1, p2) -> list[Fraction]:
        p1, p2 = rat(p1), rat(p2)
        d = self.degree
        out = [Fraction(0)] * self.ambient_dim
        for j, b in enumerate(self.coeffs):
            m = p1 ** (d - j) * p2 ** j
            for i, x in enumerate(b):
                out[i] += m * x
        return out

    def coordinate(self, i: int) -> list[Fraction]:
        """Coefficients of coordinate ``i``, indexed like ``coeffs``."""
        return [b[i] for b in self.coeffs]

    def to_dict(self) -> dict:
        return {"degree": self.degree, "ambient_dim": self.ambient_dim,
                "coeffs": [[ratstr(x) for x in b] for b in self.coeffs]}

    def __eq__(self, other):
        return (isinstance(other, BinaryFormVector) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"BinaryFormVector(degree={self.degree}, coeffs={self.to_dict()['coeffs']})"


def _delete(m, i):
    return [[x for c, x in enumerate(row) if c != i] for r, row in enumerate(m) if r != i]


def xp_polynomial(P: SkewPencil) -> BinaryFormVector:
    """Kernel curve: coordinate i is (-1)^i times the Pfaffian with row/column i deleted."""
    k, n = P.k, P.size
    ts = list(range(k + 1))
    values = [[Fraction(0)] * (k + 1) for _ in range(n)]
    for s, t in enumerate(ts):
        m = P.eval(1, t)
        for i in range(n):
            pf = pfaffian(_delete(m, i)) if n > 1 else Fraction(1)
            values[i][s] = pf if i % 2 == 0 else -pf
    coeffs = [[Fraction(0)] * n for _ in range(k + 1)]
    for i in range(n):
        poly = interpolate(ts, values[i])
        for j, c in enumerate(poly.coeffs):
            coeffs[j][i] = c
    return BinaryFormVector(k, n, coeffs)


def annihilates(P: SkewPencil, B: BinaryFormVector) -> bool:
    """Whether ``eval(p) B(p)`` vanishes identically in (p1, p2)."""
    n, d = P.size, B.degree
    out = [[Fraction(0)] * n for _ in range(d + 2)]
    for j, b in enumerate(B.coeffs):
        for A, shift in ((P.A1, 0), (P.A2, 1)):
            for r in range(n):
                out[j + shift][r] += sum((a * x for a, x in zip(A[r], b) if a and x), Fraction(0))
    return all(x == 0 for row in out for x in row)


def polynomial_kernel(P: SkewPencil, d: int) -> list[BinaryFormVector]:
    """Basis of kernel sections of degree exactly ``d`` (as forms of degree d)."""
    n = P.size
    nvar = (d + 1) * n
    rows = []
    for m in range(d + 2):
        # coefficient of p1^(d+1-m) p2^m:  A1 b_m + A2 b_{m-1}
        for r in range(n):
            row = [Fraction(0)] * nvar
            if m <= d:
                for c in range(n):
                    row[m * n + c] += P.A1[r][c]
            if m >= 1:
                for c in range(n):
                    row[(m - 1) * n + c] += P.A2[r][c]
            if any(row):
                rows.append(row)
    basis = nullspace(rows, nvar)
    return [BinaryFormVector(d, n, [v[j * n:(j + 1) * n] for j in range(d + 1)]) for v in basis]


def kronecker_index(P: SkewPencil) -> int:
    """Least degree of a nonzero polynomial kernel section."""
    for d in range(P.k + 1):
        if polynomial_kernel(P, d):
            return d
    raise RuntimeError(f"no polynomial kernel section of degree <= {P.k}; "
                       "an odd-size skew pencil always has one")


@dataclass
class G1Report:
    g1_holds: bool
    tilde_d_dim: int
    real_kernel_everywhere_1dim: bool
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {"g1_holds": self.g1_holds, "tilde_d_dim": self.tilde_d_dim,
                "real_kernel_everywhere_1dim": self.real_kernel_everywhere_1dim,
                "degenerate": self.degenerate}


def g1_check(P: SkewPencil) -> G1Report:
    X = xp_polynomial(P)
    if X.is_zero():
        return G1Report(False, 0, False, degenerate=True)
    dim = rank([list(b) for b in X.coeffs], P.size)
    coords = [X.coordinate(i) for i in range(P.size)]
    coords = [c for c in coords if any(c)]
    # the chart p2 = 1 sends p1^(d-j) p2^j to t^(d-j)
    g = UniPoly()
    for c in coords:
        g = poly_gcd(g, UniPoly(reversed(c)))
    affine_real = g.degree > 0 and sturm_real_root_count(g, (-INF, INF)) > 0
    # [1:0] is a common zero iff every p1^d coefficient vanishes
    at_infinity = all(c[0] == 0 for c in coords)
    ok = not affine_real and not at_infinity
    return G1Report(dim == P.k + 1, dim, ok)


def symbol_pencil(k: int) -> SkewPencil:
    """Pencil of the 2-step symbol on the ordered basis x_0..x_k, y_1..y_k."""
    n = 2 * k + 1
    A1, A2 = zeros(n, n), zeros(n, n)

    def y(j):
        return k + j

    for i in range(k):
        A1[i][y(k - i)], A1[y(k - i)][i] = Fraction(1), Fraction(-1)
        A2[i + 1][y(k - i)], A2[y(k - i)][i + 1] = Fraction(1), Fraction(-1)
    return SkewPencil(k, A1, A2)


def pencil_of_symbol(a: GradedLieAlgebra) -> SkewPencil:
    """Read the pencil off a 2-step graded algebra with a 2-dimensional top.

    The first element of degree -2 gives A1, the second A2.
    """
    degs = sorted({a.degree2(i) for i in range(a.dim)}, reverse=True)
    if degs != [-1, -2]:
        raise ValueError(f"expected a 2-step algebra graded in degrees -1, -2; found {degs}")
    low = [i for i in range(a.dim) if a.degree2(i) == -1]
    top = [i for i in range(a.dim) if a.degree2(i) == -2]
    if len(top) != 2:
        raise ValueError(f"corank must be 2, found dim g^-2 = {len(top)}")
    if len(low) % 2 == 0:
        raise ValueError("g^-1 must have odd dimension 2k+1")
    k = (len(low) - 1) // 2
    pos = {g: t for t, g in enumerate(low)}
    n = len(low)
    mats = [zeros(n, n), zeros(n, n)]
    for (i, j), terms in a.brackets.items():
        for t, c in terms.items():
            if i not in pos or j not in pos or t not in top:
                raise ValueError("bracket leaves the 2-step pattern")
            m = mats[top.index(t)]
            m[pos[i]][pos[j]] += c
            m[pos[j]][pos[i]] -= c
    return SkewPencil(k, mats[0], mats[1])
