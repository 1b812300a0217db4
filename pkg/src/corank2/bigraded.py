"""Bi-graded Lie algebras of type (k, w): constraint systems, families and frames.

The unknowns are the constants ``c[i, j]`` of ``[x_i, x_j] = c[i, j] y_{i+j-w+1}``.
The full Jacobi system (:func:`jacobi_system`) is the ground truth; the reduced
systems in x-coordinates and the closed-form special solutions are checked
against it rather than trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import binom, det, matmul, nullspace, rank, rat, ratstr
from .liealg import GradedLieAlgebra, jacobi_residual, model_algebra


def _check_kw(k: int, w: int):
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not 1 <= w <= 2 * k - 1:
        raise ValueError(f"w must lie in 1..{2 * k - 1}, got {w}")


def _check_odd(w: int):
    if w % 2 == 0:
        raise ValueError(f"this system is defined for odd w only, got {w}")


def d_kw(k: int, w: int) -> int:
    """Closed-form parameter count of the type-(k, w) family (negative means empty)."""
    if k < 2 or w < 1:
        raise ValueError("need k >= 2 and w >= 1")
    l, odd = divmod(k, 2)
    return (l - w + 1) // 3 if odd else (l - w - 1) // 3


def expected_dim(k: int, w: int) -> int:
    """Dimension of the homogeneous solution space predicted by ``d_kw``."""
    return max(d_kw(k, w) + 1, 0)


# ---------------------------------------------------------------------------
# c-matrices

def in_support(k: int, w: int, i: int, j: int) -> bool:
    return 0 <= i < j <= k and w <= i + j <= k + w - 1


def c_unknowns(k: int, w: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(k + 1) for j in range(i + 1, k + 1) if in_support(k, w, i, j)]


class CMatrix:
    """Antisymmetric constants ``c[i, j]`` supported on ``w <= i + j <= k + w - 1``."""

    def __init__(self, k: int, w: int, entries: dict | None = None):
        self.k, self.w = k, w
        self.entries: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (entries or {}).items():
            v = rat(v)
            if i == j:
                if v:
                    raise ValueError("diagonal entries must vanish")
                continue
            if i > j:
                i, j, v = j, i, -v
            if not v:
                continue
            if not in_support(k, w, i, j):
                raise ValueError(f"c[{i},{j}] = {ratstr(v)} lies outside the support")
            self.entries[(i, j)] = self.entries.get((i, j), Fraction(0)) + v
        self.entries = {key: v for key, v in sorted(self.entries.items()) if v}

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if i < j:
            return self.entries.get((i, j), Fraction(0))
        if i > j:
            return -self.entries.get((j, i), Fraction(0))
        return Fraction(0)

    def __eq__(self, other):
        return (isinstance(other, CMatrix) and (self.k, self.w) == (other.k, other.w)
                and self.entries == other.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def scaled(self, s) -> "CMatrix":
        s = rat(s)
        return CMatrix(self.k, self.w, {key: s * v for key, v in self.entries.items()})

    def vector(self) -> list[Fraction]:
        return [self[key] for key in c_unknowns(self.k, self.w)]

    @classmethod
    def from_vector(cls, k: int, w: int, v: Sequence) -> "CMatrix":
        return cls(k, w, dict(zip(c_unknowns(k, w), v)))

    def to_list(self) -> list[dict]:
        return [{"i": i, "j": j, "c": ratstr(v)} for (i, j), v in self.entries.items()]

    def to_dict(self) -> dict:
        return {"k": self.k, "w": self.w, "c": self.to_list()}

    @classmethod
    def from_dict(cls, data: dict) -> "CMatrix":
        try:
            return cls(int(data["k"]), int(data["w"]),
                       {(int(e["i"]), int(e["j"])): rat(e["c"]) for e in data["c"]})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed c-matrix JSON: {exc}") from exc

    def __repr__(self):
        body = ", ".join(f"c{i}{j}={ratstr(v)}" for (i, j), v in self.entries.items())
        return f"CMatrix(k={self.k}, w={self.w}: {body})"


# ---------------------------------------------------------------------------
# the Jacobi oracle

def _row(k, w, terms, cols):
    """Dense row from ``[(i, j, coeff), ...]``, dropping out-of-support terms."""
    row = [Fraction(0)] * len(cols)
    for i, j, c in terms:
        if i == j or not (0 <= i <= k and 0 <= j <= k):
            continue
        if i > j:
            i, j, c = j, i, -c
        t = cols.get((i, j))
        if t is not None:
            row[t] += c
    return row


def _e_rows(k, w, cols):
    rows = []
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            if w - 1 <= i + j <= k + w - 2:
                rows.append(_row(k, w, [(i, j, 1), (i + 1, j, -1), (i, j + 1, -1)], cols))
    return rows


def _z_row(k, w, l, i, j, cols):
    # cyclic sum over (x_l, x_i, x_j) through the z-pairings
    return _row(k, w, [(i, j, (-1) ** l), (j, l, (-1) ** i), (l, i, (-1) ** j)], cols)


def _n_row(k, w, l, i, j, cols):
    return _row(k, w, [(i, j, (-1) ** (l + 1) * l), (j, l, (-1) ** (i + 1) * i),
                       (l, i, (-1) ** (j + 1) * j)], cols)


def jacobi_system(k: int, w: int) -> list[list[Fraction]]:
    """All linear conditions on the c-unknowns (columns ordered as :func:`c_unknowns`).

    Rows: the E-derivation rule ``c[i,j] = c[i+1,j] + c[i,j+1]`` below the top
    anti-diagonal, then the z- and n-components of the Jacobi sum on every
    triple ``x_l, x_i, x_j`` with ``l < i < j``.
    """
    _check_kw(k, w)
    cols = {key: t for t, key in enumerate(c_unknowns(k, w))}
    rows = _e_rows(k, w, cols)
    for l in range(k + 1):
        for i in range(l + 1, k + 1):
            for j in range(i + 1, k + 1):
                s = l + i + j
                if s == k + w - 1:
                    rows.append(_z_row(k, w, l, i, j, cols))
                elif s == k + w:
                    rows.append(_n_row(k, w, l, i, j, cols))
    return [r for r in rows if any(r)]


def first_pair_system(k: int, w: int, corrected: bool = True) -> list[list[Fraction]]:
    """E-derivation rows plus the two families of relations involving c[0, *].

    With ``corrected=False`` the n-relation uses the coefficient
    ``-(k+w-i+1)`` on ``c[0,i]`` instead of ``(k+w-i)``.
    """
    _check_kw(k, w)
    cols = {key: t for t, key in enumerate(c_unknowns(k, w))}
    rows = _e_rows(k, w, cols)
    rows += [_row(k, w, t, cols) for t in _pair_terms(k, w, corrected)]
    return [r for r in rows if any(r)]


def _pair_terms(k, w, corrected):
    out = []
    for i in range(1, k + 1):
        j = k + w - 1 - i
        if 0 <= j <= k and j != i:
            out.append([(i, j, 1), (0, j, -(-1) ** i), (0, i, (-1) ** j)])
    for i in range(1, k + 1):
        j = k + w - i
        if 0 <= j <= k and j != i:
            if corrected:
                out.append([(0, j, (-1) ** (i + 1) * i), (0, i, (-1) ** j * j)])
            else:
                out.append([(0, j, (-1) ** (i + 1) * i), (0, i, -(-1) ** j * (j + 1))])
    return out


def pair_relation_residuals(c: CMatrix, corrected: bool = True) -> list[Fraction]:
    """Residuals of the relations between c[i, k+w-1-i], c[0, *] (both lines)."""
    k, w = c.k, c.w
    res = []
    for terms in _pair_terms(k, w, corrected):
        res.append(sum((coef * c[i, j] for i, j, coef in terms), Fraction(0)))
    return res


def oracle_residuals(c: CMatrix) -> list[Fraction]:
    rows = jacobi_system(c.k, c.w)
    v = c.vector()
    return [sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in rows]


def satisfies_oracle(c: CMatrix) -> bool:
    return all(r == 0 for r in oracle_residuals(c))


# ---------------------------------------------------------------------------
# x-coordinates on the top anti-diagonal

def x_length(k: int, w: int) -> int:
    return max(k - w + 2, 0)


def x_from_c(c: CMatrix) -> list[Fraction]:
    k, w = c.k, c.w
    return [binom(k + w - 1, i + w - 1) * c[i + w - 1, k - i] for i in range(x_length(k, w))]


def c_from_x(k: int, w: int, x: Sequence) -> CMatrix:
    """Seed the top anti-diagonal from ``x`` and propagate downwards.

    ``x`` must satisfy ``x_i + x_{k-w+1-i} = 0`` (antisymmetry of c).
    """
    _check_kw(k, w)
    x = [rat(v) for v in x]
    n = x_length(k, w)
    if len(x) != n:
        raise ValueError(f"x must have length {n}")
    for i in range(n):
        if x[i] + x[n - 1 - i] != 0:
            raise ValueError("x violates antisymmetry (x_i + x_{k-w+1-i} != 0)")
    vals: dict[tuple[int, int], Fraction] = {}

    def get(i, j):
        if i == j or not (0 <= i <= k and 0 <= j <= k):
            return Fraction(0)
        if i > j:
            return -vals.get((j, i), Fraction(0))
        return vals.get((i, j), Fraction(0))

    top = k + w - 1
    for i in range(n):
        a, b = i + w - 1, k - i
        if a < b:
            vals[(a, b)] = x[i] / binom(top, a)
    for s in range(top - 1, w - 1, -1):
        for i in range(0, s // 2 + 1):
            j = s - i
            if i < j <= k:
                v = get(i + 1, j) + get(i, j + 1)
                if v:
                    vals[(i, j)] = v
    return CMatrix(k, w, vals)


def _x_to_c_matrix(k, w):
    """Linear map x -> c-vector (columns indexed by x, rows by :func:`c_unknowns`)."""
    n = x_length(k, w)
    cols = []
    for t in range(n):
        e = [Fraction(0)] * n
        a, b = t + w - 1, k - t
        if a >= b:
            cols.append([Fraction(0)] * len(c_unknowns(k, w)))
            continue
        e[t] = Fraction(1)
        e[n - 1 - t] = Fraction(-1)
        cols.append(c_from_x(k, w, e).vector())
    return [list(r) for r in zip(*cols)] if cols else []


def x_antisymmetry_rows(k: int, w: int) -> list[list[Fraction]]:
    """Rows of ``x_i + x_{k-w+1-i} = 0`` for ``i <= (k-w+1)/2``."""
    n = x_length(k, w)
    rows = []
    for i in range((n - 1) // 2 + 1 if n else 0):
        r = [Fraction(0)] * n
        r[i] += 1
        r[n - 1 - i] += 1
        rows.append(r)
    return rows


def oracle_in_x(k: int, w: int) -> list[list[Fraction]]:
    """The Jacobi oracle pulled back to x-coordinates, plus the antisymmetry rows."""
    if x_length(k, w) == 0:
        return []
    rows = x_antisymmetry_rows(k, w)
    J = jacobi_system(k, w)
    if J:
        rows += [r for r in matmul(J, _x_to_c_matrix(k, w)) if any(r)]
    return rows


# ---------------------------------------------------------------------------
# reduced systems in x-coordinates

def system4(k: int, w: int) -> list[list[Fraction]]:
    n = x_length(k, w)
    rows = []
    for i in range(n):
        rows.append([((-1) ** i - binom(k - j, i - j)) if j <= i else Fraction(0)
                     for j in range(n)])
    return rows


def system5(k: int, w: int) -> list[list[Fraction]]:
    n = x_length(k, w)
    rows = []
    for i in range(1, n):
        r = [binom(k + 1 - j, i - j) if j < i else Fraction(0) for j in range(n)]
        r[i] += 2 if i % 2 else 0
        rows.append(r)
    return rows


def system5a(k: int, w: int, variant: str = "corrected") -> list[Fraction]:
    """The extra row used when k is odd.

    ``corrected``: binom(k-j, k-w+1-j); together with :func:`system5` and
    antisymmetry it cuts out exactly the oracle solutions. ``printed``:
    binom(k+1-j, k-w+1-j), which fails on the k=3 model. ``shifted``:
    binom(k+1-j, k-w+2-j), also valid on oracle solutions and in addition
    satisfied by every :func:`special_solution`.
    """
    n = x_length(k, w)
    if variant == "corrected":
        return [binom(k - j, k - w + 1 - j) for j in range(n)]
    if variant == "printed":
        return [binom(k + 1 - j, k - w + 1 - j) for j in range(n)]
    if variant == "shifted":
        return [binom(k + 1 - j, k - w + 2 - j) for j in range(n)]
    raise ValueError(f"unknown variant {variant!r}")


def subst_factors(k: int, w: int) -> list[Fraction]:
    """``old_x[j] = factor[j] * new_x[j]``."""
    return [binom(k + w + 1, w + j) for j in range(x_length(k, w))]


def to_new(k: int, w: int, x_old: Sequence) -> list[Fraction]:
    return [rat(v) / f for v, f in zip(x_old, subst_factors(k, w))]


def to_old(k: int, w: int, x_new: Sequence) -> list[Fraction]:
    return [rat(v) * f for v, f in zip(x_new, subst_factors(k, w))]


def system6(k: int, w: int) -> list[list[Fraction]]:
    n = x_length(k, w)
    rows = []
    for i in range(2, 2 * ((k - w + 2) // 2) + 1, 2):
        rows.append([binom(w + i, w + j) if j < i else Fraction(0) for j in range(n)])
    return rows


def system7(k: int, w: int) -> list[list[Fraction]]:
    _check_odd(w)
    n = x_length(k, w)
    h = (w - 1) // 2
    rows = []
    for i in range(1, (k - w + 2) // 2 + 1):
        rows.append([binom(h + i, h + 1 - i + j) if j <= 2 * i - 1 else Fraction(0)
                     for j in range(n)])
    return rows


def system7y(k: int, w: int, y) -> list[list[Fraction]]:
    """Parametric rows ``sum_j binom(y+i, 2i+1-j) x_j`` for ``i = 0..(k-w)//2``.

    The column range runs to ``j = 2i+1`` so that ``y = (w+1)/2`` gives
    :func:`system7` back (row i here is row i+1 there).
    """
    _check_odd(w)
    y = rat(y)
    n = x_length(k, w)
    rows = []
    for i in range((k - w) // 2 + 1):
        rows.append([binom(y + i, 2 * i + 1 - j) if j <= 2 * i + 1 else Fraction(0)
                     for j in range(n)])
    return rows


def system7y_rank(k: int, w: int, y) -> tuple[int, int]:
    """Rank of antisymmetry rows plus :func:`system7y`, and the number of unknowns."""
    rows = x_antisymmetry_rows(k, w) + system7y(k, w, y)
    n = x_length(k, w)
    return rank(rows, n), n


def reduced_systems(k: int, w: int) -> dict:
    _check_kw(k, w)
    _check_odd(w)
    return {
        "system3": x_antisymmetry_rows(k, w),
        "system4": system4(k, w),
        "system5": system5(k, w),
        "system5a": system5a(k, w, "corrected") if k % 2 else None,
        "system6": system6(k, w),
        "system7": system7(k, w),
        "subst1": "x_i = binom(k+w-1, i+w-1) c[i+w-1, k-i]",
        "subst": subst_factors(k, w),
    }


def chain_dim(k: int, w: int) -> int:
    """Solution dimension of antisymmetry rows plus :func:`system7` (in substituted coordinates)."""
    n = x_length(k, w)
    if n == 0:
        return 0
    return n - rank(x_antisymmetry_rows(k, w) + system7(k, w), n)


def residual(rows: Sequence[Sequence], x: Sequence) -> list[Fraction]:
    return [sum((rat(a) * rat(b) for a, b in zip(r, x)), Fraction(0)) for r in rows]


# ---------------------------------------------------------------------------
# special solutions

def special_solution(k: int, w: int, l: int) -> list[Fraction]:
    """Closed-form solution of :func:`system5` (old coordinates), padded to full length."""
    _check_odd(w)
    if not 0 <= l <= (k - w) // 2:
        raise ValueError("l out of range")
    n = x_length(k, w)
    top = 2 * ((k - w + 2) // 2)
    x = [Fraction(0)] * n
    for j in range(2 * l, top):
        x[j] = (-1) ** j * binom(k - 2 * l + 2, j - 2 * l + 1)
    return x


def special_solution3(k: int, w: int, l: int) -> list[Fraction]:
    """Closed-form solution of :func:`system6` and :func:`system7` (substituted coordinates)."""
    _check_odd(w)
    if not 0 <= l <= (k - w) // 2:
        raise ValueError("l out of range")
    n = x_length(k, w)
    return [Fraction(0) if j < 2 * l else (-1) ** j * binom(w + j, w + 2 * l - 1)
            for j in range(n)]


# ---------------------------------------------------------------------------
# propagation maps between anti-diagonals

def phi_maps(k: int, w: int) -> dict:
    """phi1: top anti-diagonal -> anti-diagonal k; phi2: anti-diagonal k -> k-w+1."""
    if not 1 <= w <= k:
        raise ValueError("phi maps need 1 <= w <= k")
    n = k - w + 2
    phi1 = [[binom(w - 1, a - i) for i in range(n)] for a in range(k + 1)]
    phi2 = [[binom(w - 1, b - a) for b in range(k + 1)] for a in range(n)]
    ker = [[(-1) ** j * binom(i + j, i) for j in range(k + 1)] for i in range(w - 1)]
    return {"phi1": phi1, "phi2": phi2, "phi": matmul(phi2, phi1), "ker_phi2_basis": ker}


def propagate(vec: Sequence, steps: int, low: int, size: int) -> list[Fraction]:
    """Apply ``c[i,j] = c[i+1,j] + c[i,j+1]`` ``steps`` times to an anti-diagonal.

    ``vec[t]`` is the entry with first index ``low + t``; entries outside the
    listed ones are zero.  Returns the entries with first index ``0..size-1``.
    """
    cur = {low + t: rat(v) for t, v in enumerate(vec)}
    for _ in range(steps):
        cur = {i: cur.get(i, Fraction(0)) + cur.get(i + 1, Fraction(0))
               for i in range(min(cur, default=0) - 1, max(cur, default=0) + 1)}
    return [cur.get(i, Fraction(0)) for i in range(size)]


def phi_is_bijective(k: int, w: int) -> bool:
    m = phi_maps(k, w)["phi"]
    return det(m) != 0


# ---------------------------------------------------------------------------
# combinatorial identities

def ident2_sides(l: int, s: int, m: int, printed: bool = False) -> tuple[Fraction, Fraction]:
    """Both sides of sum_j (-1)^(l-j) binom(l,j) binom(s+j,m) = binom(s, m-l).

    The sign comes from expanding t^l = ((t+1) - 1)^l. With ``printed=True``
    the sign is (-1)^j instead, which only agrees when l is even.
    """
    lhs = Fraction(0)
    for j in range(l + 1):
        sign = (-1) ** j if printed else (-1) ** (l - j)
        lhs += sign * binom(l, j) * binom(s + j, m)
    return lhs, binom(s, m - l)


def ident2(l: int, s: int, m: int, printed: bool = False) -> bool:
    lhs, rhs = ident2_sides(l, s, m, printed)
    return lhs == rhs


def ident3_sides(mu: int, omega: int, w: int, y: int,
                 printed: bool = False) -> tuple[Fraction, Fraction]:
    """Both sides of the symmetric binomial identity in (mu, omega, y).

    The lower index on the right is ``2*mu + omega - y - i``, which is what the
    generating function (1+t)^omega (1+t+1/t)^mu gives; ``w`` is then unused.
    With ``printed=True`` it is ``2*mu + w - y - i``, true only when w = omega.
    """
    shift = w if printed else omega
    lhs = sum((binom(mu, i) * binom(omega + i, y - i) for i in range(mu + 1)), Fraction(0))
    rhs = sum((binom(mu, i) * binom(omega + i, 2 * mu + shift - y - i) for i in range(mu + 1)),
              Fraction(0))
    return lhs, rhs


def ident3(mu: int, omega: int, w: int, y: int, printed: bool = False) -> bool:
    lhs, rhs = ident3_sides(mu, omega, w, y, printed)
    return lhs == rhs


# ---------------------------------------------------------------------------
# families

@dataclass
class TypeKWFamily:
    k: int
    w: int
    hom_basis: list[list[Fraction]]
    normalized_point: list[Fraction] | None
    oracle_dim: int
    family_dim: int = field(init=False)

    def __post_init__(self):
        self.family_dim = len(self.hom_basis) - 1 if self.normalized_point is not None else -1

    @property
    def d(self) -> int:
        return d_kw(self.k, self.w)

    @property
    def empty(self) -> bool:
        return self.normalized_point is None

    @property
    def normalized_c(self) -> CMatrix | None:
        if self.normalized_point is None:
            return None
        return c_from_x(self.k, self.w, self.normalized_point)

    def to_dict(self) -> dict:
        nc = self.normalized_c
        return {"k": self.k, "w": self.w, "d": self.d, "family_dim": self.family_dim,
                "normalized_c": nc.to_list() if nc is not None else None,
                "hom_basis": [[ratstr(v) for v in b] for b in self.hom_basis]}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def oracle_dim(k: int, w: int) -> int:
    n = len(c_unknowns(k, w))
    return n - rank(jacobi_system(k, w), n) if n else 0


def solve_family(k: int, w: int) -> TypeKWFamily:
    """Solve the oracle in x-coordinates and normalize ``c[0, w] = 1`` when possible."""
    _check_kw(k, w)
    n = x_length(k, w)
    hom = nullspace(oracle_in_x(k, w), n) if n else []
    odim = oracle_dim(k, w)
    if len(hom) != odim:
        raise RuntimeError(f"x-coordinate and c-coordinate solution counts differ at "
                           f"(k,w)=({k},{w}): {len(hom)} vs {odim}")
    point = None
    for v in hom:
        c0w = c_from_x(k, w, v)[0, w]
        if c0w:
            point = [t / c0w for t in v]
            break
    return TypeKWFamily(k, w, hom, point, odim)


def compare_projective(c1: CMatrix, c2: CMatrix) -> tuple[bool, Fraction | None]:
    """Whether ``c2 = lam * c1`` for a nonzero rational ``lam``; returns ``lam``."""
    if (c1.k, c1.w) != (c2.k, c2.w):
        raise ValueError(f"mismatched types ({c1.k},{c1.w}) and ({c2.k},{c2.w})")
    if c1.is_zero() or c2.is_zero():
        return (c1.is_zero() and c2.is_zero()), None
    key = next(iter(c1.entries))
    lam = c2[key] / c1[key]
    if lam == 0:
        return False, None
    keys = set(c1.entries) | set(c2.entries)
    ok = all(c2[t] == lam * c1[t] for t in keys)
    return ok, (lam if ok else None)


# ---------------------------------------------------------------------------
# algebras

class JacobiError(ValueError):
    def __init__(self, message: str, witness=None, residual=None):
        super().__init__(message)
        self.witness = witness
        self.residual = residual


def _reject_if_bad(c: CMatrix):
    if any(oracle_residuals(c)):
        alg = model_algebra(c.k, c.w, c.entries)
        res, wit = jacobi_residual(alg)
        if wit is None:
            # the E-derivation rule only shows up once E is adjoined
            frame = _frame(c, check=False)
            res, wit = jacobi_residual(frame)
        raise JacobiError(f"c-matrix violates the Jacobi constraints; witness {wit}", wit, res)


def assemble_model(c: CMatrix) -> GradedLieAlgebra:
    """The nilpotent algebra spanned by the x, y, z, n elements."""
    _reject_if_bad(c)
    return model_algebra(c.k, c.w, c.entries, name=f"m(k={c.k},w={c.w})")


def has_c_element(k: int, w: int) -> bool:
    return 2 * w == k + 1


def _frame(c: CMatrix, check=True, cE: str = "balanced") -> GradedLieAlgebra:
    k, w = c.k, c.w
    m = model_algebra(k, w, c.entries)
    with_c = has_c_element(k, w)
    labels = ["E"] + list(m.labels) + ["a", "b"] + (["c"] if with_c else [])
    bideg = [(-1, 0)] + list(m.bidegrees) + [(0, 0), (0, 0)] + ([(1, 0)] if with_c else [])
    alg = GradedLieAlgebra(labels, bideg, name=f"g(k={k},w={w})")
    off = 1
    for (i, j), terms in m.brackets.items():
        alg._store(i + off, j + off, {t + off: v for t, v in terms.items()})
    E, A, B = 0, alg.index("a"), alg.index("b")

    def put(p, q, terms):
        alg._store(alg.index(p) if isinstance(p, str) else p,
                   alg.index(q) if isinstance(q, str) else q,
                   {alg.index(t): v for t, v in terms.items()})

    for j in range(k):
        put("E", f"x{j}", {f"x{j + 1}": 1})
    for j in range(1, k):
        put("E", f"y{j}", {f"y{j + 1}": 1})
    put("E", "z", {"n": 1})
    for t, lab in enumerate(labels):
        if t in (A, B):
            continue
        d1, d2 = bideg[t]
        if d1:
            alg._store(A, t, {t: Fraction(-d1)})
        if d2:
            alg._store(B, t, {t: Fraction(-d2)})
    if with_c:
        for j in range(1, k + 1):
            put("c", f"x{j}", {f"x{j - 1}": j * (k - j + 1)})
        for j in range(2, k + 1):
            put("c", f"y{j}", {f"y{j - 1}": (j - 1) * (k - j + 1)})
        put("c", "n", {"z": 1})
        if cE == "balanced":
            put("c", "E", {"a": -2, "b": k})
        elif cE == "bare":
            put("c", "E", {"a": -2})
        else:
            raise ValueError(f"unknown cE rule {cE!r}")
    return alg


def assemble_frame(c: CMatrix, cE: str = "balanced") -> GradedLieAlgebra:
    """Adjoin E, a, b (and c when w = (k+1)/2) to the nilpotent algebra.

    E shifts x_j -> x_{j+1}, y_j -> y_{j+1}, z -> n; a and b act by minus the
    first and second bidegree; c lowers along E so that a, b, c, E span gl2.
    With ``cE="bare"`` the rule [c, E] = -2a is used instead of -2a + k b;
    that variant fails Jacobi and is kept as a diagnostic.
    """
    _reject_if_bad(c)
    frame = _frame(c, cE=cE)
    res, wit = jacobi_residual(frame)
    if res:
        raise JacobiError(f"assembled frame fails Jacobi at {wit}", wit, res)
    return frame


def antidiagonal_rank(c: CMatrix) -> int:
    """Rank of the span of [x_s, x_{w-s}] (all land on y_1)."""
    return 1 if any(c[s, c.w - s] for s in range(c.w + 1)) else 0
