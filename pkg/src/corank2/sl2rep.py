"""Finite-dimensional sl2 modules over Q and the algebras m_k built from them."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact import matmul, nullspace, transpose, zeros
from .liealg import GradedLieAlgebra
from .bigraded import CMatrix


class SL2Module:
    """Matrices for e, f, h on a basis of h-eigenvectors."""

    def __init__(self, e, f, h, name: str = "", labels: Sequence | None = None):
        self.e, self.f, self.h = e, f, h
        self.name = name
        n = len(h)
        if any(h[i][j] for i in range(n) for j in range(n) if i != j):
            raise ValueError("h must be diagonal on the chosen basis")
        self.weights = [h[i][i] for i in range(n)]
        self.labels = list(labels) if labels is not None else list(range(n))

    @property
    def dim(self) -> int:
        return len(self.h)

    def commutator_defects(self) -> dict[str, bool]:
        """Which of [e,f]=h, [h,e]=2e, [h,f]=-2f fail (True means failure)."""
        e, f, h = self.e, self.f, self.h
        def br(a, b):
            ab, ba = matmul(a, b), matmul(b, a)
            return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]
        def scaled(a, s):
            return [[s * x for x in r] for r in a]
        return {"[e,f]=h": br(e, f) != h, "[h,e]=2e": br(h, e) != scaled(e, 2),
                "[h,f]=-2f": br(h, f) != scaled(f, -2)}

    def is_valid(self) -> bool:
        return not any(self.commutator_defects().values())

    def weight_indices(self, l: int) -> list[int]:
        return [i for i, wt in enumerate(self.weights) if wt == l]

    def __repr__(self):
        return f"SL2Module({self.name or '?'}, dim={self.dim})"


def irreducible(k: int) -> SL2Module:
    """V_k on v_0..v_k: h v_i = (k-2i) v_i, f v_i = v_{i+1}, e v_i = i(k-i+1) v_{i-1}."""
    if k < 0:
        raise ValueError("highest weight must be nonnegative")
    n = k + 1
    e, f, h = zeros(n, n), zeros(n, n), zeros(n, n)
    for i in range(n):
        h[i][i] = Fraction(k - 2 * i)
        if i + 1 < n:
            f[i + 1][i] = Fraction(1)
        if i > 0:
            e[i - 1][i] = Fraction(i * (k - i + 1))
    return SL2Module(e, f, h, name=f"V{k}")


def _kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def _eye(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def tensor(m1: SL2Module, m2: SL2Module) -> SL2Module:
    """Tensor product on the basis (i, j) in lexicographic order."""
    i1, i2 = _eye(m1.dim), _eye(m2.dim)

    def act(a, b):
        x, y = _kron(a, i2), _kron(i1, b)
        return [[p + q for p, q in zip(r, s)] for r, s in zip(x, y)]

    labels = [(a, b) for a in m1.labels for b in m2.labels]
    return SL2Module(act(m1.e, m2.e), act(m1.f, m2.f), act(m1.h, m2.h),
                     name=f"{m1.name}(x){m2.name}", labels=labels)


def _wedge_action(a, basis, index):
    n = len(basis)
    out = zeros(n, n)
    cols = [[(t, a[t][s]) for t in range(len(a)) if a[t][s]] for s in range(len(a))]
    for col, tup in enumerate(basis):
        for pos, s in enumerate(tup):
            for t, c in cols[s]:
                if t in tup and t != s:
                    continue
                new = list(tup)
                new[pos] = t
                # sort, tracking the sign of the permutation
                sign = 1
                for p in range(len(new)):
                    for q in range(len(new) - 1 - p):
                        if new[q] > new[q + 1]:
                            new[q], new[q + 1] = new[q + 1], new[q]
                            sign = -sign
                out[index[tuple(new)]][col] += sign * c
    return out


def wedge(m: SL2Module, r: int) -> SL2Module:
    """r-th exterior power on the basis of increasing index tuples."""
    basis = list(combinations(range(m.dim), r))
    index = {t: i for i, t in enumerate(basis)}
    return SL2Module(_wedge_action(m.e, basis, index), _wedge_action(m.f, basis, index),
                     _wedge_action(m.h, basis, index), name=f"L{r}({m.name})", labels=basis)


def weight_multiplicities(weights: Sequence) -> dict[int, int]:
    out: dict[int, int] = {}
    for wt in weights:
        if Fraction(wt).denominator != 1:
            raise ValueError("non-integral weight")
        out[int(wt)] = out.get(int(wt), 0) + 1
    return out


def decompose_weights(weights: Sequence) -> list[tuple[int, int]]:
    """(highest weight, multiplicity) pairs, largest first, from a weight list."""
    mult = weight_multiplicities(weights)
    parts = []
    for l in sorted((x for x in mult if x >= 0), reverse=True):
        c = mult.get(l, 0) - mult.get(l + 2, 0)
        if c < 0:
            raise ValueError("weights do not come from a finite-dimensional sl2 module")
        if c:
            parts.append((l, c))
    if sum((l + 1) * c for l, c in parts) != len(weights):
        raise ValueError("weights do not come from a finite-dimensional sl2 module")
    return parts


def decompose(m: SL2Module) -> list[tuple[int, int]]:
    return decompose_weights(m.weights)


def decomposition_report(m: SL2Module) -> dict:
    return {"source": m.name,
            "parts": [{"highest_weight": l, "multiplicity": c} for l, c in decompose(m)]}


def n_count(k: int, l: int) -> int:
    """Unordered triples of distinct weights of V_k summing to l."""
    wts = [k - 2 * i for i in range(k + 1)]
    return sum(1 for a, b, c in combinations(wts, 3) if a + b + c == l)


def wedge3_multiplicity(k: int, l: int) -> int:
    """Multiplicity of V_l in the third exterior power of V_k."""
    return n_count(k, l) - n_count(k, l + 2)


class MultiplicityError(ValueError):
    pass


def _sub(mat, rows, cols):
    return [[mat[r][c] for c in cols] for r in rows]


def highest_weight_vector(m: SL2Module, l: int) -> list[Fraction]:
    """The weight-l vector killed by e, first nonzero coordinate 1 (multiplicity one)."""
    W = m.weight_indices(l)
    ker = nullspace(_sub(m.e, range(m.dim), W), len(W)) if W else []
    if len(ker) != 1:
        raise MultiplicityError(f"V{l} occurs with multiplicity {len(ker)}, expected 1")
    v = ker[0]
    lead = next(x for x in v if x)
    u = [Fraction(0)] * m.dim
    for idx, x in zip(W, v):
        u[idx] = x / lead
    return u


def cg_projection(source: SL2Module, l: int) -> list[list[Fraction]]:
    """Equivariant surjection onto V_l, sending the highest-weight vector to v_0."""
    if l < 0:
        raise ValueError("target weight must be nonnegative")
    u = highest_weight_vector(source, l)
    W = source.weight_indices(l)
    W2 = source.weight_indices(l + 2)
    # functional on W_l vanishing on f(W_{l+2})
    if W2:
        F = _sub(source.f, W, W2)
        funcs = nullspace(transpose(F), len(W))
    else:
        funcs = [[Fraction(int(i == j)) for j in range(len(W))] for i in range(len(W))]
    # the functional we want is the one not killing u
    uW = [u[i] for i in W]
    phi = next((p for p in funcs if sum(a * b for a, b in zip(p, uW))), None)
    if phi is None or len(funcs) != 1:
        raise MultiplicityError(f"cannot isolate V{l}: complement has wrong dimension")
    s = sum(a * b for a, b in zip(phi, uW))
    P = zeros(l + 1, source.dim)
    for idx, a in zip(W, phi):
        P[0][idx] = a / s
    for i in range(l):
        Wn = source.weight_indices(l - 2 * (i + 1))
        for x in Wn:
            val = sum((P[i][t] * source.e[t][x] for t in range(source.dim)
                       if P[i][t] and source.e[t][x]), Fraction(0))
            P[i + 1][x] = val / ((i + 1) * (l - i))
    return P


def equivariance_defect(P, source: SL2Module, target: SL2Module) -> bool:
    """True when P fails to intertwine e, f or h."""
    for a, b in ((source.e, target.e), (source.f, target.f), (source.h, target.h)):
        if matmul(P, a) != matmul(b, P):
            return True
    return False


def _tau(k: int):
    src = wedge(irreducible(k), 2)
    P = cg_projection(src, k - 1)
    return src, P


def build_mk(k: int) -> GradedLieAlgebra:
    """V_k + V_{k-1} + V_1 graded in degrees -1, -2, -3, bracketed by the projections."""
    if k <= 1 or k % 4 != 1:
        raise ValueError(f"V{k - 1} occurs in the second exterior power of V{k} only when "
                         f"k = 1 mod 4 (k > 1); got k = {k}")
    wsrc, tau = _tau(k)
    tsrc = tensor(irreducible(k), irreducible(k - 1))
    sigma = cg_projection(tsrc, 1)
    labels = ([f"x{i}" for i in range(k + 1)] + [f"y{j}" for j in range(1, k + 1)]
              + ["z", "n"])
    bideg = [(-1, -1)] * (k + 1) + [(-2, -2)] * k + [(-3, -3)] * 2
    alg = GradedLieAlgebra(labels, bideg, name=f"m_{k}")
    yoff, zoff = k + 1, 2 * k + 1
    for col, (i, j) in enumerate(wsrc.labels):
        terms = {yoff + r: tau[r][col] for r in range(k) if tau[r][col]}
        alg._store(i, j, terms)
    for col, (i, j) in enumerate(tsrc.labels):
        terms = {zoff + r: sigma[r][col] for r in range(2) if sigma[r][col]}
        alg._store(i, yoff + j, terms)
    return alg


def extract_c(mk: GradedLieAlgebra) -> CMatrix:
    """c-matrix of m_k in the frame x_j = f^j x_0, y_1 = [x_0, x_w], y_j = f^(j-1) y_1."""
    k = sum(1 for lab in mk.labels if lab.startswith("x")) - 1
    if (k + 1) % 2:
        raise ValueError("extract_c needs odd k")
    w = (k + 1) // 2
    f = irreducible(k - 1).f
    y1 = mk.bracket(mk.vec("x0"), mk.vec(f"x{w}"))
    yoff = k + 1
    yv = y1[yoff:yoff + k]
    if not any(yv) or any(y1[:yoff]) or any(y1[yoff + k:]):
        raise ValueError("[x_0, x_w] does not span the top of V_{k-1}")
    ys = [yv]
    for _ in range(k - 1):
        ys.append([sum(f[r][c] * ys[-1][c] for c in range(k)) for r in range(k)])
    # each y_j is a multiple of the weight basis vector j-1
    scale = [ys[j][j] for j in range(k)]
    entries = {}
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            br = mk.bracket(mk.vec(f"x{i}"), mk.vec(f"x{j}"))[yoff:yoff + k]
            if not any(br):
                continue
            t = i + j - w  # index of the target y_{t+1}
            if not 0 <= t < k or any(x for r, x in enumerate(br) if r != t):
                raise ValueError(f"[x{i}, x{j}] is not a multiple of y{t + 1}")
            entries[(i, j)] = br[t] / scale[t]
    return CMatrix(k, w, entries)

