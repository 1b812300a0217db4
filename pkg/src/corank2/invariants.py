"""Integer invariants w, i, r of a frame algebra, read off bracket filtrations.

On a homogeneous model the invariants are constant, so everything is computed
at the single algebraic point: E plays the vertical direction, x_0 the
characteristic one, and ``H = L_k`` is spanned by E and the x_j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraded import CMatrix, assemble_frame
from .liealg import GradedLieAlgebra, Subspace


@dataclass
class FrameAlgebra:
    algebra: GradedLieAlgebra
    k: int
    markers: dict

    @classmethod
    def from_labels(cls, algebra: GradedLieAlgebra, k: int | None = None) -> "FrameAlgebra":
        """Markers from the labels E, x0, a, b and optional c."""
        if k is None:
            k = sum(1 for lab in algebra.labels if lab[0] == "x" and lab[1:].isdigit()) - 1
        markers = {name: algebra.index(name) for name in ("E", "x0")}
        for name in ("a", "b", "c"):
            if algebra.has(name):
                markers[name] = algebra.index(name)
        return cls(algebra, k, markers)

    @classmethod
    def from_cmatrix(cls, c: CMatrix) -> "FrameAlgebra":
        return cls.from_labels(assemble_frame(c), c.k)

    def unit(self, name: str):
        return self.algebra.unit(self.markers[name])

    def ad_E_powers(self, v, count: int):
        out = [v]
        E = self.unit("E")
        for _ in range(count - 1):
            out.append(self.algebra.bracket(E, out[-1]))
        return out


@dataclass
class Filtration:
    spaces: list
    stalled: bool

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.spaces]


def filtration_L(f: FrameAlgebra) -> Filtration:
    """L_0 = span{E, x_0}, L_{i+1} = L_i + [E, L_i] for i < k."""
    a = f.algebra
    E = Subspace(a, [f.unit("E")])
    L = [Subspace(a, [f.unit("E"), f.unit("x0")])]
    for _ in range(f.k):
        L.append(L[-1] + E.bracket_with(L[-1]))
    stalled = any(s.dim != i + 2 for i, s in enumerate(L))
    return Filtration(L, stalled)


def _generators(f: FrameAlgebra) -> list[list]:
    """Level 0 holds E and x_0; level j > 0 holds ad_E^j x_0, so L_s is spanned by levels <= s."""
    tower = f.ad_E_powers(f.unit("x0"), f.k + 1)
    return [[f.unit("E"), tower[0]]] + [[v] for v in tower[1:]]


def a_spaces(f: FrameAlgebra, rmax: int | None = None) -> list[Subspace]:
    """A_0, A_1, ..., A_rmax (default rmax = 2k).

    A_r = L_k + span{[L_s, L_t] : s + t <= r}; as L_s is spanned by the
    generators of level <= s, only generator brackets of total level r are new.
    """
    a = f.algebra
    gens = _generators(f)
    H = Subspace(a, [v for level in gens for v in level])
    rmax = 2 * f.k if rmax is None else rmax
    out = []
    acc = H
    for r in range(rmax + 1):
        new = []
        for s in range(len(gens)):
            t = r - s
            if s <= t < len(gens):
                new += [a.bracket(u, v) for u in gens[s] for v in gens[t]]
        if new:
            acc = acc + Subspace(a, new)
        out.append(acc)
    return out


def w_invariant(f: FrameAlgebra) -> int:
    """Least r with A_r strictly larger than H = L_k."""
    H = filtration_L(f).spaces[-1]
    for r, A in enumerate(a_spaces(f)):
        if A.dim != H.dim:
            return r
    raise ValueError("integrable sub-distribution: the x-span closes under brackets")


def k_spaces(f: FrameAlgebra, w: int | None = None) -> list[Subspace]:
    """K_0 = H, K_i = H + span{G, ad_E G, ..., ad_E^(i-1) G} with G = [x_0, x_w]."""
    if w is None:
        w = w_invariant(f)
    a = f.algebra
    H = filtration_L(f).spaces[-1]
    xw = f.ad_E_powers(f.unit("x0"), w + 1)[-1]
    G = a.bracket(f.unit("x0"), xw)
    tower = f.ad_E_powers(G, f.k)
    out = [H]
    for i in range(1, f.k + 1):
        out.append(H + Subspace(a, tower[:i]))
    return out


def i_invariant(f: FrameAlgebra) -> int:
    w = w_invariant(f)
    A = a_spaces(f, w)[w]
    for i, K in enumerate(k_spaces(f, w)):
        if i >= 1 and A.issubset(K):
            return i
    raise ValueError("A_w is not contained in any K_i")


def r_invariant(f: FrameAlgebra) -> int:
    """Least r with K_1 inside A_r."""
    K1 = k_spaces(f)[1]
    for r, A in enumerate(a_spaces(f)):
        if K1.issubset(A):
            return r
    raise ValueError("K_1 is not contained in any A_r")


def dim_A_mod_H(f: FrameAlgebra) -> int:
    w = w_invariant(f)
    H = filtration_L(f).spaces[-1]
    return a_spaces(f, w)[w].dim - H.dim


def invariant_report(f: FrameAlgebra) -> dict:
    return {"k": f.k, "w": w_invariant(f), "i": i_invariant(f),
            "flagL_dims": filtration_L(f).dims}
