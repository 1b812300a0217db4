"""Graded nilpotent Lie algebras given by sparse rational structure constants."""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact import nullspace, rank, rat, ratstr, rref


class GradedLieAlgebra:
    """A Lie algebra on a labelled basis with a bidegree attached to each element.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to ``{k: coeff}``.  Single-graded
    algebras use bidegree ``(d, d)``.
    """

    def __init__(self, labels: Sequence[str], bidegrees: Sequence[Sequence[int]],
                 brackets: dict | None = None, name: str | None = None):
        if len(labels) != len(bidegrees):
            raise ValueError("labels and bidegrees differ in length")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate basis labels")
        self.labels = tuple(labels)
        self.bidegrees = tuple((int(a), int(b)) for a, b in bidegrees)
        self.name = name
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in (brackets or {}).items():
            self._store(i, j, terms)

    # -- construction ----------------------------------------------------

    def _store(self, i: int, j: int, terms: dict):
        n = self.dim
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"bracket index out of range: ({i},{j})")
        if i == j:
            if any(rat(c) for c in terms.values()):
                raise ValueError("nonzero self-bracket")
            return
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        clean = {}
        for k, c in terms.items():
            c = rat(c)
            if not 0 <= k < n:
                raise ValueError(f"bracket target out of range: {k}")
            if c:
                clean[k] = sign * c
        if clean:
            self.brackets[(i, j)] = dict(sorted(clean.items()))
        else:
            self.brackets.pop((i, j), None)

    @classmethod
    def from_table(cls, labels, bidegrees, table: Iterable, name=None) -> "GradedLieAlgebra":
        """Build from ``(left_label, right_label, {target_label: coeff})`` triples."""
        alg = cls(labels, bidegrees, name=name)
        for left, right, terms in table:
            i, j = alg.index(left), alg.index(right)
            key = (min(i, j), max(i, j))
            sign = 1 if i < j else -1
            merged = dict(alg.brackets.get(key, {}))
            for lab, c in terms.items():
                t = alg.index(lab)
                merged[t] = merged.get(t, Fraction(0)) + sign * rat(c)
            alg._store(key[0], key[1], merged)
        return alg

    # -- access ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no basis element labelled {label!r}") from None

    def has(self, label: str) -> bool:
        return label in self._index

    def basis_bracket(self, i: int, j: int) -> dict[int, Fraction]:
        if i < j:
            return self.brackets.get((i, j), {})
        if i > j:
            return {k: -c for k, c in self.brackets.get((j, i), {}).items()}
        return {}

    def unit(self, i: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def vec(self, label: str) -> list[Fraction]:
        return self.unit(self.index(label))

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        nu = [(i, c) for i, c in enumerate(u) if c]
        nv = [(j, c) for j, c in enumerate(v) if c]
        for i, a in nu:
            for j, b in nv:
                for k, c in self.basis_bracket(i, j).items():
                    out[k] += a * b * c
        return out

    def ad(self, u: Sequence) -> list[list[Fraction]]:
        cols = [self.bracket(u, self.unit(j)) for j in range(self.dim)]
        return [list(r) for r in zip(*cols)]

    def degree2(self, i: int) -> int:
        return self.bidegrees[i][1]

    # -- checks ----------------------------------------------------------

    def grading_violations(self) -> list[tuple[str, str, str]]:
        bad = []
        for (i, j), terms in self.brackets.items():
            want = (self.bidegrees[i][0] + self.bidegrees[j][0],
                    self.bidegrees[i][1] + self.bidegrees[j][1])
            for k in terms:
                if self.bidegrees[k] != want:
                    bad.append((self.labels[i], self.labels[j], self.labels[k]))
        return bad

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "basis": [{"label": lab, "bidegree": list(bd)}
                      for lab, bd in zip(self.labels, self.bidegrees)],
            "brackets": [{"i": i, "j": j,
                          "terms": [{"k": k, "c": ratstr(c)} for k, c in terms.items()]}
                         for (i, j), terms in sorted(self.brackets.items())],
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict, name=None) -> "GradedLieAlgebra":
        try:
            basis = data["basis"]
            labels = [b["label"] for b in basis]
            bidegrees = [tuple(b["bidegree"]) for b in basis]
            if "dim" in data and data["dim"] != len(labels):
                raise ValueError("dim does not match basis length")
            if any(len(bd) != 2 for bd in bidegrees):
                raise ValueError("bidegree must be a pair")
            alg = cls(labels, bidegrees, name=name)
            for br in data.get("brackets", []):
                i, j = int(br["i"]), int(br["j"])
                if i >= j:
                    raise ValueError("brackets must be stored with i < j")
                if (i, j) in alg.brackets:
                    raise ValueError(f"duplicate bracket ({i},{j})")
                terms = {}
                for t in br["terms"]:
                    k = int(t["k"])
                    terms[k] = terms.get(k, Fraction(0)) + rat(t["c"])
                alg._store(i, j, terms)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed algebra JSON: {exc}") from exc
        return alg

    @classmethod
    def from_json(cls, text: str) -> "GradedLieAlgebra":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"GradedLieAlgebra({self.name or 'anonymous'}, dim={self.dim})"


# ---------------------------------------------------------------------------
# Jacobi

def jacobi_residual(a: GradedLieAlgebra) -> tuple[Fraction, tuple[str, str, str] | None]:
    """Largest absolute coefficient of a cyclic Jacobi sum, with the first offending triple."""
    worst, witness = Fraction(0), None
    n = a.dim
    for i, j, l in combinations(range(n), 3):
        acc: dict[int, Fraction] = {}
        for p, q, r in ((i, j, l), (j, l, i), (l, i, j)):
            for s, c in a.basis_bracket(p, q).items():
                for t, d in a.basis_bracket(s, r).items():
                    acc[t] = acc.get(t, Fraction(0)) + c * d
        m = max((abs(v) for v in acc.values()), default=Fraction(0))
        if m > worst:
            if witness is None:
                witness = (a.labels[i], a.labels[j], a.labels[l])
            worst = m
    return worst, witness


# ---------------------------------------------------------------------------
# subspaces

class Subspace:
    """Subspace of a Lie algebra, kept as a reduced echelon basis."""

    def __init__(self, parent: GradedLieAlgebra, vectors: Iterable[Sequence] = ()):
        self.parent = parent
        vecs = [[rat(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != parent.dim:
                raise ValueError("vector length does not match algebra dimension")
        rows, _ = rref(vecs, parent.dim) if vecs else ([], [])
        self.basis = [tuple(r) for r in rows]

    @classmethod
    def span(cls, parent: GradedLieAlgebra, labels: Iterable[str]) -> "Subspace":
        return cls(parent, [parent.vec(lab) for lab in labels])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.parent, list(self.basis) + list(other.basis))

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def contains(self, v: Sequence) -> bool:
        return rank(list(self.basis) + [list(map(rat, v))], self.parent.dim) == self.dim

    def issubset(self, other: "Subspace") -> bool:
        return (self + other).dim == other.dim

    def bracket_with(self, other: "Subspace") -> "Subspace":
        a = self.parent
        return Subspace(a, [a.bracket(u, v) for u in self.basis for v in other.basis])

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


def weak_derived_flag(d: Subspace) -> list[int]:
    """Dimensions of D, D + [D, D], ... until the sequence stops growing."""
    if d.dim == 0:
        raise ValueError("weak derived flag of the zero subspace")
    dims = [d.dim]
    cur = d
    while True:
        nxt = cur + d.bracket_with(cur)
        if nxt.dim == cur.dim:
            return dims
        dims.append(nxt.dim)
        cur = nxt


def square_check(a: GradedLieAlgebra, sub: Subspace, target: Subspace) -> bool:
    """True iff sub + [sub, sub] equals target."""
    return sub + sub.bracket_with(sub) == target


# ---------------------------------------------------------------------------
# derivations

def degree_zero_derivations(a: GradedLieAlgebra) -> tuple[int, list[list[list[Fraction]]]]:
    """Derivations preserving the second grading component, as (dimension, matrices).

    Each matrix ``D`` acts on column vectors: ``D[i][j]`` is the coefficient of
    basis element ``i`` in the image of basis element ``j``.
    """
    n = a.dim
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(a.degree2(i), []).append(i)
    unknowns = [(i, j) for j in range(n) for i in blocks[a.degree2(j)]]
    col = {u: t for t, u in enumerate(unknowns)}
    nvar = len(unknowns)
    rows = []
    for p, q in combinations(range(n), 2):
        target = a.degree2(p) + a.degree2(q)
        outs = blocks.get(target, [])
        if not outs:
            continue
        eqs: dict[int, dict[int, Fraction]] = {o: {} for o in outs}

        def add(o, var, c):
            if o in eqs:
                e = eqs[o]
                e[var] = e.get(var, Fraction(0)) + c

        # D[e_p, e_q]
        for s, c in a.basis_bracket(p, q).items():
            for o in blocks[a.degree2(s)]:
                add(o, col[(o, s)], c)
        # - [D e_p, e_q]
        for s in blocks[a.degree2(p)]:
            for o, c in a.basis_bracket(s, q).items():
                add(o, col[(s, p)], -c)
        # - [e_p, D e_q]
        for s in blocks[a.degree2(q)]:
            for o, c in a.basis_bracket(p, s).items():
                add(o, col[(s, q)], -c)
        for e in eqs.values():
            if any(e.values()):
                row = [Fraction(0)] * nvar
                for var, c in e.items():
                    row[var] = c
                rows.append(row)
    sols = nullspace(rows, nvar)
    mats = []
    for s in sols:
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), t in col.items():
            m[i][j] = s[t]
        mats.append(m)
    return len(mats), mats


def is_derivation(a: GradedLieAlgebra, d: Sequence[Sequence]) -> bool:
    n = a.dim
    cols = [[d[i][j] for i in range(n)] for j in range(n)]

    def apply(v):
        out = [Fraction(0)] * n
        for j, c in enumerate(v):
            if c:
                for i in range(n):
                    out[i] += c * cols[j][i]
        return out

    for p, q in combinations(range(n), 2):
        lhs = apply(a.bracket(a.unit(p), a.unit(q)))
        rhs1 = a.bracket(cols[p], a.unit(q))
        rhs2 = a.bracket(a.unit(p), cols[q])
        if any(x != y + z for x, y, z in zip(lhs, rhs1, rhs2)):
            return False
    return True


# ---------------------------------------------------------------------------
# catalog

def _symb(k: int) -> GradedLieAlgebra:
    if k < 1:
        raise ValueError("symb(k) needs k >= 1")
    labels = [f"x{i}" for i in range(k + 1)] + [f"y{j}" for j in range(1, k + 1)] + ["z", "n"]
    bideg = [(-1, -1)] * (2 * k + 1) + [(-2, -2)] * 2
    table = []
    for i in range(k):
        table.append((f"x{i}", f"y{k - i}", {"z": 1}))
        table.append((f"x{i + 1}", f"y{k - i}", {"n": 1}))
    return GradedLieAlgebra.from_table(labels, bideg, table, name=f"symb({k})")


def _m7_3_3() -> GradedLieAlgebra:
    labels = ["x0", "x1", "x2", "y1", "y2", "z", "n"]
    bideg = [(-1, -1)] * 3 + [(-2, -2)] * 2 + [(-3, -3)] * 2
    table = [("x0", "x1", {"y1": 1}), ("x0", "x2", {"y2": 1})]
    for i in range(2):
        table.append((f"x{i}", f"y{2 - i}", {"z": 1}))
        table.append((f"x{i + 1}", f"y{2 - i}", {"n": 1}))
    return GradedLieAlgebra.from_table(labels, bideg, table, name="m7_3_3")


def model_algebra(k: int, w: int, c: dict[tuple[int, int], Fraction],
                  name: str | None = None) -> GradedLieAlgebra:
    """The nilpotent algebra spanned by x_0..x_k, y_1..y_k, z, n for a c-matrix.

    ``c`` maps ``(i, j)`` with ``i < j`` to the coefficient of
    ``y_{i+j-w+1}`` in ``[x_i, x_j]``.
    """
    labels = ([f"x{i}" for i in range(k + 1)] + [f"y{j}" for j in range(1, k + 1)]
              + ["z", "n"])
    bideg = ([(-i, -1) for i in range(k + 1)]
             + [(-(w + j - 1), -2) for j in range(1, k + 1)]
             + [(-(w + k - 1), -3), (-w - k, -3)])
    table = []
    for i in range(k):
        table.append((f"x{i}", f"y{k - i}", {"z": (-1) ** i}))
    for i in range(1, k + 1):
        table.append((f"x{i}", f"y{k - i + 1}", {"n": (-1) ** (i + 1) * i}))
    for (i, j), v in sorted(c.items()):
        v = rat(v)
        if not v:
            continue
        t = i + j - w + 1
        if not 1 <= t <= k:
            raise ValueError(f"c[{i},{j}] is outside the admissible anti-diagonals")
        table.append((f"x{i}", f"x{j}", {f"y{t}": v}))
    return GradedLieAlgebra.from_table(labels, bideg, table, name=name)


_TABLE_K3 = {(0, 1): 1, (0, 2): 1, (0, 3): 3, (1, 2): -2}
_TABLE_K4 = {(0, 1): 1, (0, 2): 1, (0, 3): Fraction(-3, 2), (0, 4): -4,
             (1, 2): Fraction(5, 2), (1, 3): Fraction(5, 2)}
_TABLE_K6 = {(0, 1): Fraction(-10, 7), (0, 2): Fraction(-10, 7), (0, 3): Fraction(-3, 7),
             (0, 4): Fraction(4, 7), (0, 5): Fraction(25, 7), (0, 6): Fraction(60, 7),
             (1, 2): -1, (1, 3): -1, (1, 4): -3, (1, 5): -5, (2, 3): 2, (2, 4): 2}

MODEL_TABLES = {3: _TABLE_K3, 4: _TABLE_K4, 6: _TABLE_K6}


def model_table(k: int) -> dict[tuple[int, int], Fraction]:
    """Tabulated c-matrix of the unique maximally symmetric model for k in {3, 4, 6}."""
    return {key: rat(v) for key, v in MODEL_TABLES[k].items()}


def builtin_names() -> list[str]:
    return ["symb(k)", "m7_3_3", "k3", "k4", "k6"]


def builtin_model(name: str) -> GradedLieAlgebra:
    name = name.strip()
    if name.startswith("symb"):
        inner = name[4:].strip("() ")
        try:
            k = int(inner)
        except ValueError:
            raise ValueError(f"symb needs an integer argument, got {name!r}") from None
        return _symb(k)
    if name == "m7_3_3":
        return _m7_3_3()
    if name in ("k3", "k4", "k6"):
        k = int(name[1:])
        return model_algebra(k, 1, model_table(k), name=name)
    raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(builtin_names())}")
