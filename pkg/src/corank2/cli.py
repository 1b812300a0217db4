"""Command-line front end: ``corank2 <verb> [flags]``.

Exit status: 0 success, 1 a verification failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bigraded as bg
from .exact import ratstr
from .invariants import FrameAlgebra, dim_A_mod_H, invariant_report
from .liealg import (GradedLieAlgebra, Subspace, builtin_model, jacobi_residual,
                     weak_derived_flag)
from .pencil import SkewPencil, g1_check, kronecker_index, symbol_pencil, xp_polynomial
from .sl2rep import (build_mk, decomposition_report, irreducible, n_count, tensor, wedge,
                     wedge3_multiplicity)

DEFAULT_MAX_K = 14
VERBS = ("classify", "family", "verify", "pencil", "sl2", "invariants", "builtin", "sweep")


class InputError(Exception):
    """Malformed or missing input (exit status 2)."""


class Failure(Exception):
    """A verification did not pass (exit status 1); carries the report."""

    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def max_k() -> int:
    raw = os.environ.get("CORANK2_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"CORANK2_MAX_K must be an integer, got {raw!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"{args.verb} requires " + ", ".join("--" + m for m in missing))


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def resolve_builtin(name: str) -> GradedLieAlgebra:
    """Catalog names plus ``mk(k)`` for the sl2-built algebras."""
    if name.startswith("mk"):
        try:
            k = int(name[2:].strip("() "))
        except ValueError:
            raise InputError(f"mk needs an integer argument, got {name!r}") from None
        alg = build_mk(k)
        alg.name = name
        return alg
    return builtin_model(name)


def _low_span(a: GradedLieAlgebra) -> Subspace:
    top = max(a.degree2(i) for i in range(a.dim))
    return Subspace(a, [a.unit(i) for i in range(a.dim) if a.degree2(i) == top])


# ---------------------------------------------------------------------------
# verbs

def cmd_classify(args) -> dict:
    _need(args, "k")
    k = args.k
    rows = []
    for w in range(1, 2 * k, 2):
        fam = bg.solve_family(k, w)
        rows.append({"w": w, "d": bg.d_kw(k, w), "oracle_dim": fam.oracle_dim,
                     "family_dim": fam.family_dim, "nonempty": not fam.empty})
    report = {"k": k, "families": rows,
              "nonempty_w": [r["w"] for r in rows if r["nonempty"]]}
    if any(r["oracle_dim"] != max(r["d"] + 1, 0) for r in rows):
        raise Failure(report)
    return report


def cmd_family(args) -> dict:
    _need(args, "k", "w")
    return bg.solve_family(args.k, args.w).to_dict()


def _verify_algebra(a: GradedLieAlgebra, name: str) -> dict:
    res, wit = jacobi_residual(a)
    bad = a.grading_violations()
    report = {"name": name, "dim": a.dim, "jacobi_residual": ratstr(res),
              "witness": list(wit) if wit else None, "grading_ok": not bad,
              "growth": weak_derived_flag(_low_span(a))}
    if res or bad:
        raise Failure(report)
    return report


def _verify_cmatrix(c: bg.CMatrix) -> dict:
    try:
        frame = bg.assemble_frame(c)
    except bg.JacobiError as exc:
        raise Failure({"k": c.k, "w": c.w, "jacobi_ok": False,
                       "witness": list(exc.witness) if exc.witness else None})
    model = bg.model_algebra(c.k, c.w, c.entries)
    xs = Subspace.span(model, [f"x{i}" for i in range(c.k + 1)])
    report = {"k": c.k, "w": c.w, "jacobi_ok": True, "frame_dim": frame.dim,
              "growth": weak_derived_flag(xs), "c0w": ratstr(c[0, c.w])}
    return report


def _verify_family(data: dict) -> dict:
    """Recompute the family and check the stored point and dimension against it."""
    k, w = int(data["k"]), int(data["w"])
    fam = bg.solve_family(k, w)
    claimed_dim = data.get("family_dim")
    if data["normalized_c"] is None:
        report = {"k": k, "w": w, "empty": True, "confirmed": fam.empty}
        if not fam.empty:
            raise Failure(report)
        return report
    c = bg.CMatrix.from_dict({"k": k, "w": w, "c": data["normalized_c"]})
    report = _verify_cmatrix(c)
    report["family_dim"] = fam.family_dim
    if claimed_dim is not None and claimed_dim != fam.family_dim:
        raise Failure(report)
    return report


def cmd_verify(args) -> dict:
    if args.builtin is not None:
        return _verify_algebra(resolve_builtin(args.builtin), args.builtin)
    _need(args, "input")
    data = _read_json(args.input)
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    if "basis" in data:
        return _verify_algebra(GradedLieAlgebra.from_dict(data), args.input)
    if "normalized_c" in data:
        return _verify_family(data)
    if "c" in data:
        return _verify_cmatrix(bg.CMatrix.from_dict(data))
    raise InputError("unrecognized JSON: expected an algebra, a family or a c-matrix")


def cmd_pencil(args) -> dict:
    if args.input is not None:
        P = SkewPencil.from_dict(_read_json(args.input))
    elif args.k is not None:
        P = symbol_pencil(args.k)
    else:
        raise InputError("pencil requires --in or --k")
    return {"k": P.k, "xp": xp_polynomial(P).to_dict(), "kronecker_index": kronecker_index(P),
            "g1": g1_check(P).to_dict()}


def cmd_sl2(args) -> dict:
    _need(args, "k")
    k = args.k
    Vk = irreducible(k)
    report = {"k": k}
    if args.l is not None:
        report["tensor"] = decomposition_report(tensor(Vk, irreducible(args.l)))
    report["wedge2"] = decomposition_report(wedge(Vk, 2))
    report["wedge3"] = decomposition_report(wedge(Vk, 3))
    report["N_k(1)"], report["N_k(3)"] = n_count(k, 1), n_count(k, 3)
    report["wedge3_V1_multiplicity"] = wedge3_multiplicity(k, 1)
    return report


def cmd_invariants(args) -> dict:
    if args.builtin is not None:
        alg = resolve_builtin(args.builtin)
        if not args.builtin.startswith("mk"):
            raise InputError("invariants --builtin expects mk(k)")
        from .sl2rep import extract_c
        c = extract_c(alg)
    else:
        _need(args, "k", "w")
        fam = bg.solve_family(args.k, args.w)
        if fam.empty:
            raise Failure({"k": args.k, "w": args.w, "empty": True})
        c = fam.normalized_c
    f = FrameAlgebra.from_cmatrix(c)
    report = invariant_report(f)
    report["dimA_mod_H"] = dim_A_mod_H(f)
    return report


def cmd_builtin(args) -> dict:
    _need(args, "builtin")
    return resolve_builtin(args.builtin).to_dict()


def cmd_sweep(args) -> dict:
    bound = max_k()
    kmax = args.kmax if args.kmax is not None else bound
    if kmax > bound:
        raise InputError(f"--kmax {kmax} exceeds the bound {bound} (set CORANK2_MAX_K)")
    rows = []
    for k in range(3, kmax + 1):
        for w in range(1, 2 * k, 2):
            d = bg.d_kw(k, w)
            od = bg.oracle_dim(k, w)
            cd = bg.chain_dim(k, w)
            rows.append({"k": k, "w": w, "d": d, "oracle_dim": od, "chain_dim": cd,
                         "agree": od == max(d + 1, 0) == cd,
                         "frame_dim": (2 * k + 7 if bg.has_c_element(k, w) else 2 * k + 6)
                         if od else None})
    mismatches = sum(1 for r in rows if not r["agree"])
    report = {"kmax": kmax, "rows": rows, "mismatches": mismatches}
    if mismatches:
        raise Failure(report)
    return report


HANDLERS = {"classify": cmd_classify, "family": cmd_family, "verify": cmd_verify,
            "pencil": cmd_pencil, "sl2": cmd_sl2, "invariants": cmd_invariants,
            "builtin": cmd_builtin, "sweep": cmd_sweep}


# ---------------------------------------------------------------------------
# output

def _table(rows: list[dict]) -> str:
    cols = list(rows[0])
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    width = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(cols, width))]
    lines += ["  ".join(v.rjust(wd) for v, wd in zip(row, width)) for row in cells]
    return "\n".join(lines)


def render(report: dict, pretty: bool) -> str:
    if not pretty:
        return json.dumps(report)
    parts = []
    for key, val in report.items():
        if isinstance(val, list) and val and all(isinstance(v, dict) for v in val):
            parts.append(f"{key}:\n{_table(val)}")
        else:
            parts.append(f"{key}: {json.dumps(val)}")
    return "\n".join(parts)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="corank2",
                                description="Exact invariants of corank-2 distributions "
                                            "and type-(k,w) bi-graded Lie algebras.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--k", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--l", type=int, help="second factor for sl2 tensor products")
    p.add_argument("--in", dest="input", metavar="FILE")
    p.add_argument("--builtin", metavar="NAME")
    p.add_argument("--kmax", type=int)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--out", metavar="FILE")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    status = 0
    try:
        report = HANDLERS[args.verb](args)
    except Failure as exc:
        report, status = exc.report, 1
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"corank2 {args.verb}: {exc}", file=sys.stderr)
        return 2
    text = render(report, args.pretty)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
