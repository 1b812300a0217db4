from fractions import Fraction as F

import pytest

from corank2.liealg import (GradedLieAlgebra, Subspace, builtin_model, degree_zero_derivations,
                            is_derivation, jacobi_residual, model_algebra, model_table,
                            square_check, weak_derived_flag)
from corank2.sl2rep import build_mk


def abelian(n):
    return GradedLieAlgebra([f"e{i}" for i in range(n)], [(-1, -1)] * n)


def heisenberg():
    return GradedLieAlgebra.from_table(["p", "q", "r"], [(-1, -1), (-1, -1), (-2, -2)],
                                       [("p", "q", {"r": 1})])


def xs(a):
    return Subspace.span(a, [lab for lab in a.labels if lab.startswith("x")])


def xys(a):
    return Subspace.span(a, [lab for lab in a.labels if lab[0] in "xy"])


def test_jacobi_examples():
    assert jacobi_residual(abelian(4)) == (0, None)
    assert jacobi_residual(builtin_model("k6"))[0] == 0
    table = model_table(3)
    table[(1, 2)] = F(-1)
    res, wit = jacobi_residual(model_algebra(3, 1, table))
    assert res != 0 and wit == ("x0", "x1", "x2")


def test_bracket_antisymmetry_and_lookup():
    k4 = builtin_model("k4")
    assert k4.dim == 11
    x1, x3 = k4.vec("x1"), k4.vec("x3")
    assert k4.bracket(x1, x3) == [F(5, 2) * v for v in k4.vec("y4")]
    assert k4.bracket(x3, x1) == [-F(5, 2) * v for v in k4.vec("y4")]


def test_m7_3_3_table():
    m = builtin_model("m7_3_3")
    assert m.dim == 7
    br = lambda p, q: m.bracket(m.vec(p), m.vec(q))
    assert br("x0", "x1") == m.vec("y1")
    assert br("x0", "x2") == m.vec("y2")
    for i in range(3):
        if 2 - i >= 1:
            assert br(f"x{i}", f"y{2 - i}") == m.vec("z")
            assert br(f"x{i + 1}", f"y{2 - i}") == m.vec("n")


def test_growth_vectors():
    m = builtin_model("m7_3_3")
    assert weak_derived_flag(Subspace.span(m, ["x0", "x1", "x2"])) == [3, 5, 7]
    assert weak_derived_flag(xs(builtin_model("k3"))) == [4, 7, 9]
    assert weak_derived_flag(Subspace.span(abelian(3), ["e0", "e1"])) == [2]
    s2 = builtin_model("symb(2)")
    assert s2.dim == 7 and weak_derived_flag(xys(s2)) == [5, 7]


def test_square_check_examples():
    k3 = builtin_model("k3")
    assert square_check(k3, xs(k3), xys(k3))
    assert not square_check(k3, Subspace.span(k3, ["x0", "x1"]), xys(k3))
    s = builtin_model("symb(3)")
    assert square_check(s, xs(s), xs(s))


def test_degree_zero_derivations():
    assert degree_zero_derivations(abelian(3))[0] == 9
    dim, mats = degree_zero_derivations(heisenberg())
    assert dim == 4
    assert all(is_derivation(heisenberg(), D) for D in mats)
    assert degree_zero_derivations(build_mk(5))[0] >= 4


def test_json_round_trip_and_validation():
    k6 = builtin_model("k6")
    again = GradedLieAlgebra.from_json(k6.to_json())
    assert again.labels == k6.labels and again.brackets == k6.brackets
    bad = k6.to_dict()
    bad["dim"] = 3
    with pytest.raises(ValueError):
        GradedLieAlgebra.from_dict(bad)
    with pytest.raises(ValueError):
        GradedLieAlgebra.from_dict({"basis": [{"label": "a"}]})
    with pytest.raises(ValueError):
        GradedLieAlgebra(["a", "a"], [(0, 0), (0, 0)])


def test_builtin_catalog():
    for name in ("symb(1)", "symb(4)", "m7_3_3", "k3", "k4", "k6"):
        a = builtin_model(name)
        assert jacobi_residual(a)[0] == 0 and not a.grading_violations()
    with pytest.raises(ValueError):
        builtin_model("k5")


@pytest.mark.parametrize("k", [2, 3, 5])
def test_symbol_algebra_is_fundamental(k):
    s = builtin_model(f"symb({k})")
    assert weak_derived_flag(xys(s)) == [2 * k + 1, 2 * k + 3]


def test_subspace_algebra():
    k3 = builtin_model("k3")
    a = Subspace.span(k3, ["x0", "x1"])
    b = Subspace.span(k3, ["x1", "x2"])
    assert (a + b).dim == 3
    assert a.issubset(a + b) and not (a + b).issubset(a)
    assert a.bracket_with(b).dim == 3  # y1, y2, y3
