import pytest

from corank2 import bigraded as bg
from corank2.liealg import jacobi_residual
from corank2.sl2rep import (MultiplicityError, build_mk, cg_projection, decompose,
                            equivariance_defect, extract_c, irreducible, n_count, tensor, wedge,
                            wedge3_multiplicity)


def test_irreducibles():
    V1 = irreducible(1)
    assert V1.dim == 2 and V1.weights == [1, -1]
    assert irreducible(5).dim == 6
    for k in range(6):
        assert irreducible(k).is_valid()
    with pytest.raises(ValueError):
        irreducible(-1)


def test_decomposition_examples():
    assert decompose(tensor(irreducible(2), irreducible(1))) == [(3, 1), (1, 1)]
    assert decompose(wedge(irreducible(5), 2)) == [(8, 1), (4, 1), (0, 1)]
    for k in range(4):
        assert decompose(tensor(irreducible(k), irreducible(0))) == [(k, 1)]


def test_constructed_modules_are_modules():
    assert tensor(irreducible(3), irreducible(2)).is_valid()
    assert wedge(irreducible(4), 3).is_valid()


def test_counting():
    assert n_count(5, 1) == 3 and n_count(5, 3) == 3
    assert n_count(3, 1) == 1
    assert wedge3_multiplicity(5, 1) == 0


def test_projections():
    src = tensor(irreducible(3), irreducible(0))
    P = cg_projection(src, 3)
    assert P == [[int(i == j) for j in range(4)] for i in range(4)]
    w2 = wedge(irreducible(2), 2)
    tau = cg_projection(w2, 2)
    assert not equivariance_defect(tau, w2, irreducible(2))
    with pytest.raises(MultiplicityError):
        cg_projection(tensor(irreducible(2), irreducible(2)), 7)


def test_mk_small():
    m5 = build_mk(5)
    assert m5.dim == 13
    assert jacobi_residual(m5)[0] == 0
    assert build_mk(9).dim == 21
    with pytest.raises(ValueError):
        build_mk(7)
    with pytest.raises(ValueError):
        build_mk(1)


def test_extract_c_matches_family():
    ok, lam = bg.compare_projective(bg.solve_family(5, 3).normalized_c, extract_c(build_mk(5)))
    assert ok and lam
