from fractions import Fraction as F

import pytest

from corank2.exact import (INF, UniPoly, binom, det, identity, interpolate, is_independent,
                           is_skew, matmul, nullspace, parse_rat, pfaffian, poly_gcd, rank,
                           ratstr, rref, solve, sturm_real_root_count, transpose, zeros)


def test_rational_strings_round_trip():
    for x in (F(0), F(3), F(-5, 7), F(22, 3)):
        assert parse_rat(ratstr(x)) == x
    assert ratstr(F(-3, 2)) == "-3/2"
    assert parse_rat("4") == 4
    with pytest.raises(ValueError):
        parse_rat("two")


def test_nullspace_examples():
    assert nullspace(identity(3)) == []
    assert len(nullspace(zeros(2, 3))) == 3
    (v,) = nullspace([[1, 1]])
    assert v[0] == -v[1] != 0


def test_nullspace_vectors_are_killed():
    m = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, -1, F(1, 2)]]
    ker = nullspace(m)
    assert len(ker) == 4 - rank(m)
    for v in ker:
        assert all(sum(F(a) * b for a, b in zip(row, v)) == 0 for row in m)
    assert is_independent(ker)


def test_rref_and_solve():
    rows, cols = rref([[2, 4], [1, 3]])
    assert rows == [[1, 0], [0, 1]] and cols == [0, 1]
    assert solve([[2, 4], [1, 3]], [2, 2]) == [F(-1), F(1)]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_det_bareiss():
    assert det([[1, 2], [3, 4]]) == -2
    assert det(identity(5)) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[1, 2], [2, 4]]) == 0
    m = [[F(1, 2), 3, 0], [1, 1, 1], [0, F(2, 3), 5]]
    assert det(matmul(m, transpose(m))) == det(m) ** 2


def test_pfaffian_examples():
    assert pfaffian([[0, F(7, 3)], [F(-7, 3), 0]]) == F(7, 3)
    J = zeros(4, 4)
    J[0][2], J[2][0], J[1][3], J[3][1] = 1, -1, 1, -1
    assert pfaffian(J) == -1 or pfaffian(J) == 1
    std = zeros(4, 4)
    std[0][1], std[1][0], std[2][3], std[3][2] = 1, -1, 1, -1
    assert pfaffian(std) == 1
    assert pfaffian([]) == 1


def test_pfaffian_rejects_bad_input():
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian(zeros(3, 3))


def test_pfaffian_large_path_matches_det():
    n = 14
    m = zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            v = F((i * 7 + j * 3) % 5 - 2, 1 + (i + j) % 2)
            m[i][j], m[j][i] = v, -v
    assert is_skew(m)
    assert pfaffian(m) ** 2 == det(m)


def test_binomial_examples():
    assert binom(5, 2) == 10
    assert binom(7, -1) == 0
    assert binom(F(1, 2), 2) == F(-1, 8)
    assert binom(3, 5) == 0
    assert binom(-2, 3) == -4


def test_sturm_examples():
    assert sturm_real_root_count(UniPoly([1, 0, 1])) == 0
    assert sturm_real_root_count(UniPoly([-2, 0, 1]), (-10, 10)) == 2
    assert sturm_real_root_count(UniPoly([0, -1, 0, 1]), (-2, F(1, 2))) == 2
    # repeated roots are counted once
    p = UniPoly.from_roots([1, 1, 2, -3])
    assert sturm_real_root_count(p) == 3
    assert sturm_real_root_count(p, (1, 2)) == 1  # half-open (1, 2]


def test_unipoly_arithmetic():
    a, b = UniPoly([1, 1]), UniPoly([-1, 1])
    assert a * b == UniPoly([-1, 0, 1])
    q, r = UniPoly([-1, 0, 1]).divmod(a)
    assert q == b and r.is_zero()
    assert poly_gcd(UniPoly.from_roots([1, 2]), UniPoly.from_roots([2, 3])).monic() == UniPoly([-2, 1])
    assert UniPoly([0, 0, 3]).derivative() == UniPoly([0, 6])
    assert UniPoly([1, 0, -1]).sign_at(INF) == -1
    assert UniPoly([1, 0, -1]).sign_at(-INF) == -1


def test_interpolate_recovers_polynomial():
    p = UniPoly([F(1, 2), -3, 0, 2])
    xs = [0, 1, 2, 3]
    assert interpolate(xs, [p(x) for x in xs]) == p
