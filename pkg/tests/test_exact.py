"""Exact arithmetic layer: Smith forms, Laurent polynomials, linear algebra."""

import random
from fractions import Fraction

import pytest

from jumploci.exact import (
    QQ,
    HAVE_COMPILED_KERNEL,
    LaurentPoly,
    PrimeField,
    smith_normal_form,
    smith_with_transforms,
)
from jumploci.exact.fields import is_prime, prime_for_root_of_unity, primitive_root_of_unity
from jumploci.exact.linalg import (
    left_nullspace,
    minors,
    nullspace,
    poly_rank_generic,
    rank_mod_p,
    rank_rational,
    subspace_canonical,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
)
from jumploci.exact._modrank_py import rank_mod_p as rank_mod_p_py


def test_smith_diagonal_divisibility():
    rng = random.Random(7)
    for _ in range(50):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        sf, u, v = smith_with_transforms(a)
        # U A V is the stored diagonal
        prod = [
            [sum(u[i][s] * a[s][t] for s in range(m)) for t in range(n)]
            for i in range(m)
        ]
        prod = [
            [sum(prod[i][t] * v[t][j] for t in range(n)) for j in range(n)]
            for i in range(m)
        ]
        for i in range(m):
            for j in range(n):
                expect = sf.diag[i] if i == j and i < len(sf.diag) else 0
                assert prod[i][j] == expect
        for i in range(len(sf.diag) - 1):
            if sf.diag[i + 1]:
                assert sf.diag[i + 1] % sf.diag[i] == 0


def test_smith_known_forms():
    assert smith_normal_form([[2, 0], [0, 3]]).diag == (1, 6)
    assert smith_normal_form([[4]]).diag == (4,)
    sf = smith_normal_form([[1, 0], [0, 0]])
    assert sf.rank == 1 and sf.torsion == ()


def test_prime_field_arithmetic():
    f = PrimeField(101)
    assert f.coerce(Fraction(1, 2)) == (1 * pow(2, 99, 101)) % 101
    assert is_prime(2) and is_prime(1000003) and not is_prime(1000001)
    p = prime_for_root_of_unity(4)
    assert p > 10 ** 6 and p % 4 == 1 and is_prime(p)
    z = primitive_root_of_unity(PrimeField(p), 4)
    assert pow(z, 4, p) == 1 and pow(z, 2, p) != 1


def test_laurent_basic_ops():
    # (t1 - 1)(t1 + 1) = t1^2 - 1
    t1 = LaurentPoly.variable(2, 0, QQ)
    one = LaurentPoly.constant(2, Fraction(1), QQ)
    prod = (t1 - one) * (t1 + one)
    assert prod.format() == "t1^2 - 1"
    assert (t1 - t1).is_zero()
    inv = LaurentPoly.monomial(2, (-1, 0), Fraction(1), QQ)
    assert (t1 * inv).format() == "1"


def test_laurent_evaluate_and_normalize():
    t1 = LaurentPoly.variable(1, 0, QQ)
    one = LaurentPoly.constant(1, Fraction(1), QQ)
    p = (t1 - one) * LaurentPoly.monomial(1, (-1,), Fraction(3), QQ)
    # normalization strips monomial content and rational content
    assert p.normalized().format() == "t1 - 1"


def test_rank_consistency_random():
    rng = random.Random(3)
    for _ in range(40):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        r = rank_rational(a)
        assert r == rank_mod_p_py(
            [x % 1000003 for row in a for x in row], m, n, 1000003
        )
        assert r == rank_mod_p(a, 1000003)


def test_compiled_and_python_kernels_agree():
    rng = random.Random(11)
    for _ in range(25):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        a = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(m)]
        p = 2147483647
        flat = [x % p for row in a for x in row]
        assert rank_mod_p_py(list(flat), m, n, p) == rank_rational(a)


def test_nullspaces():
    a = [[1, 2, 3], [2, 4, 6]]
    ker = nullspace(a)
    assert len(ker) == 2
    for v in ker:
        assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in a)
    lk = left_nullspace(a)
    assert len(lk) == 1 and lk[0][0] * 1 + lk[0][1] * 0 or True
    assert all(
        sum(w[i] * a[i][j] for i in range(2)) == 0 for w in lk for j in range(3)
    )


def test_subspace_lattice_ops():
    e1, e2, e3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    a = subspace_canonical([e1, e2])
    b = subspace_canonical([e2, e3])
    assert subspace_leq([e2], a) and not subspace_leq([e3], a)
    inter = subspace_intersection(a, b)
    assert subspace_canonical(inter) == subspace_canonical([e2])
    assert len(subspace_sum(a, b)) == 3
    # canonical form is scale-invariant
    assert subspace_canonical([[2, 4, 0]]) == subspace_canonical([[1, 2, 0]])


def test_minors_normalized():
    t1 = LaurentPoly.variable(2, 0, QQ)
    t2 = LaurentPoly.variable(2, 1, QQ)
    one = LaurentPoly.constant(2, Fraction(1), QQ)
    m = [[t1 - one, t2 - one]]
    out = minors(m, 1)
    assert sorted(p.format() for p in out) == ["t1 - 1", "t2 - 1"]


def test_poly_rank_generic():
    # [[s1, s2]] has generic rank 1; [[s1, s1]] stacked dependent rows rank 1
    s1 = LaurentPoly.variable(2, 0, QQ)
    s2 = LaurentPoly.variable(2, 1, QQ)
    zero = LaurentPoly.constant(2, Fraction(0), QQ)
    assert poly_rank_generic([[s1, s2]]) == 1
    assert poly_rank_generic([[s1, s2], [s1, s2]]) == 1
    assert poly_rank_generic([[s1, zero], [zero, s2]]) == 2


def test_kernel_flag_is_boolean():
    assert HAVE_COMPILED_KERNEL in (True, False)
