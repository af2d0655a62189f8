import random

from quasihopf.field import FieldSpec
from quasihopf.linalg import (Matrix, in_span, kernel_basis, mat_inverse,
                              rank, row_space_basis, same_span, solve_linear)

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def mk(field, rows):
    return Matrix(field, len(rows), len(rows[0]),
                  [[field.of(x) for x in r] for r in rows])


def test_kernel_rank_one_symmetric():
    assert kernel_basis(mk(Q, [[1, 1], [1, 1]])) == [[Q.of(1), Q.of(-1)]]


def test_kernel_of_identity_is_empty():
    assert kernel_basis(Matrix.identity(Q, 3)) == []


def test_kernel_over_f5_canonical():
    # 2 + 4*2 = 10 = 0 (mod 5); the canonical generator has leading 1
    basis = kernel_basis(mk(F5, [[2, 4]]))
    assert basis == [[F5.of(1), F5.of(2)]]
    # brute force: every kernel vector is a multiple of it
    for a in range(5):
        for b in range(5):
            if (2 * a + 4 * b) % 5 == 0 and (a, b) != (0, 0):
                assert in_span(basis, [F5.of(a), F5.of(b)], F5)


def test_solve_identity_and_pivot_free_zeroed():
    b = [Q.of(7), Q.of(-2)]
    assert solve_linear(Matrix.identity(Q, 2), b) == b
    assert solve_linear(mk(Q, [[1, 1]]), [Q.of(2)]) == [Q.of(2), Q.of(0)]


def test_solve_inconsistent_returns_none():
    assert solve_linear(mk(Q, [[1], [1]]), [Q.of(0), Q.of(1)]) is None


def test_inverse_examples():
    assert mat_inverse(Matrix.identity(Q, 3)) == Matrix.identity(Q, 3)
    swap = mk(Q, [[0, 1], [1, 0]])
    assert mat_inverse(swap) == swap
    assert mat_inverse(mk(Q, [[1, 1], [0, 1]])) == mk(Q, [[1, -1], [0, 1]])
    assert mat_inverse(mk(Q, [[1, 1], [1, 1]])) is None


def test_random_exactness_properties():
    rng = random.Random(20240817)
    for _ in range(25):
        n, m = rng.randrange(1, 5), rng.randrange(1, 5)
        a = mk(Q, [[rng.randrange(-3, 4) for _ in range(m)] for _ in range(n)])
        for v in kernel_basis(a):
            assert all(not x for x in a.apply(v))
        inv = mat_inverse(a) if n == m else None
        if inv is not None:
            assert inv * a == Matrix.identity(Q, n)
        b = [Q.of(rng.randrange(-3, 4)) for _ in range(n)]
        x = solve_linear(a, b)
        aug = Matrix(Q, n, m + 1)
        for i in range(n):
            aug.a[i][:m] = a.a[i]
            aug.a[i][m] = b[i]
        if rank(a) == rank(aug):
            assert x is not None and a.apply(x) == b
        else:
            assert x is None


def test_span_utilities():
    v1 = [Q.of(1), Q.of(2)]
    v2 = [Q.of(2), Q.of(4)]
    assert same_span([v1], [v2], Q, 2)
    assert row_space_basis([v2], Q, 2) == [[Q.of(1), Q.of(2)]]
    assert in_span([v1], v2, Q)
    assert not in_span([v1], [Q.of(1), Q.of(3)], Q)
