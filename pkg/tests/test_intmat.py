import random

from metaplectic.intmat import (
    smith_normal_form,
    hnf_rows,
    left_kernel,
    solve_left,
    int_inverse,
    bareiss_det,
    mat_mul,
    identity,
    frac_solve_left,
)
from metaplectic.lattices import Lattice, FiniteQuotient, full_lattice


def random_matrix(rng, rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_snf_reconstruction_and_divisibility():
    rng = random.Random(7)
    for _ in range(120):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = random_matrix(rng, rows, cols)
        d, u, v = smith_normal_form(a)
        prod = mat_mul(mat_mul(u, a), v)
        for i in range(rows):
            for j in range(cols):
                expect = d[i] if i == j and i < len(d) else 0
                assert prod[i][j] == expect
        for i in range(len(d) - 1):
            if d[i]:
                assert d[i + 1] % d[i] == 0
            else:
                assert d[i + 1] == 0
        if rows == cols:
            det = bareiss_det(a)
            p = 1
            for x in d:
                p *= x
            assert p == abs(det)


def test_snf_unimodular_transforms():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        d, u, v = smith_normal_form(a)
        assert abs(bareiss_det(u)) == 1
        assert abs(bareiss_det(v)) == 1


def test_solve_left_and_kernel():
    rng = random.Random(13)
    for _ in range(100):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = random_matrix(rng, rows, cols)
        x = [rng.randint(-5, 5) for _ in range(rows)]
        b = [sum(x[i] * a[i][j] for i in range(rows)) for j in range(cols)]
        sol = solve_left(a, b)
        assert sol is not None
        assert [sum(sol[i] * a[i][j] for i in range(rows)) for j in range(cols)] == b
        for k in left_kernel(a):
            assert all(sum(k[i] * a[i][j] for i in range(rows)) == 0 for j in range(cols))


def test_hnf_canonical_for_equal_row_spaces():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 4)
        a = random_matrix(rng, n, n)
        # unimodular mix of the rows leaves the row space unchanged
        u = identity(n)
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                q = rng.randint(-3, 3)
                u[i] = [x + q * y for x, y in zip(u[i], u[j])]
        b = mat_mul(u, a)
        assert hnf_rows(a) == hnf_rows(b)


def test_int_inverse():
    rng = random.Random(19)
    for _ in range(40):
        n = rng.randint(1, 5)
        u = identity(n)
        for _ in range(8):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                q = rng.randint(-3, 3)
                u[i] = [x + q * y for x, y in zip(u[i], u[j])]
        ui = int_inverse(u)
        assert mat_mul(u, ui) == identity(n)


def test_frac_solve_left():
    a = [[2, 1], [1, 1]]
    x = frac_solve_left(a, [3, 2])
    assert [x[0] * 2 + x[1] * 1, x[0] * 1 + x[1] * 1] == [3, 2]


def test_lattice_membership_sum_intersection():
    L1 = Lattice([[2, 0], [0, 3]])
    L2 = Lattice([[3, 0], [0, 2]])
    assert L1.contains([4, 3])
    assert not L1.contains([1, 0])
    s = L1.sum(L2)
    assert s.contains([1, 0]) and s.contains([0, 1])
    inter = L1.intersect(L2)
    assert inter == Lattice([[6, 0], [0, 6]])
    assert full_lattice(2).index_in(inter) == 36


def test_quotient_projection_and_counts():
    # Z^1 / 3Z, reflection y -> -y twisted by t = 1: solutions of 2z = 1 mod 3
    q = FiniteQuotient(Lattice([[3]]))
    assert q.cardinality == 3
    count = q.count_solutions([[2]], (1,))
    assert count == 1
    # identity map: every element solves z*0 = 0
    assert q.count_solutions([[0]], (0,)) == 3
    assert q.count_solutions([[0]], (1,)) == 0


def test_quotient_enumeration_matches_counts():
    q = FiniteQuotient(Lattice([[2, 0], [1, 4]]))
    assert q.cardinality == 8
    elems = list(q.elements())
    assert len(set(elems)) == 8
    # brute force a solvable equation z @ M = t against count_solutions
    m = [[1, 1], [0, 1]]
    mq = m
    t = (0, 0)
    brute = 0
    for z in elems:
        img = tuple(sum(z[i] * mq[i][j] for i in range(2)) % q.diag[j] for j in range(2))
        if img == t:
            brute += 1
    assert brute == q.count_solutions(mq, t)
