"""Character tables against independent oracles.

The S_n oracle avoids Murnaghan-Nakayama entirely: permutation characters on
tabloids (fixed points counted by distributing cycles into rows) are
decomposed through the Kostka matrix, which is computed by enumerating
semistandard tableaux. The B_n oracle builds each irreducible as an induced
character from B_a x B_b and evaluates the induction formula by enumerating
the subgroup.
"""

import itertools
from fractions import Fraction

import pytest

from metaplectic.chars import (
    DemihyperTable,
    HyperoctahedralTable,
    SymmetricTable,
    check_orthogonality,
    d_label,
    hyp_char,
    inner_product,
    irreducible_vector,
    sym_char,
)
from metaplectic.partitions import partitions, dominates, sym_dim, transpose, z_order


# -- independent S_n table ------------------------------------------------------


def fixed_tabloids(mu, cycles):
    caps = list(mu)

    def rec(i):
        if i == len(cycles):
            return 1
        total = 0
        c = cycles[i]
        seen = set()
        for r in range(len(caps)):
            if caps[r] >= c and (r, caps[r]) not in seen:
                seen.add((r, caps[r]))
                caps[r] -= c
                total += rec(i + 1)
                caps[r] += c
        return total

    return rec(0)


def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""

    def rec(shape, content_idx, remaining):
        if content_idx == len(mu):
            return 1 if all(x == 0 for x in shape) else 0
        # place remaining[content_idx] copies of the entry into distinct columns,
        # weakly increasing rows, strictly increasing columns: choose a horizontal
        # strip removal from the current shape going down to the previous one
        k = mu[content_idx]

        # enumerate horizontal strips of size k removable from 'shape' such that
        # the result is still a partition and strip cells lie in distinct columns
        def strips(sh, size, row, acc):
            if size == 0:
                yield tuple(acc + list(sh[row:]) if row < len(sh) else acc)
                return
            if row >= len(sh):
                return
            upper = sh[row]
            lower = acc[-1] if False else 0
            low = max(sh[row + 1] if row + 1 < len(sh) else 0, sh[row] - size)
            prev = acc[row - 1] if row > 0 else None
            for new in range(low, upper + 1):
                take = upper - new
                if prev is not None and new > prev:
                    continue
                yield from strips(sh, 0, 0, []) if False else ()
            return

        # simpler: recurse cell placements via column counts
        total = 0
        for strip in horizontal_strips(shape, k):
            total += rec(strip, content_idx + 1, remaining)
        return total

    def horizontal_strips(sh, size):
        sh = list(sh) + [0]
        results = []

        def go(row, left, cur):
            if left == 0:
                rest = sh[row:-1]
                results.append(tuple(x for x in cur + rest if x))
                return
            if row >= len(sh) - 1:
                return
            hi = sh[row]
            lo = sh[row + 1]
            prev_floor = cur[-1] if cur else None
            for new in range(lo, hi + 1):
                take = hi - new
                if take > left:
                    continue
                # distinct columns: cells removed from row must not sit above
                # cells removed from the next row; enforced by new >= sh[row+1]
                if prev_floor is not None and new > prev_floor:
                    continue
                go(row + 1, left - take, cur + [new])

        go(0, size, [])
        return results

    # build up lam by adding horizontal strips of sizes mu (reverse removal)
    def build(shape_target, idx):
        # count SSYT by peeling the largest entry: remove a horizontal strip of
        # size mu[idx] from shape_target
        if idx < 0:
            return 1 if not shape_target or all(x == 0 for x in shape_target) else 0
        total = 0
        for smaller in horizontal_strips(list(shape_target), mu[idx]):
            total += build(smaller, idx - 1)
        return total

    return build(lam, len(mu) - 1)


def brute_sym_table(n):
    parts = list(partitions(n))
    psi = {mu: {c: fixed_tabloids(mu, list(c)) for c in parts} for mu in parts}
    K = {(lam, mu): kostka(lam, mu) for lam in parts for mu in parts}
    chars = {}
    # invert the unitriangular Kostka matrix: psi^mu = sum_lam K[lam,mu] chi^lam
    # lexicographic descent refines dominance, so chi^lam is known before any
    # mu it dominates
    order = sorted(parts, key=lambda p: tuple(-x for x in p))
    for mu in order:
        vec = dict(psi[mu])
        for lam in order:
            if lam == mu:
                continue
            k = K[(lam, mu)]
            if k and lam in chars:
                for c in parts:
                    vec[c] -= k * chars[lam][c]
        assert K[(mu, mu)] == 1
        chars[mu] = vec
    return chars


def test_sym_chars_against_tabloid_oracle():
    for n in range(1, 7):
        oracle = brute_sym_table(n)
        for lam in partitions(n):
            for mu in partitions(n):
                assert sym_char(lam, mu) == oracle[lam][mu], (n, lam, mu)


def test_sym_dims_hook_formula():
    for n in range(1, 8):
        for lam in partitions(n):
            assert sym_char(lam, (1,) * n) == sym_dim(lam)


def test_s3_standard_character():
    # 2-dimensional character of S_3 on classes (1^3), (2 1), (3)
    vals = [sym_char((2, 1), mu) for mu in [(1, 1, 1), (2, 1), (3,)]]
    assert vals == [2, 0, -1]


# -- independent B_n oracle ------------------------------------------------------


def signed_perms(n):
    for perm in itertools.permutations(range(n)):
        for smask in range(2**n):
            yield perm, tuple(1 if smask >> i & 1 == 0 else -1 for i in range(n))


def signed_cycle_type(perm, signs):
    n = len(perm)
    seen = [False] * n
    pos, neg = [], []
    for i in range(n):
        if seen[i]:
            continue
        j, ln, s = i, 0, 1
        while not seen[j]:
            seen[j] = True
            s *= signs[j]
            j = perm[j]
            ln += 1
        (pos if s == 1 else neg).append(ln)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def induced_b_char(xi, eta, n):
    """Ind from B_a x B_b of (chi^xi o quot) x (chi^eta o quot tensor sign-product)."""
    a, b = sum(xi), sum(eta)
    assert a + b == n
    group_order = 2**n * __import__("math").factorial(n)
    sub_order = (2**a * __import__("math").factorial(a)) * (2**b * __import__("math").factorial(b))
    sums = {}
    for pa, sa in signed_perms(a):
        for pb, sb in signed_perms(b):
            perm = tuple(list(pa) + [a + x for x in pb])
            signs = sa + sb
            cls = signed_cycle_type(perm, signs)
            ca = tuple(sorted((l for l in cycle_lengths(pa)), reverse=True))
            cb = tuple(sorted((l for l in cycle_lengths(pb)), reverse=True))
            val = sym_char(xi, ca) * sym_char(eta, cb)
            for s in sb:
                if s == -1:
                    val = -val
            sums[cls] = sums.get(cls, 0) + val
    table = HyperoctahedralTable(n)
    out = {}
    for cls, size in table.classes():
        s = sums.get(cls[1], 0)
        num = group_order * s
        den = sub_order * size
        assert num % den == 0
        out[cls] = num // den
    return out


def cycle_lengths(perm):
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        out.append(ln)
    return out


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hyp_chars_against_induction_oracle(n):
    table = HyperoctahedralTable(n)
    for lab in table.labels():
        xi, eta = lab[1]
        oracle = induced_b_char(xi, eta, n)
        for cls, _ in table.classes():
            assert table.value(lab, cls) == oracle[cls], (n, lab, cls)


def test_known_b2_table():
    t = HyperoctahedralTable(2)
    labs = {lab[1]: lab for lab in t.labels()}
    # dihedral-of-order-8 table; classes in the order below (sizes 2,1,2,2,1)
    order = [((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))]
    expected = {
        ((2,), ()): [1, 1, 1, 1, 1],            # trivial
        ((1, 1), ()): [-1, 1, 1, -1, 1],        # sign of the underlying permutation
        ((1,), (1,)): [0, 2, 0, 0, -2],         # reflection representation
        ((), (2,)): [1, 1, -1, -1, 1],          # product of the Z2 signs
        ((), (1, 1)): [-1, 1, -1, 1, 1],        # sign character
    }
    for lab, vals in expected.items():
        got = [t.value(labs[lab], ("BC", c)) for c in order]
        assert got == vals, (lab, got)
    # column orthogonality at the identity and -1 classes
    assert sum(v[1] ** 2 for v in expected.values()) == 8


def test_orthogonality_classical():
    for t in [SymmetricTable(5), HyperoctahedralTable(4), DemihyperTable(4), DemihyperTable(5)]:
        assert check_orthogonality(t)


def test_b_invariants():
    t = SymmetricTable(4)
    assert t.b_invariant(t.sign) == 6  # |Phi+(A_3)|
    assert t.b_invariant(t.trivial) == 0
    h = HyperoctahedralTable(3)
    assert h.b_invariant(h.sign) == 9  # |Phi+(C_3)| = r^2
    d = DemihyperTable(4)
    assert d.b_invariant(d.sign) == 12  # |Phi+(D_4)| = r(r-1)
    assert d.b_invariant(d.trivial) == 0


def test_d_split_dimensions_and_count():
    d = DemihyperTable(4)
    labs = d.labels()
    # |Irr| check: split labels come in pairs
    splits = [l for l in labs if l[2] != 0]
    assert len(splits) == 4  # (1;1)+- and (11;11)+- wait: xi = eta partitions of 2
    total = sum(d.dim(l) ** 2 for l in labs)
    assert total == d.order


def test_d5_sign_and_trivial_values():
    d = DemihyperTable(5)
    cls = [c for c, _ in d.classes()]
    for c in cls:
        assert d.value(d.trivial, c) == 1
        assert d.value(d.sign, c) == d.sign_value(c)
