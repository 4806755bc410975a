"""Partition combinatorics shared by the character and orbit modules."""

from functools import lru_cache
import math


def is_partition(p):
    return all(a >= b for a, b in zip(p, p[1:])) and all(x > 0 for x in p)


def normalize(p):
    """Sort decreasing and drop zeros."""
    return tuple(sorted((x for x in p if x), reverse=True))


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n as decreasing tuples."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def bipartitions(n):
    out = []
    for a in range(n + 1):
        for xi in partitions(a):
            for eta in partitions(n - a):
                out.append((xi, eta))
    return out


def z_order(p):
    """Centralizer order of a cycle type in S_n."""
    out = 1
    mult = {}
    for x in p:
        mult[x] = mult.get(x, 0) + 1
    for i, m in mult.items():
        out *= i**m * math.factorial(m)
    return out


def transpose(p):
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def n_weighted(p):
    """n(lambda) = sum (i-1) lambda_i, the b-invariant in type A."""
    return sum(i * x for i, x in enumerate(p))


def dominates(p, q):
    """p >= q in dominance order (|p| = |q|)."""
    if sum(p) != sum(q):
        raise ValueError("dominance needs equal totals")
    sp = sq = 0
    for i in range(max(len(p), len(q))):
        sp += p[i] if i < len(p) else 0
        sq += q[i] if i < len(q) else 0
        if sp < sq:
            return False
    return True


def hook_product(p):
    rows = len(p)
    t = transpose(p)
    out = 1
    for i in range(rows):
        for j in range(p[i]):
            out *= p[i] - j + t[j] - i - 1
    return out


def sym_dim(p):
    """Dimension of the S_n irreducible via the hook length formula."""
    return math.factorial(sum(p)) // hook_product(p) if p else 1


def beta_set(p, length):
    """First-column hook lengths padded to the given length, increasing."""
    padded = list(p) + [0] * (length - len(p))
    return tuple(sorted(padded[i] + (length - 1 - i) for i in range(length)))


def from_beta(beta):
    """Partition from an increasing beta set."""
    out = []
    for i, b in enumerate(sorted(beta)):
        out.append(b - i)
    return normalize(out)
