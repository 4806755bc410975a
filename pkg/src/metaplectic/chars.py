"""Exact character tables of classical Weyl groups.

Values come from the Murnaghan-Nakayama rule: border strips on a single
partition for symmetric groups, the wreath-product version on bipartitions
for hyperoctahedral groups, and restriction with split-class corrections for
the type D subgroups. All values are Python ints.

Label conventions (Geck-Pfeiffer): the bipartition (xi; eta) has b-invariant
2n(xi) + 2n(eta) + |eta|, so the trivial character is ((n); ()) and the sign
character is ((); 1^n). Type A uses b = n(lambda), so trivial = (n) and
sign = (1^n). For W(D_n) with xi = eta the label splits into a pair, written
with tags +1/-1; which member is '+' is a convention fixed by the split-class
value formula below and documented in the README.
"""

from functools import lru_cache
import math

from .partitions import (
    partitions,
    bipartitions,
    z_order,
    n_weighted,
    normalize,
    beta_set,
)


# -- Murnaghan-Nakayama ---------------------------------------------------------


@lru_cache(maxsize=None)
def _strip_removals(lam, length):
    """All ways to remove a border strip of the given length from lam.

    Returns tuples (new_partition, sign). Computed on the beta-set: removing
    a strip of size l means replacing b by b - l for some b with b - l not in
    the set; the sign is (-1)^(number of beta values jumped over).
    """
    lam = tuple(lam)
    size = len(lam) + length  # enough room
    beta = list(beta_set(lam, size))
    bset = set(beta)
    out = []
    for idx, b in enumerate(beta):
        nb = b - length
        if nb < 0 or nb in bset:
            continue
        crossed = sum(1 for x in beta if nb < x < b)
        newbeta = [x for x in beta if x != b] + [nb]
        from .partitions import from_beta

        out.append((from_beta(newbeta), -1 if crossed % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def sym_char(lam, mu):
    """Character of S_n: partition-label lam at cycle type mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    head, rest = mu[0], mu[1:]
    total = 0
    for new, sign in _strip_removals(lam, head):
        total += sign * sym_char(new, rest)
    return total


@lru_cache(maxsize=None)
def hyp_char(label, cls):
    """Character of the hyperoctahedral group Z2 wr S_n.

    label = (xi, eta); cls = (alpha, beta) with alpha the positive and beta
    the negative cycle types. A cycle of length l is removed as an l-strip
    from xi (weight 1) or from eta (weight 1 for positive, -1 for negative).
    """
    xi, eta = label
    alpha, beta = cls
    if sum(xi) + sum(eta) != sum(alpha) + sum(beta):
        raise ValueError("size mismatch")
    if not alpha and not beta:
        return 1
    if alpha:
        l, rest = alpha[0], ((alpha[1:]), beta)
        negative = False
    else:
        l, rest = beta[0], (alpha, beta[1:])
        negative = True
    total = 0
    for new, sign in _strip_removals(xi, l):
        total += sign * hyp_char((new, eta), rest)
    w = -1 if negative else 1
    for new, sign in _strip_removals(eta, l):
        total += w * sign * hyp_char((xi, new), rest)
    return total


# -- table objects ---------------------------------------------------------------


class SymmetricTable:
    """Character table of S_n (Weyl group of type A_{n-1})."""

    def __init__(self, n):
        self.n = n
        self.order = math.factorial(n)
        self._labels = [("A", lam) for lam in partitions(n)]
        self._classes = [(("A", mu), self.order // z_order(mu)) for mu in partitions(n)]

    def labels(self):
        return list(self._labels)

    def classes(self):
        return list(self._classes)

    def value(self, label, cls):
        return sym_char(label[1], cls[1])

    def b_invariant(self, label):
        return n_weighted(label[1])

    def dim(self, label):
        return sym_char(label[1], (1,) * self.n)

    @property
    def trivial(self):
        return ("A", (self.n,))

    @property
    def sign(self):
        return ("A", (1,) * self.n)

    def sign_value(self, cls):
        mu = cls[1]
        return -1 if (self.n - len(mu)) % 2 else 1


class HyperoctahedralTable:
    """Character table of W(B_n) = W(C_n)."""

    def __init__(self, n):
        self.n = n
        self.order = 2**n * math.factorial(n)
        self._labels = [("BC", bp) for bp in bipartitions(n)]
        self._classes = [(("BC", bp), self.order // self._centralizer(bp))
                         for bp in bipartitions(n)]

    @staticmethod
    def _centralizer(bp):
        alpha, beta = bp
        return z_order(alpha) * 2 ** len(alpha) * z_order(beta) * 2 ** len(beta)

    def labels(self):
        return list(self._labels)

    def classes(self):
        return list(self._classes)

    def value(self, label, cls):
        return hyp_char(label[1], cls[1])

    def b_invariant(self, label):
        xi, eta = label[1]
        return 2 * n_weighted(xi) + 2 * n_weighted(eta) + sum(eta)

    def dim(self, label):
        return hyp_char(label[1], ((1,) * self.n, ()))

    @property
    def trivial(self):
        return ("BC", ((self.n,), ()))

    @property
    def sign(self):
        return ("BC", ((), (1,) * self.n))

    def sign_value(self, cls):
        alpha, beta = cls[1]
        flips = len(beta)
        transpositions = (sum(alpha) - len(alpha)) + (sum(beta) - len(beta))
        return -1 if (flips + transpositions) % 2 else 1


def d_label(xi, eta, split=0):
    """Canonical unordered D label; split in {0, +1, -1} (nonzero iff xi == eta)."""
    xi, eta = normalize(xi), normalize(eta)
    if xi == eta:
        return ("D", (xi, eta), split)
    lo, hi = sorted([xi, eta])
    return ("D", (lo, hi), 0)


class DemihyperTable:
    """Character table of W(D_n), n >= 2, by restriction from W(B_n)."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("D table needs n >= 2")
        self.n = n
        self.order = 2 ** (n - 1) * math.factorial(n)
        labels = []
        seen = set()
        for xi, eta in bipartitions(n):
            if xi == eta:
                labels.append(d_label(xi, eta, +1))
                labels.append(d_label(xi, eta, -1))
            else:
                lab = d_label(xi, eta)
                if lab not in seen:
                    seen.add(lab)
                    labels.append(lab)
        self._labels = labels
        classes = []
        for alpha, beta in bipartitions(n):
            if len(beta) % 2:
                continue
            bsize = (2**n * math.factorial(n)) // HyperoctahedralTable._centralizer((alpha, beta))
            if not beta and alpha and all(a % 2 == 0 for a in alpha):
                classes.append((("Dcls", (alpha, beta), +1), bsize // 2))
                classes.append((("Dcls", (alpha, beta), -1), bsize // 2))
            else:
                classes.append((("Dcls", (alpha, beta), 0), bsize))
        self._classes = classes

    def labels(self):
        return list(self._labels)

    def classes(self):
        return list(self._classes)

    def value(self, label, cls):
        _, (xi, eta), split = label
        _, (alpha, beta), tag = cls
        base = hyp_char((xi, eta), (alpha, beta))
        if split == 0:
            return base
        if base % 2 and tag == 0:
            raise RuntimeError("split-character value must be even off split classes")
        if tag == 0:
            return base // 2
        gamma = tuple(a // 2 for a in alpha)
        delta = 2 ** len(gamma) * sym_char(xi, gamma)
        val2 = base + split * tag * delta
        if val2 % 2:
            raise RuntimeError("split-class value parity error")
        return val2 // 2

    def b_invariant(self, label):
        _, (xi, eta), split = label
        b1 = 2 * n_weighted(xi) + 2 * n_weighted(eta) + sum(eta)
        b2 = 2 * n_weighted(xi) + 2 * n_weighted(eta) + sum(xi)
        return min(b1, b2)

    def dim(self, label):
        return self.value(label, ("Dcls", ((1,) * self.n, ()), 0))

    @property
    def trivial(self):
        return d_label((self.n,), ())

    @property
    def sign(self):
        return d_label((), (1,) * self.n)

    def sign_value(self, cls):
        _, (alpha, beta), _ = cls
        flips = len(beta)
        transpositions = (sum(alpha) - len(alpha)) + (sum(beta) - len(beta))
        return -1 if (flips + transpositions) % 2 else 1


class ProductTable:
    """Character table of a direct product, labels and classes as tuples."""

    def __init__(self, factors):
        self.factors = list(factors)
        self.order = 1
        for f in self.factors:
            self.order *= f.order

    def labels(self):
        out = [()]
        for f in self.factors:
            out = [t + (l,) for t in out for l in f.labels()]
        return out

    def classes(self):
        out = [((), 1)]
        for f in self.factors:
            out = [(t + (c,), s * cs) for t, s in out for c, cs in f.classes()]
        return out

    def value(self, label, cls):
        v = 1
        for f, l, c in zip(self.factors, label, cls):
            v *= f.value(l, c)
        return v

    def b_invariant(self, label):
        return sum(f.b_invariant(l) for f, l in zip(self.factors, label))

    def dim(self, label):
        v = 1
        for f, l in zip(self.factors, label):
            v *= f.dim(l)
        return v

    @property
    def trivial(self):
        return tuple(f.trivial for f in self.factors)

    @property
    def sign(self):
        return tuple(f.sign for f in self.factors)

    def sign_value(self, cls):
        v = 1
        for f, c in zip(self.factors, cls):
            v *= f.sign_value(c)
        return v


def table_for_type(series, rank):
    """Table of the Weyl group of an irreducible type; A rank r is S_{r+1}."""
    if series == "A":
        return SymmetricTable(rank + 1)
    if series in ("B", "C"):
        return HyperoctahedralTable(rank)
    if series == "D":
        return DemihyperTable(rank)
    from .excdata import exceptional_table

    return exceptional_table("%s%d" % (series, rank))


def symmetric_points_table(npoints):
    """S_n acting on n points (for GL-type data where labels are partitions of n)."""
    return SymmetricTable(npoints)


def inner_product(table, chi1, chi2):
    """<chi1, chi2> for class functions given as dicts class-label -> value."""
    total = 0
    for cls, size in table.classes():
        total += size * chi1[cls] * chi2[cls]
    q, r = divmod(total, table.order)
    if r:
        raise ValueError("inner product is not an integer: %s/%s" % (total, table.order))
    return q


def irreducible_vector(table, label):
    return {cls: table.value(label, cls) for cls, _ in table.classes()}


def check_orthogonality(table):
    labs = table.labels()
    vecs = {lab: irreducible_vector(table, lab) for lab in labs}
    for i, l1 in enumerate(labs):
        for l2 in labs[i:]:
            ip = inner_product(table, vecs[l1], vecs[l2])
            expect = 1 if l1 == l2 else 0
            if ip != expect:
                raise AssertionError("orthogonality fails at %s, %s: %d" % (l1, l2, ip))
    total = sum(table.dim(lab) ** 2 for lab in labs)
    if total != table.order:
        raise AssertionError("sum of squared degrees %d != |W| = %d" % (total, table.order))
    return True
