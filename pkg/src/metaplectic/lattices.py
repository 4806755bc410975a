"""Integer lattices inside Z^d and finite quotients with a linear action.

A Lattice is the row space of a basis matrix. FiniteQuotient represents
Z^d / L for a full-rank L through the Smith normal form of a basis: the
quotient is a product of cyclic groups and elements are coordinate tuples.
"""

from .intmat import (
    smith_normal_form,
    hnf_rows,
    left_kernel,
    solve_left,
    vec_mat,
    mat_mul,
    int_inverse,
    identity,
)


class Lattice:
    def __init__(self, rows, dim=None):
        rows = [list(r) for r in rows]
        if dim is None:
            if not rows:
                raise ValueError("dimension required for the zero lattice")
            dim = len(rows[0])
        self.dim = dim
        self.basis = hnf_rows(rows) if rows else []

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, v):
        if not self.basis:
            return all(x == 0 for x in v)
        return solve_left(self.basis, list(v)) is not None

    def contains_lattice(self, other):
        return all(self.contains(r) for r in other.basis)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, tuple(tuple(r) for r in self.basis)))

    def sum(self, other):
        return Lattice(self.basis + other.basis, self.dim)

    def intersect(self, other):
        """Intersection of two lattices via the left kernel of the stacked basis."""
        a, b = self.basis, other.basis
        if not a or not b:
            return Lattice([], self.dim)
        stacked = a + [[-x for x in row] for row in b]
        ker = left_kernel(stacked)
        rows = []
        for k in ker:
            v = vec_mat(k[: len(a)], a)
            rows.append(list(v))
        return Lattice(rows, self.dim)

    def index_in(self, sub):
        """[self : sub] for sub of the same rank; None if infinite/deficient."""
        if sub.rank != self.rank:
            return None
        coords = []
        for r in sub.basis:
            x = solve_left(self.basis, r)
            if x is None:
                raise ValueError("not a sublattice")
            coords.append(list(x))
        d = smith_normal_form(coords)[0]
        out = 1
        for x in d:
            if x == 0:
                return None
            out *= x
        return out

    def quotient_by(self, sub):
        """Invariant factors of self/sub (sub of equal rank), as a sorted list > 1."""
        coords = []
        for r in sub.basis:
            x = solve_left(self.basis, r)
            if x is None:
                raise ValueError("not a sublattice")
            coords.append(list(x))
        # pad to full rank check
        d = smith_normal_form(coords)[0] if coords else []
        d = list(d) + [0] * (self.rank - len(d))
        return [x for x in d]


def full_lattice(dim):
    return Lattice(identity(dim), dim)


class FiniteQuotient:
    """Z^d / L for full-rank L, with projection and exact fixed-point counts."""

    def __init__(self, sublattice):
        L = sublattice
        if L.rank != L.dim:
            raise ValueError("quotient is infinite: sublattice rank %d < ambient %d" % (L.rank, L.dim))
        self.dim = L.dim
        d, u, v = smith_normal_form(L.basis)
        self.v = v
        self.vinv = int_inverse(v)
        self.diag = list(d)
        self.cardinality = 1
        for x in d:
            self.cardinality *= x
        self.invariant_factors = [x for x in d if x > 1]

    def project(self, y):
        z = vec_mat(list(y), self.v)
        return tuple(z[i] % self.diag[i] for i in range(self.dim))

    def act_matrix(self, m):
        """Matrix of y -> y @ m in quotient coordinates."""
        return mat_mul(self.vinv, mat_mul([list(r) for r in m], self.v))

    def reduce(self, z):
        return tuple(z[i] % self.diag[i] for i in range(self.dim))

    def elements(self, budget=None):
        if budget is not None and self.cardinality > budget:
            raise BudgetExceeded(
                "quotient has %d elements, budget %d" % (self.cardinality, budget)
            )
        idx = [0] * self.dim
        while True:
            yield tuple(idx)
            for i in range(self.dim):
                idx[i] += 1
                if idx[i] < self.diag[i]:
                    break
                idx[i] = 0
            else:
                return

    def count_solutions(self, mq, target):
        """Number of z in the quotient with z @ mq = target (mod invariant factors).

        mq and target are given in quotient coordinates. Returns 0 when the
        class equation is not solvable; otherwise the kernel size, read off
        the Smith form of the map stacked with the relation lattice.
        """
        k = self.dim
        stacked = [list(r) for r in mq]
        for i in range(k):
            row = [0] * k
            row[i] = self.diag[i]
            stacked.append(row)
        if solve_left(stacked, list(target)) is None:
            return 0
        d = smith_normal_form(stacked)[0]
        s = 1
        for x in d:
            s *= x
        return s


class BudgetExceeded(RuntimeError):
    pass
