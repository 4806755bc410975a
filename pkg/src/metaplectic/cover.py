"""Degree-n cover invariants of a root datum with a Weyl-invariant form.

Everything is lattice arithmetic: the dual character lattice
Y_{Q,n} = {y : B_Q(y, z) in nZ for all z}, the rescaled coroot lattices, the
finite quotient carrying the twisted Weyl action, saturation, and the dual
root datum. Exact integers throughout.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .intmat import smith_normal_form, mat_mul, transpose
from .lattices import Lattice, FiniteQuotient
from .rootdata import RootDatum, build_root_datum, pairing


class QuadraticForm:
    """Integer-valued Weyl-invariant quadratic form via its Gram matrix.

    gram[i][j] = B_Q(e_i, e_j) on the Y-basis, so Q(y) = (y G y^T)/2.
    """

    def __init__(self, gram):
        self.gram = [list(map(int, r)) for r in gram]
        n = len(self.gram)
        for i in range(n):
            if self.gram[i][i] % 2 != 0:
                raise ValueError("diagonal of B_Q must be even (B(y,y) = 2Q(y))")
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    def bilinear(self, y, z):
        return sum(y[i] * self.gram[i][j] * z[j]
                   for i in range(len(y)) for j in range(len(z)))

    def value(self, y):
        return self.bilinear(y, y) // 2

    def check_weyl_invariant(self, datum):
        for m in datum.simple_reflections():
            mm = [list(r) for r in m]
            g2 = mat_mul(mat_mul(mm, self.gram), transpose(mm))
            if g2 != self.gram:
                raise ValueError("form is not Weyl invariant")


def preset_form(datum, scale=1, kp=None):
    """The paper-normalized form for a preset datum, scaled by an integer.

    Simply-connected presets take Q = scale on the appropriate coroot orbit
    (all coroots for simply-laced, short coroots otherwise). GL uses the
    Kazhdan-Patterson pair kp = (p, q); SO and GSpin carry the forms induced
    by their standard embeddings.
    """
    name = datum.name
    if name.startswith("GL"):
        p, q = kp if kp is not None else (0, 1)
        r = datum.x_rank
        gram = [[(2 * p if i == j else q) for j in range(r)] for i in range(r)]
        return QuadraticForm(gram)
    if kp is not None:
        raise ValueError("kp parameters only apply to GL covers")
    if name.startswith("SO"):
        r = datum.x_rank
        return QuadraticForm([[2 * scale if i == j else 0 for j in range(r)] for i in range(r)])
    if name.startswith("GSpin"):
        d = datum.x_rank
        gram = [[1] * d for _ in range(d)]
        gram[0][0] = 4
        for i in range(1, d):
            gram[0][i] = gram[i][0] = 2
            gram[i][i] = 2
        return QuadraticForm([[x * scale for x in row] for row in gram])
    # simply connected: Gram[i][j] = Q(coroot_i) * <alpha_i, alpha_j-vee>
    qs = _sc_coroot_norms(datum)
    cart = datum.cartan
    gram = [[qs[i] * cart[i][j] * scale for j in range(datum.rank)] for i in range(datum.rank)]
    return QuadraticForm(gram)


def _sc_coroot_norms(datum):
    """Q(alpha_i-vee) with the short-coroot normalization Q = 1."""
    if len(datum.components) != 1:
        raise ValueError("preset form needs an irreducible datum")
    ct = datum.components[0]
    r = datum.rank
    s = ct.series
    if s in ("A", "D", "E"):
        return [1] * r
    if s == "B":
        return [1] * (r - 1) + [2]
    if s == "C":
        return [2] * (r - 1) + [1]
    if s == "F":
        return [1, 1, 2, 2]
    if s == "G":
        return [3, 1]
    raise ValueError("no preset normalization for %s" % ct)


@dataclass
class CoverData:
    datum: RootDatum
    form: QuadraticForm
    n: int
    n_alpha: list  # per simple root
    i_alpha: list  # 1 or Fraction(1,2) per simple root
    ntilde_alpha: list
    Y_Qn: Lattice
    Y_sc: Lattice
    Y_Qn_sc: Lattice
    Ytilde_Qn_sc: Lattice
    quotient: FiniteQuotient
    root_n: dict = field(default_factory=dict)  # positive root x -> n_beta
    root_ntilde: dict = field(default_factory=dict)

    def describe(self):
        return "%s^(%d)" % (self.datum.name, self.n)


def compute_cover(datum, form, n):
    """All covering-lattice invariants of (datum, Q, n)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    form.check_weyl_invariant(datum)
    d = datum.x_rank
    g = form.gram
    dd, u, v = smith_normal_form(g)
    # y G = 0 mod n  <=>  (y u^{-1})_i d_i = 0 mod n; basis rows (n/gcd) * u_i
    import math

    rows = []
    for i in range(d):
        c = n // math.gcd(dd[i] if i < len(dd) else 0, n) if i < len(dd) and dd[i] else 1
        rows.append([c * x for x in u[i]])
    Y_Qn = Lattice(rows, d)
    # sanity: nY inside Y_Qn
    assert all(Y_Qn.contains([n if j == i else 0 for j in range(d)]) for i in range(d))

    n_alpha = []
    i_alpha = []
    ntilde = []
    for cv in datum.simple_coroots:
        qv = form.value(cv)
        na = n // math.gcd(n, abs(qv)) if qv else 1
        ia = 1
        if na % 2 == 0:
            half = [na // 2 * x for x in cv]
            if Y_Qn.contains(half):
                ia = Fraction(1, 2)
        n_alpha.append(na)
        i_alpha.append(ia)
        ntilde.append(int(na * ia))

    root_n = {}
    root_ntilde = {}
    tilde_rows = []
    sc_rows = []
    for i, cv in enumerate(datum.simple_coroots):
        sc_rows.append([n_alpha[i] * x for x in cv])
    for rt in datum.positive_roots():
        qv = form.value(rt.y)
        nb = n // math.gcd(n, abs(qv)) if qv else 1
        ib = 1
        if nb % 2 == 0:
            half = [nb // 2 * x for x in rt.y]
            if Y_Qn.contains(half):
                ib = Fraction(1, 2)
        nt = int(nb * ib)
        root_n[rt.x] = nb
        root_ntilde[rt.x] = nt
        tilde_rows.append([nt * x for x in rt.y])

    Y_sc = Lattice([list(cv) for cv in datum.simple_coroots], d)
    Y_Qn_sc = Lattice(sc_rows, d)
    Ytilde = Lattice(tilde_rows, d)
    if not Y_Qn.contains_lattice(Ytilde):
        raise RuntimeError("saturation lattice escapes Y_{Q,n}")
    if not Ytilde.contains_lattice(Y_Qn_sc):
        raise RuntimeError("rescaled coroot lattice escapes its saturation")
    quotient = FiniteQuotient(Y_Qn)
    return CoverData(
        datum=datum, form=form, n=n,
        n_alpha=n_alpha, i_alpha=i_alpha, ntilde_alpha=ntilde,
        Y_Qn=Y_Qn, Y_sc=Y_sc, Y_Qn_sc=Y_Qn_sc, Ytilde_Qn_sc=Ytilde,
        quotient=quotient, root_n=root_n, root_ntilde=root_ntilde,
    )


def preset_cover(preset, rank, n, scale=1, kp=None):
    datum = build_root_datum(preset, rank)
    return compute_cover(datum, preset_form(datum, scale=scale, kp=kp), n)


def is_saturated(cover):
    """Y_sc intersect Y_{Q,n} equals the rescaled simple-coroot lattice."""
    inter = cover.Y_sc.intersect(cover.Y_Qn)
    return inter == cover.Y_Qn_sc


def distinguished_torsor_size(cover):
    """|Y_{Q,n} / (nY + Y^{sc}_{Q,n})|, the count of distinguished characters."""
    d = cover.datum.x_rank
    n = cover.n
    nY = Lattice([[n if j == i else 0 for j in range(d)] for i in range(d)], d)
    sub = nY.sum(cover.Y_Qn_sc)
    factors = cover.Y_Qn.quotient_by(sub)
    size = 1
    for f in factors:
        if f == 0:
            raise RuntimeError("distinguished torsor is infinite")
        size *= f
    return size


def exceptional_character(cover):
    """The canonical solution of <nu, n_alpha alpha-vee> = 1 for simple alpha,
    zero on the Weyl-fixed complement."""
    return _weight_with_values(cover.datum,
                               [Fraction(1, na) for na in cover.n_alpha])


def saturation_of(cover, nu=None):
    """A saturation: <nu~, ntilde_alpha alpha-vee> = 1; canonical choice keeps
    the complement component of nu (zero for the canonical exceptional nu)."""
    tilde = _weight_with_values(cover.datum,
                                [Fraction(1, nt) for nt in cover.ntilde_alpha])
    if nu is None:
        return tilde
    comp = cover.datum.coroot_span_complement()
    # keep nu's complement part: add the projection difference
    diff = tuple(Fraction(a) - b for a, b in
                 zip(nu, _weight_with_values(cover.datum,
                                             [pairing_frac(nu, cv) for cv in cover.datum.simple_coroots])))
    return tuple(a + b for a, b in zip(tilde, diff))


def pairing_frac(x, y):
    return sum(Fraction(a) * b for a, b in zip(x, y))


def _weight_with_values(datum, values):
    ws = datum.fundamental_weights()
    out = [Fraction(0)] * datum.x_rank
    for w, val in zip(ws, values):
        for j in range(datum.x_rank):
            out[j] += Fraction(val) * w[j]
    return tuple(out)


def dual_root_datum(cover):
    """Root datum with character lattice Y_{Q,n} and roots n_alpha alpha-vee."""
    basis = cover.Y_Qn.basis
    from .intmat import solve_left

    roots = []
    coroots = []
    for i, cv in enumerate(cover.datum.simple_coroots):
        scaled = [cover.n_alpha[i] * x for x in cv]
        coords = solve_left(basis, scaled)
        if coords is None:
            raise RuntimeError("rescaled coroot not in Y_{Q,n}")
        roots.append(list(coords))
        vals = [pairing(cover.datum.simple_roots[i], b) for b in basis]
        if any(vv % cover.n_alpha[i] for vv in vals):
            raise RuntimeError("dual coroot is not integral on Y_{Q,n}")
        coroots.append([vv // cover.n_alpha[i] for vv in vals])
    return RootDatum(roots, coroots, cover.datum.x_rank,
                     name="dual(%s^(%d))" % (cover.datum.name, cover.n))


def lemma_long_root_check(cover):
    """Structural constraints whenever some i_alpha = 1/2: the root is long in
    a type-C (or rank-one) component and pairs evenly with all of Y."""
    datum = cover.datum
    for i, ia in enumerate(cover.i_alpha):
        if ia == 1:
            continue
        root = datum.simple_roots[i]
        if any(x % 2 for x in root):
            return False
        comp = next(k for k, idx in enumerate(datum.component_indices) if i in idx)
        ct = datum.components[comp]
        if not (ct.rank == 1 or ct.series == "C" or (ct.series, ct.rank) == ("B", 2)
                or str(ct) == "C2"):
            return False
    return True
