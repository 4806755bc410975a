"""Weyl groups acting on Y: classes, twisted actions, and persistence.

Elements are stored through per-component frames as (signed) permutations,
so composition and class labels cost O(rank); exact matrices are synthesized
only where needed (fixed-point counts, persistence cosets). Exceptional types
fall back to matrix enumeration backed by the shipped class data.
"""

from fractions import Fraction
import itertools
import math

from .chars import (
    DemihyperTable,
    HyperoctahedralTable,
    ProductTable,
    SymmetricTable,
    table_for_type,
)
from .intmat import identity, left_kernel, solve_left, transpose
from .lattices import BudgetExceeded, FiniteQuotient, Lattice


_WG_CACHE = {}


def weyl_group(datum):
    """Cached WeylGroup per datum (keyed by its defining data)."""
    key = (datum.name, datum.x_rank, tuple(datum.simple_roots), tuple(datum.simple_coroots))
    wg = _WG_CACHE.get(key)
    if wg is None or wg.datum is not datum and wg.datum.simple_roots != datum.simple_roots:
        wg = WeylGroup(datum)
        _WG_CACHE[key] = wg
    return wg


class WeylGroup:
    """The Weyl group of a root datum with class bookkeeping."""

    def __init__(self, datum):
        self.datum = datum
        self.kinds = _weyl_kinds(datum)
        self._class_reps = None
        self._codec = None

    @property
    def order(self):
        return self.datum.weyl_order()

    def table(self):
        tabs = []
        for kind, arg in self.kinds:
            if kind == "S":
                tabs.append(SymmetricTable(arg))
            elif kind == "BC":
                tabs.append(HyperoctahedralTable(arg))
            elif kind == "D":
                tabs.append(DemihyperTable(arg))
            else:
                from .excdata import exceptional_table

                tabs.append(exceptional_table(arg))
        if len(tabs) == 1:
            return tabs[0]
        return ProductTable(tabs)

    # -- element encoding ------------------------------------------------------

    def codec(self):
        if self._codec is None:
            if any(kind == "exc" for kind, _ in self.kinds):
                self._codec = MatrixCodec(self.datum, self.kinds)
            else:
                self._codec = ElementCodec(self.datum, self.kinds)
        return self._codec

    def subgroup_closure(self, generator_matrices, budget=2_000_000):
        """All elements of the reflection subgroup generated by the matrices,
        as encoded elements; includes the identity."""
        codec = self.codec()
        gens = [codec.encode(m) for m in generator_matrices]
        ident = codec.identity()
        seen = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for el in frontier:
                for g in gens:
                    h = codec.compose(el, g)
                    if h not in seen:
                        seen.add(h)
                        new.append(h)
            frontier = new
            if len(seen) > budget:
                raise BudgetExceeded("subgroup closure exceeded %d elements" % budget)
        return seen

    def class_label(self, element):
        return self.codec().class_label(element)

    def det(self, element):
        return self.codec().det(element)

    # -- conjugacy class representatives ----------------------------------------

    def class_representatives(self):
        """List of (class_label, size, matrix); aligned with table().classes()."""
        if self._class_reps is not None:
            return self._class_reps
        if any(kind == "exc" for kind, _ in self.kinds):
            from .excdata import exceptional_class_reps

            name = self.kinds[0][1]
            self._class_reps = exceptional_class_reps(name, self.datum)
            return self._class_reps
        table = self.table()
        codec = self.codec()
        out = []
        for cls, size in table.classes():
            out.append((cls, size, codec.matrix_from_class(cls)))
        self._class_reps = out
        return out


def _weyl_kinds(datum):
    name = datum.name
    if name.startswith("GL"):
        return [("S", datum.x_rank)] if datum.x_rank > 1 else []
    kinds = []
    for i, ct in enumerate(datum.components):
        s = ct.series
        if s in ("E", "F", "G"):
            kinds.append(("exc", str(ct)))
            continue
        if datum._frames is None:
            raise ValueError("datum %s carries no frame data" % name)
        fr = datum.frame(i)
        if fr.kind == "perm":
            kinds.append(("S", len(fr.vectors)))
        elif name.startswith("Spin") and name[4:].isdigit() and int(name[4:]) % 2 == 0:
            kinds.append(("D", len(fr.vectors)))
        else:
            kinds.append(("BC", len(fr.vectors)))
    return kinds


class ElementCodec:
    """Encode Weyl elements as per-component (perm, signs) tuples."""

    def __init__(self, datum, kinds):
        self.datum = datum
        self.kinds = kinds
        self.frames = [datum.frame(i) for i in range(len(datum.components))]
        self._fixed = _weyl_fixed_basis(datum)
        self._solve_cache = None

    def identity(self):
        out = []
        for fr in self.frames:
            n = len(fr.vectors)
            out.append((tuple(range(n)), (1,) * n))
        return tuple(out)

    def encode(self, matrix):
        return tuple(fr.signed_perm(matrix) for fr in self.frames)

    def compose(self, e1, e2):
        """Element acting as e1 then e2 (matrix product m1 @ m2)."""
        out = []
        for (p1, s1), (p2, s2) in zip(e1, e2):
            p = tuple(p2[p1[i]] for i in range(len(p1)))
            s = tuple(s1[i] * s2[p1[i]] for i in range(len(p1)))
            out.append((p, s))
        return tuple(out)

    def inverse(self, e):
        out = []
        for p, s in e:
            n = len(p)
            q = [0] * n
            for i in range(n):
                q[p[i]] = i
            out.append((tuple(q), tuple(s[q[i]] for i in range(n))))
        return tuple(out)

    def det(self, element):
        d = 1
        for (kind, _), (p, s) in zip(self.kinds, element):
            d *= _perm_sign(p)
            for x in s:
                d *= x
        return d

    def class_label(self, element):
        labs = []
        for (kind, arg), (p, s) in zip(self.kinds, element):
            if kind == "S":
                labs.append(("A", _cycle_type(p)))
            elif kind == "BC":
                labs.append(("BC", _signed_cycle_type(p, s)))
            else:
                labs.append(_d_class_label(p, s))
        return labs[0] if len(labs) == 1 else tuple(labs)

    # -- matrices ----------------------------------------------------------------

    def matrix_of(self, element):
        images = []
        rows = []
        for fr, (p, s) in zip(self.frames, element):
            for i, v in enumerate(fr.vectors):
                rows.append(v)
                images.append(tuple(s[i] * x for x in fr.vectors[p[i]]))
        for v in self._fixed:
            rows.append(tuple(Fraction(x) for x in v))
            images.append(tuple(Fraction(x) for x in v))
        return _matrix_from_images(rows, images, self.datum.x_rank)

    def matrix_from_class(self, cls):
        """Representative matrix of a class label (tuple when several components)."""
        if len(self.frames) == 1:
            cls = (cls,)
        element = []
        for (kind, arg), c in zip(self.kinds, cls):
            n = len(self.frames[len(element)].vectors)
            if kind == "S":
                element.append(_perm_from_cycles(c[1], n))
            elif kind == "BC":
                element.append(_signed_from_cycles(c[1], n))
            else:
                alpha, beta = c[1]
                base = _signed_from_cycles((alpha, beta), n)
                if c[2] == -1:
                    base = _conjugate_by_last_flip(base)
                element.append(base)
        return self.matrix_of(tuple(element))


class MatrixCodec:
    """Fallback codec storing elements as integer matrices (exceptional types)."""

    def __init__(self, datum, kinds):
        self.datum = datum
        self.kinds = kinds

    def identity(self):
        return tuple(tuple(1 if i == j else 0 for j in range(self.datum.x_rank))
                     for i in range(self.datum.x_rank))

    def encode(self, matrix):
        return tuple(tuple(row) for row in matrix)

    def compose(self, e1, e2):
        d = len(e1)
        return tuple(
            tuple(sum(e1[i][k] * e2[k][j] for k in range(d)) for j in range(d))
            for i in range(d)
        )

    def inverse(self, e):
        from .intmat import int_inverse

        return tuple(tuple(r) for r in int_inverse([list(r) for r in e]))

    def det(self, element):
        from .intmat import bareiss_det

        return bareiss_det([list(r) for r in element])

    def class_label(self, element):
        from .excdata import class_of_element

        name = self.kinds[0][1]
        return class_of_element(name, element)

    def matrix_of(self, element):
        return element


def _matrix_from_images(rows, images, d):
    """Solve for the integer matrix sending each row to its image."""
    # rows may be redundant; pick an independent spanning subset
    chosen = []
    chosen_img = []
    rank = 0
    test = []
    for v, w in zip(rows, images):
        cand = test + [list(v)]
        from .intmat import frac_rank

        if frac_rank(cand) > rank:
            test = cand
            rank += 1
            chosen.append([Fraction(x) for x in v])
            chosen_img.append([Fraction(x) for x in w])
            if rank == d:
                break
    if rank != d:
        raise ValueError("frame does not span the ambient space")
    # M = P^{-1} Q, solved column by column over Q
    m = [[Fraction(0)] * d for _ in range(d)]
    aug = [chosen[i][:] + chosen_img[i][:] for i in range(d)]
    for col in range(d):
        piv = next(r for r in range(col, d) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            x = aug[i][d + j]
            if x.denominator != 1:
                raise ValueError("non-integral Weyl matrix")
            row.append(int(x))
        out.append(tuple(row))
    # aug now holds P^{-1} (rows permuted to identity) times images: rows of M
    return tuple(out)


def _weyl_fixed_basis(datum):
    """Basis of the W-fixed part of Y (vectors orthogonal to every root)."""
    if datum.rank == datum.x_rank:
        return []
    rows = [list(rt) for rt in datum.simple_roots]
    return [list(k) for k in left_kernel(transpose(rows))]


def _perm_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def _cycle_type(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        out.append(ln)
    return tuple(sorted(out, reverse=True))


def _signed_cycle_type(p, s):
    seen = [False] * len(p)
    pos, neg = [], []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln, prod = i, 0, 1
        while not seen[j]:
            seen[j] = True
            prod *= s[j]
            j = p[j]
            ln += 1
        (pos if prod == 1 else neg).append(ln)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def _d_class_label(p, s):
    alpha, beta = _signed_cycle_type(p, s)
    if beta or not alpha or any(a % 2 for a in alpha):
        return ("Dcls", (alpha, beta), 0)
    return ("Dcls", (alpha, beta), _split_tag(p, s))


def _split_tag(p, s):
    """+1/-1 tag of a split element (no negative cycles, all cycles even).

    Parity of the number of sign flips in any hyperoctahedral conjugation onto
    the standard representative; well defined because split classes have their
    centralizer inside the index-two subgroup.
    """
    seen = [False] * len(p)
    flips = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        sigma = 1
        for k in cyc:
            if sigma == -1:
                flips += 1
            sigma *= s[k]
    return -1 if flips % 2 else +1


def _perm_from_cycles(mu, n):
    p = list(range(n))
    idx = 0
    for ln in mu:
        block = list(range(idx, idx + ln))
        for a, b in zip(block, block[1:] + block[:1]):
            p[a] = b
        idx += ln
    assert idx == n
    return tuple(p), (1,) * n


def _signed_from_cycles(cls, n):
    alpha, beta = cls
    p = list(range(n))
    s = [1] * n
    idx = 0
    for ln in alpha:
        block = list(range(idx, idx + ln))
        for a, b in zip(block, block[1:] + block[:1]):
            p[a] = b
        idx += ln
    for ln in beta:
        block = list(range(idx, idx + ln))
        for a, b in zip(block, block[1:] + block[:1]):
            p[a] = b
        s[block[0]] = -1
        idx += ln
    assert idx == n
    return tuple(p), tuple(s)


def _conjugate_by_last_flip(el):
    p, s = el
    n = len(p)
    r = n - 1
    s2 = list(s)
    s2[r] = -s2[r]
    pinv_r = p.index(r)
    s2[pinv_r] = -s2[pinv_r]
    return p, tuple(s2)


# -- twisted action -------------------------------------------------------------


class TwistedAction:
    """The action w[y] = w(y - rho-vee) + rho-vee on a finite quotient of Y."""

    def __init__(self, datum, quotient):
        self.datum = datum
        self.q = quotient
        self.gen_mats = datum.simple_reflections()
        self.gens = []
        for m in self.gen_mats:
            self.gens.append(self._prepare(m))

    def _prepare(self, matrix):
        aq = self.q.act_matrix([list(r) for r in matrix])
        t = translation_part(self.datum, matrix)
        tq = self.q.project(t)
        return aq, tq

    def apply(self, prepared, z):
        aq, tq = prepared
        d = self.q.dim
        diag = self.q.diag
        return tuple(
            (sum(z[i] * aq[i][j] for i in range(d)) + tq[j]) % diag[j]
            for j in range(d)
        )

    def orbit_of(self, z):
        z = self.q.reduce(z)
        seen = {z}
        frontier = [z]
        while frontier:
            new = []
            for el in frontier:
                for g in self.gens:
                    w = self.apply(g, el)
                    if w not in seen:
                        seen.add(w)
                        new.append(w)
            frontier = new
        return seen

    def orbit_partition(self, budget=10_000_000):
        if self.q.cardinality > budget:
            raise BudgetExceeded(
                "quotient of size %d exceeds enumeration budget %d"
                % (self.q.cardinality, budget)
            )
        orbits = []
        visited = set()
        for z in self.q.elements():
            if z in visited:
                continue
            orb = self.orbit_of(z)
            visited |= orb
            orbits.append(orb)
        return orbits

    def fixed_count(self, matrix):
        """|{z : w[z] = z}| via Smith form, no enumeration."""
        d = self.q.dim
        aq = self.q.act_matrix([list(r) for r in matrix])
        m = [[(1 if i == j else 0) - aq[i][j] for j in range(d)] for i in range(d)]
        t = translation_part(self.datum, matrix)
        return self.q.count_solutions(m, self.q.project(t))


def translation_part(datum, matrix):
    """t_w = rho-vee - w(rho-vee), an integral vector of Y."""
    rv = datum.rho_vee
    img = tuple(sum(rv[i] * matrix[i][j] for i in range(len(rv))) for j in range(len(rv)))
    t = []
    for a, b in zip(rv, img):
        x = Fraction(a) - b
        if x.denominator != 1:
            raise ValueError("rho-vee - w(rho-vee) must be integral")
        t.append(int(x))
    return tuple(t)


def permutation_character(cover):
    """sigma^X as a dict class-label -> fixed-point count on Y/Y_{Q,n}."""
    wg = weyl_group(cover.datum)
    act = TwistedAction(cover.datum, cover.quotient)
    out = {}
    for cls, size, mat in wg.class_representatives():
        out[cls] = act.fixed_count(mat)
    return out


def count_free_orbits_by_character(cover):
    from .chars import inner_product

    wg = weyl_group(cover.datum)
    table = wg.table()
    sigma = permutation_character(cover)
    sign = {cls: table.sign_value(cls) for cls, _ in table.classes()}
    return inner_product(table, sign, sigma)


def count_orbits_by_character(cover):
    from .chars import inner_product

    wg = weyl_group(cover.datum)
    table = wg.table()
    sigma = permutation_character(cover)
    ones = {cls: 1 for cls, _ in table.classes()}
    return inner_product(table, ones, sigma)


def orbit_enumerate(cover, budget=10_000_000):
    """All twisted orbits on Y/Y_{Q,n} with free flags, plus the free count."""
    act = TwistedAction(cover.datum, cover.quotient)
    w_order = cover.datum.weyl_order()
    orbits = act.orbit_partition(budget=budget)
    flagged = [(len(o), len(o) == w_order) for o in orbits]
    return flagged, sum(1 for _, f in flagged if f)


# -- persistence ------------------------------------------------------------------


def is_persistent(cover, budget=300_000):
    """True/False, or None when undetermined (non-semisimple, unsaturated).

    Saturated covers are persistent. Otherwise, for semisimple data, check per
    conjugacy class w that the coset (w - 1)Y + t_w meets Y_{Q,n} inside
    Y^{sc}_{Q,n}; equivalently the twisted stabilizers agree on both quotients.
    Falls back to orbit comparison on Y/Y^{sc}_{Q,n} when no class data exists.
    """
    from .cover import is_saturated

    if is_saturated(cover):
        return True
    if not cover.datum.is_semisimple():
        return None
    try:
        wg = weyl_group(cover.datum)
        reps = wg.class_representatives()
    except (ValueError, LookupError):
        reps = None
    if reps is not None:
        for cls, size, mat in reps:
            if not _class_coset_ok(cover, mat):
                return False
        return True
    return _persistent_by_orbits(cover, budget)


def _class_coset_ok(cover, matrix):
    d = cover.datum.x_rank
    rows = [[matrix[i][j] - (1 if i == j else 0) for j in range(d)] for i in range(d)]
    t = translation_part(cover.datum, matrix)
    L = cover.Y_Qn
    Lsc = cover.Y_Qn_sc
    stacked = rows + [[-x for x in b] for b in L.basis]
    sol = solve_left(stacked, [-x for x in t])
    if sol is None:
        return True  # coset misses Y_{Q,n} entirely
    y = sol[:d]
    v0 = [sum(y[i] * rows[i][j] for i in range(d)) + t[j] for j in range(d)]
    if not Lsc.contains(v0):
        return False
    K = Lattice(rows, d).intersect(L)
    return Lsc.contains_lattice(K)


def _persistent_by_orbits(cover, budget):
    from .intmat import vec_mat

    Xsc = FiniteQuotient(cover.Y_Qn_sc)
    if Xsc.cardinality > budget:
        raise BudgetExceeded(
            "persistence check needs %d-element quotient, budget %d"
            % (Xsc.cardinality, budget)
        )
    X = cover.quotient
    act_sc = TwistedAction(cover.datum, Xsc)
    act_big = TwistedAction(cover.datum, X)
    visited = set()
    for z in Xsc.elements():
        if z in visited:
            continue
        orb_sc = act_sc.orbit_of(z)
        visited |= orb_sc
        lift = vec_mat(z, Xsc.vinv)
        orb_big = act_big.orbit_of(X.project(lift))
        if len(orb_sc) != len(orb_big):
            return False
    return True


# -- coinvariant algebra cross-checks ----------------------------------------------


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def det_one_minus_t(matrix):
    """det(I - t M) as integer coefficients, by interpolation."""
    from .intmat import bareiss_det

    d = len(matrix)
    pts = list(range(d + 1))
    vals = []
    for k in pts:
        m = [[(1 if i == j else 0) - k * matrix[i][j] for j in range(d)] for i in range(d)]
        vals.append(Fraction(bareiss_det(m)))
    # Lagrange interpolation
    coeffs = [Fraction(0)] * (d + 1)
    for i, xi in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(pts):
            if i == j:
                continue
            basis = poly_mul(basis, [Fraction(-xj), Fraction(1)])
            denom *= xi - xj
        scale = vals[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return out


def poly_exact_div(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    dl = len(den) - 1
    lead = den[dl]
    for i in range(len(num) - 1, dl - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % lead == 0
        f = c // lead
        q[i - dl] = f
        for j, dj in enumerate(den):
            num[i - dl + j] -= f * dj
    assert all(x == 0 for x in num)
    return q


def coinvariant_graded_trace(datum, matrix):
    """Graded trace of w on the coinvariant algebra, a polynomial of degree |Phi+|."""
    degrees = []
    for ct in datum.components:
        degrees.extend(ct.degrees)
    num = [1]
    for dg in degrees:
        factor = [0] * (dg + 1)
        factor[0] = 1
        factor[dg] = -1
        num = poly_mul(num, factor)
    den = det_one_minus_t(matrix)
    corank = datum.x_rank - datum.rank
    for _ in range(corank):
        den = poly_exact_div(den, [1, -1])
    return poly_exact_div(num, den)


def b_invariants_from_coinvariants(datum, table, reps):
    """b per irreducible label computed from graded multiplicities."""
    traces = {cls: coinvariant_graded_trace(datum, mat) for cls, _, mat in reps}
    order = table.order
    out = {}
    npos = len(datum.positive_roots())
    for lab in table.labels():
        for deg in range(npos + 1):
            total = 0
            for cls, size, _ in reps:
                tr = traces[cls]
                val = tr[deg] if deg < len(tr) else 0
                total += size * table.value(lab, cls) * val
            if total:
                assert total % order == 0 and total > 0
                out[lab] = deg
                break
        else:
            raise RuntimeError("no coinvariant degree found for %r" % (lab,))
    return out
