"""Root data for split reductive groups, with exact lattice coordinates.

Conventions. The cocharacter lattice Y is Z^d in a fixed basis; the character
lattice X is Z^d in the dual basis, so the pairing of an X-vector with a
Y-vector is the dot product. Roots are stored as X-vectors together with
their coroots (Y-vectors) and their expansions in the simple roots. Weyl
elements act on row vectors, y -> y @ M.

Presets follow Bourbaki's labeling of the simple roots. For user-supplied
data the order in which the simple roots are listed is taken as the declared
labeling.
"""

from dataclasses import dataclass
from fractions import Fraction
import json

from .intmat import identity


@dataclass(frozen=True, order=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        ok = (
            (s == "A" and r >= 1)
            or (s == "B" and r >= 2)
            or (s == "C" and r >= 2)
            or (s == "D" and r >= 3)
            or (s == "E" and r in (6, 7, 8))
            or (s == "F" and r == 4)
            or (s == "G" and r == 2)
        )
        if not ok:
            raise ValueError("inadmissible Cartan type %s%d" % (s, r))

    def __str__(self):
        return "%s%d" % (self.series, self.rank)

    @property
    def num_positive_roots(self):
        s, r = self.series, self.rank
        if s == "A":
            return r * (r + 1) // 2
        if s in ("B", "C"):
            return r * r
        if s == "D":
            return r * (r - 1)
        if s == "E":
            return {6: 36, 7: 63, 8: 120}[r]
        return 24 if s == "F" else 6

    @property
    def weyl_order(self):
        s, r = self.series, self.rank
        import math

        if s == "A":
            return math.factorial(r + 1)
        if s in ("B", "C"):
            return 2**r * math.factorial(r)
        if s == "D":
            return 2 ** (r - 1) * math.factorial(r)
        return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                ("F", 4): 1152, ("G", 2): 12}[(s, r)]

    @property
    def degrees(self):
        s, r = self.series, self.rank
        if s == "A":
            return list(range(2, r + 2))
        if s in ("B", "C"):
            return list(range(2, 2 * r + 1, 2))
        if s == "D":
            return list(range(2, 2 * r - 1, 2)) + [r]
        return {
            ("G", 2): [2, 6],
            ("F", 4): [2, 6, 8, 12],
            ("E", 6): [2, 5, 6, 8, 9, 12],
            ("E", 7): [2, 6, 8, 10, 12, 14, 18],
            ("E", 8): [2, 8, 12, 14, 18, 20, 24, 30],
        }[(s, r)]

    @property
    def highest_root_height(self):
        s, r = self.series, self.rank
        if s == "A":
            return r
        if s in ("B", "C"):
            return 2 * r - 1
        if s == "D":
            return 2 * r - 3
        if s == "E":
            return {6: 11, 7: 17, 8: 29}[r]
        return 11 if s == "F" else 5


def cartan_matrix(ctype):
    """Cartan matrix c[i][j] = <alpha_i, alpha_j-vee> in Bourbaki order."""
    s, r = ctype.series, ctype.rank
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j, a=-1, b=-1):
        c[i][j] = a
        c[j][i] = b

    if s == "A":
        for i in range(r - 1):
            link(i, i + 1)
    elif s == "B":
        for i in range(r - 2):
            link(i, i + 1)
        if r >= 2:
            link(r - 2, r - 1, a=-2, b=-1)  # alpha_{r-1} long, alpha_r short
    elif s == "C":
        for i in range(r - 2):
            link(i, i + 1)
        if r >= 2:
            link(r - 2, r - 1, a=-1, b=-2)  # alpha_r long
    elif s == "D":
        for i in range(r - 3):
            link(i, i + 1)
        link(r - 3, r - 2)
        link(r - 3, r - 1)
    elif s == "G":
        link(0, 1, a=-1, b=-3)  # alpha_1 short, alpha_2 long
    elif s == "F":
        link(0, 1)
        link(1, 2, a=-2, b=-1)  # alpha_2 long, alpha_3 short
        link(2, 3)
    elif s == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: r - 1]
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)
    return c


class Root:
    """A root with exact coordinates: functional x, coroot y, simple expansion."""

    __slots__ = ("x", "y", "coeffs")

    def __init__(self, x, y, coeffs):
        self.x = tuple(x)
        self.y = tuple(y)
        self.coeffs = tuple(coeffs)

    @property
    def height(self):
        return sum(self.coeffs)

    @property
    def is_positive(self):
        return all(c >= 0 for c in self.coeffs) and any(c > 0 for c in self.coeffs)

    def __eq__(self, other):
        return self.x == other.x

    def __hash__(self):
        return hash(self.x)

    def __repr__(self):
        return "Root%s" % (self.coeffs,)


def pairing(x, y):
    return sum(a * b for a, b in zip(x, y))


class RootDatum:
    """A root datum with cached positive roots, weights and classifying data.

    simple_roots: rows in X (dual-basis functionals); simple_coroots: rows in
    Y. Components carry a frame in which the Weyl group acts by (signed)
    permutations, used for conjugacy-class labels downstream.
    """

    def __init__(self, simple_roots, simple_coroots, x_rank, name="custom", frames=None):
        self.name = name
        self.x_rank = x_rank
        self.simple_roots = [tuple(r) for r in simple_roots]
        self.simple_coroots = [tuple(r) for r in simple_coroots]
        self.rank = len(simple_roots)
        if len(simple_coroots) != self.rank:
            raise ValueError("mismatched simple roots/coroots")
        self.cartan = [[pairing(a, bv) for bv in self.simple_coroots] for a in self.simple_roots]
        self._check_cartan()
        self.component_indices = _connected_components(self.cartan)
        self.components = [
            _component_type([[self.cartan[i][j] for j in comp] for i in comp])
            for comp in self.component_indices
        ]
        self.positive = self._generate_positive()
        self.roots_by_x = {rt.x: rt for rt in self.positive}
        self.rho_vee = tuple(
            sum((Fraction(rt.y[j]) for rt in self.positive), Fraction(0)) / 2
            for j in range(x_rank)
        )
        self.rho = tuple(
            sum((Fraction(rt.x[j]) for rt in self.positive), Fraction(0)) / 2
            for j in range(x_rank)
        )
        self._fundamental_weights = None
        self._frames = frames  # optional list of per-component frame specs
        # nilpotent-orbit bookkeeping: (series, rank, partition total); presets
        # set this explicitly so B2=C2-style coincidences keep their meaning
        self.orbit_ambient = None

    # -- construction helpers -------------------------------------------------

    def _check_cartan(self):
        for i in range(self.rank):
            if self.cartan[i][i] != 2:
                raise ValueError("diagonal Cartan pairing must be 2")
            for j in range(self.rank):
                if i != j and self.cartan[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")

    def _generate_positive(self):
        simples = [
            Root(self.simple_roots[i], self.simple_coroots[i],
                 tuple(1 if k == i else 0 for k in range(self.rank)))
            for i in range(self.rank)
        ]
        seen = {rt.x: rt for rt in simples}
        frontier = list(simples)
        while frontier:
            new = []
            for rt in frontier:
                for i in range(self.rank):
                    c = pairing(rt.x, self.simple_coroots[i])
                    if c == 0:
                        continue
                    x = tuple(a - c * b for a, b in zip(rt.x, self.simple_roots[i]))
                    if x in seen:
                        continue
                    d = pairing(self.simple_roots[i], rt.y)
                    y = tuple(a - d * b for a, b in zip(rt.y, self.simple_coroots[i]))
                    coeffs = tuple(a - c * (1 if k == i else 0) for k, a in enumerate(rt.coeffs))
                    nr = Root(x, y, coeffs)
                    seen[x] = nr
                    new.append(nr)
            frontier = new
        pos = sorted((rt for rt in seen.values() if rt.is_positive),
                     key=lambda rt: (rt.height, rt.coeffs))
        expected = sum(ct.num_positive_roots for ct in self.components)
        if len(pos) != expected:
            raise RuntimeError("generated %d positive roots, expected %d" % (len(pos), expected))
        if len(seen) != 2 * len(pos):
            raise RuntimeError("root set is not symmetric")
        return pos

    # -- queries ---------------------------------------------------------------

    def positive_roots(self):
        return list(self.positive)

    def positive_coroots(self):
        return [rt.y for rt in self.positive]

    def all_roots(self):
        out = []
        for rt in self.positive:
            out.append(rt)
            out.append(Root(tuple(-a for a in rt.x), tuple(-a for a in rt.y),
                            tuple(-a for a in rt.coeffs)))
        return out

    def highest_root_height(self, component=0):
        idx = set(self.component_indices[component])
        return max(rt.height for rt in self.positive
                   if any(rt.coeffs[i] for i in idx))

    def reflection_matrix(self, root):
        """Matrix (row action) of the reflection in the given Root."""
        n = self.x_rank
        m = identity(n)
        for j in range(n):
            for k in range(n):
                m[j][k] -= root.x[j] * root.y[k]
        return tuple(tuple(row) for row in m)

    def simple_reflections(self):
        simples = [self.roots_by_x[x] for x in self.simple_roots]
        return [self.reflection_matrix(rt) for rt in simples]

    def weyl_order(self):
        n = 1
        for ct in self.components:
            n *= ct.weyl_order
        return n

    def fundamental_weights(self):
        """omega_alpha per simple root: <w_i, alpha_j-vee> = delta_ij, zero on the
        W-fixed complement of the coroot span."""
        if self._fundamental_weights is not None:
            return self._fundamental_weights
        d = self.x_rank
        corank = d - self.rank
        cols = [list(cv) for cv in self.simple_coroots]
        comp = _complement_basis(self.simple_coroots, d)
        out = []
        for i in range(self.rank):
            # solve <w, coroot_j> = delta_ij, <w, comp_k> = 0
            a = [list(map(Fraction, c)) for c in cols + comp]
            b = [Fraction(1 if j == i else 0) for j in range(self.rank)] + [Fraction(0)] * corank
            # unknown w in Q^d with w . a_row = b: treat a as columns
            w = _solve_functional(a, b, d)
            out.append(w)
        self._fundamental_weights = out
        return out

    def coroot_span_complement(self):
        return _complement_basis(self.simple_coroots, self.x_rank)

    def is_semisimple(self):
        return self.rank == self.x_rank

    def frame(self, component=0):
        if self._frames is None:
            raise ValueError("no frame data for datum %r" % self.name)
        return self._frames[component]

    def root_from_x(self, x):
        x = tuple(x)
        if x in self.roots_by_x:
            return self.roots_by_x[x]
        neg = tuple(-a for a in x)
        if neg in self.roots_by_x:
            rt = self.roots_by_x[neg]
            return Root(x, tuple(-a for a in rt.y), tuple(-a for a in rt.coeffs))
        raise KeyError("not a root: %r" % (x,))

    def __repr__(self):
        return "RootDatum(%s, %s)" % (self.name, "x".join(map(str, self.components)))


def _solve_functional(vectors, values, d):
    """Find w in Q^d with w . vectors[k] = values[k]; vectors span Q^d."""
    a = [[Fraction(vectors[k][j]) for j in range(d)] for k in range(len(vectors))]
    if len(a) != d:
        raise ValueError("need exactly d conditions")
    m = [row[:] + [values[k]] for k, row in enumerate(a)]
    n = d
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("degenerate system")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def _complement_basis(coroots, d):
    """Integer vectors z with <alpha_i, z> = 0 for all simple roots: a basis of
    the W-fixed complement, empty for semisimple data.

    Works with the coroots' orthogonal complement under the dot pairing on the
    X side; only used to normalize weights, so any spanning choice will do.
    """
    if len(coroots) == d:
        return []
    from .intmat import left_kernel, transpose

    # z in Y with <alpha_i, z> = 0 for all i would be the coroot-span complement
    # on the Y side; here we need X-side vectors vanishing on coroots.
    a = [list(cv) for cv in coroots]  # rows = coroots (Y side)
    return [list(k) for k in left_kernel(transpose(a))]


def _connected_components(cartan):
    r = len(cartan)
    seen = [False] * r
    comps = []
    for s in range(r):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _component_type(c):
    """Cartan type of a connected Cartan matrix, canonicalized (D3 -> A3 etc.)."""
    r = len(c)
    if r == 1:
        return CartanType("A", 1)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r) if c[i][j] != 0]
    mults = {(i, j): c[i][j] * c[j][i] for i, j in pairs}
    maxmult = max(mults.values())
    degrees = [sum(1 for j in range(r) if j != i and c[i][j] != 0) for i in range(r)]
    if maxmult == 3:
        if r != 2:
            raise ValueError("triple edge in rank %d subsystem" % r)
        return CartanType("G", 2)
    if maxmult == 2:
        if max(degrees) > 2:
            raise ValueError("double edge with branching: not a root system")
        (i, j) = next(p for p in pairs if mults[p] == 2)
        if sum(1 for p in pairs if mults[p] == 2) > 1:
            raise ValueError("multiple double edges")
        ends = [k for k in range(r) if degrees[k] == 1]
        if r == 2:
            return CartanType("C", 2)  # B2 = C2, canonical form
        # walk the path; the double edge must be terminal for B/C, interior for F4
        if i in ends or j in ends:
            leaf = i if i in ends else j
            other = j if leaf == i else i
            # <alpha_other, alpha_leaf-vee> = -2 means the leaf root is short: type B
            if c[other][leaf] == -2:
                return CartanType("B", r)
            return CartanType("C", r)
        if r == 4:
            return CartanType("F", 4)
        raise ValueError("interior double edge in rank %d" % r)
    # simply laced
    if max(degrees) <= 2:
        return CartanType("A", r)
    if degrees.count(3) != 1:
        raise ValueError("not a Dynkin diagram")
    hub = degrees.index(3)
    lengths = []
    adj = {i: [j for j in range(r) if j != i and c[i][j] != 0] for i in range(r)}
    for nb in adj[hub]:
        ln, prev, cur = 1, hub, nb
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[0] == 1 and lengths[1] == 1:
        if r == 3:
            return CartanType("A", 3)
        return CartanType("D", r)
    if lengths[:2] == [1, 2] and r in (6, 7, 8):
        return CartanType("E", r)
    raise ValueError("unrecognized simply-laced diagram, branch lengths %s" % lengths)


def canonical_types(types):
    """Canonical multiset of types for comparisons.

    Degenerate members collapse: rank-1 B/C -> A1, D1 -> empty, D2 -> A1 A1,
    D3 -> A3, B2 -> C2. Accepts CartanType objects, (series, rank) pairs or
    strings like 'C3'.
    """
    out = []
    for ct in types:
        if isinstance(ct, str):
            s, r = ct[0].upper(), int(ct[1:])
        elif isinstance(ct, CartanType):
            s, r = ct.series, ct.rank
        else:
            s, r = ct
        if r <= 0 or (s == "D" and r == 1):
            continue
        if r == 1:
            out.append(CartanType("A", 1))
        elif s == "D" and r == 2:
            out.extend([CartanType("A", 1), CartanType("A", 1)])
        elif s == "D" and r == 3:
            out.append(CartanType("A", 3))
        elif s == "B" and r == 2:
            out.append(CartanType("C", 2))
        else:
            out.append(CartanType(s, r))
    return sorted(out)


# -- frames: coordinates in which W acts by (signed) permutations -------------


class Frame:
    """A list of vectors permuted (with signs for kind 'signed') by W."""

    def __init__(self, kind, vectors):
        self.kind = kind  # 'perm' or 'signed'
        self.vectors = [tuple(Fraction(x) for x in v) for v in vectors]
        self._index = {v: i for i, v in enumerate(self.vectors)}
        if kind == "signed":
            for i, v in enumerate(self.vectors):
                self._index[tuple(-x for x in v)] = ~i  # bitwise-not marks sign

    def signed_perm(self, matrix):
        """(perm, signs) of a Weyl matrix in this frame; signs all +1 for 'perm'."""
        n = len(self.vectors)
        perm = [0] * n
        signs = [1] * n
        for i, v in enumerate(self.vectors):
            w = tuple(sum(v[a] * matrix[a][b] for a in range(len(v))) for b in range(len(matrix[0])))
            j = self._index.get(w)
            if j is None:
                raise ValueError("matrix does not preserve the frame")
            if j < 0:
                perm[i] = ~j
                signs[i] = -1
            else:
                perm[i] = j
        return tuple(perm), tuple(signs)


# -- presets -------------------------------------------------------------------


def _sc_datum(ctype, name):
    """Simply-connected datum: Y basis = simple coroots, roots = Cartan rows."""
    c = cartan_matrix(ctype)
    r = ctype.rank
    roots = [tuple(c[i][j] for j in range(r)) for i in range(r)]
    coroots = identity(r)
    frames = [_sc_frame(ctype)] if ctype.series in ("A", "B", "C", "D") else None
    return RootDatum(roots, coroots, r, name=name, frames=frames)


def _sc_frame(ctype):
    s, r = ctype.series, ctype.rank
    F = Fraction
    if s == "A":
        # u_i - u_{i+1} = e_i (coroot basis); sum u_i = 0
        u = []
        tail = [F(0)] * r
        vs = []
        for i in reversed(range(r)):
            tail = tail[:]
            tail[i] += 1
            vs.append(tuple(tail))
        vs = list(reversed(vs)) + [tuple(F(0) for _ in range(r))]
        shift = [sum(v[j] for v in vs) / (r + 1) for j in range(r)]
        return Frame("perm", [tuple(v[j] - shift[j] for j in range(r)) for v in vs])
    if s in ("B", "C", "D"):
        # f_i with coroot_i = f_i - f_{i+1} along the chain; the tail depends
        # on the series (coroot_r = 2f_r, f_r, or f_{r-1} + f_r).
        f = [[F(0)] * r for _ in range(r)]
        if s == "B":
            f[r - 1][r - 1] = F(1, 2)
        elif s == "C":
            f[r - 1][r - 1] = F(1)
        else:
            f[r - 2][r - 2] = F(1, 2)
            f[r - 2][r - 1] = F(1, 2)
            f[r - 1][r - 2] = F(-1, 2)
            f[r - 1][r - 1] = F(1, 2)
        top = r - 2 if s == "D" else r - 1
        for i in reversed(range(top)):
            f[i] = [a + b for a, b in zip(_unit(r, i), f[i + 1])]
        return Frame("signed", f)
    raise ValueError("no frame for exceptional types")


def _unit(n, i):
    row = [Fraction(0)] * n
    row[i] = Fraction(1)
    return row


def _diag_frame(r, kind, offset=0, dim=None, center=None):
    dim = dim or r
    vs = []
    for i in range(r):
        v = [Fraction(0)] * dim
        v[offset + i] = Fraction(1)
        if center is not None:
            v[center] -= Fraction(1, 2)
        vs.append(tuple(v))
    return Frame(kind, vs)


PRESETS = ("SL", "GL", "Sp", "SpinOdd", "SpinEven", "SO", "GSpin", "E", "F", "G")


def build_root_datum(preset, rank=None, kp=None):
    """Construct a preset root datum. Presets: SL, GL, Sp, SpinOdd, SpinEven,
    SO, GSpin, E, F, G. rank is the Cartan-type subscript (SL rank r means
    SL_{r+1}; SO/GSpin rank r means the 2r+1 forms)."""
    p = preset
    if p == "SL":
        if rank is None or rank < 1:
            raise ValueError("SL needs rank >= 1")
        d = _sc_datum(CartanType("A", rank), "SL%d" % (rank + 1))
        d.orbit_ambient = ("A", rank, rank + 1)
        return d
    if p == "Sp":
        if rank is None or rank < 1:
            raise ValueError("Sp needs rank >= 1")
        if rank == 1:
            d = _sc_datum(CartanType("A", 1), "Sp2")
            d._frames = [Frame("signed", [(Fraction(1),)])]
        else:
            d = _sc_datum(CartanType("C", rank), "Sp%d" % (2 * rank))
        d.orbit_ambient = ("C", rank, 2 * rank)
        return d
    if p == "SpinOdd":
        if rank is None or rank < 2:
            raise ValueError("SpinOdd needs rank >= 2")
        d = _sc_datum(CartanType("B", rank), "Spin%d" % (2 * rank + 1))
        d.orbit_ambient = ("B", rank, 2 * rank + 1)
        return d
    if p == "SpinEven":
        if rank is None or rank < 3:
            raise ValueError("SpinEven needs rank >= 3")
        d = _sc_datum(CartanType("D", rank), "Spin%d" % (2 * rank))
        d.orbit_ambient = ("D", rank, 2 * rank)
        return d
    if p in ("E", "F", "G"):
        d = _sc_datum(CartanType(p, rank), "%s%d" % (p, rank))
        d.orbit_ambient = (p, rank, None)
        return d
    if p == "GL":
        if rank is None or rank < 1:
            raise ValueError("GL needs rank >= 1")
        r = rank
        roots = [tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(r))
                 for i in range(r - 1)]
        coroots = [list(x) for x in roots]
        d = RootDatum(roots, coroots, r, name="GL%d" % r,
                      frames=[_diag_frame(r, "perm")] if r > 1 else [])
        d.orbit_ambient = ("A", r - 1, r)
        return d
    if p == "SO":
        if rank is None or rank < 2:
            raise ValueError("SO needs rank >= 2")
        r = rank
        roots = []
        coroots = []
        for i in range(r - 1):
            roots.append(tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(r)))
            coroots.append(list(roots[-1]))
        roots.append(tuple(1 if j == r - 1 else 0 for j in range(r)))
        coroots.append([2 if j == r - 1 else 0 for j in range(r)])
        d = RootDatum(roots, coroots, r, name="SO%d" % (2 * r + 1),
                      frames=[_diag_frame(r, "signed")])
        d.orbit_ambient = ("B", r, 2 * r + 1)
        return d
    if p == "GSpin":
        if rank is None or rank < 2:
            raise ValueError("GSpin needs rank >= 2")
        r = rank
        d0 = r + 1  # coordinate 0 is the central direction e_0
        roots = []
        coroots = []
        for i in range(1, r):
            roots.append(tuple(1 if j == i else (-1 if j == i + 1 else 0) for j in range(d0)))
            coroots.append(list(roots[-1]))
        roots.append(tuple(1 if j == r else 0 for j in range(d0)))
        coroots.append([(-1 if j == 0 else (2 if j == r else 0)) for j in range(d0)])
        d = RootDatum(roots, coroots, d0, name="GSpin%d" % (2 * r + 1),
                      frames=[_diag_frame(r, "signed", offset=1, dim=d0, center=0)])
        d.orbit_ambient = ("B", r, 2 * r + 1)
        return d
    raise ValueError("unknown preset %r" % preset)


def datum_from_config(cfg):
    """Declarative root datum: simple_roots, simple_coroots, optional pairing."""
    if isinstance(cfg, str):
        cfg = json.loads(cfg)
    roots = [list(map(int, r)) for r in cfg["simple_roots"]]
    coroots = [list(map(int, r)) for r in cfg["simple_coroots"]]
    d = len(roots[0]) if roots else int(cfg.get("x_rank", 0))
    if "pairing" in cfg:
        p = [list(map(int, r)) for r in cfg["pairing"]]
        roots = [[sum(r[a] * p[a][j] for a in range(d)) for j in range(d)] for r in roots]
    return RootDatum(roots, coroots, d, name=cfg.get("name", "config"))


def classify_subsystem(datum, roots):
    """Cartan types of a reflection-closed subsystem, with its simple system.

    roots: iterable of Root objects (or x-coordinate tuples) from the datum,
    closed under negation or given as the positive half. Returns (types,
    simple_roots) with types canonicalized.
    """
    pos = {}
    for rt in roots:
        if not isinstance(rt, Root):
            rt = datum.root_from_x(rt)
        key = rt.x if rt.is_positive else tuple(-a for a in rt.x)
        pos[key] = datum.roots_by_x[key]
    pos_list = list(pos.values())
    pos_set = set(pos)
    # closure under the subsystem's own reflections
    for a in pos_list:
        for b in pos_list:
            c = pairing(b.x, a.y)
            img = tuple(p - c * q for p, q in zip(b.x, a.x))
            key = img if img in datum.roots_by_x else tuple(-v for v in img)
            if key not in pos_set:
                raise ValueError("input is not closed under its reflections")
    # simple system: positive elements not sums of two positive elements
    xset = pos_set
    simples = []
    for rt in pos_list:
        decomposable = False
        for other in pos_list:
            diff = tuple(a - b for a, b in zip(rt.x, other.x))
            if diff in xset:
                decomposable = True
                break
        if not decomposable:
            simples.append(rt)
    simples.sort(key=lambda rt: rt.coeffs)
    cart = [[pairing(a.x, b.y) for b in simples] for a in simples]
    comps = _connected_components(cart)
    types = []
    for comp in comps:
        types.append(_component_type([[cart[i][j] for j in comp] for i in comp]))
    return canonical_types(types), simples
