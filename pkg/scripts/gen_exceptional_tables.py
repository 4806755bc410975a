#!/usr/bin/env python3
"""Generate the exceptional Weyl character-table assets (G2, F4, E6).

Pipeline per group: enumerate the Weyl group as integer matrices, split into
conjugacy classes by brute conjugation, build the class-algebra matrices, run
the Burnside-Dixon eigenvector algorithm over F_p (p = 1801), lift to exact
integer character values, recompute b-invariants from coinvariant graded
traces, and name characters phi[d,b] with primes assigned by comparing values
on the long-root reflection class (larger value gets the double prime).

The G2 file also carries the nilpotent-orbit list and the Springer map, which
is forced by b = |Phi+| - dim(O)/2 once the prime convention is fixed.

Usage: python3 scripts/gen_exceptional_tables.py [G2 F4 E6]
"""

import hashlib
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from metaplectic.cover import preset_form
from metaplectic.excdata import _char_poly, _root_cycle_type
from metaplectic.intmat import bareiss_det, mat_mul
from metaplectic.rootdata import build_root_datum
from metaplectic.weylgrp import b_invariants_from_coinvariants

P = 1801


def matmul_t(a, b):
    d = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d))
                 for i in range(d))


def enumerate_group(datum):
    gens = [tuple(tuple(r) for r in m) for m in datum.simple_reflections()]
    ident = tuple(tuple(1 if i == j else 0 for j in range(datum.x_rank))
                  for i in range(datum.x_rank))
    seen = {ident: ident}  # element -> inverse
    frontier = [ident]
    while frontier:
        new = []
        for el in frontier:
            inv = seen[el]
            for g in gens:
                h = matmul_t(el, g)
                if h not in seen:
                    seen[h] = matmul_t(g, inv)  # generators are involutions
                    new.append(h)
        frontier = new
    return seen, gens, ident


def conjugacy_classes(elements, gens):
    """Split into classes by conjugation BFS; returns list of lists."""
    inv_gens = gens  # involutions
    unassigned = set(elements)
    classes = []
    while unassigned:
        x0 = min(unassigned)  # deterministic
        cls = {x0}
        frontier = [x0]
        while frontier:
            new = []
            for x in frontier:
                for g in inv_gens:
                    y = matmul_t(matmul_t(g, x), g)
                    if y not in cls:
                        cls.add(y)
                        new.append(y)
            frontier = new
        classes.append(sorted(cls))
        unassigned -= cls
    classes.sort(key=lambda c: (element_order(c[0]), len(c), c[0]))
    return classes


def element_order(m):
    d = len(m)
    ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    p, k = m, 1
    while p != ident:
        p = matmul_t(p, m)
        k += 1
    return k


def class_matrices(classes, elements_inv, elem_class):
    """R_j with (R_j)[i][k] = #{(x,y) in C_j x C_i : x y = rep_k}."""
    k = len(classes)
    reps = [c[0] for c in classes]
    mats = [[[0] * k for _ in range(k)] for _ in range(k)]
    for j, cj in enumerate(classes):
        for x in cj:
            xinv = elements_inv[x]
            for kk, rep in enumerate(reps):
                y = matmul_t(xinv, rep)
                mats[j][elem_class[y]][kk] += 1
    return mats


# -- linear algebra over F_p ------------------------------------------------------


def solve_nullspace(rows, p):
    """Basis of the left nullspace {x : x A = 0} over F_p (rows of A given)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[rows[i][j] % p for j in range(n)] + [1 if t == i else 0 for t in range(m)]
           for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], p - 2, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    null = []
    for i in range(r, m):
        if all(x % p == 0 for x in aug[i][:n]):
            null.append([aug[i][n + t] % p for t in range(m)])
    return null


def charpoly_mod(a, p):
    """Characteristic polynomial mod p by Hessenberg reduction."""
    n = len(a)
    h = [[x % p for x in row] for row in a]
    for col in range(n - 2):
        piv = next((r for r in range(col + 1, n) if h[r][col] % p), None)
        if piv is None:
            continue
        if piv != col + 1:
            h[col + 1], h[piv] = h[piv], h[col + 1]
            for r in range(n):
                h[r][col + 1], h[r][piv] = h[r][piv], h[r][col + 1]
        inv = pow(h[col + 1][col], p - 2, p)
        for r in range(col + 2, n):
            f = (h[r][col] * inv) % p
            if f:
                h[r] = [(x - f * y) % p for x, y in zip(h[r], h[col + 1])]
                for rr in range(n):
                    h[rr][col + 1] = (h[rr][col + 1] + f * h[rr][r]) % p
    # charpoly of Hessenberg matrix by recurrence
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k(t) = (t - h[k-1][k-1]) p_{k-1}(t) - sum_{i<k-1} h[i][k-1] (prod subdiag) p_i(t)
        term = poly_sub(poly_shift(polys[k - 1]), poly_scale(polys[k - 1], h[k - 1][k - 1]), P)
        prod = 1
        for i in range(k - 2, -1, -1):
            prod = (prod * h[i + 1][i]) % p
            coeff = (h[i][k - 1] * prod) % p
            if coeff:
                term = poly_sub(term, poly_scale(polys[i], coeff), p)
        polys.append(term)
    return polys[n]


def poly_shift(a):
    return [0] + list(a)


def poly_scale(a, c):
    return [(x * c) % P for x in a]


def poly_sub(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]


def poly_eval(a, x, p):
    out = 0
    for c in reversed(a):
        out = (out * x + c) % p
    return out


def dixon_characters(mats, sizes, inv_class, ident_idx, p=P):
    k = len(sizes)
    spaces = [[[1 if i == j else 0 for j in range(k)] for i in range(k)]]
    for j in range(k):
        if all(len(s) == 1 for s in spaces):
            break
        rj = mats[j]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            # restrict R_j to the subspace: rows x of C with x (B R) = lambda (x B)
            br = [[sum(b[i] * rj[i][c] for i in range(k)) % p for c in range(k)]
                  for b in basis]
            T = express_in_basis(br, basis, p)
            cp = charpoly_mod(T, p)
            split = []
            for lam in range(p):
                if poly_eval(cp, lam, p) == 0:
                    tm = [[(T[i][c] - (lam if i == c else 0)) % p for c in range(len(T))]
                          for i in range(len(T))]
                    null = solve_nullspace(tm, p)
                    if null:
                        vecs = [[sum(x[i] * basis[i][c] for i in range(len(basis))) % p
                                 for c in range(k)] for x in null]
                        split.append(vecs)
            assert sum(len(s) for s in split) == len(basis)
            new_spaces.extend(split)
        spaces = new_spaces
    assert all(len(s) == 1 for s in spaces), "class algebra failed to split"
    order = sum(sizes)
    # normalize: v scaled so v[identity] = 1; then v_i = chi(g_i^{-1})/chi(1)
    chars = []
    for (v,) in spaces:
        scale = pow(v[ident_idx], p - 2, p)
        v = [(x * scale) % p for x in v]
        s = 0
        for i in range(k):
            s = (s + sizes[i] * v[i] * v[inv_class[i]]) % p
        d2 = (order * pow(s, p - 2, p)) % p
        dim = tonelli_sqrt(d2, p)
        if dim > p // 2:
            dim = p - dim
        assert 0 < dim * dim <= order and order % dim == 0
        vals = []
        for i in range(k):
            x = (dim * v[inv_class[i]]) % p
            if x > p // 2:
                x -= p
            vals.append(x)
        chars.append(vals)
    return chars


def express_in_basis(rows, basis, p):
    """Coordinates of each row in terms of the basis rows (over F_p)."""
    m = len(basis)
    k = len(basis[0])
    out = []
    aug = [[basis[i][j] % p for j in range(k)] for i in range(m)]
    # row reduce basis, remembering transforms
    trans = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    piv_cols = []
    r = 0
    work = [row[:] for row in aug]
    for c in range(k):
        piv = next((i for i in range(r, m) if work[i][c] % p), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        trans[r], trans[piv] = trans[piv], trans[r]
        inv = pow(work[r][c], p - 2, p)
        work[r] = [(x * inv) % p for x in work[r]]
        trans[r] = [(x * inv) % p for x in trans[r]]
        for i in range(m):
            if i != r and work[i][c] % p:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
                trans[i] = [(x - f * y) % p for x, y in zip(trans[i], trans[r])]
        piv_cols.append(c)
        r += 1
    assert r == m, "basis rows are dependent"
    for row in rows:
        coords_in_reduced = [row[c] % p for c in piv_cols]
        coords = [sum(coords_in_reduced[t] * trans[t][i] for t in range(m)) % p
                  for i in range(m)]
        # verify
        rec = [sum(coords[i] * basis[i][j] for i in range(m)) % p for j in range(k)]
        assert rec == [x % p for x in row], "row escapes the subspace"
        out.append(coords)
    return out


def tonelli_sqrt(a, p):
    a %= p
    if a == 0:
        return 0
    assert pow(a, (p - 1) // 2, p) == 1, "not a quadratic residue"
    for x in range(1, p):
        if (x * x) % p == a:
            return x
    raise AssertionError


# -- naming and output --------------------------------------------------------------


def reflection_class_indices(datum, elem_class, form):
    """(long_idx, short_idx or None): classes of reflections in long and short
    roots; long roots have the coroots of minimal Q-norm."""
    by_norm = {}
    for rt in datum.positive_roots():
        m = tuple(tuple(r) for r in datum.reflection_matrix(rt))
        by_norm.setdefault(form.value(rt.y), elem_class[m])
    norms = sorted(by_norm)
    long_idx = by_norm[norms[0]]
    short_idx = by_norm[norms[-1]] if len(norms) > 1 else None
    return long_idx, short_idx


def build_table(name):
    datum = build_root_datum(name[0], int(name[1:]))
    form = preset_form(datum)
    elements_inv, gens, ident = enumerate_group(datum)
    order = datum.weyl_order()
    assert len(elements_inv) == order, (len(elements_inv), order)
    classes = conjugacy_classes(list(elements_inv), gens)
    elem_class = {}
    for i, c in enumerate(classes):
        for x in c:
            elem_class[x] = i
    sizes = [len(c) for c in classes]
    inv_class = [elem_class[elements_inv[c[0]]] for c in classes]
    print("%s: %d elements, %d classes" % (name, order, len(classes)))
    mats = class_matrices(classes, elements_inv, elem_class)
    ident_idx = identity_index(classes)
    chars = dixon_characters(mats, sizes, inv_class, ident_idx)
    assert len(chars) == len(classes)
    # exact orthogonality over Z
    for i, c1 in enumerate(chars):
        for j, c2 in enumerate(chars[i:], start=i):
            s = sum(sz * a * b for sz, a, b in zip(sizes, c1, c2))
            assert s == (order if i == j else 0)
    # b-invariants from coinvariant traces
    reps = [(i, sizes[i], classes[i][0]) for i in range(len(classes))]
    tmp = _TableShim(chars, order)
    bs_by_idx = b_invariants_from_coinvariants(datum, tmp, reps)
    bs = [bs_by_idx[i] for i in range(len(chars))]
    dims = [c[ident_idx] for c in chars]
    long_idx, short_idx = reflection_class_indices(datum, elem_class, form)
    names = assign_names(chars, dims, bs, long_idx, short_idx)
    return datum, classes, sizes, chars, bs, names, dims


class _TableShim:
    def __init__(self, chars, order):
        self._chars = chars
        self.order = order

    def labels(self):
        return list(range(len(self._chars)))

    def value(self, lab, cls):
        return self._chars[lab][cls]


def identity_index(classes):
    return next(i for i, c in enumerate(classes) if element_order(c[0]) == 1)


def assign_names(chars, dims, bs, long_idx, short_idx):
    bykey = {}
    for i in range(len(chars)):
        bykey.setdefault((dims[i], bs[i]), []).append(i)
    names = {}
    for (d, b), idxs in sorted(bykey.items()):
        if len(idxs) == 1:
            names[idxs[0]] = "phi[%d,%d]" % (d, b)
        elif len(idxs) == 2:
            # larger value on the long-reflection class gets the double prime;
            # ties fall through to the short class, then the whole value vector
            # in the canonical class order
            i1, i2 = idxs
            k1 = (chars[i1][long_idx],
                  chars[i1][short_idx] if short_idx is not None else 0,
                  tuple(chars[i1]))
            k2 = (chars[i2][long_idx],
                  chars[i2][short_idx] if short_idx is not None else 0,
                  tuple(chars[i2]))
            assert k1 != k2, "cannot separate primed pair (%d,%d)" % (d, b)
            if k1 > k2:
                names[i1] = "phi''[%d,%d]" % (d, b)
                names[i2] = "phi'[%d,%d]" % (d, b)
            else:
                names[i2] = "phi''[%d,%d]" % (d, b)
                names[i1] = "phi'[%d,%d]" % (d, b)
        else:
            raise AssertionError("triple (d,b) collision")
    return names


G2_ORBITS = [("0", 0), ("A1", 6), ("A1~", 8), ("G2(a1)", 10), ("G2", 12)]


def g2_springer_rows(names_by_idx, bs):
    """The Springer map of G2; trivial-local-system rows satisfy b = 6 - dim/2,
    and the minimal orbit goes to phi''[1,3], the character taking +1 on
    long-root reflections."""
    rows = []
    for i, nm in names_by_idx.items():
        b = bs[i]
        if nm == "phi[1,0]":
            rows.append((nm, "G2", "trivial"))
        elif nm == "phi[2,1]":
            rows.append((nm, "G2(a1)", "trivial"))
        elif nm == "phi[2,2]":
            rows.append((nm, "A1~", "trivial"))
        elif nm == "phi''[1,3]":
            rows.append((nm, "A1", "trivial"))
        elif nm == "phi'[1,3]":
            rows.append((nm, "G2(a1)", "nontrivial"))
        elif nm == "phi[1,6]":
            rows.append((nm, "0", "trivial"))
        else:
            raise AssertionError("unexpected G2 label %s" % nm)
    # audit: trivial-local-system rows must satisfy b = 6 - dim/2
    orbdim = dict(G2_ORBITS)
    name_to_idx = {v: k for k, v in names_by_idx.items()}
    for nm, orb, loc in rows:
        if loc == "trivial":
            assert bs[name_to_idx[nm]] == 6 - orbdim[orb] // 2, nm
    return rows


G2_SPECIALS = {"phi[1,0]", "phi[2,1]", "phi[1,6]"}


def write_file(name, datum, classes, sizes, chars, bs, names, dims, outdir):
    lines = []
    lines.append("# metaplectic exceptional Weyl table: %s" % name)
    lines.append("# generated by scripts/gen_exceptional_tables.py")
    lines.append("type %s" % name)
    lines.append("order %d" % sum(sizes))
    lines.append("classes %d" % len(classes))
    for i, c in enumerate(classes):
        rep = c[0]
        repstr = ";".join(",".join(str(x) for x in row) for row in rep)
        lines.append("class %d size %d elorder %d rep %s"
                     % (i, sizes[i], element_order(rep), repstr))
    lines.append("irreducibles %d" % len(chars))
    order_idx = sorted(range(len(chars)), key=lambda i: (bs[i], dims[i], names[i]))
    for outpos, i in enumerate(order_idx):
        special = "?"
        if name == "G2":
            special = "1" if names[i] in G2_SPECIALS else "0"
        lines.append("irr %d name %s b %d special %s values %s"
                     % (outpos, names[i], bs[i], special,
                        ",".join(str(v) for v in chars[i])))
    if name == "G2":
        lines.append("orbits %d" % len(G2_ORBITS))
        for i, (nm, dim) in enumerate(G2_ORBITS):
            lines.append("orbit %d name %s dim %d" % (i, nm, dim))
        rows = g2_springer_rows(names, bs)
        lines.append("springer %d" % len(rows))
        for nm, orb, loc in rows:
            lines.append("spr %s orbit %s local %s" % (nm, orb, loc))
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()
    path = os.path.join(outdir, "%s_table.txt" % name.lower())
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(body)
        fh.write("checksum %s\n" % digest)
    print("wrote", path)


def main():
    targets = sys.argv[1:] or ["G2", "F4", "E6"]
    outdir = os.path.join(os.path.dirname(__file__), "..", "src", "metaplectic", "data")
    os.makedirs(outdir, exist_ok=True)
    for name in targets:
        datum, classes, sizes, chars, bs, names, dims = build_table(name)
        write_file(name, datum, classes, sizes, chars, bs, names, dims, outdir)


if __name__ == "__main__":
    main()
