"""Exceptional Weyl group data: character tables, class data, Springer maps.

G2, F4 and E6 tables ship with the package as plain-text assets produced by
scripts/gen_exceptional_tables.py (class enumeration plus the Burnside-Dixon
class-matrix algorithm, with b-invariants recomputed from coinvariant graded
traces). Each file carries a sha256 checksum over its payload and is audited
on load: checksum, class sizes, squared-degree sum and first orthogonality.

E7 and E8 tables are not shipped; the loader will pick up user-provided files
from METAPLECTIC_DATA_DIR. The Springer/orbit section is present for G2 only,
where every entry is pinned by b = |Phi+| - dim(O)/2 and the long/short
reflection conventions documented in the README.
"""

import hashlib
import os
from functools import lru_cache

from .intmat import bareiss_det


class TableUnavailable(LookupError):
    pass


_DATA_FILES = {"G2": "g2_table.txt", "F4": "f4_table.txt", "E6": "e6_table.txt"}


def _data_path(name):
    fname = _DATA_FILES.get(name, "%s_table.txt" % name.lower())
    env = os.environ.get("METAPLECTIC_DATA_DIR")
    if env:
        cand = os.path.join(env, fname)
        if os.path.exists(cand):
            return cand
    here = os.path.join(os.path.dirname(__file__), "data", fname)
    if os.path.exists(here):
        return here
    raise TableUnavailable(
        "no character table data for %s (looked for %s; set METAPLECTIC_DATA_DIR "
        "to supply optional tables)" % (name, fname)
    )


class ExceptionalData:
    def __init__(self, name, text):
        self.name = name
        self.order = None
        self.class_sizes = []
        self.class_orders = []
        self.class_reps = []
        self.irr_names = []
        self.irr_b = {}
        self.irr_special = {}
        self.values = {}
        self.springer = {}
        self.orbits = []  # list of (orbit name, dimension)
        self._parse(text)
        self._fingerprints = None
        self._audit()

    # -- parsing ---------------------------------------------------------------

    def _parse(self, text):
        lines = [ln.rstrip("\n") for ln in text.splitlines()]
        payload = []
        checksum = None
        for ln in lines:
            if ln.startswith("checksum "):
                checksum = ln.split()[1]
            else:
                payload.append(ln)
        body = "\n".join(payload) + "\n"
        digest = hashlib.sha256(body.encode()).hexdigest()
        if checksum is None or digest != checksum:
            raise ValueError("checksum mismatch in %s table data" % self.name)
        for ln in payload:
            if not ln or ln.startswith("#"):
                continue
            parts = ln.split()
            if parts[0] == "order":
                self.order = int(parts[1])
            elif parts[0] == "class":
                # class <idx> size <s> elorder <o> rep a,b;c,d
                size = int(parts[3])
                elorder = int(parts[5])
                rep = tuple(
                    tuple(int(x) for x in row.split(","))
                    for row in parts[7].split(";")
                )
                self.class_sizes.append(size)
                self.class_orders.append(elorder)
                self.class_reps.append(rep)
            elif parts[0] == "irr":
                # irr <idx> name <nm> b <b> special <0/1/?> values v,v,...
                nm = parts[3]
                self.irr_names.append(nm)
                self.irr_b[nm] = int(parts[5])
                spec = parts[7]
                if spec in ("0", "1"):
                    self.irr_special[nm] = bool(int(spec))
                self.values[nm] = [int(x) for x in parts[9].split(",")]
            elif parts[0] == "orbit":
                self.orbits.append((parts[2], int(parts[4])))
            elif parts[0] == "spr":
                # spr <char name> orbit <orb> local <trivial|nontrivial>
                self.springer[parts[1]] = (parts[3], parts[5] == "trivial")

    def _audit(self):
        k = len(self.class_sizes)
        assert sum(self.class_sizes) == self.order
        assert len(self.irr_names) == k
        total = sum(self.values[nm][self._identity_index()] ** 2 for nm in self.irr_names)
        assert total == self.order, "squared degrees do not sum to the group order"
        for i, n1 in enumerate(self.irr_names):
            for n2 in self.irr_names[i:]:
                s = sum(sz * a * b for sz, a, b in
                        zip(self.class_sizes, self.values[n1], self.values[n2]))
                assert s == (self.order if n1 == n2 else 0), (n1, n2)

    def _identity_index(self):
        return next(i for i, o in enumerate(self.class_orders) if o == 1)

    # -- element classification ---------------------------------------------------

    def fingerprints(self, datum):
        if self._fingerprints is None:
            fps = {}
            for idx, rep in enumerate(self.class_reps):
                fp = _fingerprint(datum, rep)
                fps.setdefault(fp, []).append(idx)
            deep = {}
            for fp, idxs in fps.items():
                if len(idxs) > 1:
                    for idx in idxs:
                        deep[(fp, _deep_fingerprint(datum, self.class_reps[idx]))] = idx
            self._fingerprints = (fps, deep)
        return self._fingerprints

    def class_index_of(self, datum, matrix):
        fps, deep = self.fingerprints(datum)
        fp = _fingerprint(datum, matrix)
        idxs = fps.get(fp)
        if idxs is None:
            raise ValueError("element fingerprint matches no class of %s" % self.name)
        if len(idxs) == 1:
            return idxs[0]
        key = (fp, _deep_fingerprint(datum, matrix))
        if key in deep:
            return deep[key]
        raise ValueError("ambiguous class fingerprint in %s" % self.name)


def _fingerprint(datum, matrix):
    charpoly = _char_poly(matrix)
    cyc = _root_cycle_type(datum, matrix)
    return (charpoly, cyc)


def _deep_fingerprint(datum, matrix):
    """Fingerprints of all powers, for the rare colliding classes."""
    d = len(matrix)
    out = []
    m = matrix
    ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    power = m
    for _ in range(24):
        if power == ident:
            break
        out.append(_fingerprint(datum, power))
        power = tuple(
            tuple(sum(power[i][k] * m[k][j] for k in range(d)) for j in range(d))
            for i in range(d)
        )
    return tuple(sorted(map(repr, out)))


def _char_poly(matrix):
    """det(tI - M) coefficients, exact, by interpolation."""
    d = len(matrix)
    from fractions import Fraction

    pts = list(range(d + 1))
    vals = [Fraction(bareiss_det([[ (k if i == j else 0) - matrix[i][j]
                                    for j in range(d)] for i in range(d)]))
            for k in pts]
    coeffs = [Fraction(0)] * (d + 1)
    for i, xi in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(pts):
            if i == j:
                continue
            nb = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nb[k] += c * Fraction(-xj)
                nb[k + 1] += c
            basis = nb
            denom *= xi - xj
        scale = vals[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return tuple(int(c) for c in coeffs)


def _root_cycle_type(datum, matrix):
    roots = [rt.x for rt in datum.positive_roots()]
    allroots = roots + [tuple(-a for a in x) for x in roots]
    index = {x: i for i, x in enumerate(allroots)}
    d = len(matrix)
    # roots live in X; the action on X is the inverse transpose of the Y action,
    # but cycle structure on the root set matches the coroot action, so act on
    # coroots instead
    coroots = [rt.y for rt in datum.positive_roots()]
    call = coroots + [tuple(-a for a in y) for y in coroots]
    cindex = {y: i for i, y in enumerate(call)}
    perm = []
    for y in call:
        img = tuple(sum(y[i] * matrix[i][j] for i in range(d)) for j in range(d))
        perm.append(cindex[img])
    seen = [False] * len(perm)
    cyc = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        cyc.append(ln)
    return tuple(sorted(cyc))


@lru_cache(maxsize=None)
def _load(name):
    path = _data_path(name)
    with open(path, "r", encoding="utf-8") as fh:
        return ExceptionalData(name, fh.read())


class ExceptionalTable:
    """Character-table interface over the shipped data, labels ('exc', name)."""

    def __init__(self, name):
        self.name = name
        self.data = _load(name)
        self.order = self.data.order

    def labels(self):
        return [("exc", nm) for nm in self.data.irr_names]

    def classes(self):
        return [(("exc", i), sz) for i, sz in enumerate(self.data.class_sizes)]

    def value(self, label, cls):
        return self.data.values[label[1]][cls[1]]

    def b_invariant(self, label):
        return self.data.irr_b[label[1]]

    def dim(self, label):
        return self.data.values[label[1]][self.data._identity_index()]

    @property
    def trivial(self):
        nm = next(n for n in self.data.irr_names
                  if all(v == 1 for v in self.data.values[n]))
        return ("exc", nm)

    @property
    def sign(self):
        det = _det_character(self.data)
        nm = next(n for n in self.data.irr_names if self.data.values[n] == det)
        return ("exc", nm)

    def sign_value(self, cls):
        return _det_character(self.data)[cls[1]]

    def special(self, label):
        flags = self.data.irr_special
        if label[1] not in flags:
            raise TableUnavailable(
                "specialness flags are shipped for G2 only; %s lacks %s"
                % (self.name, label[1])
            )
        return flags[label[1]]


@lru_cache(maxsize=None)
def _det_character_cached(name):
    data = _load(name)
    return [bareiss_det([list(r) for r in rep]) for rep in data.class_reps]


def _det_character(data):
    return _det_character_cached(data.name)


@lru_cache(maxsize=None)
def exceptional_table(name):
    return ExceptionalTable(name)


def exceptional_class_reps(name, datum):
    """(class_label, size, matrix) rows aligned with the table classes."""
    data = _load(name)
    out = []
    for i, (sz, rep) in enumerate(zip(data.class_sizes, data.class_reps)):
        out.append(((("exc", i)), sz, rep))
    return out


def class_of_element(name, matrix):
    data = _load(name)
    from .rootdata import build_root_datum

    datum = build_root_datum(name[0], int(name[1:]))
    return ("exc", data.class_index_of(datum, matrix))


# -- Springer data (G2) -----------------------------------------------------------


def springer_orbit_exceptional(name, label):
    """(orbit_name, dim) for a character label; raises if no table is shipped."""
    data = _load(name)
    if not data.springer:
        raise TableUnavailable("no Springer table shipped for %s" % name)
    nm = label[1]
    if nm not in data.springer:
        raise TableUnavailable("label %s missing from the %s Springer table" % (nm, name))
    orb, trivial = data.springer[nm]
    dim = dict(data.orbits)[orb]
    return orb, dim, trivial


def springer_inverse_exceptional(name, orbit_name):
    data = _load(name)
    if not data.springer:
        raise TableUnavailable("no Springer table shipped for %s" % name)
    for nm, (orb, trivial) in data.springer.items():
        if orb == orbit_name and trivial:
            return ("exc", nm)
    raise TableUnavailable("orbit %s has no recorded label in %s" % (orbit_name, name))


def exceptional_orbits(name):
    data = _load(name)
    if not data.orbits:
        raise TableUnavailable("no nilpotent-orbit list shipped for %s" % name)
    return list(data.orbits)
