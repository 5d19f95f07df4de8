"""Character series and the closed-form identities: standard and simple
characters, spherical series, Solomon's two-variable identity, the
root-lattice fixed-point counts, isotypic multiplicities, and the
Shephard-Todd / Catalan numerics.

A CharacterSeries is a truncated one-variable series with a rational
exponent offset and one exact coefficient list per conjugacy class.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .exact import R0, R1, binomial, det_one_minus_t, kernel_basis, rank
from .coxeter import CapabilityError, CoxeterRealization, WRep, build_group


# ---------------------------------------------------------------------------
# truncated series helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def series_mul(a, b, order):
    out = [R0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            top = order - i
            for j, y in enumerate(b[: top + 1]):
                if y:
                    out[i + j] += x * y
    return out


def series_inverse(p, order):
    """1/p as a power series; requires p[0] != 0."""
    inv0 = 1 / p[0]
    out = [R0] * (order + 1)
    out[0] = inv0
    for k in range(1, order + 1):
        s = R0
        for j in range(1, min(k, len(p) - 1) + 1):
            if j < len(p) and p[j]:
                s += p[j] * out[k - j]
        out[k] = -inv0 * s
    return out


def poly_eval_limit_at_one(num, den):
    """Exact limit of num(t)/den(t) at t = 1, stripping common (1-t) factors."""
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]

    def strip(p):
        # divide by (1 - t) while p(1) == 0
        k = 0
        while len(p) > 1 and sum(p) == 0:
            q = [R0] * (len(p) - 1)
            acc = R0
            for i in range(len(p) - 1):
                acc += p[i]
                q[i] = acc
            # p = (1-t) * q  with q as computed: verify by degree count
            p = q
            k += 1
        return p, k

    num, kn = strip(num)
    den, kd = strip(den)
    if kn < kd:
        raise ZeroDivisionError("pole at t=1")
    if kn > kd:
        return R0
    nv = sum(num)
    dv = sum(den)
    return nv / dv


class CharacterSeries:
    """Graded trace series: offset + one coefficient list per class."""

    def __init__(self, group, offset, order, coeffs):
        self.group = group
        self.offset = Fraction(offset)
        self.order = order
        self.coeffs = {ci: list(v) + [R0] * (order + 1 - len(v))
                       for ci, v in coeffs.items()}

    def classes(self):
        return sorted(self.coeffs)

    def identity_coeffs(self):
        return self.coeffs[self.group.class_of[self.group.identity_index]]

    def total_dimension(self):
        return sum(self.identity_coeffs())

    def coefficient(self, ci, d):
        v = self.coeffs[ci]
        return v[d] if 0 <= d <= self.order else R0

    def scaled(self, factor):
        return CharacterSeries(self.group, self.offset, self.order,
                               {ci: [factor * x for x in v] for ci, v in self.coeffs.items()})

    def add(self, other):
        assert other.offset - self.offset == int(other.offset - self.offset), \
            "offsets differ by a non-integer"
        shift = int(other.offset - self.offset)
        if shift < 0:
            return other.add(self)
        order = min(self.order, other.order + shift)
        out = {}
        for ci in self.coeffs:
            v = list(self.coeffs[ci][: order + 1])
            for d, x in enumerate(other.coeffs.get(ci, [])):
                if d + shift <= order:
                    v[d + shift] += x
            out[ci] = v
        return CharacterSeries(self.group, self.offset, order, out)

    def matches(self, other, through=None):
        """Equality of normalized coefficients through a truncation order."""
        a, b = self._normalized(), other._normalized()
        if a is None or b is None:
            return (a is None) == (b is None)
        offa, coa = a
        offb, cob = b
        if offa != offb:
            return False
        if set(coa) != set(cob):
            return False
        top = min(len(next(iter(coa.values()))), len(next(iter(cob.values())))) - 1
        if through is not None:
            top = min(top, through)
        for ci in coa:
            if coa[ci][: top + 1] != cob[ci][: top + 1]:
                return False
        return True

    def _normalized(self):
        lead = None
        for v in self.coeffs.values():
            for d, x in enumerate(v):
                if x:
                    lead = d if lead is None else min(lead, d)
                    break
        if lead is None:
            return None
        return (self.offset + lead,
                {ci: v[lead:] for ci, v in self.coeffs.items()})

    def first_mismatch(self, other):
        a, b = self._normalized(), other._normalized()
        if a is None or b is None:
            return {"empty": True}
        offa, coa = a
        offb, cob = b
        if offa != offb:
            return {"offset": [str(offa), str(offb)]}
        top = min(len(next(iter(coa.values()))), len(next(iter(cob.values())))) - 1
        for ci in sorted(coa):
            for d in range(top + 1):
                if coa[ci][d] != cob[ci][d]:
                    return {"class": ci, "degree_above_offset": d,
                            "expected": str(cob[ci][d]), "got": str(coa[ci][d])}
        return None

    def to_payload(self):
        return {
            "offset": str(self.offset),
            "order": self.order,
            "coeffs": {("class%d" % ci): [str(x) for x in v]
                       for ci, v in sorted(self.coeffs.items())},
        }


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def det_one_minus_tr_power(group, ci, r):
    """det(1 - t^r w) for the class representative, as coefficients."""
    base = group.det_factor(group.class_reps[ci])
    out = [R0] * (r * (len(base) - 1) + 1)
    for k, x in enumerate(base):
        out[r * k] = x
    return out


def standard_character(group, rep, cparam, order, classes=None):
    """Graded character of the induced lowest-weight module with weight rep."""
    kappa = group.kappa(cparam, rep)
    coeffs = {}
    for ci in classes if classes is not None else range(len(group.classes)):
        den = group.det_factor(group.class_reps[ci])
        inv = series_inverse(list(den), order)
        chi = rep.class_trace(ci)
        coeffs[ci] = [chi * x for x in inv]
    return CharacterSeries(group, kappa, order, coeffs)


def simple_char_closed_form(group, r, order, classes=None):
    """Closed-form graded character of the small simple quotient at the
    coupling with numerator r: offset -(r-1) ell / 2 and
    det(1 - t^r w)/det(1 - t w) per class."""
    offset = -Fraction((r - 1) * group.ell, 2)
    coeffs = {}
    for ci in classes if classes is not None else range(len(group.classes)):
        num = det_one_minus_tr_power(group, ci, r)
        den = group.det_factor(group.class_reps[ci])
        coeffs[ci] = series_mul(num, series_inverse(list(den), order), order)
    return CharacterSeries(group, offset, order, coeffs)


def simple_closed_form_dimension(group, r, ci):
    """t -> 1 value of the closed form on one class: r^fix(w)."""
    num = det_one_minus_tr_power(group, ci, r)
    den = group.det_factor(group.class_reps[ci])
    return poly_eval_limit_at_one(num, den)


def spherical_closed_form(group, r, order):
    """Graded dimension series of the invariant part of the small simple:
    t^{-(r-1) ell/2} prod (1-t^{d_i+r-1})/(1-t^{d_i})."""
    offset = -Fraction((r - 1) * group.ell, 2)
    num = [R1]
    den = [R1]
    for d in group.degrees:
        f = [R0] * (d + r)
        f[0] = R1
        f[d + r - 1] = -R1
        num = series_mul(num, f, order + sum(group.degrees))
        gden = [R0] * (d + 1)
        gden[0] = R1
        gden[d] = -R1
        den = series_mul(den, gden, order + sum(group.degrees))
    coeffs = series_mul(num, series_inverse(den, order), order)
    ci = group.class_of[group.identity_index]
    return CharacterSeries(group, offset, order, {ci: coeffs})


def spherical_dimension_formula(group, r):
    out = R1
    for d in group.degrees:
        out *= Fraction(d + r - 1, d)
    return out


def spherical_standard_character(group, i, c, order):
    """Invariant-part series of the standard module with weight ext^i, via
    the exponent formula; c constant."""
    ell = group.ell
    ms = group.exponents
    h = group.coxeter_number
    c = Fraction(c)
    offset = (1 - c * h) * Fraction(ell, 2)
    den = [R1]
    for m in ms:
        f = [R0] * (m + 2)
        f[0] = R1
        f[m + 1] = -R1
        den = series_mul(den, f, order + sum(ms) + ell)
    inv = series_inverse(den, order + sum(ms) + ell)
    chi = c * h * i
    assert chi == int(chi), "offset power must be integral relative to base"
    acc = [R0] * (order + 1)
    for subset in itertools.combinations(ms, i):
        shift = int(chi) + sum(subset)
        for d in range(order + 1 - shift):
            acc[d + shift] += inv[d]
    ci = group.class_of[group.identity_index]
    return CharacterSeries(group, offset, order, {ci: acc})


def spherical_standard_brute(group, rep, cparam, order):
    """Invariant dimension of each graded layer of the standard module,
    averaged over the group: the independent cross-check."""
    kappa = group.kappa(cparam, rep)
    acc = [R0] * (order + 1)
    for ci in range(len(group.classes)):
        inv = series_inverse(list(group.det_factor(group.class_reps[ci])), order)
        chi = rep.class_trace(ci)
        w = Fraction(group.class_sizes[ci], group.order)
        for d in range(order + 1):
            acc[d] += w * chi * inv[d]
    for x in acc:
        assert x.denominator == 1
    cidx = group.class_of[group.identity_index]
    return CharacterSeries(group, kappa, order, {cidx: acc})


# ---------------------------------------------------------------------------
# Solomon's identity
# ---------------------------------------------------------------------------

def _det_one_plus_yw(group, ei):
    """Coefficients in y of det(1 + y w) on the reflection representation."""
    cp = group.det_factor(ei)  # det(1 - t w) = sum cp[k] t^k = sum (-1)^k e_k t^k
    return [(-1) ** k * cp[k] for k in range(len(cp))]


def solomon_check(group, order):
    """Average of det(1+yw)/det(1-tw) vs the degree/exponent product, as
    bivariate series through total degree `order`.  Returns (ok, witness)."""
    ell = group.ell
    lhs = [[R0] * (order + 1) for _ in range(ell + 1)]
    for ci in range(len(group.classes)):
        size = group.class_sizes[ci]
        ey = _det_one_plus_yw(group, group.class_reps[ci])
        inv = series_inverse(list(group.det_factor(group.class_reps[ci])), order)
        for k in range(ell + 1):
            if ey[k]:
                f = Fraction(size, group.order) * ey[k]
                for d in range(order + 1):
                    lhs[k][d] += f * inv[d]
    rhs_num = {(0, 0): R1}
    for d in group.degrees:
        term = {(0, 0): R1, (1, d - 1): R1}
        new = {}
        for (ka, da), va in rhs_num.items():
            for (kb, db), vb in term.items():
                key = (ka + kb, da + db)
                new[key] = new.get(key, R0) + va * vb
        rhs_num = new
    den = [R1]
    for d in group.degrees:
        f = [R0] * (d + 1)
        f[0] = R1
        f[d] = -R1
        den = series_mul(den, f, order + sum(group.degrees))
    inv = series_inverse(den, order)
    rhs = [[R0] * (order + 1) for _ in range(ell + 1)]
    for (k, d0), v in rhs_num.items():
        if k <= ell:
            for d in range(order + 1 - d0):
                rhs[k][d + d0] += v * inv[d]
    for k in range(ell + 1):
        for d in range(order + 1):
            if k + d <= order and lhs[k][d] != rhs[k][d]:
                return False, {"y_power": k, "t_power": d,
                               "lhs": str(lhs[k][d]), "rhs": str(rhs[k][d])}
    return True, None


def solomon_specialized(group, r, order):
    """LHS of Solomon with y = -t^r: average of det(1-t^r w)/det(1-t w)."""
    acc = [R0] * (order + 1)
    for ci in range(len(group.classes)):
        num = det_one_minus_tr_power(group, ci, r)
        inv = series_inverse(list(group.det_factor(group.class_reps[ci])), order)
        f = Fraction(group.class_sizes[ci], group.order)
        prod = series_mul(num, inv, order)
        for d in range(order + 1):
            acc[d] += f * prod[d]
    ci = group.class_of[group.identity_index]
    return CharacterSeries(group, -Fraction((r - 1) * group.ell, 2), order, {ci: acc})


# ---------------------------------------------------------------------------
# root-lattice model: W acting on Q/rQ in simple-root coordinates
# ---------------------------------------------------------------------------

_CARTAN = {
    "A": lambda n: [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
                     for j in range(n - 1)] for i in range(n - 1)],
    "B": lambda n: _cartan_b(n),
    "D": lambda n: _cartan_d(n),
}


def _cartan_b(n):
    # simple roots e1-e2, ..., e_{n-1}-e_n, e_n
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    c[n - 1][n - 2] = -2  # <alpha_n^vee, alpha_{n-1}> = -2
    c[n - 2][n - 1] = -1
    return c


def _cartan_d(n):
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 2):
        c[i][i + 1] = -1
        c[i + 1][i] = -1
    c[n - 1][n - 3] = -1
    c[n - 3][n - 1] = -1
    return c


class RootLatticeModel:
    """Weyl group acting on the root lattice in simple-root coordinates."""

    ENUMERATION_CAP = 10 ** 6

    def __init__(self, family, n):
        family = family.upper()
        if family not in _CARTAN:
            raise CapabilityError("root-lattice model needs a Weyl type A/B/D")
        cartan = _CARTAN[family](n)
        self.family = family
        self.n = n
        self.rank = len(cartan)
        gens = []
        for i in range(self.rank):
            m = [[1 if r == c else 0 for c in range(self.rank)] for r in range(self.rank)]
            for j in range(self.rank):
                m[i][j] -= cartan[i][j]
            gens.append(tuple(tuple(r) for r in m))
        self.gens = gens
        self._enumerate()

    def _enumerate(self):
        from .coxeter import _imat_mul
        ident = tuple(tuple(1 if i == j else 0 for j in range(self.rank))
                      for i in range(self.rank))
        index = {ident: 0}
        elems = [ident]
        frontier = [ident]
        while frontier:
            new = []
            for m in frontier:
                for g in self.gens:
                    p = _imat_mul(m, g)
                    if p not in index:
                        index[p] = len(elems)
                        elems.append(p)
                        new.append(p)

            frontier = new
        self.elements = elems
        self.index = index
        self.order = len(elems)
        # conjugacy classes (generators are involutions)
        class_of = [None] * self.order
        classes = []
        for start in range(self.order):
            if class_of[start] is not None:
                continue
            ci = len(classes)
            orbit = [start]
            class_of[start] = ci
            queue = [start]
            while queue:
                ei = queue.pop()
                for g in self.gens:
                    p = _imat_mul(_imat_mul(g, elems[ei]), g)
                    pi = index[p]
                    if class_of[pi] is None:
                        class_of[pi] = ci
                        orbit.append(pi)
                        queue.append(pi)
            classes.append(sorted(orbit))
        self.classes = classes
        self.class_of = class_of
        self.class_reps = [cl[0] for cl in classes]
        self.class_sizes = [len(cl) for cl in classes]

    def fix_dimension(self, ei):
        m = self.elements[ei]
        delta = [[Fraction(m[i][j]) - (1 if i == j else 0) for j in range(self.rank)]
                 for i in range(self.rank)]
        return self.rank - rank(delta, self.rank)

    def char_poly_key(self, ei):
        m = [[Fraction(x) for x in row] for row in self.elements[ei]]
        return tuple(det_one_minus_t(m))

    def fixed_points_mod(self, ei, r):
        """Brute-force count of fixed vectors of w on (Z/r)^rank."""
        if r ** self.rank > self.ENUMERATION_CAP:
            raise CapabilityError("r^rank exceeds enumeration cap")
        m = self.elements[ei]
        count = 0
        for v in itertools.product(range(r), repeat=self.rank):
            if all(sum(m[i][j] * v[j] for j in range(self.rank)) % r == v[i] % r
                   for i in range(self.rank)):
                count += 1
        return count

    def trace_table(self, r):
        """Per-class fixed-point counts on Q/rQ."""
        return [self.fixed_points_mod(rep, r) for rep in self.class_reps]


def match_classes_by_charpoly(group: CoxeterRealization, model: RootLatticeModel):
    """Conjugacy-class correspondence via det(1 - t w); valid when the
    characteristic polynomial separates classes (it does for S_n)."""
    inv_group = {}
    for ci in range(len(group.classes)):
        key = group.det_factor(group.class_reps[ci])
        inv_group.setdefault(key, []).append(ci)
    mapping = {}
    for mi in range(len(model.classes)):
        key = model.char_poly_key(mi)
        cands = inv_group.get(tuple(key), [])
        if len(cands) != 1:
            raise CapabilityError("char poly does not separate classes here")
        mapping[mi] = cands[0]
    return mapping


# ---------------------------------------------------------------------------
# isotypic multiplicities and numeric identities
# ---------------------------------------------------------------------------

def isotypic_dimension(group, r, rep):
    """(1/|W|) sum Tr(w, rep) r^fix(w), exactly."""
    total = R0
    for ci in range(len(group.classes)):
        fx = group.fix_dimension(group.class_reps[ci])
        total += Fraction(group.class_sizes[ci]) * rep.class_trace(ci) * r ** fx
    total /= group.order
    if total.denominator != 1 or total < 0:
        raise ArithmeticError("isotypic multiplicity not a nonnegative integer")
    return int(total)


def shephard_todd_check(group, r):
    lhs = sum(group.class_sizes[ci] * r ** group.fix_dimension(group.class_reps[ci])
              for ci in range(len(group.classes)))
    rhs = 1
    for d in group.degrees:
        rhs *= r + d - 1
    return lhs == rhs, {"sum_r_fix": lhs, "product": rhs}


def catalan_identity(n, k):
    r = n * k + 1
    lhs = Fraction(binomial(r + n - 1, n), r)
    rhs = Fraction(binomial(n * (k + 1), n), n * k + 1)
    return lhs == rhs and lhs.denominator == 1, {"lhs": str(lhs), "rhs": str(rhs)}


def identity_checks(groups=None, r_max=6, n_max=8, k_max=4):
    """Shephard-Todd by enumeration plus the Catalan form, all exact."""
    if groups is None:
        groups = [build_group("A", n=3), build_group("A", n=4),
                  build_group("B", n=2), build_group("B", n=3)]
    failures = []
    for g in groups:
        for r in range(1, r_max + 1):
            ok, wit = shephard_todd_check(g, r)
            if not ok:
                failures.append({"group": g.label, "r": r, **wit})
    for n in range(2, n_max + 1):
        for k in range(0, k_max + 1):
            ok, wit = catalan_identity(n, k)
            if not ok:
                failures.append({"n": n, "k": k, **wit})
    return not failures, failures
