"""Concrete finite Coxeter groups of types A, B, D and I2(m) as exact
matrix groups, with root data, conjugacy classes, class functions and the
W-representations needed downstream.

Realizations: type A on the sum-zero subspace of the permutation
representation, written in simple-root coordinates (so all group matrices
are integral); B_n and D_n as signed permutations of the standard basis;
I2(m) for m in {3, 4, 6} from the crystallographic Cartan matrix.  Root
normalization is free: only the products <y, alpha> <alpha^vee, x> enter
the rational Cherednik relations, and those are scale-invariant.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exact import (
    R0,
    R1,
    Rat,
    binomial,
    charpoly,
    det_one_minus_t,
    identity_matrix,
    kernel_basis,
    mat_mul,
    rank,
)
from .tableaux import (
    hook_length_count,
    normalize_partition,
    standard_tableaux,
    tableau_position,
    apply_adjacent_swap,
    is_standard,
)

GROUP_SIZE_CAP = 50000


class CapabilityError(ValueError):
    """Requested group or size outside the supported desk-scale range."""


def _tupmat(m):
    return tuple(tuple(x for x in row) for row in m)


def _imat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _degrees_for(family, n, m2=None):
    if family == "A":
        return tuple(range(2, n + 1))
    if family == "B":
        return tuple(2 * i for i in range(1, n + 1))
    if family == "D":
        return tuple(sorted([2 * i for i in range(1, n)] + [n]))
    if family == "I2":
        return (2, m2)
    raise CapabilityError("unknown family %r" % (family,))


class Reflection:
    """One reflection with a chosen root/coroot pair, <coroot, root> = 2."""

    __slots__ = ("element", "root", "coroot", "class_index", "tag")

    def __init__(self, element, root, coroot, tag=None):
        self.element = element
        self.root = tuple(root)
        self.coroot = tuple(coroot)
        self.class_index = None
        self.tag = tag


class LinearCharacter:
    """Degree-one character given by its values on the generators."""

    def __init__(self, group, gen_values, name="chi"):
        self.group = group
        self.gen_values = tuple(Fraction(v) for v in gen_values)
        self.name = name
        for i, gi in enumerate(group.gens):
            for j in range(i, len(group.gens)):
                order = group.product_order(i, j)
                if (self.gen_values[i] * self.gen_values[j]) ** order != 1:
                    raise ValueError("values do not define a character")
        self._vals = None

    def value(self, ei):
        if self._vals is None:
            vals = []
            for word in self.group.words:
                v = R1
                for g in word:
                    v *= self.gen_values[g]
                vals.append(v)
            self._vals = vals
        return self._vals[ei]

    def class_value(self, ci):
        return self.value(self.group.class_reps[ci])

    def reflection_class_values(self):
        return {
            rc: self.value(self.group.reflections[members[0]].element)
            for rc, members in enumerate(self.group.reflection_classes)
        }


class WRep:
    """Matrix representation given on the generators; element matrices are
    built lazily from the stored generator words."""

    def __init__(self, group, name, dim, gen_mats):
        self.group = group
        self.name = name
        self.dim = dim
        self.gen_mats = [_tupmat(m) for m in gen_mats]
        self._cache = {group.identity_index: _tupmat(identity_matrix(dim))}

    def matrix(self, ei):
        got = self._cache.get(ei)
        if got is not None:
            return got
        word = self.group.words[ei]
        m = self._cache[self.group.identity_index]
        # reuse longest cached prefix
        for g in word:
            m = _tupmat(mat_mul(m, self.gen_mats[g]))
        self._cache[ei] = m
        return m

    def trace(self, ei):
        m = self.matrix(ei)
        return sum((m[i][i] for i in range(self.dim)), R0)

    def class_trace(self, ci):
        return self.trace(self.group.class_reps[ci])

    def character(self):
        return [self.class_trace(ci) for ci in range(len(self.group.classes))]

    def twist(self, char: LinearCharacter, name=None):
        mats = [
            [[char.gen_values[g] * x for x in row] for row in self.gen_mats[g]]
            for g in range(len(self.gen_mats))
        ]
        return WRep(self.group, name or ("%s*%s" % (self.name, char.name)),
                    self.dim, mats)

    def check_homomorphism(self):
        """Verify the defining Coxeter relations on the generator matrices."""
        n = len(self.gen_mats)
        ident = identity_matrix(self.dim)
        for i in range(n):
            for j in range(i, n):
                order = self.group.product_order(i, j)
                m = identity_matrix(self.dim)
                for _ in range(order):
                    m = mat_mul(m, mat_mul(self.gen_mats[i], self.gen_mats[j]))
                if [list(r) for r in m] != [list(r) for r in ident]:
                    raise AssertionError(
                        "relation (s%d s%d)^%d != 1 in rep %s" % (i, j, order, self.name))
        return True


class CParameter:
    """Deformation parameter: one rational per reflection conjugacy class."""

    def __init__(self, group, by_class):
        self.group = group
        vals = {}
        for rc in range(len(group.reflection_classes)):
            tag = group.reflection_class_tags[rc]
            if rc in by_class:
                vals[rc] = Fraction(by_class[rc])
            elif tag in by_class:
                vals[rc] = Fraction(by_class[tag])
            else:
                raise ValueError("missing c value for reflection class %d (%s)" % (rc, tag))
        self.by_class = vals

    @staticmethod
    def constant(group, c):
        return CParameter(group, {rc: Fraction(c) for rc in range(len(group.reflection_classes))})

    @staticmethod
    def of(group, c=None, c1=None, c2=None):
        if c is not None:
            return CParameter.constant(group, c)
        return CParameter(group, {"c1": Fraction(c1), "c2": Fraction(c2)})

    def value_on_reflection(self, refl: Reflection):
        return self.by_class[refl.class_index]

    def total(self):
        return sum(
            self.by_class[rc] * len(members)
            for rc, members in enumerate(self.group.reflection_classes)
        )

    def twist(self, char: LinearCharacter):
        vals = char.reflection_class_values()
        return CParameter(self.group, {rc: vals[rc] * v for rc, v in self.by_class.items()})

    def describe(self):
        return {self.group.reflection_class_tags[rc]: str(v)
                for rc, v in sorted(self.by_class.items())}


class CoxeterRealization:
    """A finite Coxeter group as explicit exact matrices on h*, plus roots,
    coroots, reflection classes, conjugacy classes and degree data."""

    def __init__(self, family, n, gens, roots_and_coroots, degrees, label):
        self.family = family
        self.n = n
        self.label = label
        self.ell = len(gens[0])
        self.gens = [_tupmat(g) for g in gens]
        self._enumerate()
        self._conjugacy_classes()
        self._install_reflections(roots_and_coroots)
        self.degrees = tuple(degrees)
        self.exponents = tuple(d - 1 for d in self.degrees)
        self.num_reflections = len(self.reflections)
        self.coxeter_number = Fraction(2 * self.num_reflections, self.ell)
        assert self.coxeter_number.denominator == 1
        self.coxeter_number = int(self.coxeter_number)
        prod = 1
        for d in self.degrees:
            prod *= d
        assert prod == self.order, "degree product != group order"
        assert sum(self.exponents) == self.num_reflections
        self._h_gen_mats = [tuple(zip(*g)) for g in self.gens]  # transpose; gens are involutions
        self._rep_cache = {}
        self._order_cache = {}
        self._det_factor_cache = {}
        self._class_algebra_cache = {}
        self._poly_cache = {}
        self._inverse = None

    # -- construction ------------------------------------------------------

    def _enumerate(self):
        ident = _tupmat(identity_matrix(self.ell, 1))
        index = {ident: 0}
        elements = [ident]
        words = [()]
        frontier = [0]
        while frontier:
            new = []
            for ei in frontier:
                m = elements[ei]
                for g, gm in enumerate(self.gens):
                    p = _imat_mul(m, gm)
                    if p not in index:
                        index[p] = len(elements)
                        elements.append(p)
                        words.append(words[ei] + (g,))
                        new.append(index[p])
                        if len(elements) > GROUP_SIZE_CAP:
                            raise CapabilityError("group larger than desk cap")
            frontier = new
        self.elements = elements
        self.index = index
        self.words = words
        self.order = len(elements)
        self.identity_index = 0
        self.gen_indices = [index[g] for g in self.gens]

    def _conjugacy_classes(self):
        classes = []
        class_of = [None] * self.order
        for start in range(self.order):
            if class_of[start] is not None:
                continue
            ci = len(classes)
            orbit = [start]
            class_of[start] = ci
            queue = [start]
            while queue:
                ei = queue.pop()
                m = self.elements[ei]
                for gm in self.gens:
                    p = _imat_mul(_imat_mul(gm, m), gm)
                    pi = self.index[p]
                    if class_of[pi] is None:
                        class_of[pi] = ci
                        orbit.append(pi)
                        queue.append(pi)
            classes.append(sorted(orbit))
        self.classes = classes
        self.class_of = class_of
        self.class_reps = [cl[0] for cl in classes]
        self.class_sizes = [len(cl) for cl in classes]

    def _install_reflections(self, roots_and_coroots):
        self.reflections = []
        self.reflection_of_element = {}
        for root, coroot, tag in roots_and_coroots:
            pairing = sum(Fraction(a) * Fraction(b) for a, b in zip(coroot, root))
            assert pairing == 2, "coroot-root pairing must be 2"
            mat = self._reflection_matrix(root, coroot)
            ei = self.index[mat]
            refl = Reflection(ei, root, coroot, tag)
            self.reflection_of_element[ei] = len(self.reflections)
            self.reflections.append(refl)
        # conjugacy classes restricted to reflections
        byclass = {}
        for pos, refl in enumerate(self.reflections):
            byclass.setdefault(self.class_of[refl.element], []).append(pos)
        self.reflection_classes = []
        self.reflection_class_tags = []
        for ci in sorted(byclass):
            members = byclass[ci]
            rc = len(self.reflection_classes)
            for pos in members:
                self.reflections[pos].class_index = rc
            tags = {self.reflections[pos].tag for pos in members}
            assert len(tags) == 1, "inconsistent tags within a reflection class"
            self.reflection_classes.append(members)
            self.reflection_class_tags.append(tags.pop() or "c")

    def _reflection_matrix(self, root, coroot):
        ell = self.ell
        cols = []
        for j in range(ell):
            col = [Fraction(0)] * ell
            col[j] = Fraction(1)
            f = Fraction(coroot[j])
            for i in range(ell):
                col[i] -= f * Fraction(root[i])
            cols.append(col)
        m = tuple(tuple(cols[j][i] for j in range(ell)) for i in range(ell))
        out = []
        for row in m:
            r = []
            for x in row:
                assert x.denominator == 1
                r.append(int(x))
            out.append(tuple(r))
        return tuple(out)

    # -- basic group structure ---------------------------------------------

    def inverse_index(self, ei):
        if self._inverse is None:
            inv = [None] * self.order
            for i, word in enumerate(self.words):
                m = _tupmat(identity_matrix(self.ell, 1))
                for g in reversed(word):
                    m = _imat_mul(m, self.gens[g])
                inv[i] = self.index[m]
            self._inverse = inv
        return self._inverse[ei]

    def multiply(self, ei, ej):
        return self.index[_imat_mul(self.elements[ei], self.elements[ej])]

    def product_order(self, gi, gj):
        key = (gi, gj)
        got = self._order_cache.get(key)
        if got is not None:
            return got
        p = self.multiply(self.gen_indices[gi], self.gen_indices[gj])
        order = 1
        cur = p
        while cur != self.identity_index:
            cur = self.multiply(cur, p)
            order += 1
        self._order_cache[key] = order
        return order

    def element_order(self, ei):
        order = 1
        cur = ei
        while cur != self.identity_index:
            cur = self.multiply(cur, ei)
            order += 1
        return order

    def h_matrix(self, ei):
        """Action on h (contragredient of the stored h* action)."""
        word = self.words[ei]
        m = _tupmat(identity_matrix(self.ell, 1))
        for g in word:
            m = _imat_mul(m, self._h_gen_mats[g])
        return m

    def fix_dimension(self, ei):
        m = self.elements[ei]
        delta = [[Fraction(m[i][j]) - (1 if i == j else 0) for j in range(self.ell)]
                 for i in range(self.ell)]
        return self.ell - rank(delta, self.ell)

    def det_factor(self, ei):
        """Coefficients of det(1 - t w) on the reflection representation."""
        got = self._det_factor_cache.get(ei)
        if got is None:
            m = [[Fraction(x) for x in row] for row in self.elements[ei]]
            got = tuple(det_one_minus_t(m))
            self._det_factor_cache[ei] = got
        return got

    def reflection_determinant(self, ei):
        """det on h, i.e. the sign character."""
        cp = self.det_factor(ei)
        val = sum(cp)  # det(1 - 1*w) is 0 unless w = 1; use parity of word instead
        return Fraction(-1) ** len(self.words[ei])

    # -- representations ----------------------------------------------------

    def trivial_rep(self):
        return self._memo_rep("triv", lambda: WRep(
            self, "triv", 1, [[[R1]] for _ in self.gens]))

    def sign_rep(self):
        return self._memo_rep("sign", lambda: WRep(
            self, "sign", 1, [[[-R1]] for _ in self.gens]))

    def reflection_rep(self):
        return self.exterior_power(1)

    def exterior_power(self, i):
        if not 0 <= i <= self.ell:
            raise ValueError("exterior power out of range")
        name = "ext%d" % i
        def build():
            subs = list(itertools.combinations(range(self.ell), i))
            mats = []
            for g in range(len(self.gens)):
                base = self._h_gen_mats[g]
                mat = []
                for rows in subs:
                    row = []
                    for cols in subs:
                        sub = [[Fraction(base[r][c]) for c in cols] for r in rows]
                        row.append(_small_det(sub))
                    mat.append(row)
                mats.append(mat)
            return WRep(self, name, len(subs), mats)
        return self._memo_rep(name, build)

    def epsilon_character(self, gen_values, name="eps"):
        return LinearCharacter(self, gen_values, name)

    def sign_character(self):
        return self.epsilon_character([-1] * len(self.gens), name="sign")

    def partition_rep(self, lam):
        """Seminormal-form representation of S_n for type A realizations."""
        if self.family != "A":
            raise CapabilityError("partition representations are type A only")
        lam = normalize_partition(lam)
        if sum(lam) != self.n:
            raise ValueError("partition of %d expected" % self.n)
        name = "partition:" + ",".join(str(p) for p in lam)

        def build():
            tabs = standard_tableaux(lam)
            dim = len(tabs)
            assert dim == hook_length_count(lam)
            pos = {t: i for i, t in enumerate(tabs)}
            mats = []
            for k in range(1, self.n):  # generator s_k swaps k, k+1
                mat = [[R0] * dim for _ in range(dim)]
                for t, ti in pos.items():
                    r1, c1 = tableau_position(t, k)
                    r2, c2 = tableau_position(t, k + 1)
                    d = (c2 - r2) - (c1 - r1)
                    swapped = apply_adjacent_swap(t, k)
                    if not is_standard(swapped):
                        mat[ti][ti] = R1 if r1 == r2 else -R1
                        continue
                    si = pos[swapped]
                    dd = Fraction(d)
                    if ti < si:
                        mat[ti][ti] = 1 / dd
                        mat[si][ti] = R1
                        mat[ti][si] = 1 - 1 / dd ** 2
                        mat[si][si] = -1 / dd
                mats.append(mat)
            return WRep(self, name, dim, mats)

        return self._memo_rep(name, build)

    def rep_by_name(self, spec):
        """'triv' | 'sign' | 'ext:i' | 'partition:a,b,...'."""
        if spec == "triv":
            return self.trivial_rep()
        if spec == "sign":
            return self.sign_rep()
        if spec.startswith("ext:"):
            return self.exterior_power(int(spec.split(":", 1)[1]))
        if spec.startswith("partition:"):
            parts = [int(x) for x in spec.split(":", 1)[1].split(",")]
            return self.partition_rep(parts)
        raise ValueError("unknown representation %r" % (spec,))

    def _memo_rep(self, name, build):
        got = self._rep_cache.get(name)
        if got is None:
            got = build()
            self._rep_cache[name] = got
        return got

    def irreducible_reps(self):
        """Complete irreducible list (available for type A only)."""
        if self.family != "A":
            raise CapabilityError("full irreducible list available for type A only")
        from .tableaux import partitions_of
        return [self.partition_rep(lam) for lam in partitions_of(self.n)]

    # -- class functions -----------------------------------------------------

    def p_class(self, rc, rep: WRep):
        """Scalar of the reflection-class sum on an irreducible rep."""
        members = self.reflection_classes[rc]
        s = self.reflections[members[0]].element
        val = Fraction(len(members)) * rep.trace(s) / rep.dim
        if val.denominator != 1:
            raise ArithmeticError(
                "class sum acts non-integrally on %s; representation not irreducible?" % rep.name)
        return int(val)

    def p_function(self, rep: WRep):
        return sum(self.p_class(rc, rep) for rc in range(len(self.reflection_classes)))

    def kappa(self, cparam: CParameter, rep: WRep):
        """Lowest grading eigenvalue of the standard module with this weight."""
        total = R0
        for rc in range(len(self.reflection_classes)):
            total += cparam.by_class[rc] * self.p_class(rc, rep)
        return Fraction(self.ell, 2) - total

    def class_algebra_matrix(self, ci):
        """Multiplication by the class sum of class ci on the center, in the
        class-sum basis.  Integer entries."""
        got = self._class_algebra_cache.get(ci)
        if got is not None:
            return got
        k = len(self.classes)
        counts = [[0] * k for _ in range(k)]
        for ei in self.classes[ci]:
            for ej, rep in enumerate(self.class_reps):
                p = self.multiply(ei, rep)
                counts[self.class_of[p]][ej] += 1
        # column ej was computed on a single representative of class ej
        mat = tuple(tuple(counts[i][j] for j in range(k)) for i in range(k))
        self._class_algebra_cache[ci] = mat
        return mat

    def central_reflection_sum(self, cparam: CParameter):
        """Matrix of sum_s c_s s acting on the center (class-sum basis)."""
        k = len(self.classes)
        out = [[R0] * k for _ in range(k)]
        for rc, members in enumerate(self.reflection_classes):
            ci = self.class_of[self.reflections[members[0]].element]
            cm = self.class_algebra_matrix(ci)
            cv = cparam.by_class[rc]
            for i in range(k):
                for j in range(k):
                    if cm[i][j]:
                        out[i][j] += cv * cm[i][j]
        return out

    def describe(self):
        return {
            "label": self.label,
            "order": self.order,
            "rank": self.ell,
            "reflections": self.num_reflections,
            "reflection_classes": [len(m) for m in self.reflection_classes],
            "degrees": list(self.degrees),
            "exponents": list(self.exponents),
            "coxeter_number": self.coxeter_number,
            "conjugacy_classes": len(self.classes),
        }


def _small_det(m):
    n = len(m)
    if n == 0:
        return R1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = R0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * _small_det(minor)
    return total


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _order_bound(family, n, m2=None):
    import math
    if family == "A":
        return math.factorial(n)
    if family == "B":
        return 2 ** n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if family == "I2":
        return 2 * m2


def build_group(family, n=None, m=None, root_scales=None):
    """Construct a realization.  family in {'A','B','D','I2'}; n is the
    index in the family symbol (A means the symmetric group S_n, so rank
    n-1); m is the dihedral parameter for I2.

    root_scales: optional rationals rescaling each positive root (coroots
    co-rescaled); exposed for scale-invariance tests only.
    """
    family = family.upper()
    if family == "I2":
        if m is None:
            raise CapabilityError("I2 needs m")
        if m not in (3, 4, 6):
            raise CapabilityError(
                "I2(m) supported for crystallographic m in {3,4,6} only")
        realization = _build_i2(m)
    elif family == "A":
        if n is None or n < 2:
            raise CapabilityError("type A needs n >= 2 (symmetric group S_n)")
        realization = _build_a(n)
    elif family == "B":
        if n is None or n < 2:
            raise CapabilityError("type B needs n >= 2")
        realization = _build_b(n)
    elif family == "D":
        if n is None or n < 3:
            raise CapabilityError("type D needs n >= 3")
        realization = _build_d(n)
    else:
        raise CapabilityError("unknown family %r" % (family,))
    if _order_bound(family, n, m) > GROUP_SIZE_CAP:
        raise CapabilityError("group order exceeds desk cap %d" % GROUP_SIZE_CAP)
    if root_scales is not None:
        return _rescale_roots(realization, root_scales)
    return realization


def _rescale_roots(base, scales):
    rescaled = []
    for k, refl in enumerate(base.reflections):
        lam = Fraction(scales[k % len(scales)])
        if lam == 0:
            raise ValueError("root scale must be nonzero")
        rescaled.append((
            tuple(lam * Fraction(x) for x in refl.root),
            tuple(Fraction(x) / lam for x in refl.coroot),
            refl.tag,
        ))
    clone = object.__new__(CoxeterRealization)
    clone.__dict__ = dict(base.__dict__)
    clone._poly_cache = {}
    clone._rep_cache = dict(base._rep_cache)
    refls = []
    for (root, coroot, tag), old in zip(rescaled, base.reflections):
        r = Reflection(old.element, root, coroot, tag)
        r.class_index = old.class_index
        refls.append(r)
    clone.reflections = refls
    return clone


def _cartan_realization(family_label, cartan, lengths, degrees, n):
    """Group from a Cartan matrix; coordinates are the simple roots."""
    ell = len(cartan)
    gens = []
    for i in range(ell):
        mat = [[1 if r == c else 0 for c in range(ell)] for r in range(ell)]
        for j in range(ell):
            mat[i][j] -= cartan[i][j]
        gens.append(tuple(tuple(r) for r in mat))
    # close the simple roots under the generators to get all roots
    gram = [[Fraction(cartan[i][j]) * Fraction(lengths[i]) / 2 for j in range(ell)]
            for i in range(ell)]
    for i in range(ell):
        for j in range(ell):
            assert gram[i][j] == gram[j][i], "inconsistent root lengths"
    roots = set()
    frontier = [tuple(1 if k == i else 0 for k in range(ell)) for i in range(ell)]
    roots.update(frontier)
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = tuple(sum(g[r][c] * v[c] for c in range(ell)) for r in range(ell))
                if w not in roots:
                    roots.add(w)
                    new.append(w)
        frontier = new
    positive = sorted(v for v in roots if all(x >= 0 for x in v))
    assert 2 * len(positive) == len(roots)
    rcs = []
    for a in positive:
        norm = sum(Fraction(a[i]) * gram[i][j] * Fraction(a[j])
                   for i in range(ell) for j in range(ell))
        coroot = [2 * sum(gram[i][j] * Fraction(a[j]) for j in range(ell)) / norm
                  for i in range(ell)]
        tag = None
        if family_label.startswith("I2") and family_label not in ("I2(3)",):
            tag = "c1" if norm == max(lengths) else "c2"
        rcs.append((tuple(Fraction(x) for x in a), tuple(coroot), tag))
    return gens, rcs


def _build_a(n):
    cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0)
               for j in range(n - 1)] for i in range(n - 1)]
    lengths = [2] * (n - 1)
    gens, rcs = _cartan_realization("A", cartan, lengths, None, n)
    rcs = [(root, coroot, "c") for root, coroot, _ in rcs]
    return CoxeterRealization("A", n, gens, rcs, _degrees_for("A", n),
                              "A%d (S_%d)" % (n - 1, n))


def _signed_perm_matrix(n, perm, signs):
    # column j carries e_j -> signs[j] * e_perm[j]
    mat = [[0] * n for _ in range(n)]
    for j in range(n):
        mat[perm[j]][j] = signs[j]
    return tuple(tuple(r) for r in mat)


def _build_b(n):
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(_signed_perm_matrix(n, perm, [1] * n))
    signs = [1] * n
    signs[n - 1] = -1
    gens.append(_signed_perm_matrix(n, list(range(n)), signs))
    rcs = []
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (1, -1):
                root = [0] * n
                root[i], root[j] = 1, sgn
                rcs.append((tuple(map(Fraction, root)), tuple(map(Fraction, root)), "c1"))
    for i in range(n):
        root = [0] * n
        root[i] = 1
        coroot = [0] * n
        coroot[i] = 2
        rcs.append((tuple(map(Fraction, root)), tuple(map(Fraction, coroot)), "c2"))
    return CoxeterRealization("B", n, gens, rcs, _degrees_for("B", n), "B%d" % n)


def _build_d(n):
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(_signed_perm_matrix(n, perm, [1] * n))
    perm = list(range(n))
    perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
    signs = [1] * n
    signs[n - 2], signs[n - 1] = -1, -1
    gens.append(_signed_perm_matrix(n, perm, signs))
    rcs = []
    for i in range(n):
        for j in range(i + 1, n):
            for sgn in (1, -1):
                root = [0] * n
                root[i], root[j] = 1, sgn
                rcs.append((tuple(map(Fraction, root)), tuple(map(Fraction, root)), "c"))
    return CoxeterRealization("D", n, gens, rcs, _degrees_for("D", n), "D%d" % n)


def _build_i2(m):
    if m == 3:
        cartan = [[2, -1], [-1, 2]]
        lengths = [2, 2]
    elif m == 4:
        cartan = [[2, -1], [-2, 2]]
        lengths = [2, 1]
    else:  # m == 6
        cartan = [[2, -1], [-3, 2]]
        lengths = [2, Fraction(2, 3)]
    gens, rcs = _cartan_realization("I2(%d)" % m, cartan, lengths, None, m)
    if m == 3:
        rcs = [(root, coroot, "c") for root, coroot, _ in rcs]
    return CoxeterRealization("I2", m, gens, rcs, _degrees_for("I2", None, m),
                              "I2(%d)" % m)


def group_from_args(type_, n=None, m=None):
    return build_group(type_, n=n, m=m)
