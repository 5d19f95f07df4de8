"""Sparse multivariate polynomials over the rationals, with the group
action, directional derivatives, and the exact divided difference
(f - s.f)/alpha_s that the lowering operators are built from.

Polynomials are dicts mapping exponent tuples to nonzero Fractions; the
helper functions below operate on raw dicts (hot paths) and the SparsePoly
class wraps them for the public surface.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from weakref import WeakKeyDictionary

from .exact import R0, R1, binomial

_caches = WeakKeyDictionary()


def _cache_for(group):
    got = _caches.get(group)
    if got is None:
        got = {}
        _caches[group] = got
    return got


@lru_cache(maxsize=None)
def graded_monomials(ell: int, d: int) -> tuple:
    """Exponent tuples of total degree d in graded-lex order (fixed once,
    so matrices and reports are reproducible)."""
    if ell == 0:
        return ((),) if d == 0 else ()
    if ell == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in graded_monomials(ell - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_index(ell: int, d: int):
    mons = graded_monomials(ell, d)
    return {m: i for i, m in enumerate(mons)}


def p_add_into(acc, poly, scale=R1):
    for m, c in poly.items():
        v = acc.get(m, R0) + c * scale
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


def p_scale(poly, scale):
    if not scale:
        return {}
    return {m: c * scale for m, c in poly.items()}


def p_mul(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m, R0) + ca * cb
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def p_eq(a, b):
    return a == b


def p_deriv_var(poly, j):
    out = {}
    for m, c in poly.items():
        e = m[j]
        if e:
            mm = m[:j] + (e - 1,) + m[j + 1:]
            out[mm] = out.get(mm, R0) + c * e
    return {m: c for m, c in out.items() if c}


def p_dir_deriv(poly, y):
    """Derivative along y in the dual basis: d_y x_j = y_j."""
    out = {}
    for j, yj in enumerate(y):
        if yj:
            p_add_into(out, p_deriv_var(poly, j), Fraction(yj))
    return out


def linear_form(coeffs):
    ell = len(coeffs)
    out = {}
    for j, c in enumerate(coeffs):
        if c:
            m = tuple(1 if k == j else 0 for k in range(ell))
            out[m] = Fraction(c)
    return out


def _power_of_linear(group, ei, j, e, cols):
    """(w . x_j)^e expanded, cached per (element, variable, power)."""
    cache = _cache_for(group)
    key = ("pow", ei, j, e)
    got = cache.get(key)
    if got is not None:
        return got
    if e == 0:
        got = {tuple([0] * group.ell): R1}
    elif e == 1:
        got = cols[j]
    else:
        got = p_mul(_power_of_linear(group, ei, j, e - 1, cols), cols[j])
    cache[key] = got
    return got


def _action_columns(group, ei):
    cache = _cache_for(group)
    key = ("cols", ei)
    got = cache.get(key)
    if got is None:
        mat = group.elements[ei]
        got = [linear_form([mat[i][j] for i in range(group.ell)])
               for j in range(group.ell)]
        cache[key] = got
    return got


def w_action(group, ei, poly):
    """Substitution action of a group element on a polynomial."""
    cols = _action_columns(group, ei)
    out = {}
    for m, c in poly.items():
        term = {tuple([0] * group.ell): R1}
        for j, e in enumerate(m):
            if e:
                term = p_mul(term, _power_of_linear(group, ei, j, e, cols))
        p_add_into(out, term, c)
    return out


def divide_by_linear(poly, alpha):
    """Exact division by a linear form; raises on nonzero remainder.

    Terms are processed bucketed by the exponent of the pivot variable,
    highest first; corrections always land one level down, so one pass
    suffices.  A nonzero remainder never happens for (f - s.f)/alpha_s; it
    would signal broken root data rather than bad user input.
    """
    k = None
    for j, c in enumerate(alpha):
        if c:
            k = j
            break
    if k is None:
        raise ZeroDivisionError("division by the zero form")
    lead = Fraction(alpha[k])
    rest = [(j, Fraction(c)) for j, c in enumerate(alpha) if c and j != k]
    buckets = {}
    top = 0
    for m, c in poly.items():
        e = m[k]
        buckets.setdefault(e, {})[m] = c
        if e > top:
            top = e
    quot = {}
    for e in range(top, 0, -1):
        level = buckets.pop(e, None)
        if not level:
            continue
        below = buckets.setdefault(e - 1, {})
        for m, c in level.items():
            if not c:
                continue
            qm = m[:k] + (e - 1,) + m[k + 1:]
            qc = c / lead
            quot[qm] = quot.get(qm, R0) + qc
            for j, aj in rest:
                mm = qm[:j] + (qm[j] + 1,) + qm[j + 1:]
                below[mm] = below.get(mm, R0) - qc * aj
    tail = buckets.pop(0, {})
    if any(tail.values()):
        raise ArithmeticError("inexact division by linear form")
    return {m: c for m, c in quot.items() if c}


def difference_quotient(group, refl_pos, poly):
    """(f - s.f) / alpha_s for the reflection at the given position."""
    refl = group.reflections[refl_pos]
    moved = w_action(group, refl.element, poly)
    num = dict(poly)
    p_add_into(num, moved, -R1)
    if not num:
        return {}
    return divide_by_linear(num, refl.root)


class SparsePoly:
    """Thin value wrapper over the dict representation."""

    __slots__ = ("ell", "terms")

    def __init__(self, ell, terms=None):
        self.ell = ell
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    if len(m) != ell:
                        raise ValueError("exponent length mismatch")
                    self.terms[tuple(m)] = c

    @staticmethod
    def variable(ell, j):
        return SparsePoly(ell, {tuple(1 if k == j else 0 for k in range(ell)): R1})

    @staticmethod
    def constant(ell, c):
        return SparsePoly(ell, {tuple([0] * ell): Fraction(c)})

    @staticmethod
    def from_linear(coeffs):
        return SparsePoly(len(coeffs), linear_form(coeffs))

    def __add__(self, other):
        out = dict(self.terms)
        p_add_into(out, other.terms)
        return SparsePoly(self.ell, out)

    def __sub__(self, other):
        out = dict(self.terms)
        p_add_into(out, other.terms, -R1)
        return SparsePoly(self.ell, out)

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            return SparsePoly(self.ell, p_mul(self.terms, other.terms))
        return SparsePoly(self.ell, p_scale(self.terms, Fraction(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return SparsePoly(self.ell, p_scale(self.terms, -R1))

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def directional_derivative(self, y):
        return SparsePoly(self.ell, p_dir_deriv(self.terms, y))

    def acted_by(self, group, ei):
        return SparsePoly(self.ell, w_action(group, ei, self.terms))

    def divided_difference(self, group, refl_pos):
        return SparsePoly(self.ell, difference_quotient(group, refl_pos, self.terms))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=lambda mm: (sum(mm), mm), reverse=True):
            c = self.terms[m]
            mono = "*".join("x%d^%d" % (j, e) if e > 1 else "x%d" % j
                            for j, e in enumerate(m) if e)
            bits.append(("%s" % c) + ("*" + mono if mono else ""))
        return " + ".join(bits)


class GradedBasis:
    """Monomials of one total degree in the fixed graded-lex order."""

    def __init__(self, ell, degree):
        self.ell = ell
        self.degree = degree
        self.monomials = graded_monomials(ell, degree)
        assert len(self.monomials) == binomial(degree + ell - 1, ell - 1)

    def __len__(self):
        return len(self.monomials)

    def index(self, mono):
        return monomial_index(self.ell, self.degree)[mono]
