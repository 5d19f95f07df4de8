"""Exact scalars (arbitrary-precision rationals, cyclotomic numbers) and
exact dense linear algebra.

Rationals are stdlib ``fractions.Fraction``; cyclotomic numbers are vectors
in the power basis of a primitive e-th root modulo the e-th cyclotomic
polynomial.  The linear algebra is plain Gaussian elimination with the
first nonzero pivot, so ranks and kernels are definitive, never
tolerance-based, and output ordering is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rat = Fraction

R0 = Fraction(0)
R1 = Fraction(1)


def frac(num, den=1):
    """Fraction constructor that also accepts the CLI's 'p/q' strings."""
    if isinstance(num, str):
        return Fraction(num)
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# integer polynomial helpers (low degree first, trailing zeros trimmed)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_div_exact(num, den):
    # exact division of integer polynomials, used only where remainder 0
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    q = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % lead == 0
        f = c // lead
        q[i - dd] = f
        for j, y in enumerate(den):
            num[i - dd + j] -= f * y
    assert not any(num), "inexact polynomial division"
    return _poly_trim(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple:
    """Integer coefficients of Phi_e, low degree first."""
    if e < 1:
        raise ValueError("order must be >= 1")
    p = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            p = _poly_div_exact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


def euler_phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(e: int):
    # x^(phi+k) mod Phi_e for k = 0 .. phi-2, as tuples of Fractions
    phi = euler_phi(e)
    top = [Fraction(-c) for c in cyclotomic_polynomial(e)[:-1]]  # x^phi
    rows = [tuple(top)]
    cur = top
    for _ in range(phi - 2):
        nxt = [R0] + cur[:-1]
        lead = cur[-1]
        if lead:
            nxt = [a + lead * b for a, b in zip(nxt, rows[0])]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


class Cyclo:
    """Element of the e-th cyclotomic field in the power basis of zeta_e.

    Mixes freely with ints and Fractions; elements of different orders do
    not mix (one order per computation in practice).
    """

    __slots__ = ("e", "c")

    def __init__(self, e, coeffs):
        phi = euler_phi(e)
        c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        if len(c) != phi:
            raise ValueError("expected %d coefficients for order %d" % (phi, e))
        self.e = e
        self.c = tuple(c)

    @staticmethod
    def zero(e):
        return Cyclo(e, [R0] * euler_phi(e))

    @staticmethod
    def one(e):
        return Cyclo.scalar(e, R1)

    @staticmethod
    def scalar(e, a):
        v = [R0] * euler_phi(e)
        v[0] = Fraction(a)
        return Cyclo(e, v)

    @staticmethod
    def zeta(e, k=1):
        """zeta_e^k."""
        k %= e
        phi = euler_phi(e)
        if k < phi:
            v = [R0] * phi
            v[k] = R1
            return Cyclo(e, v)
        z = Cyclo.zeta(e, phi - 1)
        for _ in range(k - phi + 1):
            z = z._shift()
        return z

    def _shift(self):
        # multiply by zeta once
        phi = euler_phi(self.e)
        conv = [R0] + list(self.c)
        return Cyclo(self.e, _reduce_conv(self.e, conv, phi))

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.e != self.e:
                raise TypeError("mixed cyclotomic orders %d and %d" % (self.e, other.e))
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.scalar(self.e, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.e, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.e, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.e, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.e, [a * other for a in self.c])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        phi = len(self.c)
        conv = [R0] * (2 * phi - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    if y:
                        conv[i + j] += x * y
        return Cyclo(self.e, _reduce_conv(self.e, conv, phi))

    __rmul__ = __mul__

    def inv(self):
        """Exact inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid against Phi_e over the rationals
        a = list(self.c)
        _poly_trim(a)
        b = [Fraction(x) for x in cyclotomic_polynomial(self.e)]
        s0, s1 = [R1], []
        while b:
            q, r = _rat_poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _rat_poly_sub(s0, _rat_poly_mul(q, s1))
        # a is now a constant gcd
        g = a[0]
        phi = len(self.c)
        out = [x / g for x in s0] + [R0] * phi
        return Cyclo(self.e, out[:phi])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return Cyclo(self.e, [a / other for a in self.c])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inv()

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = Cyclo.one(self.e)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.scalar(self.e, other)
        if not isinstance(other, Cyclo) or other.e != self.e:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash((self.e, self.c))

    def __bool__(self):
        return any(self.c)

    def rational_part(self):
        return self.c[0]

    def __repr__(self):
        terms = []
        for k, a in enumerate(self.c):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            elif k == 1:
                terms.append("%s*z%d" % (a, self.e))
            else:
                terms.append("%s*z%d^%d" % (a, self.e, k))
        return " + ".join(terms) if terms else "0"


def _reduce_conv(e, conv, phi):
    rows = _reduction_rows(e)
    for idx in range(len(conv) - 1, phi - 1, -1):
        c = conv[idx]
        if c:
            row = rows[idx - phi]
            for j, r in enumerate(row):
                if r:
                    conv[j] += c * r
        conv[idx] = R0
    return conv[:phi]


def _rat_poly_divmod(a, b):
    a = list(a)
    q = [R0] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    inv_lead = 1 / b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        f = a[i] * inv_lead
        q[i - db] = f
        for j, y in enumerate(b):
            a[i - db + j] -= f * y
    _poly_trim(a)
    return q, a


def _rat_poly_mul(a, b):
    if not a or not b:
        return []
    out = [R0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _rat_poly_sub(a, b):
    n = max(len(a), len(b))
    out = [R0] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _poly_trim(out)


# ---------------------------------------------------------------------------
# field suites
# ---------------------------------------------------------------------------

class FieldOps:
    """Arithmetic suite for a scalar field, as one object."""

    def __init__(self, tag, zero, one):
        self.tag = tag
        self.zero = zero
        self.one = one

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inverse(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in %s" % (self.tag,))
        if isinstance(a, Cyclo):
            return a.inv()
        return 1 / Fraction(a)

    def is_zero(self, a):
        return a == self.zero or not a

    def eq(self, a, b):
        return a == b


def field_ops(tag):
    """'rational', or ('cyclotomic', e) with e >= 1."""
    if tag == "rational":
        return FieldOps(tag, R0, R1)
    if isinstance(tag, tuple) and tag[0] == "cyclotomic":
        e = tag[1]
        if e < 1:
            raise ValueError("cyclotomic order must be >= 1")
        return FieldOps(tag, Cyclo.zero(e), Cyclo.one(e))
    raise ValueError("unknown field tag %r" % (tag,))


# ---------------------------------------------------------------------------
# dense exact linear algebra (any field with +,-,*,/ and ==0)
# ---------------------------------------------------------------------------

def _is_rational_matrix(matrix):
    for row in matrix:
        for x in row:
            if x:
                return isinstance(x, (int, Fraction))
    return True


_INT64_GUARD = 1 << 31


def _rref_sympy(irows, ncols):
    """Exact reduced row echelon form through sympy's DomainMatrix, used
    for large rational matrices.  The reduced form is canonical, so this
    agrees entry-for-entry with the in-house elimination."""
    try:
        from sympy import ZZ
        from sympy.polys.matrices import DomainMatrix
    except ImportError:
        return None
    dm = DomainMatrix([[ZZ(x) for x in row] for row in irows],
                      (len(irows), ncols), ZZ).convert_to(ZZ.get_field())
    reduced, pivots = dm.rref()
    rows = reduced.to_list()
    out = []
    for i in range(len(pivots)):
        out.append([Fraction(int(x.numerator), int(x.denominator))
                    for x in rows[i]])
    return out, list(pivots)
    """Vectorized fraction-free elimination in int64.

    All arithmetic is integer arithmetic; magnitudes are checked against
    the overflow guard before every multiply, and None is returned (pure
    Python takes over) the moment entries could grow past it, so results
    are exact whenever this returns at all.
    """
    try:
        import numpy as np
    except ImportError:
        return None
    try:
        m = np.array(irows, dtype=np.int64)
    except (OverflowError, ValueError):
        return None
    if m.size == 0:
        return [], []
    if int(np.abs(m).max()) >= _INT64_GUARD:
        return None
    pivots = []
    r = 0
    nrows = m.shape[0]
    for col in range(ncols):
        nz = np.nonzero(m[r:, col])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        prow = m[r].copy()
        pval = int(prow[col])
        if int(np.abs(m).max()) >= _INT64_GUARD or abs(pval) >= _INT64_GUARD:
            return None
        colv = m[:, col].copy()
        colv[r] = 0
        mask = colv != 0
        if mask.any():
            m[mask] = m[mask] * pval - colv[mask, None] * prow[None, :]
            sub = np.abs(m[mask])
            gs = np.gcd.reduce(sub, axis=1)
            gs[gs == 0] = 1
            m[mask] = m[mask] // gs[:, None]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    out = []
    for i in range(r):
        prow = m[i]
        pval = int(prow[pivots[i]])
        out.append([Fraction(int(x), pval) for x in prow])
    return out, pivots


def _rref_int(matrix, ncols):
    """Fraction-free elimination over the integers with gcd stripping.

    RREF is canonical, so this computes exactly what the generic routine
    does, an order of magnitude faster on rational input.
    """
    from math import gcd as _gcd
    irows = []
    for row in matrix:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = den * x.denominator // _gcd(den, x.denominator)
        if den != 1:
            ir = [x.numerator * (den // x.denominator)
                  if isinstance(x, Fraction) else x * den for x in row]
        else:
            ir = [x.numerator if isinstance(x, Fraction) else x for x in row]
        g = 0
        for x in ir:
            if x:
                g = _gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            ir = [x // g for x in ir]
        irows.append(ir)
    size = len(irows) * ncols
    if size >= 20000:
        got = _rref_sympy(irows, ncols)
        if got is not None:
            return got
    if size >= 4000:
        got = _rref_int_numpy(irows, ncols)
        if got is not None:
            return got
    pivots = []
    r = 0
    nrows = len(irows)
    for col in range(ncols):
        pr = None
        for i in range(r, nrows):
            if irows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        irows[r], irows[pr] = irows[pr], irows[r]
        prow = irows[r]
        pval = prow[col]
        for i in range(nrows):
            ri = irows[i]
            if i != r and ri[col]:
                f = ri[col]
                new = [a * pval - b * f for a, b in zip(ri, prow)]
                g = 0
                for x in new:
                    if x:
                        g = _gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    new = [x // g for x in new]
                irows[i] = new
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    out = []
    for i in range(r):
        prow = irows[i]
        pval = prow[pivots[i]]
        out.append([Fraction(x, pval) for x in prow])
    return out, pivots


def rref(matrix, ncols=None):
    """Reduced row echelon form.

    Returns (rows, pivot_cols) where rows are the nonzero rows.  Pivot
    selection is 'first nonzero from the top'; the reduced form itself is
    canonical, so the integer fast path and the generic path agree.
    """
    rows = [list(r) for r in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if rows and _is_rational_matrix(rows):
        return _rref_int(rows, ncols)
    pivots = []
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][col]
        if piv != 1:
            inv = (piv.inv() if hasattr(piv, "inv") else 1 / piv)
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, prow)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix, ncols=None):
    return len(rref(matrix, ncols)[1])


def kernel_basis(matrix, ncols=None):
    """Basis of the right kernel, one vector per free column, exact."""
    if not matrix:
        return []
    if ncols is None:
        ncols = len(matrix[0])
    rows, pivots = rref(matrix, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [R0] * ncols
        v[f] = R1
        for i, p in enumerate(pivots):
            if rows[i][f]:
                v[p] = -rows[i][f]
        basis.append(v)
    return basis


def reduce_mod_rows(rows, pivots, vec):
    """Subtract row-space components; vec is consumed and returned."""
    for i, p in enumerate(pivots):
        c = vec[p]
        if c:
            row = rows[i]
            vec = [a - c * b for a, b in zip(vec, row)]
    return vec


class EchelonSpan:
    """Incrementally maintained row space in reduced echelon form."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def residual(self, vec):
        return reduce_mod_rows(self.rows, self.pivots, list(vec))

    def insert(self, vec):
        """Insert vector; returns True if it enlarged the span."""
        v = self.residual(vec)
        for j in range(self.ncols):
            if v[j]:
                piv = v[j]
                if piv != 1:
                    inv = piv.inv() if isinstance(piv, Cyclo) else 1 / piv
                    v = [x * inv for x in v]
                # keep earlier rows reduced against the new pivot
                for i in range(len(self.rows)):
                    c = self.rows[i][j]
                    if c:
                        self.rows[i] = [a - c * b for a, b in zip(self.rows[i], v)]
                at = 0
                while at < len(self.pivots) and self.pivots[at] < j:
                    at += 1
                self.rows.insert(at, v)
                self.pivots.insert(at, j)
                return True
        return False

    def contains(self, vec):
        return not any(self.residual(vec))


def solve_in_span(columns, targets, n):
    """Express target vectors in the span of the given columns.

    columns, targets: lists of length-n vectors.  Returns a list of
    coordinate vectors (or raises ValueError if some target is outside).
    """
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [t[i] for t in targets]
           for i in range(n)]
    rows, pivots = rref(aug, k + len(targets))
    coords = []
    for t in range(len(targets)):
        col = k + t
        if col in pivots:
            raise ValueError("target vector outside span")
        x = [R0] * k
        for i, p in enumerate(pivots):
            if p < k:
                x[p] = rows[i][col]
        coords.append(x)
    return coords


def _int_scale(matrix):
    """(integer matrix, common denominator) or None if not rational."""
    from math import gcd as _gcd
    den = 1
    for row in matrix:
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    den = den * x.denominator // _gcd(den, x.denominator)
            elif not isinstance(x, int):
                return None
    if den == 1:
        return [[x.numerator if isinstance(x, Fraction) else x for x in row]
                for row in matrix], 1
    out = []
    for row in matrix:
        out.append([x.numerator * (den // x.denominator)
                    if isinstance(x, Fraction) else x * den for x in row])
    return out, den


def _mat_mul_numpy(ia, ib, dd, n, m):
    try:
        import numpy as np
    except ImportError:
        return None
    try:
        na = np.array(ia, dtype=np.int64)
        nb = np.array(ib, dtype=np.int64)
    except (OverflowError, ValueError):
        return None
    ma = int(np.abs(na).max()) if na.size else 0
    mb = int(np.abs(nb).max()) if nb.size else 0
    # k products of bounded magnitude must stay inside int64
    if ma and mb and ma * mb >= (1 << 62) // max(na.shape[1], 1):
        return None
    prod = na @ nb
    return [[Fraction(int(prod[i][j]), dd) if prod[i][j] else R0
             for j in range(m)] for i in range(n)]


def mat_mul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    k = len(b)
    if n and m and k:
        sa = _int_scale(a)
        sb = _int_scale(b) if sa is not None else None
        if sa is not None and sb is not None:
            ia, da = sa
            ib, db = sb
            dd = da * db
            if n * m * k >= 8000:
                got = _mat_mul_numpy(ia, ib, dd, n, m)
                if got is not None:
                    return got
            bt = list(zip(*ib))
            out = []
            for i in range(n):
                ai = ia[i]
                row = []
                for j in range(m):
                    bj = bt[j]
                    s = 0
                    for t in range(k):
                        x = ai[t]
                        if x:
                            s += x * bj[t]
                    row.append(Fraction(s, dd) if s else R0)
                out.append(row)
            return out
    bt = list(zip(*b)) if b else []
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            bj = bt[j]
            s = 0
            for t in range(k):
                x = ai[t]
                if x:
                    s = s + x * bj[t]
            row.append(s if s else R0)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s if s else R0)
    return out


def transpose(a):
    return [list(r) for r in zip(*a)] if a else []


def identity_matrix(n, one=R1):
    z = one - one
    return [[one if i == j else z for j in range(n)] for i in range(n)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq_zero(a):
    return all(not x for row in a for x in row)


def trace(a):
    s = R0
    for i in range(len(a)):
        s += a[i][i]
    return s


def det(matrix):
    """Exact determinant by Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return R1
    rows = [list(r) for r in matrix]
    d = R1
    for col in range(n):
        pr = None
        for i in range(col, n):
            if rows[i][col]:
                pr = i
                break
        if pr is None:
            return R0 * d
        if pr != col:
            rows[col], rows[pr] = rows[pr], rows[col]
            d = -d
        piv = rows[col][col]
        d = d * piv
        inv = piv.inv() if isinstance(piv, Cyclo) else 1 / piv
        prow = [x * inv for x in rows[col]]
        rows[col] = prow
        for i in range(col + 1, n):
            f = rows[i][col]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
    return d


def charpoly(matrix):
    """Monic characteristic polynomial det(xI - A), Faddeev-LeVerrier.

    Returns coefficients high-to-low: [1, c1, ..., cn].
    """
    n = len(matrix)
    coeffs = [R1]
    m = identity_matrix(n)
    for k in range(1, n + 1):
        m = mat_mul(matrix, m)
        c = -trace(m) / k
        coeffs.append(c)
        for i in range(n):
            m[i][i] = m[i][i] + c
    return coeffs


def det_one_minus_t(matrix):
    """Coefficients of det(1 - t*A), low degree first, length n+1."""
    n = len(matrix)
    cp = charpoly(matrix)  # det(xI - A) = sum cp[k] x^(n-k)
    # det(1 - tA) = t^n det((1/t)I - A) = sum cp[k] t^k
    return [Fraction(cp[k]) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# rational functions in one variable (for generic points of parameter lines)
# ---------------------------------------------------------------------------

def _rat_poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _rat_poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def poly_eval(p, x):
    out = R0
    for c in reversed(p):
        out = out * x + c
    return out


def poly_shift_down(p, k):
    """Divide by u^k; requires the low k coefficients to vanish."""
    assert all(c == 0 for c in p[:k])
    return list(p[k:])


class RatFunc:
    """Rational function in one variable over the rationals, normalized
    with monic denominator.  Used only for small generic-parameter
    eliminations; not performance critical."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(R1,)):
        num = [Fraction(x) for x in num]
        den = [Fraction(x) for x in den]
        _poly_trim(num)
        _poly_trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = _rat_poly_gcd(num, den)
            if len(g) > 1:
                num, _ = _rat_poly_divmod(num, g)
                den, _ = _rat_poly_divmod(den, g)
        else:
            den = [R1]
        lead = den[-1]
        if lead != 1:
            num = [x / lead for x in num]
            den = [x / lead for x in den]
        self.num = tuple(num)
        self.den = tuple(den)

    @staticmethod
    def const(a):
        return RatFunc([Fraction(a)])

    @staticmethod
    def u():
        return RatFunc([R0, R1])

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _rat_poly_sub(_rat_poly_mul(list(self.num), list(o.den)),
                            [-x for x in _rat_poly_mul(list(self.den), list(o.num))])
        return RatFunc(num, _rat_poly_mul(list(self.den), list(o.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc([-x for x in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_rat_poly_mul(list(self.num), list(o.num)),
                       _rat_poly_mul(list(self.den), list(o.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError
        return RatFunc(_rat_poly_mul(list(self.num), list(o.den)),
                       _rat_poly_mul(list(self.den), list(o.num)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def inv(self):
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def evaluate(self, x):
        dv = poly_eval(list(self.den), x)
        if dv == 0:
            raise ZeroDivisionError("denominator vanishes at sample point")
        return poly_eval(list(self.num), x) / dv

    def __repr__(self):
        return "(%s)/(%s)" % (list(self.num), list(self.den))


@dataclass
class ExactMatrix:
    """Dense matrix over one exact field (spec-facing wrapper)."""

    rows: int
    cols: int
    entries: list

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError("ragged matrix")

    def rank(self):
        return rank(self.entries, self.cols)

    def kernel(self):
        return kernel_basis(self.entries, self.cols)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
