"""Lowest-weight modules over the rational Cherednik algebra: lowering
(Dunkl) operators on induced modules, defining-relation checks, the
degree-by-degree radical of the maximal proper submodule, graded
dimensions and class traces of the simple quotient, singular vectors,
invariant parts, the Gorenstein pairing, and the quotient-by-one-copy
modules used for the type B/D families.

Two computation styles coexist.  Small-degree operations work on the full
polynomial layers.  The simple-quotient recursion instead re-presents each
quotient layer on multiplication symbols x_j * (previous basis vector),
which keeps every matrix at the size of the quotient; full layers are only
touched at the finitely many degrees where a singular vector can exist.
Those degrees are detected exactly: a singular vector of degree d forces
the weighted reflection sum (a central element of the group algebra) to
admit the eigenvalue ell/2 - kappa - d, which is a determinant condition
on its multiplication matrix on the center.
"""

from __future__ import annotations

from fractions import Fraction
from weakref import WeakKeyDictionary

from .exact import (
    EchelonSpan,
    R0,
    R1,
    binomial,
    det,
    identity_matrix,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    reduce_mod_rows,
    rref,
)
from .chars import CharacterSeries, series_inverse
from .coxeter import CParameter, CoxeterRealization, WRep
from .polyspace import (
    difference_quotient,
    graded_monomials,
    monomial_index,
    w_action,
)

_dunkl_caches = WeakKeyDictionary()
_DUNKL_CACHE_MAX_DEGREE = 12


def _group_cache(group):
    got = _dunkl_caches.get(group)
    if got is None:
        got = {}
        _dunkl_caches[group] = got
    return got


class BoundExceeded(RuntimeError):
    """Search bound reached; carries the partial data."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class StandardModule:
    """Induced module C[h] (x) tau with the y-action by lowering operators.

    ``c_override`` substitutes per-reflection coupling values and exists for
    negative-control tests only: a non-class-constant c must break
    W-equivariance, and the relation checker has to notice.
    """

    def __init__(self, group: CoxeterRealization, rep: WRep, cparam: CParameter,
                 c_override=None):
        self.group = group
        self.rep = rep
        self.cparam = cparam
        self.c_by_reflection = (
            list(c_override) if c_override is not None
            else [cparam.value_on_reflection(r) for r in group.reflections])
        self.kappa = group.kappa(cparam, rep)
        self.ell = group.ell

    # -- layer bookkeeping ---------------------------------------------------

    def layer_dim(self, d):
        if d < 0:
            return 0
        return binomial(d + self.ell - 1, self.ell - 1) * self.rep.dim

    def monomials(self, d):
        return graded_monomials(self.ell, d)

    def basis_labels(self, d):
        return [(m, t) for m in self.monomials(d) for t in range(self.rep.dim)]

    def _flat(self, d):
        return monomial_index(self.ell, d), self.rep.dim

    def _constant_class_values(self):
        vals = []
        for members in self.group.reflection_classes:
            got = {self.c_by_reflection[pos] for pos in members}
            if len(got) != 1:
                return None
            vals.append(got.pop())
        return vals

    # -- full-layer lowering matrices -----------------------------------------

    def _dunkl_parts(self, d):
        """c-independent parts of the lowering maps at degree d: the
        derivative columns and, per reflection class, the divided-difference
        columns.  Cached on the group for reuse across coupling values."""
        cache = _group_cache(self.group)
        key = ("parts", self.rep.name, d)
        got = cache.get(key)
        if got is not None:
            return got
        group = self.group
        ell = self.ell
        dt = self.rep.dim
        mons = self.monomials(d)
        idx_lo, _ = self._flat(d - 1)
        ncols = len(mons) * dt
        deriv = [[{} for _ in range(ncols)] for _ in range(ell)]
        for mi, m in enumerate(mons):
            for j in range(ell):
                e = m[j]
                if e:
                    lo = m[:j] + (e - 1,) + m[j + 1:]
                    li = idx_lo[lo]
                    for t in range(dt):
                        deriv[j][mi * dt + t][li * dt + t] = Fraction(e)
        by_class = [[[{} for _ in range(ncols)] for _ in range(ell)]
                    for _ in group.reflection_classes]
        for pos, refl in enumerate(group.reflections):
            tau_s = self.rep.matrix(refl.element)
            alpha = refl.root
            cols = by_class[refl.class_index]
            for mi, m in enumerate(mons):
                dq = difference_quotient(group, pos, {m: R1})
                if not dq:
                    continue
                for i in range(ell):
                    ai = Fraction(alpha[i])
                    if not ai:
                        continue
                    coli = cols[i]
                    for lo, coeff in dq.items():
                        li = idx_lo[lo]
                        f = ai * coeff
                        for t in range(dt):
                            col = coli[mi * dt + t]
                            for w in range(dt):
                                v = tau_s[w][t]
                                if v:
                                    tgt = li * dt + w
                                    col[tgt] = col.get(tgt, R0) + f * v
        got = (deriv, by_class)
        if d <= _DUNKL_CACHE_MAX_DEGREE:
            cache[key] = got
        return got

    def dunkl_columns(self, i, d):
        """T_{y_i}: layer d -> layer d-1 as sparse columns."""
        cvals = self._constant_class_values()
        if cvals is None:
            return self._dunkl_columns_raw(i, d)
        deriv, by_class = self._dunkl_parts(d)
        ncols = self.layer_dim(d)
        out = [dict(deriv[i][c]) for c in range(ncols)]
        for rc, cols in enumerate(by_class):
            cval = cvals[rc]
            if not cval:
                continue
            coli = cols[i]
            for cidx in range(ncols):
                col = coli[cidx]
                if col:
                    acc = out[cidx]
                    for tgt, v in col.items():
                        nv = acc.get(tgt, R0) - cval * v
                        if nv:
                            acc[tgt] = nv
                        else:
                            acc.pop(tgt, None)
        return out

    def _dunkl_columns_raw(self, i, d):
        group = self.group
        dt = self.rep.dim
        mons = self.monomials(d)
        idx_lo, _ = self._flat(d - 1)
        out = [{} for _ in range(len(mons) * dt)]
        for mi, m in enumerate(mons):
            e = m[i]
            if e:
                lo = m[:i] + (e - 1,) + m[i + 1:]
                li = idx_lo[lo]
                for t in range(dt):
                    out[mi * dt + t][li * dt + t] = Fraction(e)
        for pos, refl in enumerate(group.reflections):
            cval = self.c_by_reflection[pos]
            ai = Fraction(refl.root[i])
            if not cval or not ai:
                continue
            tau_s = self.rep.matrix(refl.element)
            for mi, m in enumerate(mons):
                dq = difference_quotient(group, pos, {m: R1})
                for lo, coeff in dq.items():
                    li = idx_lo[lo]
                    f = cval * ai * coeff
                    for t in range(dt):
                        acc = out[mi * dt + t]
                        for w in range(dt):
                            v = tau_s[w][t]
                            if v:
                                tgt = li * dt + w
                                nv = acc.get(tgt, R0) - f * v
                                if nv:
                                    acc[tgt] = nv
                                else:
                                    acc.pop(tgt, None)
        return out

    def dunkl_matrix(self, i, d):
        """Dense rows of T_{y_i} at degree d (rows index layer d-1)."""
        cols = self.dunkl_columns(i, d)
        nrows = self.layer_dim(d - 1)
        rows = [[R0] * len(cols) for _ in range(nrows)]
        for cidx, col in enumerate(cols):
            for tgt, v in col.items():
                rows[tgt][cidx] = v
        return rows

    def dunkl_apply(self, y, vec, d):
        """Apply T_y (y in dual coordinates) to a layer-d vector given as a
        map (monomial, tau_index) -> coefficient.  Degree 0 maps to zero."""
        if d <= 0:
            return {}
        out = {}
        mats = [self.dunkl_columns(i, d) for i in range(self.ell)]
        idx_hi, dt = self._flat(d)
        labels_lo = self.basis_labels(d - 1)
        for (m, t), coeff in vec.items():
            cidx = idx_hi[m] * dt + t
            for i, yi in enumerate(y):
                if yi:
                    f = Fraction(yi) * coeff
                    for tgt, v in mats[i][cidx].items():
                        key = labels_lo[tgt]
                        nv = out.get(key, R0) + f * v
                        if nv:
                            out[key] = nv
                        else:
                            del out[key]
        return out

    def mult_matrix(self, j, d):
        """Multiplication by x_j as dense rows: layer d -> layer d+1."""
        idx_hi, dt = self._flat(d + 1)
        mons = self.monomials(d)
        rows = [[R0] * (len(mons) * dt) for _ in range(self.layer_dim(d + 1))]
        for mi, m in enumerate(mons):
            hi = m[:j] + (m[j] + 1,) + m[j + 1:]
            hidx = idx_hi[hi]
            for t in range(dt):
                rows[hidx * dt + t][mi * dt + t] = R1
        return rows

    def rho_layer(self, ei, d):
        """Group element acting on layer d, dense rows."""
        mons = self.monomials(d)
        idx, dt = self._flat(d)
        tau = self.rep.matrix(ei)
        n = len(mons) * dt
        rows = [[R0] * n for _ in range(n)]
        for mi, m in enumerate(mons):
            acted = w_action(self.group, ei, {m: R1})
            for mm, coeff in acted.items():
                ti = idx[mm]
                for t in range(dt):
                    for w in range(dt):
                        v = tau[w][t]
                        if v:
                            rows[ti * dt + w][mi * dt + t] += coeff * v
        return rows

    def layer_trace(self, ci, d):
        """Trace of a class representative on layer d (product formula)."""
        return _poly_layer_trace(self.group, ci, d) * self.rep.class_trace(ci)


def _poly_layer_trace(group, ci, d):
    cache = _group_cache(group)
    key = ("ltr", ci)
    got = cache.get(key)
    if got is None or len(got) <= d:
        order = max(d, 32)
        got = series_inverse(list(group.det_factor(group.class_reps[ci])), order)
        cache[key] = got
    return got[d]


# ---------------------------------------------------------------------------
# defining-relation verification
# ---------------------------------------------------------------------------

def check_relations(module: StandardModule, d):
    """Verify on layer d (d >= 1): pairwise-commuting lowerings, the mixed
    [T_y, x] commutator against the algebra relation, and W-equivariance.
    Returns (ok, failures) with named witnesses."""
    failures = []
    ell = module.ell
    group = module.group
    n = module.layer_dim(d)
    t_d = [module.dunkl_matrix(i, d) for i in range(ell)]
    t_dm1 = [module.dunkl_matrix(i, d - 1) for i in range(ell)]
    for i in range(ell):
        for j in range(i + 1, ell):
            lhs = mat_mul(t_dm1[i], t_d[j])
            rhs = mat_mul(t_dm1[j], t_d[i])
            if lhs != rhs:
                failures.append({"relation": "commuting-lowerings",
                                 "pair": [i, j], "degree": d})
    t_dp1 = [module.dunkl_matrix(i, d + 1) for i in range(ell)]
    mult_d = [module.mult_matrix(j, d) for j in range(ell)]
    mult_dm1 = [module.mult_matrix(j, d - 1) for j in range(ell)]
    refl_rho = [module.rho_layer(refl.element, d) for refl in group.reflections]
    for i in range(ell):
        for j in range(ell):
            lhs = mat_mul(t_dp1[i], mult_d[j])
            rhs = mat_mul(mult_dm1[j], t_d[i])
            expect = [[R0] * n for _ in range(n)]
            if i == j:
                for k in range(n):
                    expect[k][k] = R1
            for pos, refl in enumerate(group.reflections):
                f = (module.c_by_reflection[pos]
                     * Fraction(refl.root[i]) * Fraction(refl.coroot[j]))
                if f:
                    rm = refl_rho[pos]
                    for r in range(n):
                        row = rm[r]
                        erow = expect[r]
                        for c in range(n):
                            if row[c]:
                                erow[c] -= f * row[c]
            if any(lhs[r][c] - rhs[r][c] != expect[r][c]
                   for r in range(n) for c in range(n)):
                failures.append({"relation": "mixed-commutator",
                                 "pair": [i, j], "degree": d})
    for gi, gen in enumerate(group.gen_indices):
        rho_d = module.rho_layer(gen, d)
        rho_dm1 = module.rho_layer(gen, d - 1)
        hmat = group.h_matrix(gen)
        for i in range(ell):
            acc = None
            for k in range(ell):
                f = Fraction(hmat[k][i])
                if f:
                    part = [[f * x for x in row] for row in t_d[k]]
                    acc = part if acc is None else [
                        [a + b for a, b in zip(ra, rb)] for ra, rb in zip(acc, part)]
            lhs = mat_mul(acc, rho_d)
            rhs = mat_mul(rho_dm1, t_d[i])
            if lhs != rhs:
                failures.append({"relation": "W-equivariance",
                                 "generator": gi, "direction": i, "degree": d})
    return (not failures), failures


# ---------------------------------------------------------------------------
# singular vectors and the direct radical (full layers)
# ---------------------------------------------------------------------------

def singular_subspace(module: StandardModule, d):
    """Basis of the joint kernel of all lowerings on layer d."""
    if d <= 0:
        return []
    n = module.layer_dim(d)
    basis = None
    for i in range(module.ell):
        mat = module.dunkl_matrix(i, d)
        if basis is None:
            basis = kernel_basis(mat, n)
        else:
            restricted = [[sum((row[k] * b[k] for k in range(n) if row[k] and b[k]), R0)
                           for b in basis] for row in mat]
            inner = kernel_basis(restricted, len(basis))
            basis = [[sum((basis[t][k] * v[t] for t in range(len(basis)) if v[t]), R0)
                      for k in range(n)] for v in inner]
        if not basis:
            return []
    return basis


def _trace_on_span(rows, pivots, op_rows):
    """Trace of an operator restricted to a W-stable RREF row span.

    Any v in the span decomposes as sum_k v[pivots[k]] * rows[k], so the
    trace is the sum of pivot coordinates of the images; stability is
    asserted, not assumed.
    """
    tr = R0
    for i, row in enumerate(rows):
        image = mat_vec(op_rows, row)
        resid = reduce_mod_rows(rows, pivots, list(image))
        assert not any(resid), "subspace not stable under the operator"
        tr += image[pivots[i]]
    return tr


def singular_vectors(module: StandardModule, d, classes=None):
    """Singular subspace plus per-class traces of the W-action on it."""
    basis = singular_subspace(module, d)
    group = module.group
    cls = classes if classes is not None else range(len(group.classes))
    traces = {}
    if basis:
        rows, piv = rref(basis, module.layer_dim(d))
        for ci in cls:
            rho = module.rho_layer(group.class_reps[ci], d)
            traces[ci] = _trace_on_span(rows, piv, rho)
    else:
        for ci in cls:
            traces[ci] = R0
    return basis, traces


def radical_layer(module: StandardModule, d):
    """Degree-d piece of the maximal proper submodule by the direct
    recursion J_e = {v : T v in J_(e-1)} on full layers.  Reference
    implementation; the quotient engine must agree with it."""
    proj = None  # rows of a matrix whose kernel is J_(e-1)
    for e in range(1, d + 1):
        stacked = []
        for i in range(module.ell):
            mat = module.dunkl_matrix(i, e)
            stacked.extend(mat if proj is None else mat_mul(proj, mat))
        if e == d:
            return kernel_basis(stacked, module.layer_dim(e))
        proj = rref(stacked, module.layer_dim(e))[0]
    return []


# ---------------------------------------------------------------------------
# the simple-quotient recursion
# ---------------------------------------------------------------------------

class SimpleModuleReport:
    def __init__(self, module, max_degree, dims, verdict, traces=None):
        self.module = module
        self.max_degree = max_degree
        self.dims = list(dims)
        self.verdict = verdict  # 'finite' | 'not-finite-up-to-bound'
        self.traces = traces or {}

    @property
    def finite(self):
        return self.verdict == "finite"

    @property
    def total_dim(self):
        return sum(self.dims) if self.finite else None

    @property
    def top_degree(self):
        nz = [d for d, v in enumerate(self.dims) if v]
        return max(nz) if nz else 0

    def trace_series(self, ci):
        return CharacterSeries(self.module.group, self.module.kappa,
                               len(self.dims) - 1, {ci: self.traces[ci]})

    def character(self, classes=None):
        cls = classes if classes is not None else sorted(self.traces)
        return CharacterSeries(self.module.group, self.module.kappa,
                               len(self.dims) - 1,
                               {ci: self.traces[ci] for ci in cls})

    def w_character_totals(self):
        assert self.finite
        return {ci: sum(v) for ci, v in self.traces.items()}

    def to_payload(self):
        out = {
            "weight": self.module.rep.name,
            "c": self.module.cparam.describe(),
            "kappa": str(self.module.kappa),
            "verdict": self.verdict,
            "bound": self.max_degree,
            "graded_dims": self.dims,
        }
        if self.finite:
            out["total_dim"] = self.total_dim
            out["top_degree"] = self.top_degree
        else:
            out["note"] = ("no zero layer up to the stated bound; "
                           "this is a bound statement, not a proof")
        return out


class _QuotientState:
    """One quotient layer presented on multiplication symbols."""

    __slots__ = ("dim", "gens", "lower", "mult", "sym", "_words")

    def __init__(self, dim, gens, lower, mult, sym):
        self.dim = dim
        self.gens = gens      # per generator: dim x dim rows
        self.lower = lower    # per direction i: (prev_dim) x dim rows
        self.mult = mult      # per direction j: dim x (prev_dim) rows
        self.sym = sym        # per basis index: (j, prev_basis_index) or None
        self._words = {}

    def word_matrix(self, group, ei):
        got = self._words.get(ei)
        if got is None:
            m = identity_matrix(self.dim)
            for g in group.words[ei]:
                m = mat_mul(m, self.gens[g])
            self._words[ei] = got = m
        return got


def _zero_rows(nrows, ncols):
    return [[R0] * ncols for _ in range(nrows)]


def _cols_to_rows(cols, nrows):
    if not cols:
        return [[] for _ in range(nrows)]
    return [[col[r] for col in cols] for r in range(nrows)]


class SimpleEngine:
    """Degree-by-degree construction of the simple quotient of a standard
    module: exact graded dimensions and class traces."""

    def __init__(self, module: StandardModule, trace_classes=()):
        self.module = module
        self.group = module.group
        self.trace_classes = tuple(trace_classes)
        self.dims = []
        self.traces = {ci: [] for ci in self.trace_classes}
        self.levels = []

    def _candidate_degrees(self, bound):
        """Degrees where the central character admits a singular vector."""
        group = self.group
        z = group.central_reflection_sum(self.module.cparam)
        k = len(z)
        base = Fraction(group.ell, 2) - self.module.kappa
        out = set()
        for d in range(1, bound + 1):
            mu = base - d
            m = [[z[i][j] - (mu if i == j else R0) for j in range(k)]
                 for i in range(k)]
            if det(m) == 0:
                out.add(d)
        return out

    def _full_state(self, d):
        module = self.module
        dimd = module.layer_dim(d)
        gens = [module.rho_layer(g, d) for g in self.group.gen_indices]
        if d >= 1:
            lower = [module.dunkl_matrix(i, d) for i in range(module.ell)]
            mult = [module.mult_matrix(j, d - 1) for j in range(module.ell)]
        else:
            lower = [_zero_rows(0, dimd) for _ in range(module.ell)]
            mult = [_zero_rows(dimd, 0) for _ in range(module.ell)]
        return _QuotientState(dimd, gens, lower, mult, None)

    def _reduced_state(self, d, rad_rows, rad_piv):
        """Quotient of layer d by the RREF'd radical rows."""
        module = self.module
        n = module.layer_dim(d)
        pivset = set(rad_piv)
        free = [k for k in range(n) if k not in pivset]

        def red(vec):
            vec = reduce_mod_rows(rad_rows, rad_piv, vec)
            return [vec[k] for k in free]

        gens = []
        for g in self.group.gen_indices:
            rho = module.rho_layer(g, d)
            cols = [red([rho[r][k] for r in range(n)]) for k in free]
            gens.append(_cols_to_rows(cols, len(free)))
        lower = []
        for i in range(module.ell):
            mat = module.dunkl_matrix(i, d)
            cols = [[mat[r][k] for r in range(len(mat))] for k in free]
            lower.append(_cols_to_rows(cols, len(mat)))
        mult = []
        nlo = module.layer_dim(d - 1)
        idx_hi, dt = module._flat(d)
        mons_lo = module.monomials(d - 1)
        for j in range(module.ell):
            cols = []
            for b in range(nlo):
                mi, t = divmod(b, dt)
                m = mons_lo[mi]
                hi = m[:j] + (m[j] + 1,) + m[j + 1:]
                vec = [R0] * n
                vec[idx_hi[hi] * dt + t] = R1
                cols.append(red(vec))
            mult.append(_cols_to_rows(cols, len(free)))
        sym = None  # not a symbol layer; multiplication maps are explicit
        return _QuotientState(len(free), gens, lower, mult, sym)

    def _step(self, prev: _QuotientState):
        """Build level e from level e-1 (prev) on multiplication symbols."""
        module = self.module
        group = self.group
        ell = module.ell
        qp = prev.dim
        ns = ell * qp
        if qp == 0:
            return _QuotientState(
                0, [_zero_rows(0, 0) for _ in group.gen_indices],
                [_zero_rows(0, 0) for _ in range(ell)],
                [_zero_rows(0, 0) for _ in range(ell)], [])
        # R_ij = sum_s c_s <y_i, alpha_s> <alpha_s^vee, x_j> rho(s) on L_(e-1)
        rblocks = [[None] * ell for _ in range(ell)]
        for pos, refl in enumerate(group.reflections):
            cval = module.c_by_reflection[pos]
            if not cval:
                continue
            rp = prev.word_matrix(group, refl.element)
            for i in range(ell):
                ai = Fraction(refl.root[i])
                if not ai:
                    continue
                for j in range(ell):
                    aj = Fraction(refl.coroot[j])
                    if not aj:
                        continue
                    f = cval * ai * aj
                    blk = rblocks[i][j]
                    if blk is None:
                        blk = _zero_rows(qp, qp)
                        rblocks[i][j] = blk
                    for r in range(qp):
                        row = rp[r]
                        brow = blk[r]
                        for cc in range(qp):
                            if row[cc]:
                                brow[cc] += f * row[cc]
        stacked = []
        for i in range(ell):
            rows_i = [[] for _ in range(qp)]
            for j in range(ell):
                xt = (mat_mul(prev.mult[j], prev.lower[i])
                      if prev.lower[i] else _zero_rows(qp, qp))
                blk = xt
                if rblocks[i][j] is not None:
                    blk = [[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(blk, rblocks[i][j])]
                if i == j:
                    blk = [row[:] for row in blk]
                    for r in range(qp):
                        blk[r][r] += R1
                for r in range(qp):
                    rows_i[r].extend(blk[r])
            stacked.extend(rows_i)
        # the RREF rows of the stacked map are quotient coordinates: their
        # kernel is exactly the new radical piece, and reduction is just a
        # matrix product against them
        rmat, piv_m = rref(stacked, ns)
        qe = len(piv_m)
        pivset = set(piv_m)
        free_m = [c for c in range(ns) if c not in pivset]
        gen_data = [(self.group.elements[gen], prev.gens[gi])
                    for gi, gen in enumerate(self.group.gen_indices)]
        # stability of the radical under the W-action certifies that the
        # quotient action is well defined; sampled when the kernel is large
        sample = free_m if len(free_m) <= 40 else free_m[:12]
        for f in sample:
            kv = [R0] * ns
            kv[f] = R1
            for i, p in enumerate(piv_m):
                if rmat[i][f]:
                    kv[p] = -rmat[i][f]
            for a, gp in gen_data:
                img = _apply_gen_to_symbols(kv, a, gp, ell, qp)
                resid = mat_vec(rmat, img)
                assert not any(resid), "radical not W-stable (broken realization?)"
        gens = []
        for a, gp in gen_data:
            scol = [[R0] * qe for _ in range(ns)]
            for uidx, fs in enumerate(piv_m):
                j, b = divmod(fs, qp)
                for k in range(ell):
                    f = Fraction(a[k][j])
                    if f:
                        base = k * qp
                        for r in range(qp):
                            v = gp[r][b]
                            if v:
                                scol[base + r][uidx] += f * v
            gens.append(mat_mul(rmat, scol))
        lower = []
        for i in range(ell):
            base = i * qp
            lower.append([[stacked[base + r][fs] for fs in piv_m]
                          for r in range(qp)])
        mult = []
        for j in range(ell):
            base = j * qp
            mult.append([row[base: base + qp] for row in rmat])
        sym = [divmod(fs, qp) for fs in piv_m]
        return _QuotientState(qe, gens, lower, mult, sym)

    def run(self, max_degree, force_quotient=False):
        module = self.module
        phase_free = not force_quotient
        prev = None
        if force_quotient:
            prev = self._full_state(0)
            self.levels = [prev]
        self._record(0, module.layer_dim(0), prev)
        candidates = self._candidate_degrees(max_degree) if phase_free else ()
        d = 0
        while d < max_degree:
            d += 1
            if phase_free:
                if d in candidates:
                    sing = singular_subspace(module, d)
                    if sing:
                        srows, spiv = rref(sing, module.layer_dim(d))
                        prev = self._reduced_state(d, srows, spiv)
                        phase_free = False
                        self.levels = [None] * d + [prev]
                        self._record(d, prev.dim, prev)
                        if prev.dim == 0:
                            return self._finish(max_degree, "finite")
                        continue
                self._record(d, module.layer_dim(d), None)
                continue
            state = self._step(prev)
            prev = state
            self.levels.append(state)
            self._record(d, state.dim, state)
            if state.dim == 0:
                return self._finish(max_degree, "finite")
        return self._finish(max_degree, "not-finite-up-to-bound")

    def _record(self, d, dim, state):
        self.dims.append(dim)
        for ci in self.trace_classes:
            if state is None:
                self.traces[ci].append(self.module.layer_trace(ci, d))
            elif dim == 0:
                self.traces[ci].append(R0)
            else:
                m = state.word_matrix(self.group, self.group.class_reps[ci])
                self.traces[ci].append(sum((m[k][k] for k in range(dim)), R0))

    def _finish(self, max_degree, verdict):
        dims = self.dims
        if verdict == "finite":
            while len(dims) > 1 and dims[-1] == 0:
                dims.pop()
                for ci in self.trace_classes:
                    self.traces[ci].pop()
        return SimpleModuleReport(self.module, max_degree, dims, verdict,
                                  {ci: list(v) for ci, v in self.traces.items()})


def _apply_gen_to_symbols(symvec, a, gp, ell, qp):
    """Image of a symbol vector under a generator: (j,b) -> sum_k a[k][j] (k, g b)."""
    out = [R0] * (ell * qp)
    for j in range(ell):
        block = symvec[j * qp: (j + 1) * qp]
        if not any(block):
            continue
        gb = [sum((gp[r][b] * block[b] for b in range(qp) if block[b]), R0)
              for r in range(qp)]
        for k in range(ell):
            f = Fraction(a[k][j])
            if f:
                base = k * qp
                for r in range(qp):
                    if gb[r]:
                        out[base + r] += f * gb[r]
    return out


def default_degree_bound(module: StandardModule, floor=24):
    """max(ell * (numerator of the coupling scale - 1) + 4, floor)."""
    group = module.group
    r_rel = Fraction(2) * module.cparam.total() / group.ell
    return max(group.ell * (abs(r_rel.numerator) - 1) + 4, floor)


def simple_graded(module: StandardModule, max_degree=None, trace_classes=()):
    if max_degree is None:
        max_degree = default_degree_bound(module)
    return SimpleEngine(module, trace_classes=trace_classes).run(max_degree)


def simple_class_traces(module: StandardModule, ci, max_degree=None):
    return simple_graded(module, max_degree, trace_classes=(ci,)).trace_series(ci)


def spherical_graded(module: StandardModule, max_degree=None):
    """Graded dimensions of the W-invariant part of the simple quotient."""
    group = module.group
    all_classes = tuple(range(len(group.classes)))
    if max_degree is None:
        max_degree = default_degree_bound(module)
    report = simple_graded(module, max_degree, trace_classes=all_classes)
    out = []
    for d in range(len(report.dims)):
        s = R0
        for ci in all_classes:
            s += Fraction(group.class_sizes[ci]) * report.traces[ci][d]
        s /= group.order
        assert s.denominator == 1 and s >= 0
        out.append(int(s))
    return out, report


def onedim_exists(group, cparam: CParameter):
    """Whether w -> Id, x -> 0, y -> 0 extends to a module; with witness."""
    ell = group.ell
    total = _zero_rows(ell, ell)
    for refl in group.reflections:
        cval = cparam.value_on_reflection(refl)
        if cval:
            for i in range(ell):
                ai = Fraction(refl.root[i])
                if ai:
                    for j in range(ell):
                        total[i][j] += cval * ai * Fraction(refl.coroot[j])
    ok = all(total[i][j] == (R1 if i == j else R0)
             for i in range(ell) for j in range(ell))
    eq = (2 * cparam.total() == group.ell)
    assert ok == eq, "pairing identity out of sync with the trace equation"
    return ok, {"2_sum_c": str(2 * cparam.total()), "rank": group.ell}


def gorenstein_check(module: StandardModule, max_degree=None):
    """Top layer one-dimensional and every multiplication pairing
    L_a x L_(top-a) -> L_top perfect.  Weight must be triv and the simple
    quotient finite."""
    if module.rep.name != "triv":
        raise ValueError("Gorenstein check applies to the trivial lowest weight")
    if max_degree is None:
        max_degree = default_degree_bound(module)
    engine = SimpleEngine(module)
    report = engine.run(max_degree, force_quotient=True)
    if not report.finite:
        raise BoundExceeded("simple quotient not finite up to bound", report)
    top = report.top_degree
    levels = engine.levels[: top + 1]
    if report.dims[top] != 1:
        return False, {"reason": "top layer dimension %d" % report.dims[top],
                       "dims": report.dims}
    memo = {}

    def mult_map(a, uidx, b):
        # multiplication by basis element uidx of L_a, as a map L_b -> L_(a+b)
        if a == 0:
            return identity_matrix(levels[b].dim)
        key = (a, uidx, b)
        got = memo.get(key)
        if got is None:
            j, bb = levels[a].sym[uidx]
            got = mat_mul(levels[a + b].mult[j], mult_map(a - 1, bb, b))
            memo[key] = got
        return got

    for a in range(0, top + 1):
        bdeg = top - a
        qa, qb = report.dims[a], report.dims[bdeg]
        if qa != qb:
            return False, {"reason": "asymmetric graded dims", "a": a,
                           "dims": report.dims}
        pairing = [[mult_map(a, u, bdeg)[0][v] for v in range(qb)]
                   for u in range(qa)]
        if rank(pairing, qb) != qa:
            return False, {"reason": "degenerate pairing", "a": a}
    return True, {"dims": report.dims, "top": top}


# ---------------------------------------------------------------------------
# quotient by the submodule generated by one singular copy (type B/D lines)
# ---------------------------------------------------------------------------

class CyclicQuotient:
    """M(triv) / (C[h] . V) for a W-stable space V of singular vectors."""

    def __init__(self, module: StandardModule, gen_rows, gen_degree):
        self.module = module
        self.gen_degree = gen_degree
        rows, piv = rref(gen_rows, module.layer_dim(gen_degree))
        self._spans = {gen_degree: (rows, piv)}

    def _sub(self, d):
        if d < self.gen_degree:
            return ([], [])
        got = self._spans.get(d)
        if got is not None:
            return got
        prev_rows, _ = self._sub(d - 1)
        module = self.module
        span = EchelonSpan(module.layer_dim(d))
        idx_hi, dt = module._flat(d)
        mons_lo = module.monomials(d - 1)
        for row in prev_rows:
            for j in range(module.ell):
                vec = [R0] * module.layer_dim(d)
                for pos, v in enumerate(row):
                    if v:
                        mi, t = divmod(pos, dt)
                        m = mons_lo[mi]
                        hi = m[:j] + (m[j] + 1,) + m[j + 1:]
                        vec[idx_hi[hi] * dt + t] = v
                span.insert(vec)
        got = (span.rows, span.pivots)
        self._spans[d] = got
        return got

    def dim(self, d):
        return self.module.layer_dim(d) - len(self._sub(d)[0])

    def graded_dims(self, dmax):
        return [self.dim(d) for d in range(dmax + 1)]

    def class_trace(self, ci, d):
        full = self.module.layer_trace(ci, d)
        rows, piv = self._sub(d)
        if not rows:
            return full
        rho = self.module.rho_layer(self.module.group.class_reps[ci], d)
        return full - _trace_on_span(rows, piv, rho)

    def character(self, dmax, classes=None):
        group = self.module.group
        cls = classes if classes is not None else range(len(group.classes))
        coeffs = {ci: [self.class_trace(ci, d) for d in range(dmax + 1)]
                  for ci in cls}
        return CharacterSeries(group, self.module.kappa, dmax, coeffs)

    def singular_in_quotient(self, d, classes=None):
        """Basis (mod the submodule) of the vectors killed by every lowering
        into the quotient, with per-class traces of the W-action."""
        module = self.module
        n = module.layer_dim(d)
        rows_lo, piv_lo = self._sub(d - 1)
        stacked = []
        for i in range(module.ell):
            mat = module.dunkl_matrix(i, d)
            cols = []
            for k in range(n):
                col = [mat[r][k] for r in range(len(mat))]
                cols.append(reduce_mod_rows(rows_lo, piv_lo, col))
            stacked.extend(_cols_to_rows(cols, len(mat)))
        kern = kernel_basis(stacked, n)
        rows_d, piv_d = self._sub(d)
        span = EchelonSpan(n)
        for v in kern:
            span.insert(reduce_mod_rows(rows_d, piv_d, list(v)))
        basis_rows, basis_piv = span.rows, span.pivots
        group = module.group
        cls = classes if classes is not None else range(len(group.classes))
        traces = {}
        for ci in cls:
            if not basis_rows:
                traces[ci] = R0
                continue
            rho = module.rho_layer(group.class_reps[ci], d)
            tr = R0
            for i, row in enumerate(basis_rows):
                image = reduce_mod_rows(rows_d, piv_d, mat_vec(rho, row))
                resid = reduce_mod_rows(basis_rows, basis_piv, list(image))
                assert not any(resid), "quotient singular space not W-stable"
                tr += image[basis_piv[i]]
            traces[ci] = tr
        return basis_rows, traces


def isotypic_rows(module: StandardModule, rows, d, character):
    """Rows spanning the isotypic part of a W-stable row span on layer d,
    for the irreducible character given per conjugacy class."""
    group = module.group
    if not rows:
        return []
    rows, piv = rref(rows, module.layer_dim(d))
    k = len(rows)
    proj = _zero_rows(k, k)
    dim_chi = character[group.class_of[group.identity_index]]
    for ei in range(group.order):
        chi = character[group.class_of[ei]]
        if not chi:
            continue
        rho = module.rho_layer(ei, d)
        for i, row in enumerate(rows):
            image = mat_vec(rho, row)
            resid = reduce_mod_rows(rows, piv, list(image))
            assert not any(resid), "span not W-stable"
            for t in range(k):
                proj[i][t] += chi * image[piv[t]]
    scale = Fraction(dim_chi, group.order)
    out = EchelonSpan(module.layer_dim(d))
    for i in range(k):
        vec = [R0] * module.layer_dim(d)
        for t in range(k):
            f = scale * proj[i][t]
            if f:
                for p, x in enumerate(rows[t]):
                    if x:
                        vec[p] += f * x
        out.insert(vec)
    return out.rows


class FlatLineQuotient:
    """M(triv) divided by the specialization of the generic radical along a
    one-parameter coupling line through the given point.

    On the line c(u) = c0 + u * slope the radical of the contravariant form
    is, for generic u, the submodule generated by one copy of the
    reflection representation of singular vectors in degree delta.  This
    class computes that family exactly over Q(u), then takes its flat limit
    at u = 0 degree by degree (saturating a Q[u]-lattice basis), which is
    the quotient the type B/D theorems describe.  At generic points this
    agrees with the naive ideal quotient; at jump points it does not, and
    only the flat limit has the predicted character.
    """

    SAMPLE_POINTS = (Fraction(1, 5), Fraction(2, 7), Fraction(3, 11))

    def __init__(self, module: StandardModule, slope_by_class):
        from .exact import RatFunc, poly_eval, poly_shift_down
        self.module = module
        group = module.group
        if module.rep.name != "triv":
            raise ValueError("line quotient starts from the trivial weight")
        self.slopes = [Fraction(slope_by_class[rc])
                       for rc in range(len(group.reflection_classes))]
        href = group.reflection_rep()
        delta = group.kappa(module.cparam, href) - module.kappa
        if delta.denominator != 1 or delta <= 0:
            raise ValueError("no positive integral singular degree on this line")
        self.delta = int(delta)
        self._check_delta_constant()
        self._family = {self.delta: self._initial_family()}
        self._spans = {}

    def _cparam_at(self, u):
        group = self.module.group
        vals = {rc: self.module.cparam.by_class[rc] + u * self.slopes[rc]
                for rc in range(len(group.reflection_classes))}
        return CParameter(group, vals)

    def _check_delta_constant(self):
        group = self.module.group
        href = group.reflection_rep()
        for u in (Fraction(1, 3), Fraction(1, 2)):
            cp = self._cparam_at(u)
            d = group.kappa(cp, href) - group.kappa(cp, group.trivial_rep())
            if d != self.delta:
                raise ValueError("singular degree moves along this line")

    def _stacked_ratfunc(self, d):
        """Stacked lowering maps at degree d with entries in Q(u)."""
        from .exact import RatFunc
        module = self.module
        deriv, by_class = module._dunkl_parts(d)
        n = module.layer_dim(d)
        nrows = module.layer_dim(d - 1)
        zero = RatFunc.const(0)
        u = RatFunc.u()
        cvals = [RatFunc.const(module.cparam.by_class[rc]) + u * self.slopes[rc]
                 for rc in range(len(module.group.reflection_classes))]
        stacked = []
        for i in range(module.ell):
            rows = [[zero] * n for _ in range(nrows)]
            for cidx, col in enumerate(deriv[i]):
                for tgt, v in col.items():
                    rows[tgt][cidx] = rows[tgt][cidx] + v
            for rc, cols in enumerate(by_class):
                cv = cvals[rc]
                for cidx, col in enumerate(cols[i]):
                    for tgt, v in col.items():
                        rows[tgt][cidx] = rows[tgt][cidx] - cv * v
            stacked.extend(rows)
        return stacked

    def _initial_family(self):
        """Q[u]-basis of the generic singular family in degree delta."""
        from .exact import RatFunc
        group = self.module.group
        stacked = self._stacked_ratfunc(self.delta)
        n = self.module.layer_dim(self.delta)
        kern = kernel_basis(stacked, n)
        if len(kern) != group.ell:
            raise ArithmeticError(
                "generic singular family has dimension %d, expected %d"
                % (len(kern), group.ell))
        out = []
        for vec in kern:
            polys = self._clear_denominators(vec)
            out.append(polys)
        return out

    @staticmethod
    def _clear_denominators(vec):
        # multiply by the product of all denominators, strip the u-content
        from .exact import RatFunc, _rat_poly_mul, _rat_poly_divmod
        den = [R1]
        for x in vec:
            if isinstance(x, RatFunc):
                den = _rat_poly_mul(den, list(x.den))
        polys = []
        for x in vec:
            if isinstance(x, RatFunc):
                q, r = _rat_poly_divmod(_rat_poly_mul(list(x.num), den), list(x.den))
                assert not any(r)
                polys.append(q)
            else:
                polys.append([Fraction(x) * c for c in den])
        val = None
        for p in polys:
            k = 0
            while k < len(p) and p[k] == 0:
                k += 1
            if k < len(p):
                val = k if val is None else min(val, k)
        if val:
            polys = [p[val:] if len(p) > val else [] for p in polys]
        return polys

    @staticmethod
    def _poly_vec_eval(polys, x):
        from .exact import poly_eval
        return [poly_eval(p, x) for p in polys]

    def _saturate(self, vectors, n):
        """Flat limit at u=0 of the span of a polynomial vector family.

        Returns (evaluations, saturated Q[u]-basis); the basis stays a
        generic basis of the span and seeds the next degree.
        """
        # prune to a generic basis, taking the best of a few sample points
        best = None
        for s in self.SAMPLE_POINTS:
            span = EchelonSpan(n)
            kept = []
            for w in vectors:
                if span.insert(self._poly_vec_eval(w, s)):
                    kept.append(w)
            if best is None or len(kept) > len(best):
                best = kept
            if best is not None and len(best) == len(vectors):
                break
        basis = [[list(p) for p in w] for w in best]
        guard = 0
        while True:
            guard += 1
            if guard > 500:
                raise ArithmeticError("saturation did not terminate")
            evals = [self._poly_vec_eval(w, Fraction(0)) for w in basis]
            cols = [[evals[i][r] for i in range(len(evals))] for r in range(n)]
            dep = kernel_basis(cols, len(evals)) if evals else []
            if not dep:
                return evals, basis
            lam = dep[0]
            combo = [[R0] for _ in range(n)]
            maxlen = 1
            for i, li in enumerate(lam):
                if li:
                    for r in range(n):
                        p = basis[i][r]
                        if len(p) > maxlen:
                            maxlen = len(p)
            combo = [[R0] * maxlen for _ in range(n)]
            for i, li in enumerate(lam):
                if li:
                    for r in range(n):
                        for k, c in enumerate(basis[i][r]):
                            combo[r][k] += li * c
            val = None
            for p in combo:
                k = 0
                while k < len(p) and p[k] == 0:
                    k += 1
                if k < len(p):
                    val = k if val is None else min(val, k)
            if val is None:
                raise ArithmeticError("zero combination in saturation")
            assert val >= 1, "evaluation dependency without u factor"
            stripped = [p[val:] if len(p) > val else [] for p in combo]
            at = next(i for i, li in enumerate(lam) if li)
            basis[at] = stripped
        raise AssertionError

    def _family_at(self, d):
        got = self._family.get(d)
        if got is not None:
            return got
        if d < self.delta:
            return []
        self._sub(d - 1)  # ensures the cached family below is the saturated basis
        prev = self._family_at(d - 1)
        module = self.module
        idx_hi, dt = module._flat(d)
        mons_lo = module.monomials(d - 1)
        n = module.layer_dim(d)
        out = []
        for w in prev:
            for j in range(module.ell):
                vec = [[] for _ in range(n)]
                for pos, p in enumerate(w):
                    if p:
                        mi, t = divmod(pos, dt)
                        m = mons_lo[mi]
                        hi = m[:j] + (m[j] + 1,) + m[j + 1:]
                        vec[idx_hi[hi] * dt + t] = list(p)
                out.append(vec)
        self._family[d] = out
        return out

    def _sub(self, d):
        if d < self.delta:
            return ([], [])
        got = self._spans.get(d)
        if got is not None:
            return got
        n = self.module.layer_dim(d)
        fam = self._family_at(d)
        limit, basis = self._saturate(fam, n)
        rows, piv = rref(limit, n) if limit else ([], [])
        # the saturated polynomial basis replaces the raw shift family as
        # the degree-d generators, stopping exponential family growth
        self._family[d] = basis
        got = (rows, piv)
        self._spans[d] = got
        return got

    def dim(self, d):
        return self.module.layer_dim(d) - len(self._sub(d)[0])

    def graded_dims(self, dmax):
        return [self.dim(d) for d in range(dmax + 1)]

    def class_trace(self, ci, d):
        full = self.module.layer_trace(ci, d)
        rows, piv = self._sub(d)
        if not rows:
            return full
        rho = self.module.rho_layer(self.module.group.class_reps[ci], d)
        return full - _trace_on_span(rows, piv, rho)

    def character(self, dmax, classes=None):
        group = self.module.group
        cls = classes if classes is not None else range(len(group.classes))
        coeffs = {ci: [self.class_trace(ci, d) for d in range(dmax + 1)]
                  for ci in cls}
        return CharacterSeries(group, self.module.kappa, dmax, coeffs)

    def singular_in_quotient(self, d, classes=None):
        """As for CyclicQuotient, with the flat spans."""
        helper = CyclicQuotient.__new__(CyclicQuotient)
        helper.module = self.module
        helper.gen_degree = self.delta
        helper._spans = {dd: self._sub(dd) for dd in range(self.delta, d + 1)}
        return CyclicQuotient.singular_in_quotient(helper, d, classes)


def line_slopes(group, family):
    """Deformation direction preserving the reflection-sum scale lines.

    For two reflection classes (B_n, I2(even)) the direction trades c1
    against c2 along c1*(n-1) + c2 = const; a single class has no line and
    is deformed through the matching two-class group by the caller.
    """
    tags = group.reflection_class_tags
    if len(tags) != 2:
        raise ValueError("line deformation needs two reflection classes")
    c1_rc = tags.index("c1")
    c2_rc = tags.index("c2")
    # |C1| s1 + |C2| s2 = 0 keeps sum c_s constant, which pins the singular
    # degree; FlatLineQuotient re-verifies that exactly
    n1 = len(group.reflection_classes[c1_rc])
    n2 = len(group.reflection_classes[c2_rc])
    return {c1_rc: Fraction(1), c2_rc: -Fraction(n1, n2)}


def reflection_line_quotient(module: StandardModule):
    """The finite quotient on a type B/D coupling line: divide M(triv) by
    the submodule generated by the reflection-representation copy of
    singular vectors in degree delta = kappa(refl rep) - kappa(triv)."""
    group = module.group
    if module.rep.name != "triv":
        raise ValueError("line quotient starts from the trivial weight")
    href = group.reflection_rep()
    delta = group.kappa(module.cparam, href) - module.kappa
    if delta.denominator != 1 or delta <= 0 or int(delta) % 2 != 1:
        raise ValueError(
            "coupling not on a positive odd-integer line (delta=%s)" % delta)
    delta = int(delta)
    sing = singular_subspace(module, delta)
    chi = [href.class_trace(ci) for ci in range(len(group.classes))]
    hpart = isotypic_rows(module, sing, delta, chi)
    if len(hpart) != group.ell:
        raise ArithmeticError(
            "expected one copy of the reflection representation among "
            "degree-%d singular vectors, found dimension %d" % (delta, len(hpart)))
    return CyclicQuotient(module, hpart, delta), delta
