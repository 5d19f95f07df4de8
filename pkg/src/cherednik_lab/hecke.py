"""Type A Iwahori-Hecke algebra at a root of unity: the q-permutation
module on tabloids, Specht modules generated by a q-antisymmetrized
column-reading vector, the invariant bilinear form, and Gram ranks.

Normalization: the generators satisfy (T_i - 1)(T_i + q) = 0, so the
index representation sends every T_i to 1 and the other linear character
sends T_i to -q.  The form on the permutation module weights each tabloid
by q^(number of sorting inversions), which makes every T_i self-adjoint;
its restriction to the Specht module is the Gram matrix whose rank is the
dimension of the simple head.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .exact import Cyclo, EchelonSpan, R0, R1, rank, rref, solve_in_span
from .tableaux import (
    conjugate_partition,
    e_core,
    hook_length_count,
    hook_partition,
    is_e_regular,
    normalize_partition,
    partitions_of,
    standard_tableaux,
)

SPECHT_SIZE_BOUND = 6


class HeckeCapabilityError(ValueError):
    pass


def _tabloids(lam):
    """Row assignments 1..n -> row index with prescribed row sizes."""
    lam = normalize_partition(lam)
    n = sum(lam)
    rows = len(lam)
    out = []

    def rec(i, remaining, acc):
        if i > n:
            out.append(tuple(acc))
            return
        for r in range(rows):
            if remaining[r]:
                remaining[r] -= 1
                acc.append(r)
                rec(i + 1, remaining, acc)
                acc.pop()
                remaining[r] += 1

    rec(1, list(lam), [])
    return out


def _sorting_inversions(assign):
    """Pairs a < b whose rows are out of order; the form weight exponent."""
    n = len(assign)
    return sum(1 for a in range(n) for b in range(a + 1, n)
               if assign[a] > assign[b])


class QPermutationModule:
    """The q-deformed permutation module M^lam on tabloids."""

    def __init__(self, lam, q):
        self.lam = normalize_partition(lam)
        self.n = sum(self.lam)
        self.q = q
        self.basis = _tabloids(self.lam)
        self.index = {t: i for i, t in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.weights = [self.q ** _sorting_inversions(t) for t in self.basis]

    def act_gen(self, k, vec):
        """Right action of T_k (swapping k, k+1), k = 1..n-1, on a dict."""
        q = self.q
        out = {}

        def add(i, c):
            v = out.get(i, R0) + c
            if v:
                out[i] = v
            else:
                out.pop(i, None)

        for i, c in vec.items():
            t = self.basis[i]
            ra, rb = t[k - 1], t[k]
            if ra == rb:
                add(i, c)
                continue
            swapped = list(t)
            swapped[k - 1], swapped[k] = rb, ra
            si = self.index[tuple(swapped)]
            if ra < rb:
                add(si, c)
            else:
                add(si, c * q)
                add(i, c * (1 - q))
        return out

    def act_word(self, word, vec):
        for k in word:
            vec = self.act_gen(k, vec)
        return vec

    def form(self, u, v):
        """Diagonal pairing with tabloid weights; bilinear, T-self-adjoint."""
        s = None
        for i, c in u.items():
            d = v.get(i)
            if d:
                term = c * d * self.weights[i]
                s = term if s is None else s + term
        if s is None:
            return self.q * 0
        return s


def _young_subgroup_elements(block_sizes):
    """Words (in adjacent transpositions, global numbering) of all elements
    of the Young subgroup on consecutive blocks, with their lengths."""
    blocks = []
    start = 1
    for b in block_sizes:
        blocks.append(list(range(start, start + b)))
        start += b
    elements = [((), 0)]
    for block in blocks:
        k = len(block)
        perms = []
        for perm in itertools.permutations(range(k)):
            # reduced word via bubble sort; length = inversion count
            word = []
            arr = list(perm)
            changed = True
            while changed:
                changed = False
                for i in range(k - 1):
                    if arr[i] > arr[i + 1]:
                        arr[i], arr[i + 1] = arr[i + 1], arr[i]
                        word.append(block[0] + i)
                        changed = True
            inv = sum(1 for a in range(k) for b in range(a + 1, k)
                      if perm[a] > perm[b])
            perms.append((tuple(reversed(word)), inv))
        elements = [(w1 + w2, l1 + l2) for w1, l1 in elements for w2, l2 in perms]
    return elements


class SpechtData:
    """Specht module over the e-th cyclotomic field (or any exact q)."""

    def __init__(self, lam, e=None, q=None):
        lam = normalize_partition(lam)
        if sum(lam) > SPECHT_SIZE_BOUND:
            raise HeckeCapabilityError(
                "Specht construction bounded at n <= %d" % SPECHT_SIZE_BOUND)
        if q is None:
            if e is None or e < 2:
                raise ValueError("need e >= 2 or an explicit q")
            q = Cyclo.zeta(e)
        self.lam = lam
        self.e = e
        self.q = q
        self.n = sum(lam)
        self.perm_module = QPermutationModule(lam, q)
        self._build()

    def _column_filled_assignment(self):
        """Tabloid of the tableau filled down consecutive columns."""
        lam = self.lam
        conj = conjugate_partition(lam)
        assign = [None] * self.n
        val = 1
        for col, height in enumerate(conj):
            for row in range(height):
                assign[val - 1] = row
                val += 1
        return tuple(assign)


    def _build(self):
        pm = self.perm_module
        conj = conjugate_partition(self.lam)
        start = {pm.index[self._column_filled_assignment()]: R1 * self.q ** 0}
        gen_vec = {}
        for word, length in _young_subgroup_elements(conj):
            term = pm.act_word(word, dict(start))
            for i, c in term.items():
                v = gen_vec.get(i, R0) + ((-1) ** length) * c
                if v:
                    gen_vec[i] = v
                else:
                    gen_vec.pop(i, None)
        # close the cyclic module under the generators
        n = pm.dim
        span = EchelonSpan(n)
        dense0 = [R0] * n
        for i, c in gen_vec.items():
            dense0[i] = c
        span.insert(dense0)
        frontier = [gen_vec]
        while frontier:
            new = []
            for vec in frontier:
                for k in range(1, self.n):
                    img = pm.act_gen(k, vec)
                    dense = [R0] * n
                    for i, c in img.items():
                        dense[i] = c
                    if span.insert(dense):
                        new.append(img)
            frontier = new
        self.basis = [list(r) for r in span.rows]
        self.dim = len(self.basis)
        if self.dim != hook_length_count(self.lam):
            raise ArithmeticError(
                "Specht dimension %d differs from the standard-tableau count %d"
                % (self.dim, hook_length_count(self.lam)))
        # generator matrices in the chosen basis
        self.gen_mats = []
        cols_basis = [[row[r] for row in self.basis] for r in range(n)]
        basis_cols = [[self.basis[b][r] for b in range(self.dim)] for r in range(n)]
        basis_vectors = self.basis
        for k in range(1, self.n):
            images = []
            for b in range(self.dim):
                vec = {i: c for i, c in enumerate(basis_vectors[b]) if c}
                img = pm.act_gen(k, vec)
                dense = [R0] * n
                for i, c in img.items():
                    dense[i] = c
                images.append(dense)
            coords = solve_in_span(basis_vectors, images, n)
            mat = [[coords[b][r] for b in range(self.dim)] for r in range(self.dim)]
            self.gen_mats.append(mat)
        # Gram matrix of the restricted invariant form
        self.gram = [[pm.form({i: c for i, c in enumerate(u) if c},
                              {i: c for i, c in enumerate(v) if c})
                      for v in basis_vectors] for u in basis_vectors]

    def check_relations(self):
        """Quadratic and braid relations on the generator matrices."""
        from .exact import mat_mul, identity_matrix
        q = self.q
        dim = self.dim
        ident = identity_matrix(dim)
        for k, m in enumerate(self.gen_mats):
            m2 = mat_mul(m, m)
            expect = [[(1 - q) * m[r][c] + (q if r == c else q * 0)
                       for c in range(dim)] for r in range(dim)]
            if m2 != expect:
                raise AssertionError("quadratic relation fails at T_%d" % (k + 1))
        for a in range(len(self.gen_mats) - 1):
            lhs = mat_mul(self.gen_mats[a], mat_mul(self.gen_mats[a + 1], self.gen_mats[a]))
            rhs = mat_mul(self.gen_mats[a + 1], mat_mul(self.gen_mats[a], self.gen_mats[a + 1]))
            if lhs != rhs:
                raise AssertionError("braid relation fails at %d" % (a + 1))
        for a in range(len(self.gen_mats)):
            for b in range(a + 2, len(self.gen_mats)):
                lhs = mat_mul(self.gen_mats[a], self.gen_mats[b])
                rhs = mat_mul(self.gen_mats[b], self.gen_mats[a])
                if lhs != rhs:
                    raise AssertionError("commuting relation fails (%d,%d)" % (a, b))
        return True

    def form_contravariance_check(self):
        """<u T_k, v> = <u, v T_k> on the module basis."""
        pm = self.perm_module
        for k in range(1, self.n):
            for bu in self.basis[: min(len(self.basis), 4)]:
                for bv in self.basis[: min(len(self.basis), 4)]:
                    u = {i: c for i, c in enumerate(bu) if c}
                    v = {i: c for i, c in enumerate(bv) if c}
                    lhs = pm.form(pm.act_gen(k, u), v)
                    rhs = pm.form(u, pm.act_gen(k, v))
                    if lhs != rhs:
                        raise AssertionError("form not contravariant at T_%d" % k)
        return True

    def gram_rank(self):
        return rank(self.gram, self.dim)


def build_specht(lam, e):
    return SpechtData(lam, e=e)


def gram_rank(lam, e):
    """dim of the simple head D^lam at q = zeta_e."""
    return SpechtData(lam, e=e).gram_rank()


def gram_rank_at(lam, q):
    return SpechtData(lam, q=q).gram_rank()


def hook_recursion_check(n):
    """dim S^(hook i) = dim D^(hook i) + dim D^(hook i-1) at e = n, with
    D nonzero exactly for i != n-1.  Returns (ok, table)."""
    if not 3 <= n <= SPECHT_SIZE_BOUND:
        raise HeckeCapabilityError("hook recursion bounded to 3 <= n <= %d"
                                   % SPECHT_SIZE_BOUND)
    dims_s = []
    dims_d = []
    for i in range(n):
        lam = hook_partition(n, i)
        sp = SpechtData(lam, e=n)
        dims_s.append(sp.dim)
        dims_d.append(sp.gram_rank())
    ok = True
    for i in range(n):
        expect_s = dims_d[i] + (dims_d[i - 1] if i >= 1 else 0)
        if dims_s[i] != expect_s:
            ok = False
        if dims_s[i] != hook_length_count(hook_partition(n, i)):
            ok = False
    if dims_d[n - 1] != 0:
        ok = False
    table = {"spechts": dims_s, "simples": dims_d,
             "binomials": [hook_length_count(hook_partition(n, i)) for i in range(n)]}
    return ok, table
