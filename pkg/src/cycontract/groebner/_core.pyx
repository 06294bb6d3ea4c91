# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction engine: the hot kernel of Buchberger's algorithm.

Same interface and semantics as ``_engine_py.Engine``; polynomials are kept
as C arrays of packed monomial keys (descending) and coefficients, and a
normal form is a sequence of merge passes, so each reduction step costs
O(|f| + |g|) word operations.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

from .orders import BudgetExceededError

ctypedef unsigned long long u64
ctypedef long long i64

DEF MAXV = 16


cdef struct CPoly:
    u64 *keys
    i64 *coeffs
    Py_ssize_t n


cdef i64 inv_mod(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef class Engine:
    """Stateful reduction kernel holding a growing monic basis over GF(p)."""

    backend = "cython"

    cdef i64 p
    cdef public object torder
    cdef public long long budget
    cdef public long long steps
    cdef Py_ssize_t nvars
    cdef int width
    cdef u64 mask
    cdef int deg_shift
    cdef bint graded, complemented
    cdef u64 cap
    cdef CPoly *polys
    cdef int *lead_exp_flat          # nbasis * nvars unpacked lead exponents
    cdef i64 *lead_deg
    cdef Py_ssize_t nbasis, capacity
    cdef public list lead_exps       # python mirrors for the driver
    cdef public list lead_keys

    def __cinit__(self, p, torder, budget):
        self.p = p
        self.torder = torder
        self.budget = budget
        self.steps = 0
        params = torder.kernel_params()
        self.nvars = params["nvars"]
        if self.nvars > MAXV:
            raise ValueError("too many variables for the compiled kernel")
        self.width = params["width"]
        self.mask = params["mask"]
        self.deg_shift = params["deg_shift"]
        self.graded = params["graded"]
        self.complemented = params["complemented"]
        self.cap = params["cap"]
        self.capacity = 16
        self.polys = <CPoly *> malloc(self.capacity * sizeof(CPoly))
        self.lead_exp_flat = <int *> malloc(self.capacity * MAXV * sizeof(int))
        self.lead_deg = <i64 *> malloc(self.capacity * sizeof(i64))
        self.nbasis = 0
        self.lead_exps = []
        self.lead_keys = []

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.polys != NULL:
            for i in range(self.nbasis):
                free(self.polys[i].keys)
                free(self.polys[i].coeffs)
            free(self.polys)
        free(self.lead_exp_flat)
        free(self.lead_deg)

    def __len__(self):
        return self.nbasis

    cdef void _unpack(self, u64 key, int *out):
        cdef Py_ssize_t s
        cdef int w = self.width
        if self.complemented:
            for s in range(self.nvars):
                out[s] = <int> (self.cap - ((key >> (w * s)) & self.mask))
        else:
            for s in range(self.nvars):
                out[self.nvars - 1 - s] = <int> ((key >> (w * s)) & self.mask)

    cdef i64 _degree(self, u64 key):
        cdef int exps[MAXV]
        cdef i64 d = 0
        cdef Py_ssize_t s
        if self.graded:
            return <i64> (key >> self.deg_shift)
        self._unpack(key, exps)
        for s in range(self.nvars):
            d += exps[s]
        return d

    cdef Py_ssize_t _find_reducer(self, u64 key):
        cdef int exps[MAXV]
        cdef Py_ssize_t idx, s
        cdef int *le
        cdef i64 deg = self._degree(key)
        cdef bint ok
        self._unpack(key, exps)
        for idx in range(self.nbasis):
            if self.lead_deg[idx] > deg:
                continue
            le = self.lead_exp_flat + idx * MAXV
            ok = True
            for s in range(self.nvars):
                if le[s] > exps[s]:
                    ok = False
                    break
            if ok:
                return idx
        return -1

    def add(self, keys, coeffs):
        """Store a nonzero polynomial (made monic); returns its index."""
        cdef Py_ssize_t n = len(keys), t
        cdef CPoly poly
        cdef i64 inv
        if self.nbasis == self.capacity:
            self.capacity *= 2
            self.polys = <CPoly *> realloc(self.polys, self.capacity * sizeof(CPoly))
            self.lead_exp_flat = <int *> realloc(
                self.lead_exp_flat, self.capacity * MAXV * sizeof(int))
            self.lead_deg = <i64 *> realloc(self.lead_deg, self.capacity * sizeof(i64))
        poly.n = n
        poly.keys = <u64 *> malloc(n * sizeof(u64))
        poly.coeffs = <i64 *> malloc(n * sizeof(i64))
        inv = inv_mod(<i64> coeffs[0], self.p)
        for t in range(n):
            poly.keys[t] = keys[t]
            poly.coeffs[t] = (<i64> coeffs[t]) * inv % self.p
        self.polys[self.nbasis] = poly
        self._unpack(poly.keys[0], self.lead_exp_flat + self.nbasis * MAXV)
        self.lead_deg[self.nbasis] = self._degree(poly.keys[0])
        self.nbasis += 1
        self.lead_keys.append(int(poly.keys[0]))
        self.lead_exps.append(self.torder.unpack(int(poly.keys[0])))
        return self.nbasis - 1

    def poly(self, Py_ssize_t i):
        cdef CPoly pl = self.polys[i]
        return (
            [int(pl.keys[t]) for t in range(pl.n)],
            [int(pl.coeffs[t]) for t in range(pl.n)],
        )

    cdef tuple _reduce_core(self, u64 *wk0, i64 *wc0, Py_ssize_t n):
        """Fully reduce the descending term array (consumed); returns lists."""
        cdef u64 *wk[2]
        cdef i64 *wc[2]
        cdef Py_ssize_t cap = n + 64, ocap = n + 16
        cdef Py_ssize_t cur = 0, pos = 0, olen = 0, m, a, b, t
        cdef u64 *ok_arr = <u64 *> malloc(ocap * sizeof(u64))
        cdef i64 *oc_arr = <i64 *> malloc(ocap * sizeof(i64))
        cdef Py_ssize_t idx
        cdef CPoly g
        cdef u64 shift, ka, kb
        cdef i64 c, v, pmod = self.p
        wk[0] = <u64 *> malloc(cap * sizeof(u64))
        wc[0] = <i64 *> malloc(cap * sizeof(i64))
        wk[1] = <u64 *> malloc(cap * sizeof(u64))
        wc[1] = <i64 *> malloc(cap * sizeof(i64))
        memcpy(wk[0], wk0, n * sizeof(u64))
        memcpy(wc[0], wc0, n * sizeof(i64))
        try:
            while pos < n:
                idx = self._find_reducer(wk[cur][pos])
                if idx < 0:
                    if olen == ocap:
                        ocap *= 2
                        ok_arr = <u64 *> realloc(ok_arr, ocap * sizeof(u64))
                        oc_arr = <i64 *> realloc(oc_arr, ocap * sizeof(i64))
                    ok_arr[olen] = wk[cur][pos]
                    oc_arr[olen] = wc[cur][pos]
                    olen += 1
                    pos += 1
                    continue
                g = self.polys[idx]
                self.steps += g.n
                if self.steps > self.budget:
                    raise BudgetExceededError(
                        f"exceeded {self.budget} monomial reductions; "
                        "raise the budget to continue")
                c = wc[cur][pos]
                shift = wk[cur][pos] - g.keys[0]
                # merge tail of work with -c * shifted tail of g
                m = (n - pos - 1) + (g.n - 1)
                if m > cap:
                    while cap < m:
                        cap *= 2
                    wk[0] = <u64 *> realloc(wk[0], cap * sizeof(u64))
                    wc[0] = <i64 *> realloc(wc[0], cap * sizeof(i64))
                    wk[1] = <u64 *> realloc(wk[1], cap * sizeof(u64))
                    wc[1] = <i64 *> realloc(wc[1], cap * sizeof(i64))
                a = pos + 1
                b = 1
                m = 0
                while a < n and b < g.n:
                    ka = wk[cur][a]
                    kb = g.keys[b] + shift
                    if ka > kb:
                        wk[1 - cur][m] = ka
                        wc[1 - cur][m] = wc[cur][a]
                        a += 1
                        m += 1
                    elif kb > ka:
                        v = (-c * g.coeffs[b]) % pmod
                        if v < 0:
                            v += pmod
                        if v:
                            wk[1 - cur][m] = kb
                            wc[1 - cur][m] = v
                            m += 1
                        b += 1
                    else:
                        v = (wc[cur][a] - c * g.coeffs[b]) % pmod
                        if v < 0:
                            v += pmod
                        if v:
                            wk[1 - cur][m] = ka
                            wc[1 - cur][m] = v
                            m += 1
                        a += 1
                        b += 1
                while a < n:
                    wk[1 - cur][m] = wk[cur][a]
                    wc[1 - cur][m] = wc[cur][a]
                    a += 1
                    m += 1
                while b < g.n:
                    v = (-c * g.coeffs[b]) % pmod
                    if v < 0:
                        v += pmod
                    if v:
                        wk[1 - cur][m] = g.keys[b] + shift
                        wc[1 - cur][m] = v
                        m += 1
                    b += 1
                cur = 1 - cur
                n = m
                pos = 0
            return (
                [int(ok_arr[t]) for t in range(olen)],
                [int(oc_arr[t]) for t in range(olen)],
            )
        finally:
            free(wk[0])
            free(wc[0])
            free(wk[1])
            free(wc[1])
            free(ok_arr)
            free(oc_arr)

    def nf(self, keys, coeffs):
        """Full normal form of an external polynomial against the basis."""
        cdef Py_ssize_t n = len(keys), t
        cdef u64 *wk
        cdef i64 *wc
        if n == 0:
            return [], []
        wk = <u64 *> malloc(n * sizeof(u64))
        wc = <i64 *> malloc(n * sizeof(i64))
        for t in range(n):
            wk[t] = keys[t]
            wc[t] = coeffs[t]
        try:
            return self._reduce_core(wk, wc, n)
        finally:
            free(wk)
            free(wc)

    def spoly_nf(self, Py_ssize_t i, Py_ssize_t j, lcm_key):
        """Normal form of the S-polynomial of stored elements i and j."""
        cdef CPoly gi = self.polys[i]
        cdef CPoly gj = self.polys[j]
        cdef u64 lk = lcm_key
        cdef u64 si = lk - gi.keys[0]
        cdef u64 sj = lk - gj.keys[0]
        cdef Py_ssize_t cap = gi.n + gj.n, m = 0, a = 0, b = 0
        cdef u64 *wk = <u64 *> malloc(cap * sizeof(u64))
        cdef i64 *wc = <i64 *> malloc(cap * sizeof(i64))
        cdef u64 ka, kb
        cdef i64 v, pmod = self.p
        while a < gi.n and b < gj.n:
            ka = gi.keys[a] + si
            kb = gj.keys[b] + sj
            if ka > kb:
                wk[m] = ka
                wc[m] = gi.coeffs[a]
                a += 1
                m += 1
            elif kb > ka:
                v = (-gj.coeffs[b]) % pmod
                if v < 0:
                    v += pmod
                if v:
                    wk[m] = kb
                    wc[m] = v
                    m += 1
                b += 1
            else:
                v = (gi.coeffs[a] - gj.coeffs[b]) % pmod
                if v < 0:
                    v += pmod
                if v:
                    wk[m] = ka
                    wc[m] = v
                    m += 1
                a += 1
                b += 1
        while a < gi.n:
            wk[m] = gi.keys[a] + si
            wc[m] = gi.coeffs[a]
            a += 1
            m += 1
        while b < gj.n:
            v = (-gj.coeffs[b]) % pmod
            if v < 0:
                v += pmod
            if v:
                wk[m] = gj.keys[b] + sj
                wc[m] = v
                m += 1
            b += 1
        try:
            if m == 0:
                return [], []
            return self._reduce_core(wk, wc, m)
        finally:
            free(wk)
            free(wc)
