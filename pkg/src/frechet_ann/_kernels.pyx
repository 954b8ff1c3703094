# Compiled counterparts of the functions in _pykernels; see that module for
# the interval conventions. Semantics must stay identical.

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, INFINITY
from libc.stdlib cimport malloc, free, labs
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

cnp.import_array()

NAME = "compiled"


cdef inline bint _free(double a, double b, double y, double d,
                       double* lo, double* hi) noexcept nogil:
    cdef double l, h
    if b > a:
        l = a if a > y - d else y - d
        h = b if b < y + d else y + d
        if l <= h:
            lo[0] = l
            hi[0] = h
            return True
    elif b < a:
        l = b if b > y - d else y - d
        h = a if a < y + d else y + d
        if l <= h:
            lo[0] = -h
            hi[0] = -l
            return True
    elif fabs(y - a) <= d:
        lo[0] = 0.0
        hi[0] = 1.0
        return True
    lo[0] = INFINITY
    hi[0] = -INFINITY
    return False


cdef bint _row_init(const double* p, Py_ssize_t n, double y, double d,
                    double* lo, double* hi) noexcept nogil:
    cdef Py_ssize_t i
    cdef bint chain = fabs(p[0] - y) <= d
    cdef bint wall = chain
    for i in range(n - 1):
        if chain:
            _free(p[i], p[i + 1], y, d, &lo[i], &hi[i])
            chain = fabs(p[i + 1] - y) <= d
        else:
            lo[i] = INFINITY
            hi[i] = -INFINITY
    return wall


cdef bint _row_step(const double* p, Py_ssize_t n,
                    const double* blo, const double* bhi, bint wall,
                    double a, double b, double d,
                    double* nlo, double* nhi) noexcept nogil:
    """Returns the new wall flag; writes the new row into nlo/nhi."""
    cdef double llo, lhi, rlo, rhi, tlo, thi
    cdef bint left_ok, bottom_ok
    cdef Py_ssize_t i
    if wall:
        left_ok = _free(a, b, p[0], d, &llo, &lhi)
    else:
        left_ok = False
        llo = INFINITY
        lhi = -INFINITY
    for i in range(n - 1):
        bottom_ok = blo[i] <= bhi[i]
        if left_ok or bottom_ok:
            _free(p[i], p[i + 1], b, d, &tlo, &thi)
            if not left_ok and tlo < blo[i]:
                tlo = blo[i]
                if tlo > thi:
                    tlo = INFINITY
                    thi = -INFINITY
            nlo[i] = tlo
            nhi[i] = thi
            _free(a, b, p[i + 1], d, &rlo, &rhi)
            if not bottom_ok and rlo < llo:
                rlo = llo
                if rlo > rhi:
                    rlo = INFINITY
                    rhi = -INFINITY
            llo = rlo
            lhi = rhi
            left_ok = llo <= lhi
        else:
            nlo[i] = INFINITY
            nhi[i] = -INFINITY
            left_ok = False
            llo = INFINITY
            lhi = -INFINITY
    return wall and fabs(p[0] - b) <= d


cdef inline bint _row_alive(const double* lo, const double* hi, Py_ssize_t m,
                            bint wall) noexcept nogil:
    cdef Py_ssize_t i
    if wall:
        return True
    for i in range(m):
        if lo[i] <= hi[i]:
            return True
    return False


cdef bint _decide(const double* p, Py_ssize_t n, const double* q, Py_ssize_t m,
                  double d, double* buf) noexcept nogil:
    # p and q already lifted to length >= 2; buf holds 4*(n-1) doubles
    cdef double* lo = buf
    cdef double* hi = buf + (n - 1)
    cdef double* lo2 = buf + 2 * (n - 1)
    cdef double* hi2 = buf + 3 * (n - 1)
    cdef double* t
    cdef bint wall
    cdef Py_ssize_t j
    if fabs(p[0] - q[0]) > d or fabs(p[n - 1] - q[m - 1]) > d:
        return False
    wall = _row_init(p, n, q[0], d, lo, hi)
    for j in range(m - 1):
        if not _row_alive(lo, hi, n - 1, wall):
            return False
        wall = _row_step(p, n, lo, hi, wall, q[j], q[j + 1], d, lo2, hi2)
        t = lo; lo = lo2; lo2 = t
        t = hi; hi = hi2; hi2 = t
    return lo[n - 2] <= hi[n - 2]


cdef double* _lifted(const double[::1] x, Py_ssize_t* size):
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t k = n if n >= 2 else 2
    cdef double* out = <double*> malloc(k * sizeof(double))
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = x[i]
    if n == 1:
        out[1] = x[0]
    size[0] = k
    return out


def decide_1d(pi, tau, double delta):
    cdef const double[::1] pv = np.ascontiguousarray(pi, dtype=np.float64)
    cdef const double[::1] qv = np.ascontiguousarray(tau, dtype=np.float64)
    cdef Py_ssize_t n, m
    cdef double* p = _lifted(pv, &n)
    cdef double* q = _lifted(qv, &m)
    cdef double* buf = <double*> malloc(4 * (n - 1) * sizeof(double))
    cdef bint res
    try:
        with nogil:
            res = _decide(p, n, q, m, delta, buf)
    finally:
        free(p)
        free(q)
        free(buf)
    return res


def discrete_frechet_nd(P, Q):
    cdef const double[:, ::1] a = np.ascontiguousarray(P, dtype=np.float64)
    cdef const double[:, ::1] b = np.ascontiguousarray(Q, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], dim = a.shape[1]
    cdef double* prev = <double*> malloc(m * sizeof(double))
    cdef double* cur = <double*> malloc(m * sizeof(double))
    cdef double* t
    cdef double acc, dist, diff, best
    cdef Py_ssize_t i, j, c
    try:
        with nogil:
            acc = 0.0
            for j in range(m):
                dist = 0.0
                for c in range(dim):
                    diff = a[0, c] - b[j, c]
                    dist += diff * diff
                dist = sqrt(dist)
                if dist > acc:
                    acc = dist
                prev[j] = acc
            for i in range(1, n):
                for j in range(m):
                    dist = 0.0
                    for c in range(dim):
                        diff = a[i, c] - b[j, c]
                        dist += diff * diff
                    dist = sqrt(dist)
                    best = prev[j]
                    if j > 0:
                        if prev[j - 1] < best:
                            best = prev[j - 1]
                        if cur[j - 1] < best:
                            best = cur[j - 1]
                    cur[j] = best if best > dist else dist
                t = prev; prev = cur; cur = t
            acc = prev[m - 1]
    finally:
        free(prev)
        free(cur)
    return acc


cdef class _Enumerator:
    cdef double* p
    cdef Py_ssize_t n
    cdef double d, w
    cdef int max_len
    cdef long min_inner, min_outer
    cdef double* rows      # (max_len) rows of 2*(n-1) doubles
    cdef bint* walls
    cdef long* prefix
    cdef list succ_cells   # per state: int64 array of cells
    cdef list succ_next    # per state: int64 array of next states
    cdef list out

    def __cinit__(self):
        self.p = NULL
        self.rows = NULL
        self.walls = NULL
        self.prefix = NULL

    def __dealloc__(self):
        free(self.p)
        free(self.rows)
        free(self.walls)
        free(self.prefix)

    cdef object _key(self, int t):
        cdef tuple key = PyTuple_New(t)
        cdef int i
        cdef object v
        for i in range(t):
            v = self.prefix[i]
            Py_INCREF(v)
            PyTuple_SET_ITEM(key, i, v)
        return key

    cdef void _visit(self, int t, long state) except *:
        # t = prefix length; row for the prefix is rows[t-1]
        cdef Py_ssize_t m = self.n - 1
        cdef double* lo = self.rows + (t - 1) * 2 * m
        cdef double* hi = lo + m
        cdef double* nlo
        cdef double* nhi
        cdef double y = self.prefix[t - 1] * self.w
        cdef long last = self.prefix[t - 1]
        cdef bint rising, nwall
        cdef long c
        cdef Py_ssize_t idx, count
        cdef cnp.int64_t[::1] cells
        cdef cnp.int64_t[::1] nexts
        cdef bint emit = lo[m - 1] <= hi[m - 1] and fabs(self.p[self.n - 1] - y) <= self.d
        if emit and t >= 3:
            emit = labs(self.prefix[1] - self.prefix[0]) >= self.min_outer and \
                labs(self.prefix[t - 1] - self.prefix[t - 2]) >= self.min_outer
        if emit:
            self.out.append(self._key(t))
        if t >= self.max_len:
            return
        if t >= 2 and labs(self.prefix[1] - self.prefix[0]) < self.min_outer:
            return
        if t >= 3 and labs(self.prefix[t - 1] - self.prefix[t - 2]) < self.min_inner:
            return
        rising = t >= 2 and self.prefix[t - 1] > self.prefix[t - 2]
        cells = self.succ_cells[state]
        nexts = self.succ_next[state]
        count = cells.shape[0]
        nlo = self.rows + t * 2 * m
        nhi = nlo + m
        for idx in range(count):
            c = cells[idx]
            if c == last:
                continue
            if t >= 2 and (c > last) == rising:
                continue
            nwall = _row_step(self.p, self.n, lo, hi, self.walls[t - 1],
                              y, c * self.w, self.d, nlo, nhi)
            if not _row_alive(nlo, nhi, m, nwall):
                continue
            self.walls[t] = nwall
            self.prefix[t] = c
            self._visit(t + 1, nexts[idx])

    def run(self, pi, succ, double width, double radius, int max_len,
            long min_inner, long min_outer):
        cdef const double[::1] pv = np.ascontiguousarray(pi, dtype=np.float64)
        cdef Py_ssize_t m, idx
        cdef double* lo
        cdef double* hi
        cdef long c
        cdef cnp.int64_t[::1] cells
        cdef cnp.int64_t[::1] nexts
        self.p = _lifted(pv, &self.n)
        self.d = radius
        self.w = width
        self.max_len = max_len
        self.min_inner = min_inner
        self.min_outer = min_outer
        m = self.n - 1
        self.rows = <double*> malloc((max_len + 1) * 2 * m * sizeof(double))
        self.walls = <bint*> malloc((max_len + 1) * sizeof(bint))
        self.prefix = <long*> malloc((max_len + 1) * sizeof(long))
        self.succ_cells = [np.ascontiguousarray([c for c, _ in s], dtype=np.int64) for s in succ]
        self.succ_next = [np.ascontiguousarray([j for _, j in s], dtype=np.int64) for s in succ]
        self.out = []
        if len(succ) == 0 or max_len < 1:
            return self.out
        cells = self.succ_cells[0]
        nexts = self.succ_next[0]
        lo = self.rows
        hi = lo + m
        for idx in range(cells.shape[0]):
            c = cells[idx]
            if fabs(self.p[0] - c * width) > radius:
                continue
            self.walls[0] = _row_init(self.p, self.n, c * width, radius, lo, hi)
            self.prefix[0] = c
            self._visit(1, nexts[idx])
        return self.out


def enumerate_keys(pi, lo_cells, hi_cells, width, radius, max_len,
                   min_inner=0, min_outer=0):
    from ._pykernels import _successors
    succ = _successors(lo_cells, hi_cells)
    return _Enumerator().run(pi, succ, float(width), float(radius), int(max_len),
                             int(min_inner), int(min_outer))
