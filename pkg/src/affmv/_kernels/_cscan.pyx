# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled level-profile kernels on 64-bit rationals.

Same contract as the pure-Python module.  Any intermediate value that does
not fit in 64 bits raises OverflowError so the caller can fall back.
"""

from fractions import Fraction
from libc.stdlib cimport malloc, realloc, free

from ._pyscan import LevelError

cdef extern from *:
    """
    static int r_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static int r_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static int r_cmp(long long an, long long ad, long long bn, long long bd) {
        __int128 l = (__int128)an * bd, r = (__int128)bn * ad;
        return (l > r) - (l < r);
    }
    """
    int r_mul(long long a, long long b, long long *r) nogil
    int r_add(long long a, long long b, long long *r) nogil
    int r_cmp(long long an, long long ad, long long bn, long long bd) nogil

cdef struct Rat:
    long long n
    long long d

cdef enum:
    ZERO = 0
    STABLE = 1
    UP = 2
    DOWN = 3

cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a

cdef inline Rat _mk(long long n, long long d) nogil:
    cdef Rat r
    cdef long long g = _gcd(n, d)
    if g > 1:
        n = n / g
        d = d / g
    r.n = n
    r.d = d
    return r

cdef inline int _add(Rat x, Rat y, Rat *out) nogil:
    cdef long long g = _gcd(x.d, y.d)
    cdef long long a = x.d / g, b = y.d / g, n1, n2, n, d
    if r_mul(x.n, b, &n1) or r_mul(y.n, a, &n2) or r_add(n1, n2, &n) or r_mul(x.d, b, &d):
        return 1
    out[0] = _mk(n, d)
    return 0

cdef inline int _mul_int(Rat x, long long s, Rat *out) nogil:
    cdef long long n
    if r_mul(x.n, s, &n):
        return 1
    out[0] = _mk(n, x.d)
    return 0

cdef inline int _div_int(Rat x, long long s, Rat *out) nogil:
    cdef long long d, n = x.n
    if s < 0:
        s = -s
        n = -n
    if r_mul(x.d, s, &d):
        return 1
    out[0] = _mk(n, d)
    return 0

cdef inline int _cmp(Rat x, Rat y) nogil:
    return r_cmp(x.n, x.d, y.n, y.d)

cdef inline long long _floor(Rat x) nogil:
    cdef long long q = x.n / x.d
    if x.n % x.d != 0 and x.n < 0:
        q -= 1
    return q

cdef inline long long _ceil(Rat x) nogil:
    cdef long long q = x.n / x.d
    if x.n % x.d != 0 and x.n > 0:
        q += 1
    return q

cdef bint _fast_fraction = False

cdef object _frac(long long n, long long d):
    cdef object f
    if _fast_fraction:
        f = Fraction.__new__(Fraction)
        f._numerator = n
        f._denominator = d
        return f
    return Fraction(n, d)

def _probe():
    global _fast_fraction
    try:
        _fast_fraction = True
        ok = _frac(-3, 4) == Fraction(-3, 4) and hash(_frac(6, 1)) == hash(6)
    except Exception:
        ok = False
    _fast_fraction = ok

_probe()


cdef class _Buf:
    cdef Rat *t
    cdef Rat *f
    cdef Py_ssize_t n, cap

    def __cinit__(self, Py_ssize_t cap):
        self.cap = cap if cap > 4 else 4
        self.n = 0
        self.t = <Rat *> malloc(self.cap * sizeof(Rat))
        self.f = <Rat *> malloc(self.cap * sizeof(Rat))
        if self.t == NULL or self.f == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.t)
        free(self.f)

    cdef int push(self, Rat t, Rat f) except -1:
        cdef Rat *nt
        cdef Rat *nf
        if self.n == self.cap:
            self.cap *= 2
            nt = <Rat *> realloc(self.t, self.cap * sizeof(Rat))
            if nt == NULL:
                raise MemoryError()
            self.t = nt
            nf = <Rat *> realloc(self.f, self.cap * sizeof(Rat))
            if nf == NULL:
                raise MemoryError()
            self.f = nf
        self.t[self.n] = t
        self.f[self.n] = f
        self.n += 1
        return 0


cdef Rat _rat(object x) except *:
    cdef Rat r
    r.n = x.numerator
    r.d = x.denominator
    return r


cdef _Buf _profile(object f0, object slopes, object durations):
    cdef Py_ssize_t m = len(slopes), j
    cdef _Buf buf = _Buf(2 * m + 2)
    cdef Rat t, f, end, d, tmp, lev, dt
    cdef long long s, n
    t.n = 0
    t.d = 1
    f = _rat(Fraction(f0))
    buf.push(t, f)
    for j in range(m):
        s = slopes[j]
        d = _rat(durations[j])
        if _mul_int(d, s, &tmp) or _add(f, tmp, &end):
            raise OverflowError()
        if s > 0:
            n = _floor(f) + 1
            lev.n = n
            lev.d = 1
            while _cmp(lev, end) < 0:
                tmp.n = -f.n
                tmp.d = f.d
                if _add(lev, tmp, &dt) or _div_int(dt, s, &dt) or _add(t, dt, &dt):
                    raise OverflowError()
                buf.push(dt, lev)
                n += 1
                lev.n = n
        elif s < 0:
            n = _ceil(f) - 1
            lev.n = n
            lev.d = 1
            while _cmp(lev, end) > 0:
                tmp.n = -f.n
                tmp.d = f.d
                if _add(lev, tmp, &dt) or _div_int(dt, s, &dt) or _add(t, dt, &dt):
                    raise OverflowError()
                buf.push(dt, lev)
                n -= 1
                lev.n = n
        if _add(t, d, &t):
            raise OverflowError()
        f = end
        buf.push(t, f)
    return buf


def level_profile(f0, slopes, durations):
    cdef _Buf buf = _profile(f0, slopes, durations)
    cdef Py_ssize_t k
    return [(_frac(buf.t[k].n, buf.t[k].d), _frac(buf.f[k].n, buf.f[k].d)) for k in range(buf.n)]


cdef list _scan(_Buf buf):
    cdef Py_ssize_t n = buf.n, i = 0, j, ret, up
    cdef Rat m, m1, nxt
    cdef list out = []
    m = buf.f[0]
    if m.d != 1:
        raise LevelError("starting level %d/%d is not an integer" % (m.n, m.d))
    m1.d = 1
    while i < n - 1:
        nxt = buf.f[i + 1]
        if _cmp(nxt, m) == 0:
            j = i + 1
            while j + 1 < n and _cmp(buf.f[j + 1], m) == 0:
                j += 1
            out.append((i, j, ZERO, m.n))
            i = j
        elif _cmp(nxt, m) > 0:
            ret = -1
            up = -1
            m1.n = m.n + 1
            for j in range(i + 1, n):
                if _cmp(buf.f[j], m) == 0:
                    ret = j
                    break
                if up < 0 and _cmp(buf.f[j], m1) == 0:
                    up = j
            if ret >= 0:
                out.append((i, ret, STABLE, m.n))
                i = ret
            elif up >= 0:
                out.append((i, up, UP, m.n))
                i = up
                m.n += 1
            else:
                raise LevelError("path ends strictly between levels %d and %d" % (m.n, m.n + 1))
        else:
            m1.n = m.n - 1
            j = i + 1
            while j < n and _cmp(buf.f[j], m1) != 0:
                if _cmp(buf.f[j], m) >= 0:
                    raise LevelError("local minimum strictly between levels %d and %d" % (m.n - 1, m.n))
                j += 1
            if j == n:
                raise LevelError("path ends strictly between levels %d and %d" % (m.n - 1, m.n))
            out.append((i, j, DOWN, m.n))
            i = j
            m.n -= 1
    return out


def scan_sections(profile):
    cdef Py_ssize_t k, n = len(profile)
    cdef _Buf buf = _Buf(n)
    for k in range(n):
        buf.push(_rat(profile[k][0]), _rat(profile[k][1]))
    times = [p[0] for p in profile]
    return [(times[a], times[b], kind, lev) for a, b, kind, lev in _scan(buf)]


def analyze(f0, slopes, durations):
    """Profile and sections in one pass; returns (profile, sections)."""
    cdef _Buf buf = _profile(f0, slopes, durations)
    cdef Py_ssize_t k
    times = [_frac(buf.t[k].n, buf.t[k].d) for k in range(buf.n)]
    profile = [(times[k], _frac(buf.f[k].n, buf.f[k].d)) for k in range(buf.n)]
    try:
        secs = [(times[a], times[b], kind, lev) for a, b, kind, lev in _scan(buf)]
    except LevelError as exc:
        secs = exc
    return profile, secs
