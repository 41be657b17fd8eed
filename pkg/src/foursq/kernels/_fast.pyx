# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of foursq.kernels.pure.

Same functions, same candidate orders, same results; only faster. The pure
module is the reference; cross-backend equality is enforced by tests.
Inputs must fit the 64-bit working range (callers dispatch via
foursq.kernels which enforces the cap).
"""

from libc.math cimport sqrt as c_sqrt

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline u64 _isqrt(u64 v) noexcept:
    cdef u64 r
    if v == 0:
        return 0
    r = <u64>c_sqrt(<double>v)
    while r > 0 and r * r > v:
        r -= 1
    while (r + 1) * (r + 1) <= v:
        r += 1
    return r


def build_two_square_bitmap(u64 limit):
    out = bytearray((limit >> 3) + 1)
    cdef unsigned char[::1] bm = out
    cdef u64 z = 0, w, zz, v
    while 2 * z * z <= limit:
        zz = z * z
        w = z
        while zz + w * w <= limit:
            v = zz + w * w
            bm[v >> 3] |= <unsigned char>(1 << (v & 7))
            w += 1
        z += 1
    return out


def two_square_split(u64 v):
    cdef u64 z = 0, w, w2
    while 2 * z * z <= v:
        w2 = v - z * z
        w = _isqrt(w2)
        if w * w == w2:
            return (int(z), int(w))
        z += 1
    return None


def diag_first_rep(u64 b, u64 c, u64 N, u64 z_start=0, u64 y_start=0):
    cdef u64 z = z_start, y0 = y_start, y, x, x2, rem
    while c * z * z <= N:
        rem = N - c * z * z
        y = y0
        y0 = 0
        while b * y * y <= rem:
            x2 = rem - b * y * y
            x = _isqrt(x2)
            if x * x == x2:
                return (int(x), int(y), int(z))
            y += 1
        z += 1
    return None


def value_bitmap(u64 a, u64 b, u64 c, u64 limit):
    out = bytearray(limit + 1)
    cdef unsigned char[::1] bm = out
    cdef u64 x = 0, y, z, vx, vxy
    while a * x * x <= limit:
        vx = a * x * x
        y = 0
        while vx + b * y * y <= limit:
            vxy = vx + b * y * y
            z = 0
            while vxy + c * z * z <= limit:
                bm[vxy + c * z * z] = 1
                z += 1
            y += 1
        x += 1
    return out


KIND_SQUARE = 0
KIND_POW4 = 1


cdef inline int _bit(const unsigned char[::1] bm, u64 v) noexcept:
    return (bm[v >> 3] >> (v & 7)) & 1


cdef inline tuple _split_row(u64 n, i64 x, i64 y, u64 v, i64 s):
    cdef u64 z = 0, w = 0, w2
    while 2 * z * z <= v:
        w2 = v - z * z
        w = _isqrt(w2)
        if w * w == w2:
            break
        z += 1
    return (int(n), int(x), int(y), int(z), int(w), int(s))


def sweep_chunk(u64 lo, u64 hi, int kind, bint natural, const unsigned char[::1] bm, u64 limit):
    cdef u64 n, r
    cdef i64 s, x, y, t, tmax, ylim, sn, vv
    cdef int sign
    cdef bint found
    rows = []
    for n in range(lo, hi + 1):
        r = _isqrt(n)
        found = False
        if kind == KIND_SQUARE:
            s = 0
            sn = 1  # next root
        else:
            s = 1
            sn = 0
        while s <= <i64>(4 * r) and not found:
            if natural:
                ylim = s // 3
                if ylim > <i64>r:
                    ylim = <i64>r
                for y in range(0, ylim + 1):
                    x = s - 3 * y
                    if x > <i64>r:
                        continue
                    vv = <i64>n - x * x - y * y
                    if vv < 0:
                        continue
                    if _bit(bm, <u64>vv):
                        rows.append(_split_row(n, x, y, <u64>vv, s))
                        found = True
                        break
            else:
                tmax = (s + <i64>r) // 3
                for t in range(tmax + 1):
                    for sign in range(2):
                        if t == 0 and sign == 1:
                            continue
                        y = t if sign == 0 else -t
                        x = s - 3 * y
                        if x > <i64>r or x < -<i64>r:
                            continue
                        vv = <i64>n - x * x - y * y
                        if vv < 0:
                            continue
                        if _bit(bm, <u64>vv):
                            rows.append(_split_row(n, x, y, <u64>vv, s))
                            found = True
                            break
                    if found:
                        break
            if kind == KIND_SQUARE:
                s = sn * sn
                sn += 1
            else:
                s *= 4
        if not found:
            rows.append((int(n), 0, 0, 0, 0, -1))
    return rows
