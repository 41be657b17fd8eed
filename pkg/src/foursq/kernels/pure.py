"""Pure-Python kernels.

These mirror the compiled extension in foursq.kernels._fast exactly: same
candidate orders, same first-hit semantics, same return shapes. They are the
fallback when the extension is unavailable and the reference the extension is
tested against. numpy is used where a large inner loop vectorises cleanly;
everything stays exact (values above 2**52 take the big-int path).
"""

from math import isqrt

import numpy as np

_FLOAT_EXACT = 1 << 52


def build_two_square_bitmap(limit):
    """Bit i of the result is set iff i = z**2 + w**2 for integers z, w."""
    out = bytearray((limit >> 3) + 1)
    z = 0
    while 2 * z * z <= limit:
        zz = z * z
        for w in range(z, isqrt(limit - zz) + 1):
            v = zz + w * w
            out[v >> 3] |= 1 << (v & 7)
        z += 1
    return out


def two_square_split(v):
    """Smallest-z split v = z**2 + w**2 with z <= w, or None."""
    z = 0
    while 2 * z * z <= v:
        w2 = v - z * z
        w = isqrt(w2)
        if w * w == w2:
            return (z, w)
        z += 1
    return None


def diag_first_rep(b, c, N, z_start=0, y_start=0):
    """First (x, y, z) with x**2 + b*y**2 + c*z**2 == N, x,y,z >= 0.

    Scan order is z ascending, then y ascending, resuming at the lexicographic
    position (z_start, y_start). Returns None when the remaining space is
    exhausted.
    """
    if N < 0:
        return None
    if N <= _FLOAT_EXACT:
        return _diag_first_rep_np(b, c, N, z_start, y_start)
    z = z_start
    y0 = y_start
    while c * z * z <= N:
        rem = N - c * z * z
        y = y0
        y0 = 0
        while b * y * y <= rem:
            x2 = rem - b * y * y
            x = isqrt(x2)
            if x * x == x2:
                return (x, y, z)
            y += 1
        z += 1
    return None


def _diag_first_rep_np(b, c, N, z_start, y_start):
    z = z_start
    y0 = y_start
    while c * z * z <= N:
        rem = N - c * z * z
        ymax = isqrt(rem // b)
        if y0 <= ymax:
            ys = np.arange(y0, ymax + 1, dtype=np.int64)
            x2 = rem - b * ys * ys
            xs = np.rint(np.sqrt(x2.astype(np.float64))).astype(np.int64)
            hits = np.nonzero(xs * xs == x2)[0]
            if hits.size:
                i = int(hits[0])
                return (int(xs[i]), int(ys[i]), z)
        y0 = 0
        z += 1
    return None


def value_bitmap(a, b, c, limit):
    """bytearray t with t[v] == 1 iff v = a*x**2 + b*y**2 + c*z**2 <= limit."""
    out = bytearray(limit + 1)
    x = 0
    while a * x * x <= limit:
        vx = a * x * x
        y = 0
        while vx + b * y * y <= limit:
            vxy = vx + b * y * y
            for z in range(isqrt((limit - vxy) // c) + 1):
                out[vxy + c * z * z] = 1
            y += 1
        x += 1
    return out


KIND_SQUARE = 0
KIND_POW4 = 1


def _constraint_values(kind, bound):
    """Feasible x+3y targets in ascending order: squares (with 0) or 4**k."""
    vals = []
    if kind == KIND_SQUARE:
        m = 0
        while m * m <= bound:
            vals.append(m * m)
            m += 1
    else:
        s = 1
        while s <= bound:
            vals.append(s)
            s *= 4
    return vals


def _bit(bm, v):
    return (bm[v >> 3] >> (v & 7)) & 1


def sweep_chunk(lo, hi, kind, natural, bm, limit):
    """Canonical certificate search for every n in [lo, hi].

    Returns (n, x, y, z, w, s) rows in ascending n; s == -1 marks a failure.
    bm is a two-square bitmap covering at least hi. The candidate order is
    the library-wide canonical one: constraint value s ascending, then y
    (ascending for natural searches, 0, 1, -1, 2, -2, ... for signed), with
    x = s - 3*y forced and (z, w) the smallest-z split of the remainder.
    """
    rows = []
    for n in range(lo, hi + 1):
        r = isqrt(n)
        hit = None
        for s in _constraint_values(kind, 4 * r):
            if natural:
                for y in range(0, min(s // 3, r) + 1):
                    x = s - 3 * y
                    if x > r:
                        continue
                    v = n - x * x - y * y
                    if v < 0:
                        continue
                    if _bit(bm, v):
                        z, w = two_square_split(v)
                        hit = (n, x, y, z, w, s)
                        break
            else:
                tmax = (s + r) // 3
                for t in range(tmax + 1):
                    for y in (t,) if t == 0 else (t, -t):
                        x = s - 3 * y
                        if x > r or x < -r:
                            continue
                        v = n - x * x - y * y
                        if v < 0:
                            continue
                        if _bit(bm, v):
                            z, w = two_square_split(v)
                            hit = (n, x, y, z, w, s)
                            break
                    if hit:
                        break
            if hit:
                break
        rows.append(hit if hit else (n, 0, 0, 0, 0, -1))
    return rows
