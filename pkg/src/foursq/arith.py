"""Exact integer kernels shared by every module.

All functions are pure and exact; no floating point is used anywhere so the
results stay correct near perfect-power boundaries. Python integers are
unbounded, so there is no overflow to manage here; only the compiled search
kernels (see foursq.kernels) impose a 64-bit working range.
"""

import math

isqrt = math.isqrt


def fourth_root_floor(n: int) -> int:
    """Largest r with r**4 <= n."""
    if n < 0:
        raise ValueError("fourth root of negative value")
    return math.isqrt(math.isqrt(n))


def fourth_root_ceil(n: int) -> int:
    """Smallest r with r**4 >= n."""
    r = fourth_root_floor(n)
    return r if r**4 == n else r + 1


def is_square(n: int):
    """Return the non-negative root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_power_of_4(n: int):
    """Return k when n == 4**k (k >= 0), else None."""
    if n < 1 or n & (n - 1):
        return None
    bl = n.bit_length()
    return (bl - 1) // 2 if bl % 2 == 1 else None


def ord2(n: int) -> int:
    """2-adic valuation of n; undefined (error) for n == 0."""
    if n <= 0:
        raise ValueError("ord2 needs n >= 1")
    return (n & -n).bit_length() - 1
