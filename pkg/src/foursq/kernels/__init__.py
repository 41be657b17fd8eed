"""Kernel selection: the compiled extension when importable, else pure Python.

Every public function dispatches per call: arguments inside the compiled
64-bit working range go to the extension, anything larger takes the exact
pure path. `BACKEND` reports what was selected at import time.
"""

from foursq.kernels import pure

try:
    from foursq.kernels import _fast

    BACKEND = "compiled"
except ImportError:  # extension not built; pure fallback
    _fast = None
    BACKEND = "pure"

KIND_SQUARE = pure.KIND_SQUARE
KIND_POW4 = pure.KIND_POW4

# compiled kernels square 64-bit intermediates; stay well clear of 2**63
U64_SAFE = 1 << 60


def backend_module(name=None):
    """Resolve a kernel module: None = active, else 'pure' / 'compiled'."""
    if name is None:
        return _fast if _fast is not None else pure
    if name == "pure":
        return pure
    if name == "compiled":
        if _fast is None:
            raise RuntimeError("compiled kernels are not available")
        return _fast
    raise ValueError(f"unknown backend {name!r}")


def build_two_square_bitmap(limit):
    if _fast is not None and limit <= U64_SAFE:
        return _fast.build_two_square_bitmap(limit)
    return pure.build_two_square_bitmap(limit)


def two_square_split(v):
    if _fast is not None and 0 <= v <= U64_SAFE:
        return _fast.two_square_split(v)
    return pure.two_square_split(v)


def diag_first_rep(b, c, N, z_start=0, y_start=0):
    if _fast is not None and 0 <= N <= U64_SAFE:
        return _fast.diag_first_rep(b, c, N, z_start, y_start)
    return pure.diag_first_rep(b, c, N, z_start, y_start)


def value_bitmap(a, b, c, limit):
    if _fast is not None and limit <= U64_SAFE:
        return _fast.value_bitmap(a, b, c, limit)
    return pure.value_bitmap(a, b, c, limit)


def sweep_chunk(lo, hi, kind, natural, bm, limit):
    if _fast is not None and hi <= U64_SAFE:
        return _fast.sweep_chunk(lo, hi, kind, natural, bm, limit)
    return pure.sweep_chunk(lo, hi, kind, natural, bm, limit)
