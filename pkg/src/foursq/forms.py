"""Integral positive definite ternary quadratic forms and representation solvers.

Houses the three forms the decomposition constructions run on:

* ``FORM_1_10_10``  x^2 + 10y^2 + 10z^2   (the main diagonal form)
* ``FORM_4_5_6_XZ4`` 4x^2 + 5y^2 + 6z^2 + 4zx  (its genus partner)
* ``FORM_1_5_5``    x^2 + 5y^2 + 5z^2    (whose represented set is closed form)

plus ``two_squares`` for splitting remainders z^2 + w^2. Representation
solving is bounded exact enumeration in a fixed canonical order (increasing
|z|, then |y|, then the resolved x; for each magnitude both signs with the
non-negative one first) so results are reproducible everywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from foursq import kernels
from foursq.errors import CapExceeded

REPRESENT_ALL_CAP = 10**8
_TWO_SQUARES_ENUM_LIMIT = 10**6
_TRIAL_DIVISION_LIMIT = 10**6  # complete factorizations up to 10**12


@dataclass(frozen=True)
class TernaryForm:
    """aX^2 + bY^2 + cZ^2 + rYZ + sZX + tXY, positive definite over Z."""

    a: int
    b: int
    c: int
    r: int = 0
    s: int = 0
    t: int = 0

    def __post_init__(self):
        d1 = 2 * self.a
        d2 = 4 * self.a * self.b - self.t * self.t
        if d1 <= 0 or d2 <= 0 or self.det_doubled() <= 0:
            raise ValueError("form is not positive definite")

    @property
    def gram2(self):
        """Doubled Gram matrix (integer entries, even diagonal)."""
        a, b, c, r, s, t = self.a, self.b, self.c, self.r, self.s, self.t
        return ((2 * a, t, s), (t, 2 * b, r), (s, r, 2 * c))

    def det_doubled(self) -> int:
        (p, q, u), (_, v, w), (_, _, x) = self.gram2
        return p * (v * x - w * w) - q * (q * x - w * u) + u * (q * w - v * u)

    @property
    def det(self) -> Fraction:
        """Determinant of the (half-integral) Gram matrix."""
        return Fraction(self.det_doubled(), 8)

    @property
    def is_diagonal(self) -> bool:
        return self.r == 0 and self.s == 0 and self.t == 0

    def __call__(self, v) -> int:
        x, y, z = v
        return (
            self.a * x * x
            + self.b * y * y
            + self.c * z * z
            + self.r * y * z
            + self.s * z * x
            + self.t * x * y
        )

    def evaluate(self, v) -> int:
        return self(v)


FORM_1_10_10 = TernaryForm(1, 10, 10)
FORM_4_5_6_XZ4 = TernaryForm(4, 5, 6, 0, 4, 0)
FORM_1_5_5 = TernaryForm(1, 5, 5)


@dataclass(frozen=True)
class Rep3:
    """A solution triple of form(x, y, z) == value."""

    x: int
    y: int
    z: int
    form: TernaryForm
    value: int

    def __post_init__(self):
        if self.form((self.x, self.y, self.z)) != self.value:
            raise ValueError("triple does not represent the claimed value")

    @property
    def triple(self):
        return (self.x, self.y, self.z)


def _sign_variants(x, y, z):
    # canonical: z sign varies slowest, x fastest; zero coordinates once
    for sz in ((1,) if z == 0 else (1, -1)):
        for sy in ((1,) if y == 0 else (1, -1)):
            for sx in ((1,) if x == 0 else (1, -1)):
                yield (sx * x, sy * y, sz * z)


def _coord_bound(form, N, i):
    """Exact |v_i| bound on the ellipsoid form(v) = N via the inverse form."""
    d = form.gram2
    j, k = [u for u in range(3) if u != i]
    cof = d[j][j] * d[k][k] - d[j][k] * d[k][j]
    # v_i^2 <= N * 2 * cof / det_doubled
    num = 2 * N * cof
    return isqrt(num // form.det_doubled())


def _general_candidates(form, N):
    """All reps of N by an arbitrary positive definite form, canonical order."""
    a, b, c, r, s, t = form.a, form.b, form.c, form.r, form.s, form.t
    zmax = _coord_bound(form, N, 2)
    ymax = _coord_bound(form, N, 1)
    for az in range(zmax + 1):
        for z in ((0,) if az == 0 else (az, -az)):
            for ay in range(ymax + 1):
                for y in ((0,) if ay == 0 else (ay, -ay)):
                    B = t * y + s * z
                    C = b * y * y + c * z * z + r * y * z - N
                    disc = B * B - 4 * a * C
                    if disc < 0:
                        continue
                    rt = isqrt(disc)
                    if rt * rt != disc:
                        continue
                    roots = set()
                    for sign in (1, -1):
                        num = -B + sign * rt
                        if num % (2 * a) == 0:
                            roots.add(num // (2 * a))
                    for x in sorted(roots, key=lambda u: (abs(u), u < 0)):
                        yield (x, y, z)


def represent_first(form, N, accept=None):
    """First representation of N in canonical order passing `accept`.

    Returns a Rep3 or None; None means no representation satisfies `accept`
    (the search space is exhausted exactly).
    """
    if N < 0:
        return None
    if form.is_diagonal and form.a == 1:
        z0 = y0 = 0
        while True:
            hit = kernels.diag_first_rep(form.b, form.c, N, z0, y0)
            if hit is None:
                return None
            x, y, z = hit
            for cand in _sign_variants(x, y, z):
                rep = Rep3(*cand, form=form, value=N)
                if accept is None or accept(rep):
                    return rep
            z0, y0 = z, y + 1
    for cand in _general_candidates(form, N):
        rep = Rep3(*cand, form=form, value=N)
        if accept is None or accept(rep):
            return rep
    return None


def represent_all(form, N, cap=REPRESENT_ALL_CAP):
    """Every representation of N, canonical order; exact and complete."""
    if N > cap:
        raise CapExceeded(f"represent_all bound {cap} exceeded by N={N}")
    if N < 0:
        return []
    out = []
    if form.is_diagonal and form.a == 1:
        z0 = y0 = 0
        while True:
            hit = kernels.diag_first_rep(form.b, form.c, N, z0, y0)
            if hit is None:
                return out
            x, y, z = hit
            out.extend(Rep3(*cand, form=form, value=N) for cand in _sign_variants(x, y, z))
            z0, y0 = z, y + 1
    out.extend(Rep3(*cand, form=form, value=N) for cand in _general_candidates(form, N))
    return out


def h_represents(N: int) -> bool:
    """Membership in the represented set of x^2 + 5y^2 + 5z^2 (closed form).

    N is represented iff N is not congruent to +-2 mod 5 and N is not of the
    shape 4^k (8l + 7).
    """
    if N < 0:
        return False
    if N % 5 in (2, 3):
        return False
    m = N
    while m and m % 4 == 0:
        m //= 4
    return m % 8 != 7


@lru_cache(maxsize=1)
def _small_primes():
    limit = _TRIAL_DIVISION_LIMIT
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray((limit - p * p) // p + 1)
    return [i for i in range(2, limit + 1) if sieve[i]]


def _sqrt_minus_one(p):
    # deterministic scan for a quarter-power giving a root of -1 mod p
    for q in range(2, p):
        t = pow(q, (p - 1) // 4, p)
        if t * t % p == p - 1:
            return t
    raise ArithmeticError(f"no sqrt(-1) mod {p}")  # unreachable for p = 1 mod 4


def _prime_two_squares(p):
    """(u, v) with u^2 + v^2 = p for prime p = 1 mod 4 (Cornacchia descent)."""
    t0 = _sqrt_minus_one(p)
    for t in (t0, p - t0):
        a, b = p, t
        while b * b > p:
            a, b = b, a % b
        w2 = p - b * b
        w = isqrt(w2)
        if w * w == w2:
            return (min(b, w), max(b, w))
    raise ArithmeticError(f"descent failed for {p}")  # unreachable


def _gmul(g, h):
    return (g[0] * h[0] - g[1] * h[1], g[0] * h[1] + g[1] * h[0])


def _two_squares_factored(N):
    n = N
    fac = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    if n > 1:
        if n > _TRIAL_DIVISION_LIMIT**2:
            return "incomplete"  # residual may be composite; caller falls back
        fac[n] = fac.get(n, 0) + 1
    base = 1
    gauss = [(1, 0)]
    for p, e in sorted(fac.items()):
        if p == 2:
            g = (1, 1)
            for _ in range(e):
                gauss = [_gmul(v, g) for v in gauss]
        elif p % 4 == 3:
            if e % 2:
                return None
            base *= p ** (e // 2)
        else:
            pi = _prime_two_squares(p)
            pows = [(1, 0)]
            for _ in range(e):
                pows.append(_gmul(pows[-1], pi))
            conj = [(u, -v) for (u, v) in pows]
            gauss = [
                _gmul(v, _gmul(pows[j], conj[e - j])) for v in gauss for j in range(e + 1)
            ]
    best = None
    for u, v in gauss:
        cand = tuple(sorted((abs(u) * base, abs(v) * base)))
        if best is None or cand < best:
            best = cand
    return best


def two_squares(N: int):
    """Split N = z^2 + w^2 with z <= w, smallest z; None when impossible.

    Enumeration below 10^6; trial-division factorization plus Cornacchia
    descent above (complete through 10^12, enumeration fallback beyond).
    """
    if N < 0:
        return None
    if N < _TWO_SQUARES_ENUM_LIMIT:
        return kernels.two_square_split(N)
    res = _two_squares_factored(N)
    if res == "incomplete":
        return kernels.two_square_split(N)
    return res
