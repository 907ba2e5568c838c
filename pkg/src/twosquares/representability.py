"""Ground-truth oracle for membership in {x^2 + y^2}.

An integer n >= 1 is a sum of two squares (zero summands allowed) exactly
when every prime p = 3 (mod 4) divides n to an even power.  Everything here
decides membership through factoring, independently of the enumeration
sieve, and produces explicit witnesses for human-readable reports.
"""

import math
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "Witness",
    "factorize",
    "is_sum_of_two_squares",
    "find_witness",
]

MAX_N = 2**63 - 1

# Trial division handles everything below _TRIAL_LIMIT**2 on its own;
# larger cofactors are split with deterministic Miller-Rabin plus Brent rho.
_TRIAL_LIMIT = 10_000

# Deterministic Miller-Rabin witness set for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Gaps between consecutive integers coprime to 30, starting from 7.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization; primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


@dataclass(frozen=True)
class Witness:
    """Pair x <= y with x^2 + y^2 equal to the queried integer."""

    x: int
    y: int


def _check_positive(n, op: str) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{op}: n must be an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{op}: n must be >= 1, got {n}")
    if n > MAX_N:
        raise ValueError(f"{op}: n must be <= 2**63 - 1, got {n}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Some nontrivial factor of an odd composite n.

    Deterministic: sweeps the polynomial offset c upward, so repeated calls
    always return the same factor.
    """
    if n % 2 == 0:
        return 2
    r0 = math.isqrt(n)
    if r0 * r0 == n:
        return r0
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 2, 2
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def _split_large(m: int) -> dict[int, int]:
    """Prime/exponent map for m, assuming m has no prime factor <= _TRIAL_LIMIT."""
    counts: dict[int, int] = {}
    stack = [m]
    while stack:
        v = stack.pop()
        if _is_prime(v):
            counts[v] = counts.get(v, 0) + 1
            continue
        f = _brent_rho(v)
        stack.append(f)
        stack.append(v // f)
    return counts


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n; empty factor list for n = 1.

    Trial division by 2, 3, 5 and a mod-30 wheel up to 10^4, then
    deterministic Miller-Rabin and Brent rho for any remaining cofactor, so
    arbitrary 64-bit inputs complete quickly.  Pure function, no caches.
    """
    _check_positive(n, "factorize")
    m = n
    counts: dict[int, int] = {}
    for p in (2, 3, 5):
        if m % p == 0:
            e = 0
            while m % p == 0:
                e += 1
                m //= p
            counts[p] = e
    d, i = 7, 0
    while d <= _TRIAL_LIMIT and d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                e += 1
                m //= d
            counts[d] = e
        d += _WHEEL[i]
        i = (i + 1) & 7
    if m > 1:
        if d * d > m:
            counts[m] = counts.get(m, 0) + 1
        else:
            for p, e in _split_large(m).items():
                counts[p] = counts.get(p, 0) + e
    return Factorization(n, tuple(sorted(counts.items())))


def is_sum_of_two_squares(n: int) -> bool:
    """True iff n is x^2 + y^2 for nonnegative integers x, y.

    Applies the even-exponent criterion for primes p = 3 (mod 4) directly
    during trial division, returning False as soon as an odd-power such
    prime appears.
    """
    _check_positive(n, "is_sum_of_two_squares")
    m = n
    while m % 2 == 0:
        m //= 2
    d = 3
    while d <= _TRIAL_LIMIT and d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                e += 1
                m //= d
            if d & 3 == 3 and e & 1:
                return False
        d += 2
    if m == 1:
        return True
    if d * d > m:
        return m & 3 != 3
    for p, e in _split_large(m).items():
        if p & 3 == 3 and e & 1:
            return False
    return True


def find_witness(n: int) -> Witness | None:
    """Some (x, y) with x^2 + y^2 = n and x <= y, or None.

    Scans x upward from 0, so the returned witness is the one with the
    smallest x.  Intended for reports, not bulk scanning.
    """
    _check_positive(n, "find_witness")
    x = 0
    while 2 * x * x <= n:
        y2 = n - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            return Witness(x, y)
        x += 1
    return None
