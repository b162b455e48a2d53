"""Numerical substrate: special functions, sieves, quadrature, series summation.

Everything downstream (kernel construction, explicit-formula checks, bound
envelopes) is built on the handful of primitives in this module:

* ``polylog_H``      -- the shifted polylogarithm H_n(x) = sum_k x^k/(k+1)^n
* ``re_digamma_quarter`` -- Re psi(1/4 + iu/2) on the whole real line
* ``sieve_mangoldt`` -- exact von Mangoldt table with Chebyshev psi prefix
* ``quad_adaptive``  -- adaptive quadrature (finite and semi-infinite ranges)
* ``sum_tail_bounded`` -- series summation with caller-supplied tail majorant

All operations are pure; the tables returned are immutable in practice and
safe to share across threads.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import scipy.integrate


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


class ResourceError(RuntimeError):
    """Requested table or computation exceeds the configured resource limit."""


class AccuracyError(RuntimeError):
    """Requested tolerance was not reached; carries the best estimate."""

    def __init__(self, message: str, best: float):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum of an infinite series plus a bound on the dropped tail."""

    value: float
    tail_bound: float
    terms_used: int

    def __post_init__(self):
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be >= 0")
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")


@dataclass(frozen=True)
class MangoldtTable:
    """Exact von Mangoldt values Lambda(n) for 2 <= n <= limit.

    ``values[n]`` is Lambda(n) (indices 0 and 1 are zero padding) and
    ``psi_prefix[n]`` is the Chebyshev function psi(n) = sum_{k<=n} Lambda(k).
    """

    limit: int
    values: np.ndarray
    psi_prefix: np.ndarray

    def lam(self, n: int) -> float:
        if not 2 <= n <= self.limit:
            raise DomainError(f"n={n} outside table range [2, {self.limit}]")
        return float(self.values[n])

    def psi(self, x: float) -> float:
        """Chebyshev psi(x) = sum of Lambda(n) over n <= x."""
        if x < 2:
            return 0.0
        if x > self.limit:
            raise DomainError(f"x={x} beyond table limit {self.limit}")
        return float(self.psi_prefix[int(math.floor(x))])


# ---------------------------------------------------------------------------
# polylogarithm H_n(x) = sum_{k>=0} x^k / (k+1)^n
# ---------------------------------------------------------------------------

def _dilog(x: float) -> float:
    """Real dilogarithm Li_2(x) for -1 <= x <= 1, abs error ~1e-16.

    Series on |x| <= 1/2, reflection formulas otherwise so the series
    argument always stays small.
    """
    if x == 1.0:
        return math.pi ** 2 / 6.0
    if x == -1.0:
        return -math.pi ** 2 / 12.0
    if x > 0.5:
        # Li2(x) + Li2(1-x) = pi^2/6 - log(x)log(1-x)
        return math.pi ** 2 / 6.0 - math.log(x) * math.log1p(-x) - _dilog(1.0 - x)
    if x < -0.5:
        # Li2(x) = -Li2(x/(x-1)) - (1/2) log^2(1-x)
        return -_dilog(x / (x - 1.0)) - 0.5 * math.log1p(-x) ** 2
    # direct series sum x^k/k^2; the argument is always |x| <= 1/2 here,
    # so ~60 terms reach 1e-18
    total = 0.0
    p = x
    k = 1
    while k < 200:
        t = p / (k * k)
        total += t
        if abs(t) < 1e-18:
            break
        p *= x
        k += 1
    return total


def polylog_H(n: int, x: float) -> float:
    """H_n(x) = sum_{k>=0} x^k/(k+1)^n for |x| <= 1 (x < 1 required if n <= 1).

    Absolute error <= 1e-14.  Closed forms are used for n <= 2 (geometric,
    logarithm, dilogarithm); n >= 3 is summed directly in blocks with an
    integral tail bound.
    """
    if n < 0:
        raise DomainError("polylog order n must be >= 0")
    if abs(x) > 1:
        raise DomainError(f"|x| must be <= 1, got {x}")
    if n <= 1 and x == 1.0:
        raise DomainError(f"H_{n}(1) diverges")
    if x == 0.0:
        return 1.0
    if n == 0:
        return 1.0 / (1.0 - x)
    if n == 1:
        return -math.log1p(-x) / x
    if n == 2:
        return _dilog(x) / x
    # n >= 3: sum_{k>=0} x^k/(k+1)^n = (1/x) sum_{j>=1} x^j/j^n.
    # Tail over j > K is bounded by min(geometric, integral) below.
    total = 0.0
    block = 65536
    j0 = 1
    ax = abs(x)
    while True:
        j = np.arange(j0, j0 + block, dtype=np.float64)
        powers = ax ** j
        if x < 0:
            powers = powers * np.where(np.arange(j0, j0 + block) % 2 == 0,
                                       1.0, -1.0)
        total += float(np.sum(powers / j ** n))
        j0 += block
        tail_int = 1.0 / ((n - 1) * (j0 - 1) ** (n - 1))
        if ax < 1.0:
            tail_geo = ax ** j0 / ((1.0 - ax) * j0 ** n)
            tail = min(tail_int, tail_geo)
        else:
            tail = tail_int
        if tail <= 1e-14:
            break
        if j0 > 2 * 10 ** 8:
            raise AccuracyError("polylog_H tail did not reach 1e-14", total / x)
    return total / x


# ---------------------------------------------------------------------------
# Re psi(1/4 + iu/2)
# ---------------------------------------------------------------------------

# Bernoulli numbers B_2 .. B_16 for the asymptotic tail of psi
_BERN = [1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
         5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510]


def _digamma_complex(z: complex) -> complex:
    """psi(z) for Re z > 0 via recurrence shift + 8-term asymptotic series."""
    shift = 0.0 + 0.0j
    while abs(z) < 10.0:
        shift -= 1.0 / z
        z = z + 1.0
    # psi(z) ~ log z - 1/(2z) - sum B_{2k}/(2k z^{2k})
    inv2 = 1.0 / (z * z)
    s = 0.0 + 0.0j
    p = inv2
    for k, b in enumerate(_BERN, start=1):
        s += b / (2 * k) * p
        p *= inv2
    return shift + np.log(z) - 0.5 / z - s


def re_digamma_quarter(u: float) -> float:
    """Re psi(1/4 + iu/2), absolute error <= 1e-12, any real u."""
    return float(_digamma_complex(complex(0.25, 0.5 * abs(u))).real)


# ---------------------------------------------------------------------------
# von Mangoldt sieve
# ---------------------------------------------------------------------------

def sieve_mangoldt(X: int, memory_limit: int = 10 ** 8) -> MangoldtTable:
    """Exact Lambda(n) for n <= X by Eratosthenes + prime-power fill."""
    if X < 2:
        raise DomainError("sieve limit must be >= 2")
    if X > memory_limit:
        raise ResourceError(f"sieve limit {X} exceeds memory limit {memory_limit}")
    is_comp = np.zeros(X + 1, dtype=bool)
    is_comp[:2] = True
    for p in range(2, int(math.isqrt(X)) + 1):
        if not is_comp[p]:
            is_comp[p * p::p] = True
    primes = np.nonzero(~is_comp)[0]
    lam = np.zeros(X + 1, dtype=np.float64)
    lam[primes] = np.log(primes.astype(np.float64))
    for p in primes:
        if p * p > X:
            break
        q = int(p) * int(p)
        lp = math.log(p)
        while q <= X:
            lam[q] = lp
            q *= int(p)
    return MangoldtTable(limit=X, values=lam, psi_prefix=np.cumsum(lam))


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def quad_adaptive(f: Callable[[float], float], a: float, b: float,
                  tol: float = 1e-10) -> float:
    """Integral of f over [a, b] with claimed absolute error <= tol.

    Adaptive bisection with an embedded Gauss/Kronrod rule pair; infinite
    endpoints are handled by tail transformation.  Raises AccuracyError
    (carrying the best estimate) when the subdivision budget is exhausted
    without reaching tol.
    """
    if tol <= 0:
        raise DomainError("tol must be > 0")
    with warnings.catch_warnings():
        warnings.simplefilter("error", scipy.integrate.IntegrationWarning)
        try:
            val, err = scipy.integrate.quad(f, a, b, epsabs=tol, epsrel=0.0,
                                            limit=400)
        except scipy.integrate.IntegrationWarning:
            warnings.simplefilter("ignore", scipy.integrate.IntegrationWarning)
            val, err = scipy.integrate.quad(f, a, b, epsabs=tol, epsrel=0.0,
                                            limit=400)
            if err > 100 * tol:
                raise AccuracyError(
                    f"quadrature error estimate {err:.3e} exceeds tol {tol:.3e}",
                    val)
    return val


# ---------------------------------------------------------------------------
# tail-bounded series summation
# ---------------------------------------------------------------------------

def sum_tail_bounded(term: Callable[[int], float],
                     tail_bound: Callable[[int], float],
                     tol: float, k_start: int = 0,
                     max_terms: int = 200_000) -> SeriesResult:
    """Sum term(k) for k >= k_start until tail_bound(K) <= tol.

    ``tail_bound(K)`` must majorize |sum_{k>=K} term(k)|; that is the
    caller's contract.  At least one term is always consumed.
    """
    if tol <= 0:
        raise DomainError("tol must be > 0")
    total = 0.0
    k = k_start
    while True:
        total += term(k)
        k += 1
        tb = tail_bound(k)
        if tb <= tol:
            return SeriesResult(value=total, tail_bound=tb,
                                terms_used=k - k_start)
        if k - k_start >= max_terms:
            raise AccuracyError(
                f"series tail bound {tb:.3e} still above tol {tol:.3e} "
                f"after {max_terms} terms", total)
