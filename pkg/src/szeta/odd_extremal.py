"""Extremal bandlimited pair for the odd-index target family.

The target is the even, nonnegative function

    f(x) = (1/2) * integral over sigma in [alpha, 3/2] of
           (sigma - alpha)^{2m} * log((1 + x^2) / ((sigma - 1/2)^2 + x^2))

together with its companion odd function (minus its derivative)

    fe(x) = integral of (sigma - alpha)^{2m} *
            (x/((sigma-1/2)^2 + x^2) - x/(1 + x^2)).

A majorant g+ and minorant g- of exponential type 2*pi*delta are built by
two-point (value + derivative) interpolation of F(x) = f(x/delta) at the
integers (majorant) or the half-integers (minorant), scaled back by
g(z) = G(delta*z).  Their Fourier transforms are supported on
[-delta, delta] and evaluated from an explicit shifted-frequency series;
the L1 gaps have closed sigma-integral forms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.special

from .numkit import AccuracyError, DomainError, quad_adaptive, sum_tail_bounded

Sign = str


def _check_sign(sign: Sign) -> None:
    if sign not in ("+", "-"):
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class GammaCoeffs:
    """Factorial ratio coefficients gamma_j = (2m)!/(2m+1-j)!, j = 0..2m+1."""

    m: int
    gamma_j: tuple

    @classmethod
    def for_order(cls, m: int) -> "GammaCoeffs":
        f2m = math.factorial(2 * m)
        return cls(m=m, gamma_j=tuple(
            f2m / math.factorial(2 * m + 1 - j) for j in range(2 * m + 2)))


@dataclass(frozen=True)
class OddExtremalPair:
    """Parameters (m, alpha, delta) of the odd-family extremal pair.

    ``series_tol`` is the absolute tolerance targeted by the truncated
    interpolation series and frequency series; ``n_max`` is the minimum
    node budget (it is extended automatically when a tighter budget is
    required for the requested tolerance).
    """

    m: int
    alpha: float
    delta: float
    series_tol: float = 1e-12
    n_max: int = 0
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 0 or self.m != int(self.m):
            raise DomainError(f"m must be an integer >= 0, got {self.m}")
        if not 0.5 <= self.alpha < 1.0:
            raise DomainError(f"alpha must lie in [1/2, 1), got {self.alpha}")
        if self.delta < 1.0:
            raise DomainError(f"delta must be >= 1, got {self.delta}")
        if self.series_tol <= 0:
            raise DomainError("series_tol must be > 0")
        if self.n_max == 0:
            object.__setattr__(self, "n_max",
                               max(int(math.ceil(10 * self.delta)), 50))
        if self.n_max < 10 * self.delta:
            raise DomainError(f"n_max must be >= 10*delta, got {self.n_max}")

    def gamma_coeffs(self) -> GammaCoeffs:
        return GammaCoeffs.for_order(self.m)

    # ------------------------------------------------------------------
    # sigma-integral quadrature grid (dyadic panels toward sigma = 1/2)
    # ------------------------------------------------------------------

    def _sigma_grid(self):
        """Gauss-Legendre nodes/weights for integrals in u = sigma - 1/2.

        The integrands are analytic in u with singularities on the
        imaginary axis (at u = +/- ix), so panels are refined dyadically
        toward u = 0; each panel then sees the singularity at a distance
        comparable to its own length and 16-point Gauss is near exact.
        Weights already include the (sigma - alpha)^{2m} factor.
        """
        key = "sigma_grid"
        if key not in self._cache:
            a0 = self.alpha - 0.5
            # dyadic breakpoints 1 > 1/2 > 1/4 > ... down to a0 (or 1e-18)
            floor = max(a0, 1e-18)
            bps = [1.0]
            c = 0.5
            while c > floor:
                bps.append(c)
                c *= 0.5
            bps.append(floor)
            if a0 < 1e-18:
                bps.append(0.0)
            gx, gw = np.polynomial.legendre.leggauss(16)
            us, ws = [], []
            for hi, lo in zip(bps[:-1], bps[1:]):
                mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
                us.append(mid + half * gx)
                ws.append(half * gw)
            u = np.concatenate(us)
            w = np.concatenate(ws) * (u - a0) ** (2 * self.m)
            self._cache[key] = (u, w)
        return self._cache[key]

    # ------------------------------------------------------------------
    # target functions
    # ------------------------------------------------------------------

    def f_odd_vec(self, x: np.ndarray) -> np.ndarray:
        """Vectorized f(x); absolute error ~1e-15."""
        u, w = self._sigma_grid()
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        u2 = u[:, None] ** 2
        out = np.empty(len(x))
        block = max(1, int(2e6 / len(u)))
        for i0 in range(0, len(x), block):
            x2 = x[None, i0:i0 + block] ** 2
            # log((1+x^2)/(u^2+x^2)) by two cancellation-free routes:
            # log1p for small |arg| (large x), direct log quotient when
            # u^2 + x^2 is small (arg near -1)
            arg = (u2 - 1.0) / (1.0 + x2)
            direct = np.log(u2 + x2) - np.log1p(x2)
            logval = np.where(arg > -0.5,
                              np.log1p(np.maximum(arg, -1.0 + 1e-16)),
                              direct)
            out[i0:i0 + block] = -0.5 * np.einsum("i,ij->j", w, logval)
        return out

    def f_odd(self, x: float) -> float:
        """Even, nonnegative target function (sigma-integral value)."""
        return float(self.f_odd_vec(np.array([float(x)]))[0])

    def f_even_vec(self, x: np.ndarray) -> np.ndarray:
        u, w = self._sigma_grid()
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        u2 = u[:, None] ** 2
        out = np.empty(len(x))
        block = max(1, int(2e6 / len(u)))
        for i0 in range(0, len(x), block):
            xb = x[None, i0:i0 + block]
            x2 = xb ** 2
            integrand = xb * (1.0 - u2) / ((u2 + x2) * (1.0 + x2))
            out[i0:i0 + block] = np.einsum("i,ij->j", w, integrand)
        return out

    def f_even(self, x: float) -> float:
        """Companion odd function; equals -d/dx of f_odd."""
        return float(self.f_even_vec(np.array([float(x)]))[0])

    # ------------------------------------------------------------------
    # interpolation series for g+/g-
    # ------------------------------------------------------------------

    def _nodes(self, sign: Sign, N: int):
        """Node values F(nu)=f(nu/delta) and F'(nu)=-fe(nu/delta)/delta
        for |nu| <= N (integers for '+', half-integers for '-'),
        plus calibrated decay constants for the truncation tail bound."""
        key = ("nodes", sign)
        if key in self._cache and self._cache[key][0] >= N:
            return self._cache[key][1]
        d = self.delta
        if sign == "+":
            nu = np.arange(-N, N + 1, dtype=np.float64)
        else:
            nu = np.arange(-N, N + 1, dtype=np.float64) + 0.5
        F = self.f_odd_vec(nu / d)
        Fp = -self.f_even_vec(nu / d) / d
        if sign == "+":
            Fp[N] = 0.0  # derivative weight dropped at the origin node
        # decay envelopes |F| <= CF d^2/(d^2+nu^2), |F'| <= CFp d^3/(d^3+|nu|^3)
        CF = float(np.max(np.abs(F) * (d * d + nu * nu) / (d * d)))
        CFp = float(np.max(np.abs(Fp) * (d ** 3 + np.abs(nu) ** 3) / d ** 3))
        data = (nu, F, Fp, CF, CFp)
        self._cache[key] = (N, data)
        return data

    def _budget(self, sign: Sign, R: float) -> int:
        """Node budget meeting series_tol for |Re w| <= R (w = delta*z).

        The dense floor ~20 nodes per unit x serves small arguments; for
        large R it is capped at 2R + 2000 (nodes must only outrun the
        evaluation window, the tail test below does the rest).
        """
        dense = min(int(math.ceil(50 + 20 * R / self.delta)),
                    int(math.ceil(2 * R)) + 2000)
        N = max(self.n_max, dense, int(math.ceil(2 * R + 20)))
        d = self.delta
        while N < 30000:
            _, _, _, CF, CFp = self._nodes(sign, min(N, 30000))
            tail = (2 * CF * d * d / ((N - R) ** 2 * N)
                    + CFp * d ** 3 / N ** 3) / math.pi ** 2
            if tail <= self.series_tol:
                return N
            N = int(N * 1.5) + 10
        raise AccuracyError(
            f"interpolation tail cannot reach tol {self.series_tol:.1e}", 0.0)

    def g_eval(self, sign: Sign, z: complex) -> complex:
        """Majorant ('+') or minorant ('-') value at complex z."""
        _check_sign(sign)
        z = complex(z)
        w = self.delta * z
        N = self._budget(sign, abs(w.real))
        nu, F, Fp, _, _ = self._nodes(sign, N)
        # sin^2(pi w) (resp. cos^2) computed from the argument reduced by
        # the nearest node, which is exact and avoids cancellation there
        near = round(w.real) if sign == "+" else math.floor(w.real) + 0.5
        r = w - near
        s = cmath.sin(math.pi * r)
        S2 = (s / math.pi) ** 2
        dw = w - nu
        inear = int(np.argmin(np.abs(nu - near)))
        mask = np.ones(len(nu), dtype=bool)
        mask[inear] = False
        total = S2 * complex(np.sum(F[mask] / dw[mask] ** 2)
                             + np.sum(Fp[mask] / dw[mask]))
        # nearest node handled with the guarded sinc kernel
        r0 = w - nu[inear]
        sc2 = _sinc2(r0)
        total += F[inear] * sc2 + Fp[inear] * r0 * sc2
        return total

    def g_real(self, sign: Sign, x: np.ndarray) -> np.ndarray:
        """Vectorized evaluation on the real axis."""
        _check_sign(sign)
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        w = self.delta * x
        N = self._budget(sign, float(np.max(np.abs(w))) if len(w) else 0.0)
        nu, F, Fp, _, _ = self._nodes(sign, N)
        out = np.empty(len(w))
        if sign == "+":
            near = np.round(w)
        else:
            near = np.floor(w) + 0.5
        r = w - near
        S2 = (np.sin(math.pi * r) / math.pi) ** 2
        block = max(1, int(4e6 / max(len(nu), 1)))
        for i0 in range(0, len(w), block):
            wb = w[i0:i0 + block]
            dw = wb[:, None] - nu[None, :]
            tiny = np.abs(dw) < 1e-4
            dws = np.where(tiny, 1.0, dw)
            terms = (F[None, :] / dws ** 2 + Fp[None, :] / dws) \
                * S2[i0:i0 + block, None]
            # guarded sinc at (at most one) near-coincident node per point
            if np.any(tiny):
                ii, jj = np.nonzero(tiny)
                for a, b in zip(ii, jj):
                    r0 = dw[a, b]
                    sc2 = _sinc2(complex(r0)).real
                    terms[a, b] = F[b] * sc2 + Fp[b] * r0 * sc2
            out[i0:i0 + block] = np.sum(terms, axis=1)
        return out

    # ------------------------------------------------------------------
    # Fourier transform
    # ------------------------------------------------------------------

    def _B(self, u: float) -> float:
        """B(u) = integral of (sigma-alpha)^{2m} (e^{-2 pi u (sigma-1/2)}
        - e^{-2 pi u}); closed form for u >= 1, quadrature below (the
        closed form cancels catastrophically as u -> 0)."""
        if u < 1.0:
            un, wn = self._sigma_grid()
            return float(np.dot(
                wn, np.exp(-2 * math.pi * u * un) - math.exp(-2 * math.pi * u)))
        return self._B_poly(u) + self._B_exp(u)

    def _B_poly(self, u: float) -> float:
        c = 2.0 * math.pi * u
        return (math.factorial(2 * self.m)
                * math.exp(-c * (self.alpha - 0.5)) / c ** (2 * self.m + 1))

    def _B_exp(self, u: float) -> float:
        c = 2.0 * math.pi * u
        L = 1.5 - self.alpha
        g = self.gamma_coeffs().gamma_j
        s = sum(g[j] * L ** (2 * self.m + 1 - j) / c ** j
                for j in range(2 * self.m + 2))
        return -math.exp(-c) * s

    def ft_g(self, sign: Sign, xi: float) -> float:
        """Fourier transform of g; identically 0 for |xi| > delta.

        For 0 < |xi| < delta the value is a series over frequencies
        xi + k*delta grouped in cancelling pairs; for alpha = 1/2 the
        slowly-decaying polynomial part is resummed in closed form with
        Hurwitz zeta / cotangent lattice sums.  At xi = 0 the closed
        sigma-integral form is used (for alpha = 1/2, m = 0 this is the
        one-sided limit from xi > 0; the transform has a jump there).
        """
        _check_sign(sign)
        xi = abs(float(xi))
        d = self.delta
        if xi > d:
            return 0.0
        if xi == 0.0:
            if sign == "+":
                return self._f_integral() + self.l1_gap_odd("+")
            return self._f_integral() - self.l1_gap_odd("-")
        alt = (sign == "-")
        beta2 = 2.0 * math.pi * (self.alpha - 0.5)  # decay rate of B_poly

        if self.alpha == 0.5:
            # polynomial part in closed form, exponential part as pair series
            s1, s2 = 2 * self.m + 1, 2 * self.m + 2
            cpoly = 0.5 * math.factorial(2 * self.m) / (2 * math.pi) ** s1
            lat = (_lattice_sum(s1, xi, d, alt) / d
                   + (d - xi) / d * _lattice_sum(s2, xi, d, alt))
            poly = cpoly * lat

            def term(k):
                sgn = -1.0 if (alt and k % 2) else 1.0
                u1, u2 = xi + k * d, (k + 2) * d - xi
                return 0.5 * sgn * (k + 1) * (self._B_exp(u1) / u1
                                              - self._B_exp(u2) / u2)

            def tail(K):
                u = xi + K * d
                return (K + 2) * abs(self._B_exp(u)) / u / (
                    1.0 - math.exp(-2 * math.pi * d))

            res = sum_tail_bounded(term, tail, self.series_tol)
            return poly + res.value

        def term(k):
            sgn = -1.0 if (alt and k % 2) else 1.0
            u1, u2 = xi + k * d, (k + 2) * d - xi
            t1 = self._B(u1) / u1
            t2 = self._B(u2) / u2
            return 0.5 * sgn * (k + 1) * (t1 - t2)

        def tail(K):
            # |B(u)| <= B_poly(u); terms decay at least like e^{-beta2 d}
            u = xi + K * d
            tb = (K + 1) * (self._B_poly(u) / u
                            + self._B_poly((K + 2) * d - xi) / ((K + 2) * d - xi))
            q = math.exp(-beta2 * d) * (K + 2) / (K + 1)
            if q >= 1.0:
                return math.inf
            return tb / (1.0 - q)

        res = sum_tail_bounded(term, tail, self.series_tol)
        return res.value

    def _f_integral(self) -> float:
        """Integral of the target over the real line (closed form)."""
        return (math.pi * (1.5 - self.alpha) ** (2 * self.m + 2)
                / ((2 * self.m + 1) * (2 * self.m + 2)))

    # ------------------------------------------------------------------
    # L1 gaps
    # ------------------------------------------------------------------

    def l1_gap_odd(self, sign: Sign) -> float:
        """L1 distance between g and the target (closed sigma-integral)."""
        _check_sign(sign)
        d = self.delta
        un, wn = self._sigma_grid()
        e = np.exp(-2 * math.pi * d * un)
        e1 = math.exp(-2 * math.pi * d)
        if sign == "+":
            # 1 - e via expm1: e underflows to 1 on the lowest panels
            one_minus_e = -np.expm1(-2 * math.pi * d * un)
            return -float(np.dot(wn, np.log(one_minus_e)
                                 - math.log1p(-e1))) / d
        return float(np.dot(wn, np.log1p(e) - math.log1p(e1))) / d

    # ------------------------------------------------------------------
    # decay envelope (for zero-sum truncation downstream)
    # ------------------------------------------------------------------

    def decay_envelope_const(self, sign: Sign) -> float:
        """Calibrated K with |g(x)| <= K/(1+x^2) on the real axis.

        Calibrated by sampling x in [0, 60] (plus the node-value envelope
        for the far tail); this is an engineering constant, not a proved
        one, and downstream reports flag it as calibrated.
        """
        _check_sign(sign)
        key = ("envelope", sign)
        if key not in self._cache:
            x = np.arange(0.0, 60.0, 0.05)
            g = self.g_real(sign, x)
            self._cache[key] = 2.0 * float(np.max(np.abs(g) * (1.0 + x * x)))
        return self._cache[key]


def _sinc2(r: complex) -> complex:
    """(sin(pi r)/(pi r))^2 with Taylor fallback near r = 0."""
    if abs(r) < 1e-6:
        p2 = (math.pi * r) ** 2
        return 1.0 - p2 / 3.0 + 2.0 * p2 * p2 / 45.0
    s = cmath.sin(math.pi * r) / (math.pi * r)
    return s * s


def _lattice_sum(s: int, xi: float, d: float, alternating: bool) -> float:
    """Sum over all integers k of (+/-1)^k (xi + k d)^{-s}, 0 < xi < d.

    Conditionally convergent for s = 1 (cotangent/cosecant closed forms,
    symmetric principal value); absolutely convergent via Hurwitz zeta
    for s >= 2.
    """
    q = xi / d
    if s == 1:
        if alternating:
            return math.pi / math.sin(math.pi * q) / d
        return math.pi / math.tan(math.pi * q) / d
    zeta = scipy.special.zeta
    sgn = (-1.0) ** s
    if not alternating:
        return (zeta(s, q) + sgn * zeta(s, 1.0 - q)) / d ** s
    even = zeta(s, q / 2) + sgn * zeta(s, 1.0 - q / 2)
    odd = zeta(s, (q + 1.0) / 2) + sgn * zeta(s, (1.0 - q) / 2)
    return (even - odd) / (2.0 * d) ** s
