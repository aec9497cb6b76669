"""Moment tables and cosine transforms of zeta-type heat kernels.

The Riemann kernel density and its Dirichlet-character analogues are
summed directly from their theta-series definitions; their even moments
feed the Newton routes, and their cosine transforms locate zeros on the
critical line.  Quadrature is composite Gauss-Legendre on [0, t_cutoff]
with the panel count doubled until two successive refinements agree.

The kernels suffer catastrophic cancellation for t of a few units (the
summands are exponentially larger than the doubly-exponentially small
value), so evaluation is adaptive: working digits are raised until the
measured cancellation is cleared, or an absolute error target is met.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import (
    AccuracyError,
    DomainError,
    LimitExceededError,
    VanishingMomentError,
)
from .newton import CoefficientSeries
from .precision import DEFAULT_PREC, check_precision, to_real, working
from .quadrature import panel_grid

MOMENT_ORDER_CAP = 12

_SERIES_TERM_CAP = 2_000_000


@dataclass(frozen=True)
class QuadratureConfig:
    """Tunables for the kernel quadrature.

    target_digits: absolute accuracy goal (decimal digits) for integrals;
        defaults to precision + 15.
    t_cutoff: upper integration limit; defaults to the closed-form decay
        envelope solve for the target.
    series_cutoff: hard cap on kernel series terms per node; defaults to
        an estimate recorded at build time.
    points: Gauss-Legendre points per panel.
    max_doublings: refinement budget (panels = 2, 4, 8, ...).
    """

    target_digits: int = 0
    t_cutoff: object = None
    series_cutoff: int = 0
    points: int = 24
    max_doublings: int = 10


@dataclass(frozen=True)
class MomentTable:
    """Even moments b_n, normalized beta_n, and per-entry error bounds."""

    b: tuple
    beta: tuple
    quadrature_error: tuple
    kind: str
    modulus: int
    parity: int
    precision: int

    def series(self):
        """Coefficient series sigma_n = beta_n for the Newton routes."""
        sig = (mp.one,) + tuple(self.beta[1:])
        return CoefficientSeries(
            sigmas=sig, source=f"{self.kind}-moments", precision=self.precision
        )


def _kernel_shape(chi):
    # (modulus, exp growth rate of the reflected series, envelope constant)
    if chi is None:
        return 1, 4.5, 4 * math.pi * (2 * math.pi + 3) * 1.02
    return chi.modulus, 0.5 + chi.parity, 6.0


def _phi_pass(chi, t, dps, eps_rel=None, stop_abs=None, term_cap=None):
    """One fixed-precision pass over the kernel series at the point t.

    Exactly one of eps_rel / stop_abs drives truncation.  Returns
    (total, max_term_magnitude, terms_used).
    """
    cap = term_cap or _SERIES_TERM_CAP
    with mp.workdps(dps):
        tv = to_real(t, max(dps - 15, 30))
        x = mp.exp(-2 * tv)
        if chi is None:
            base = mp.exp(-mp.pi * x)
            c9 = 8 * mp.pi**2 * mp.exp(-mpf(9) / 2 * tv)
            c5 = 12 * mp.pi * mp.exp(-mpf(5) / 2 * tv)
        else:
            m = chi.modulus
            parity = chi.parity
            base = mp.exp(-mp.pi * x / m)
            pref = 4 * mp.exp(-(mpf(1) + 2 * parity) / 2 * tv)
        # base^(n^2) via E *= G, G = base^(2n+1)
        e_pow = base
        g_pow = base**3
        b_sq = base * base
        total = mp.zero
        maxmag = mp.zero
        n = 1
        while n <= cap:
            if chi is None:
                term = (c9 * n**4 - c5 * n * n) * e_pow
                bound = (c9 * n**4 + c5 * n * n) * e_pow
            else:
                cv = chi(n)
                weight = n if parity else 1
                term = pref * weight * cv * e_pow if cv else mp.zero
                bound = pref * (n + 1) * e_pow
            total += term
            mag = abs(term)
            if mag > maxmag:
                maxmag = mag
            # geometric continuation: once base^(2n+1) <= 1/2, the
            # remaining tail is below 32x the current term bound
            if g_pow <= mpf(1) / 2:
                if stop_abs is not None and bound * 32 < stop_abs:
                    break
                if eps_rel is not None and maxmag > 0 and bound * 32 < eps_rel * maxmag:
                    break
            e_pow *= g_pow
            g_pow *= b_sq
            n += 1
        else:
            raise AccuracyError("kernel series did not converge within the term cap")
        return +total, +maxmag, n


def _cancellation_estimate(chi, t):
    # decimal digits lost to cancellation when summing at the point t
    m, alpha, _ = _kernel_shape(chi)
    try:
        tf = float(to_real(t, 30))
        growth = (math.pi / m) * math.exp(2 * tf) - (alpha + 0.5) * tf
    except OverflowError:
        return None
    if tf <= 0:
        return 0.0
    return max(0.0, 0.4343 * growth) + 8.0


def _phi_with_error(chi, t, abs_tol, term_cap=None):
    """Kernel value with a certified absolute error bound (abs_tol mode)."""
    with mp.workdps(40):
        tol = abs(to_real(abs_tol, 30))
        if tol == 0:
            raise DomainError("abs_tol must be nonzero")
        need = -mp.log10(tol)
    dps = int(need) + 20
    for _ in range(8):
        total, maxmag, nterms = _phi_pass(
            chi, t, dps, stop_abs=tol / 8, term_cap=term_cap
        )
        with mp.workdps(30):
            round_err = (nterms + 5) * maxmag * mpf(10) ** (1 - dps) + tol / 4
            if round_err <= tol:
                return total, +round_err, nterms
            dps += int(mp.log10(round_err / tol)) + 12
    raise AccuracyError("kernel value did not reach the absolute error target")


def _phi_relative(chi, t, prec):
    """Kernel value verified to `prec` significant digits."""
    est = _cancellation_estimate(chi, t)
    if est is None:
        raise AccuracyError("kernel argument too large for relative evaluation")
    dps = prec + 18 + int(est)
    hard_cap = prec + 200 + 4 * int(est)
    for _ in range(10):
        eps = mpf(10) ** (-(dps - 3))
        total, maxmag, nterms = _phi_pass(chi, t, dps, eps_rel=eps)
        if total != 0 and maxmag > 0:
            with mp.workdps(30):
                lost = float(mp.log10(maxmag / abs(total)))
            slack = dps - lost - math.log10(nterms + 1.0) - prec
            if slack >= 3:
                with working(prec):
                    return +total
            dps = int(lost) + prec + 18 + int(math.log10(nterms + 1.0))
        else:
            dps *= 2
        if dps > hard_cap:
            raise AccuracyError(
                "cancellation exceeded the working-precision budget; "
                "use the absolute-tolerance mode for points this deep"
            )
    raise AccuracyError("kernel evaluation did not stabilize")


def phi_riemann(t, prec=DEFAULT_PREC, abs_tol=None):
    """Riemann heat-kernel density at the point t.

    Without abs_tol the value is verified to `prec` relative digits and
    must come out positive.  With abs_tol the value is only certified to
    that absolute error, which is the mode the quadrature and the deep
    decay checks use.
    """
    check_precision(prec)
    if abs_tol is not None:
        value, _, _ = _phi_with_error(None, t, abs_tol)
        return value
    value = _phi_relative(None, t, prec)
    if not value > 0:
        raise AccuracyError(f"kernel density came out non-positive at t = {t}")
    return value


def phi_chi(t, chi, prec=DEFAULT_PREC, abs_tol=None):
    """Dirichlet heat-kernel density at t for a real primitive character."""
    check_precision(prec)
    if abs_tol is not None:
        value, _, _ = _phi_with_error(chi, t, abs_tol)
        return value
    return _phi_relative(chi, t, prec)


def theta_selfcheck(chi, x, prec=DEFAULT_PREC):
    """Residual of the theta functional equation for the character table.

    Even characters must satisfy S(x) = S(1/x)/sqrt(x), odd ones
    T(x) = T(1/x)/x^(3/2), where S/T are the (n-weighted) theta sums.
    A genuine primitive table drives the residual to roundoff; anything
    else leaves an O(1) residual, which is why this doubles as the
    primitivity gate for user-supplied tables.
    """
    check_precision(prec)
    m = chi.modulus
    parity = chi.parity
    with working(prec, 25):
        xv = to_real(x, prec + 20)
        if not xv > 0:
            raise DomainError("theta self-check needs x > 0")
        eps = mpf(10) ** (-(prec + 20))

        def half_sum(y):
            base = mp.exp(-mp.pi * y / m)
            e_pow = base
            g_pow = base**3
            b_sq = base * base
            tot = mp.zero
            n = 1
            while n <= _SERIES_TERM_CAP:
                cv = chi(n)
                if cv:
                    tot += (n * cv if parity else cv) * e_pow
                if g_pow <= mpf(1) / 2 and (n + 1) * e_pow * 32 < eps:
                    break
                e_pow *= g_pow
                g_pow *= b_sq
                n += 1
            else:
                raise AccuracyError("theta series did not converge")
            return tot

        lhs = 2 * half_sum(xv)
        rhs = 2 * half_sum(1 / xv)
        rhs *= 1 / mp.sqrt(xv) if parity == 0 else xv ** mpf("-1.5")
        return +abs(lhs - rhs)


def _solve_t_cutoff(m, alpha, const, target, order):
    # smallest T with Integral_T^inf t^(2n) * envelope(t) dt below
    # 10^(-target-8); envelope(t) = const * e^(alpha t) * e^(-pi e^(2t)/m)
    budget = (target + 8) * math.log(10) + math.log(const)
    t_val = 1.0
    for _ in range(8):
        inner = budget + alpha * t_val + 2 * order * math.log(max(t_val, 1.0))
        t_val = 0.5 * math.log(m * inner / math.pi)
    return t_val + 0.05


def _tail_bound(m, alpha, const, t_cut, order):
    # Integral_T^inf t^(2n) envelope(t) dt <= envelope value / decay rate
    with mp.workdps(40):
        tv = mpf(t_cut)
        rate = 2 * mp.pi * mp.exp(2 * tv) / m - alpha - 2 * order / tv
        if rate <= 0:
            return mp.inf
        val = const * tv ** (2 * order) * mp.exp(alpha * tv - mp.pi * mp.exp(2 * tv) / m)
        return val / rate


class XiEvaluator:
    """Cosine transform and moment table of one kernel, with a cached grid.

    chi = None selects the Riemann kernel.  The kernel values at the
    quadrature nodes are computed once per refinement level and reused
    across every moment order and every transform argument.
    """

    def __init__(self, chi=None, prec=DEFAULT_PREC, config=None):
        check_precision(prec)
        self.chi = chi
        self.prec = prec
        cfg = config or QuadratureConfig()
        m, alpha, const = _kernel_shape(chi)
        self.modulus = m
        target = cfg.target_digits or prec + 15
        if target < 20:
            raise DomainError("target_digits must be at least 20")
        t_cut = cfg.t_cutoff
        if t_cut is None:
            t_cut = _solve_t_cutoff(m, alpha, const, target, MOMENT_ORDER_CAP)
        self.t_cutoff = to_real(t_cut, 40)
        tail0 = _tail_bound(m, alpha, const, float(self.t_cutoff), 0)
        if not tail0 < mpf(10) ** (-(target + 5)):
            raise DomainError(
                f"t_cutoff {t_cut} leaves a kernel tail above 10^-{target + 5}"
            )
        self.target_digits = target
        self.points = cfg.points
        self.max_doublings = cfg.max_doublings
        self.series_cutoff = cfg.series_cutoff or None
        self._alpha = alpha
        self._const = const
        self._dps = target + 25
        # per-node absolute tolerance keeps the summed quadrature error
        # below 10^(-target-6)
        with mp.workdps(40):
            self._node_tol = mpf(10) ** (-(target + 6)) / (2 * self.t_cutoff)
        self._levels = {}
        self._max_terms = 0
        self._bulk_level = None
        self._bulk_err = None

    def _level(self, k):
        if k not in self._levels:
            grid = panel_grid(0, self.t_cutoff, 2**k, self.points, self._dps)
            values = []
            err_sum = mp.zero
            for t_node, w_node in grid:
                val, err, nterms = _phi_with_error(
                    self.chi, t_node, self._node_tol, term_cap=self.series_cutoff
                )
                values.append(val)
                err_sum += w_node * err
                if nterms > self._max_terms:
                    self._max_terms = nterms
            self._levels[k] = (grid, tuple(values), +err_sum)
        return self._levels[k]

    def _integrate(self, k, weight):
        grid, values, err_sum = self._level(k)
        with mp.workdps(self._dps):
            acc = mp.zero
            for (t_node, w_node), val in zip(grid, values):
                acc += w_node * val * weight(t_node)
            return +acc, err_sum

    def _converged(self, weight, scale_floor, err_scale):
        """Integrate at doubling refinements until two levels agree.

        err_scale bounds |weight| on the interval, amplifying the cached
        per-node kernel errors.
        """
        with mp.workdps(self._dps):
            tol = mpf(10) ** (-self.target_digits)
            prev = None
            for k in range(1, self.max_doublings + 1):
                cur, err_sum = self._integrate(k, weight)
                if prev is not None:
                    gap = abs(cur - prev)
                    if gap <= tol * max(abs(cur), scale_floor):
                        return cur, gap + err_sum * err_scale
                prev = cur
        raise AccuracyError(
            "quadrature did not converge within the refinement budget"
        )

    def transform(self, z):
        """Cosine transform at z with a certified absolute error bound."""
        with mp.workdps(self._dps):
            zv = to_real(z, self._dps)
            value, err = self._converged(lambda t: mp.cos(zv * t), mpf(1), mpf(1))
            return value, err

    def moment(self, n):
        """(b_n, error bound): the 2n-th kernel moment."""
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"moment index must be >= 0, got {n!r}")
        if n > MOMENT_ORDER_CAP:
            raise LimitExceededError(
                f"moment order {n} exceeds the cap {MOMENT_ORDER_CAP}"
            )
        with mp.workdps(self._dps):
            wmax = max(mp.one, self.t_cutoff ** (2 * n))
            if n == 0:
                value, err = self._converged(lambda t: mp.one, mpf(1), wmax)
            else:
                value, err = self._converged(lambda t: t ** (2 * n), mpf(1), wmax)
            tail = _tail_bound(
                self.modulus, self._alpha, self._const, float(self.t_cutoff), n
            )
            return value, +(err + tail)

    def calibrate_transform(self, z_probes):
        """Fix a single refinement level for bulk transform evaluation.

        Finds the coarsest level whose integral agrees with the next one
        at every probe argument, then locks one level beyond it and an
        absolute error bound (largest observed gap, with safety margin).
        Bulk zero scans use transform_at() afterwards, which costs one
        grid sweep instead of a full refinement ladder.
        """
        probes = tuple(z_probes)
        if not probes:
            raise DomainError("calibration needs at least one probe argument")
        with mp.workdps(self._dps):
            tol = mpf(10) ** (-self.target_digits)
            for k in range(2, self.max_doublings + 1):
                worst = mp.zero
                ok = True
                for z in probes:
                    zv = to_real(z, self._dps)
                    cur, _ = self._integrate(k, lambda t: mp.cos(zv * t))
                    prev, _ = self._integrate(k - 1, lambda t: mp.cos(zv * t))
                    gap = abs(cur - prev)
                    if gap > worst:
                        worst = gap
                    if gap > tol:
                        ok = False
                        break
                if ok:
                    self._bulk_level = min(k + 1, self.max_doublings)
                    level_err = self._level(self._bulk_level)[2]
                    self._bulk_err = +(8 * (worst + level_err) + tol)
                    return self._bulk_level, self._bulk_err
        raise AccuracyError("transform calibration did not converge")

    def transform_at(self, z):
        """Single-sweep cosine transform at the calibrated level."""
        if getattr(self, "_bulk_level", None) is None:
            raise AccuracyError("call calibrate_transform before transform_at")
        with mp.workdps(self._dps):
            zv = to_real(z, self._dps)
            value, _ = self._integrate(self._bulk_level, lambda t: mp.cos(zv * t))
            return value, self._bulk_err

    def moment_table(self, order):
        """MomentTable with b_0..b_order, beta_0..beta_order, error bounds."""
        if not isinstance(order, int) or order < 1:
            raise DomainError(f"order must be a positive integer, got {order!r}")
        if order > MOMENT_ORDER_CAP:
            raise LimitExceededError(
                f"moment order {order} exceeds the cap {MOMENT_ORDER_CAP}"
            )
        pairs = [self.moment(n) for n in range(order + 1)]
        b = tuple(p[0] for p in pairs)
        errs = tuple(p[1] for p in pairs)
        b0, e0 = b[0], errs[0]
        if self.chi is None:
            if not b0 > e0:
                raise AccuracyError("zeroth moment is not certifiably positive")
            for n, (bn, en) in enumerate(zip(b, errs)):
                if not bn > en:
                    raise AccuracyError(f"moment b_{n} is not certifiably positive")
        else:
            if abs(b0) <= 10 * e0:
                raise VanishingMomentError(
                    "zeroth moment vanishes within the error bound; "
                    "power sums are undefined for this character"
                )
        with working(self.prec, 15):
            beta = [mp.one]
            for n in range(1, order + 1):
                beta.append(+(b[n] / (mp.factorial(2 * n) * b0)))
        return MomentTable(
            b=b,
            beta=tuple(beta),
            quadrature_error=errs,
            kind="riemann" if self.chi is None else f"dirichlet({self.chi.label})",
            modulus=self.modulus,
            parity=0 if self.chi is None else self.chi.parity,
            precision=self.prec,
        )


def xi_cosine(z, prec=DEFAULT_PREC, config=None, chi=None):
    """One-shot cosine transform value at z (builds a fresh grid)."""
    ev = XiEvaluator(chi=chi, prec=prec, config=config)
    value, err = ev.transform(z)
    with mp.workdps(40):
        if err > mpf(10) ** (-(ev.target_digits - 5)):
            raise AccuracyError("cosine transform error bound exceeds the target")
    return value


def riemann_moments(order, prec=DEFAULT_PREC, config=None):
    """Moment table of the Riemann kernel."""
    return XiEvaluator(chi=None, prec=prec, config=config).moment_table(order)


_THETA_GATE_POINTS = ("0.5", "1", "2")


def dirichlet_moments(chi, order, prec=DEFAULT_PREC, config=None):
    """Moment table of a Dirichlet kernel, gated by the theta self-check."""
    for x in _THETA_GATE_POINTS:
        residual = theta_selfcheck(chi, x, prec)
        with mp.workdps(40):
            if residual > mpf(10) ** (-(prec - 10)):
                raise DomainError(
                    f"character table fails the theta self-check at x = {x} "
                    f"(residual {mp.nstr(residual, 5)}); table is not a real "
                    "primitive character"
                )
    return XiEvaluator(chi=chi, prec=prec, config=config).moment_table(order)


def riemann_s_closed(b, k, prec=DEFAULT_PREC):
    """Closed-form power sums s_1..s_4 in terms of the raw moments."""
    if not isinstance(k, int) or not 1 <= k <= 4:
        raise DomainError(f"closed form available for k = 1..4, got {k!r}")
    if len(b) < k + 1:
        raise DomainError(f"need moments b_0..b_{k}, got {len(b)} entries")
    with working(prec, 15):
        b0, b1 = to_real(b[0], prec), to_real(b[1], prec)
        if k == 1:
            return +(b1 / (2 * b0))
        b2 = to_real(b[2], prec)
        if k == 2:
            return +((3 * b1**2 - b0 * b2) / (12 * b0**2))
        b3 = to_real(b[3], prec)
        if k == 3:
            return +((30 * b1**3 - 15 * b0 * b1 * b2 + b0**2 * b3) / (240 * b0**3))
        b4 = to_real(b[4], prec)
        num = (
            630 * b1**4
            - 420 * b0 * b1**2 * b2
            + 35 * b0**2 * b2**2
            + 28 * b0**2 * b1 * b3
            - b0**3 * b4
        )
        return +(num / (10080 * b0**4))
