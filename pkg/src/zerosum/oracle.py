"""Brute-force zero location and truncated power sums.

Every zero is isolated by a verified sign-change bracket and refined
strictly inside it (bracketed secant with a bisection fallback); no
derivative evaluations and no steps outside a certified bracket, so this
route shares nothing with the coefficient-based machinery it
cross-checks and the final bracket width localizes each zero.

Series evaluation near large zeros loses digits to alternating-series
cancellation.  Each evaluator starts from a per-family loss estimate,
measures the cancellation it actually met (largest term over result),
and retries with more working digits until the surviving precision is
certified, giving up only past a per-family budget cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import (
    AccuracyError,
    BracketFailureError,
    DomainError,
    LimitExceededError,
    PrecisionExhaustedError,
    ScanExhaustedError,
)
from .precision import DEFAULT_PREC, check_precision, to_real, working
from .zeta import QuadratureConfig, XiEvaluator

BESSEL_COUNT_CAP = 500
AIRY_COUNT_CAP = 200
Q_COUNT_CAP = 200
XI_COUNT_CAP = 50

MODE_SQUARED = "squared"
MODE_PLAIN = "plain"

_LOG10E = 0.4342944819032518


@dataclass(frozen=True)
class ZeroList:
    """Positive zeros in ascending order with residual magnitudes.

    tol and tol_kind describe how tightly each zero is localized:
    "absolute" means z is within tol of the true zero, "relative" means
    within tol*z.  Downstream sums propagate this into their bounds.
    """

    zeros: tuple
    residuals: tuple
    family: str
    lambda_mode: str
    precision: int
    tol: object = None
    tol_kind: str = "absolute"
    modulus: int = 1
    note: str = ""

    def __post_init__(self):
        if self.lambda_mode not in (MODE_SQUARED, MODE_PLAIN):
            raise DomainError(f"unknown lambda mode {self.lambda_mode!r}")
        if self.tol_kind not in ("absolute", "relative"):
            raise DomainError(f"unknown tolerance kind {self.tol_kind!r}")
        if len(self.zeros) != len(self.residuals):
            raise DomainError("zeros and residuals must have equal length")
        if not self.zeros:
            raise DomainError("zero list is empty")
        prev = 0
        for z in self.zeros:
            if not z > prev:
                raise DomainError("zeros must be strictly increasing and positive")
            prev = z

    @property
    def count(self):
        return len(self.zeros)

    def lambdas(self):
        """Reciprocal (squared) zeros, the summands of the power sums."""
        if self.lambda_mode == MODE_SQUARED:
            return tuple(1 / (z * z) for z in self.zeros)
        return tuple(1 / z for z in self.zeros)


@dataclass(frozen=True)
class TailEstimate:
    """Estimated remainder of a power sum beyond the computed zeros."""

    value: object
    bound_kind: str
    confidence_note: str

    def __post_init__(self):
        if self.bound_kind not in ("asymptotic-density", "geometric-ratio"):
            raise DomainError(f"unknown bound kind {self.bound_kind!r}")
        if not self.value >= 0:
            raise DomainError("tail estimate must be non-negative")


@dataclass(frozen=True)
class TruncatedPowerSum:
    """Partial power sum over computed zeros plus its tail estimate."""

    estimate: object
    error_bound: object
    order: int
    tail: TailEstimate
    family: str


def _adaptive_eval(pass_fn, prec, guess_digits, cap_digits, label):
    """Run a fixed-precision series pass with measured-cancellation retries."""
    dps = prec + 20 + max(0, int(guess_digits))
    cap = prec + 40 + max(0, int(cap_digits))
    if dps > cap:
        raise PrecisionExhaustedError(
            f"{label}: expected cancellation {int(guess_digits)} digits "
            f"exceeds the budget cap {cap}"
        )
    for _ in range(12):
        total, maxmag, _ = pass_fn(dps)
        if total == 0:
            lost = float(dps)
        else:
            with mp.workdps(30):
                lost = float(mp.log10(maxmag / abs(total))) if maxmag > 0 else 0.0
        if dps - lost >= prec / 2 + 8:
            return total
        dps = max(dps + 10, int(lost) + prec // 2 + 24)
        if dps > cap:
            raise PrecisionExhaustedError(
                f"{label}: cancellation needs {dps} working digits, cap {cap}"
            )
    raise PrecisionExhaustedError(f"{label}: evaluation did not stabilize")


def _series_pass(dps, first, ratio_fn):
    # sum t_0 + t_1 + ... with t_{k+1} = t_k * ratio_fn(k); stops once the
    # terms have decayed below the working epsilon relative to the peak
    with mp.workdps(dps):
        eps = mpf(10) ** (-(dps - 2))
        t = first()
        total = t
        maxmag = abs(t)
        k = 0
        while k < 1_000_000:
            t = t * ratio_fn(k)
            total += t
            mag = abs(t)
            if mag > maxmag:
                maxmag = mag
            if mag < eps * maxmag:
                return +total, +maxmag, k
            k += 1
    raise AccuracyError("series pass exceeded the term cap")


def _make_bessel_eval(nu, prec):
    nuf = float(nu)

    def evaluate(z):
        zf = abs(float(z))
        guess = 0.45 * zf + 6
        cap = max(prec, 2 * zf * _LOG10E + prec / 2)

        def pass_fn(dps):
            with mp.workdps(dps):
                nuv = to_real(nu, dps - 10)
                zv = +z
                x = (zv / 2) ** 2
                return _series_pass(
                    dps, lambda: mp.one, lambda k: -x / ((k + 1) * (nuv + k + 1))
                )

        return _adaptive_eval(pass_fn, prec, guess, cap, f"bessel(nu={nuf})")

    return evaluate


def _make_airy_eval(prec):
    def evaluate(z):
        zf = abs(float(z))
        loss = 2 * (zf / 3) ** 1.5 * _LOG10E
        guess = loss + 6
        cap = 1.6 * loss + prec

        def pass_fn(dps):
            with mp.workdps(dps):
                zv = +z
                w = (zv / 3) ** 3
                c1 = mp.pi / (3 * mp.gamma(mpf(2) / 3))
                c2 = mp.pi * zv / (9 * mp.gamma(mpf(4) / 3))
                eps = mpf(10) ** (-(dps - 2))
                t1, t2 = c1, c2
                total = t1 + t2
                maxmag = max(abs(t1), abs(t2))
                k = 0
                while k < 1_000_000:
                    t1 = t1 * (-w) / ((k + 1) * (k + mpf(2) / 3))
                    t2 = t2 * (-w) / ((k + 1) * (k + mpf(4) / 3))
                    total += t1 + t2
                    mag = max(abs(t1), abs(t2))
                    if mag > maxmag:
                        maxmag = mag
                    if mag < eps * maxmag:
                        return +total, +maxmag, k
                    k += 1
                raise AccuracyError("series pass exceeded the term cap")

        return _adaptive_eval(pass_fn, prec, guess, cap, "airy")

    return evaluate


def _make_qairy_eval(q, prec):
    def evaluate(z):
        zf = max(abs(float(z)), 1.0)
        lq = -math.log(float(to_real(q, 30)))
        loss = _LOG10E * (math.log(zf) ** 2) / (4 * lq)
        guess = loss + 8
        cap = 3 * loss + prec + 40

        def pass_fn(dps):
            with mp.workdps(dps):
                qv = to_real(q, dps - 10)
                zv = +z
                return _series_pass(
                    dps,
                    lambda: mp.one,
                    lambda k: -zv * qv ** (2 * k + 1) / (1 - qv ** (k + 1)),
                )

        return _adaptive_eval(pass_fn, prec, guess, cap, f"qairy(q={q})")

    return evaluate


def _make_qbessel_eval(nu, q, prec):
    nuf = float(nu)

    def evaluate(x):
        lq = -math.log(float(to_real(q, 30)))
        u = max(math.log(max(abs(float(x)), 1.0) / 4) + nuf * math.log(float(to_real(q, 30))), 0.0)
        loss = _LOG10E * u * u / (4 * lq)
        guess = loss + 8
        cap = 3 * loss + prec + 40

        def pass_fn(dps):
            with mp.workdps(dps):
                qv = to_real(q, dps - 10)
                nuv = to_real(nu, dps - 10)
                xv = +x
                qn = qv**nuv

                def ratio(k):
                    return -xv * qv ** (2 * k + 1) * qn / (
                        4 * (1 - qv ** (k + 1)) * (1 - qv ** (k + 1) * qn)
                    )

                return _series_pass(dps, lambda: mp.one, ratio)

        return _adaptive_eval(pass_fn, prec, guess, cap, f"qbessel(nu={nuf},q={q})")

    return evaluate


def _sign(v):
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _refine_abs(f, lo, hi, flo, fhi, xtol):
    # Illinois-style bracketed secant: the bracket invariant of plain
    # bisection is kept (so the final width certifies the zero location),
    # but simple zeros converge in far fewer evaluations.  The retained
    # endpoint's value is halved on consecutive retention, which prevents
    # the one-sided stall of naive regula falsi.
    if _sign(flo) * _sign(fhi) >= 0:
        raise BracketFailureError("bracketed refinement needs a sign change")
    kept = 0
    for _ in range(5000):
        width = hi - lo
        if width <= xtol:
            break
        denom = fhi - flo
        x = (lo * fhi - hi * flo) / denom if denom != 0 else lo + width / 2
        # clamp instead of rejecting: when the proposal hugs an endpoint the
        # root is there too, and the padded evaluation collapses the bracket
        # to pad width in one step
        pad = width / 128
        if x < lo + pad:
            x = lo + pad
        elif x > hi - pad:
            x = hi - pad
        fx = f(x)
        if fx == 0:
            return x, mp.zero
        if _sign(fx) == _sign(flo):
            lo, flo = x, fx
            if kept == 1:
                fhi /= 2
            kept = 1
        else:
            hi, fhi = x, fx
            if kept == -1:
                flo /= 2
            kept = -1
    z = (lo + hi) / 2
    return z, abs(f(z))


def _refine_geometric(f, lo, hi, flo, fhi, rtol):
    # same scheme with a relative width goal, for zeros spread over many
    # orders of magnitude
    if _sign(flo) * _sign(fhi) >= 0:
        raise BracketFailureError("bracketed refinement needs a sign change")
    kept = 0
    for _ in range(5000):
        if hi / lo - 1 <= rtol:
            break
        width = hi - lo
        denom = fhi - flo
        x = (lo * fhi - hi * flo) / denom if denom != 0 else mp.sqrt(lo * hi)
        pad = width / 128
        if x < lo + pad:
            x = lo + pad
        elif x > hi - pad:
            x = hi - pad
        fx = f(x)
        if fx == 0:
            return x, mp.zero
        if _sign(fx) == _sign(flo):
            lo, flo = x, fx
            if kept == 1:
                fhi /= 2
            kept = 1
        else:
            hi, fhi = x, fx
            if kept == -1:
                flo /= 2
            kept = -1
    z = mp.sqrt(lo * hi)
    return z, abs(f(z))


def bessel_zeros(nu, count, prec=DEFAULT_PREC):
    """First `count` positive zeros of the order-nu Bessel-type series.

    Brackets are seeded from the large-zero asymptotic centers
    (k + nu/2 - 1/4)*pi with half-pi half-width; when a seeded bracket
    fails its sign pattern, a stepping scan from the previous zero takes
    over.  Zeros are located to 10^(-prec/2) absolute.
    """
    check_precision(prec)
    if not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > BESSEL_COUNT_CAP:
        raise LimitExceededError(f"count {count} exceeds the cap {BESSEL_COUNT_CAP}")
    with working(prec, 15):
        nuv = to_real(nu, prec)
        if not nuv > -1:
            raise DomainError(f"Bessel order must satisfy nu > -1, got {nu}")
        f = _make_bessel_eval(nuv, prec)
        xtol = mpf(10) ** (-(prec // 2))
        pi = mp.pi
        zeros = []
        residuals = []
        prev = mp.zero
        for k in range(1, count + 1):
            want = 1 if k % 2 == 1 else -1
            center = (k + nuv / 2 - mpf(1) / 4) * pi
            lo = center - pi / 2
            hi = center + pi / 2
            if lo <= prev:
                lo = prev + (center - prev) / 8 if center > prev else prev + xtol * 100
            bracket = None
            if hi > lo:
                flo, fhi = f(lo), f(hi)
                if _sign(flo) == want and _sign(fhi) == -want:
                    bracket = (lo, hi, flo, fhi)
            if bracket is None:
                # stepping fallback from the last located zero
                step = pi / 8
                s = prev + step / 16 if prev > 0 else mpf(1) / 1000
                fs = f(s)
                if _sign(fs) != want:
                    raise BracketFailureError(
                        f"sign pattern broken left of zero {k} (nu = {nu})"
                    )
                for _ in range(400):
                    nxt = s + step
                    fn = f(nxt)
                    if _sign(fn) == -want:
                        bracket = (s, nxt, fs, fn)
                        break
                    s, fs = nxt, fn
                else:
                    raise BracketFailureError(
                        f"no sign change found for zero {k} (nu = {nu})"
                    )
            z, res = _refine_abs(f, *bracket, xtol)
            if zeros and not z > zeros[-1]:
                raise BracketFailureError(f"zero {k} is not above zero {k - 1}")
            zeros.append(+z)
            residuals.append(+res)
            prev = z
        return ZeroList(
            zeros=tuple(zeros),
            residuals=tuple(residuals),
            family="bessel",
            lambda_mode=MODE_SQUARED,
            precision=prec,
            tol=+xtol,
            tol_kind="absolute",
            note=f"nu = {nu}",
        )


def airy_zeros(count, prec=DEFAULT_PREC):
    """First `count` positive zeros of the Airy-type entire function.

    A forward scan with step 0.35x the last gap (gaps shrink, so no zero
    can be skipped) brackets each zero; bracketed refinement narrows it
    to 10^(-prec/2).
    """
    check_precision(prec)
    if not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > AIRY_COUNT_CAP:
        raise LimitExceededError(f"count {count} exceeds the cap {AIRY_COUNT_CAP}")
    with working(prec, 15):
        f = _make_airy_eval(prec)
        xtol = mpf(10) ** (-(prec // 2))
        zeros = []
        residuals = []
        s = mpf(1) / 10
        fs = f(s)
        if not fs > 0:
            raise BracketFailureError("series is not positive near the origin")
        step = mpf("0.6")
        evals = 0
        while len(zeros) < count:
            nxt = s + step
            fn = f(nxt)
            evals += 1
            if evals > 60 * count + 200:
                raise BracketFailureError("scan budget exhausted")
            if _sign(fn) == -_sign(fs):
                z, res = _refine_abs(f, s, nxt, fs, fn, xtol)
                if zeros:
                    step = (z - zeros[-1]) * mpf("0.35")
                else:
                    step = z * mpf("0.3")
                zeros.append(+z)
                residuals.append(+res)
            s, fs = nxt, fn
        return ZeroList(
            zeros=tuple(zeros),
            residuals=tuple(residuals),
            family="airy",
            lambda_mode=MODE_SQUARED,
            precision=prec,
            tol=+xtol,
            tol_kind="absolute",
        )


def _geometric_zero_scan(f, start, ratio, count, rtol, label):
    """Multiplicative scan; every sign flip is refined geometrically."""
    zeros = []
    residuals = []
    s = start
    fs = f(s)
    if not fs > 0:
        raise BracketFailureError(f"{label}: scan start is not below the first zero")
    budget = 12 * count + 240
    for _ in range(budget):
        if len(zeros) >= count:
            break
        nxt = s * ratio
        fn = f(nxt)
        if _sign(fn) == -_sign(fs):
            z, res = _refine_geometric(f, s, nxt, fs, fn, rtol)
            if zeros and not z > zeros[-1]:
                raise BracketFailureError(f"{label}: zeros out of order")
            zeros.append(+z)
            residuals.append(+res)
        s, fs = nxt, fn
    else:
        raise ScanExhaustedError(
            f"{label}: found {len(zeros)} of {count} zeros within the scan budget"
        )
    return zeros, residuals


def qairy_zeros(q, count, prec=DEFAULT_PREC):
    """First `count` zeros of the q-Airy-type series, 0 < q <= 0.9.

    Zeros grow geometrically (consecutive ratios approach 1/q^2), so the
    scan is multiplicative with ratio sqrt(1/q) and the bracketed
    refinement is geometric; accuracy is 10^(-prec/2) relative, which is what the
    downstream reciprocal sums consume.
    """
    check_precision(prec)
    if not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > Q_COUNT_CAP:
        raise LimitExceededError(f"count {count} exceeds the cap {Q_COUNT_CAP}")
    with working(prec, 15):
        qv = to_real(q, prec)
        if not 0 < qv <= mpf("0.9"):
            raise DomainError(f"q must satisfy 0 < q <= 0.9, got {q}")
        f = _make_qairy_eval(qv, prec)
        rtol = mpf(10) ** (-(prec // 2))
        # first zero is at least (1-q)/q (reciprocal of the first sum)
        start = mpf(2) / 5 * (1 - qv) / qv
        ratio = mp.sqrt(1 / qv)
        zeros, residuals = _geometric_zero_scan(
            f, start, ratio, count, rtol, f"qairy(q={q})"
        )
        return ZeroList(
            zeros=tuple(zeros),
            residuals=tuple(residuals),
            family="qairy",
            lambda_mode=MODE_PLAIN,
            precision=prec,
            tol=+rtol,
            tol_kind="relative",
            note=f"q = {q}",
        )


def qbessel_zeros(nu, q, count, prec=DEFAULT_PREC):
    """First `count` positive zeros of the order-nu q-Bessel-type series.

    The reduced series is entire in x = z^2, so the scan runs in x with
    ratio 1/q (the zero ratios approach 1/q^2 in x) and reported zeros
    are sqrt(x); accuracy is 10^(-prec/2) relative on x.
    """
    check_precision(prec)
    if not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > Q_COUNT_CAP:
        raise LimitExceededError(f"count {count} exceeds the cap {Q_COUNT_CAP}")
    with working(prec, 15):
        qv = to_real(q, prec)
        nuv = to_real(nu, prec)
        if not 0 < qv <= mpf("0.9"):
            raise DomainError(f"q must satisfy 0 < q <= 0.9, got {q}")
        if not nuv > -1:
            raise DomainError(f"q-Bessel order must satisfy nu > -1, got {nu}")
        f = _make_qbessel_eval(nuv, qv, prec)
        rtol = mpf(10) ** (-(prec // 2))
        sigma1 = qv ** (nuv + 1) / (4 * (1 - qv) * (1 - qv ** (nuv + 1)))
        start = mpf(2) / 5 / sigma1
        ratio = 1 / qv
        xs, residuals = _geometric_zero_scan(
            f, start, ratio, count, rtol, f"qbessel(nu={nu},q={q})"
        )
        zeros = [mp.sqrt(x) for x in xs]
        return ZeroList(
            zeros=tuple(zeros),
            residuals=tuple(residuals),
            family="qbessel",
            lambda_mode=MODE_SQUARED,
            precision=prec,
            tol=+rtol,
            tol_kind="relative",
            note=f"nu = {nu}, q = {q}; residuals taken on the x = z^2 series",
        )


def _smooth_zero_count(t):
    # smooth critical-line counting term (T/2pi) ln(T/2pi) - T/2pi + 7/8
    x = t / (2 * math.pi)
    return x * math.log(x) - x + 0.875


def _ordinate_for_count(count):
    t = 20.0
    for _ in range(60):
        x = t / (2 * math.pi)
        g = _smooth_zero_count(t) - count
        dg = math.log(x) / (2 * math.pi)
        if dg <= 0:
            t += 5.0
            continue
        t -= g / dg
        t = max(t, 15.0)
    return t


def xi_zeros(count, prec=DEFAULT_PREC, config=None, chi=None):
    """First `count` positive ordinates where the cosine transform vanishes.

    Scans [10, T] in 0.5 steps (T from the smooth counting term), refines
    inside the bracket at a calibrated quadrature level, and cross-checks the
    found count against the smooth counting term within +-2, rescanning
    once with a halved step on mismatch.  Only positive ordinates are
    reported.  For a Dirichlet kernel (chi set) the scan starts near 0
    and no counting cross-check is available.
    """
    check_precision(prec)
    if not isinstance(count, int) or count < 1:
        raise DomainError(f"count must be a positive integer, got {count!r}")
    if count > XI_COUNT_CAP:
        raise LimitExceededError(f"count {count} exceeds the cap {XI_COUNT_CAP}")
    if config is None:
        config = QuadratureConfig(points=48)
    ev = XiEvaluator(chi=chi, prec=prec, config=config)
    with working(prec, 15):
        if chi is None:
            t_end = _ordinate_for_count(count + 1) + 2.0
            scan_lo = mpf(10)
        else:
            t_end = 18.0 + 3.2 * count
            scan_lo = mpf(1) / 4
        ev.calibrate_transform([t_end, t_end / 2, max(12.0, t_end / 5)])

        def f(z):
            return ev.transform_at(z)[0]

        xtol = mpf(10) ** (-(prec // 2))

        def run_scan(step):
            zeros = []
            residuals = []
            s = scan_lo
            fs = f(s)
            steps_cap = int(float((mpf(t_end) - scan_lo) / step)) + 8
            for _ in range(steps_cap):
                if len(zeros) >= count:
                    break
                nxt = s + step
                fn = f(nxt)
                if _sign(fn) == -_sign(fs) and _sign(fn) != 0:
                    z, res = _refine_abs(f, s, nxt, fs, fn, xtol)
                    zeros.append(+z)
                    residuals.append(+res)
                s, fs = nxt, fn
            return zeros, residuals

        step = mpf(1) / 2
        zeros, residuals = run_scan(step)
        if chi is None and zeros:
            smooth = _smooth_zero_count(float(zeros[-1]) + 0.01)
            if abs(smooth - len(zeros)) > 2:
                zeros, residuals = run_scan(step / 2)
                smooth = _smooth_zero_count(float(zeros[-1]) + 0.01)
                if abs(smooth - len(zeros)) > 2:
                    raise AccuracyError(
                        f"found {len(zeros)} ordinates but the counting term "
                        f"predicts {smooth:.2f}; zeros were likely missed"
                    )
        if len(zeros) < count:
            raise ScanExhaustedError(
                f"located {len(zeros)} of {count} ordinates below {t_end:.1f}"
            )
        return ZeroList(
            zeros=tuple(zeros),
            residuals=tuple(residuals),
            family="xi" if chi is None else "xi-dirichlet",
            lambda_mode=MODE_SQUARED,
            precision=prec,
            tol=+xtol,
            tol_kind="absolute",
            modulus=1 if chi is None else chi.modulus,
            note=f"transform error bound {mp.nstr(ev.transform_at(zeros[0])[1], 3)}",
        )


def tail_estimate(zero_list, n, prec=DEFAULT_PREC):
    """Remainder estimate for the order-n power sum beyond the last zero."""
    check_precision(prec)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"order must be a positive integer, got {n!r}")
    fam = zero_list.family
    with working(prec, 15):
        zs = [to_real(z, prec) for z in zero_list.zeros]
        last = zs[-1]
        if fam == "bessel":
            if len(zs) < 2:
                raise DomainError("bessel tail needs at least two zeros")
            g = min(mp.pi, last - zs[-2])
            value = last ** (1 - 2 * n) / (g * (2 * n - 1))
            return TailEstimate(
                value=+value,
                bound_kind="asymptotic-density",
                confidence_note=(
                    "arithmetic gap model; gap floor from the final computed "
                    "gap and pi (monotone gap behavior)"
                ),
            )
        if fam == "airy":
            k = len(zs)
            c = last / mpf(k) ** (mpf(2) / 3)
            value = 3 * c ** (-2 * n) * mpf(k) ** (-(4 * n - 3) / mpf(3)) / (4 * n - 3)
            return TailEstimate(
                value=+value,
                bound_kind="asymptotic-density",
                confidence_note=(
                    "two-thirds-power growth with empirical constant "
                    "c = z_K / K^(2/3); the constant grows with K, so the "
                    "integral bound is conservative"
                ),
            )
        if fam in ("qairy", "qbessel"):
            if len(zs) < 3:
                raise DomainError("geometric tail needs at least three zeros")
            lam = zero_list.lambdas()
            rho = lam[-1] / lam[-2]
            drift = abs(rho / (lam[-2] / lam[-3]) - 1)
            rho_adj = rho * (1 + 3 * drift)
            if not rho_adj < 1:
                raise AccuracyError("zero ratios have not entered the geometric regime")
            value = lam[-1] ** n * rho_adj**n / (1 - rho_adj**n)
            return TailEstimate(
                value=+value,
                bound_kind="geometric-ratio",
                confidence_note=(
                    "last reciprocal-zero ratio, inflated by 3x its final "
                    "drift to cover monotone convergence of the ratios"
                ),
            )
        if fam in ("xi", "xi-dirichlet"):
            # ordinate density at height t is log(m t / 2 pi) / 2 pi
            base = last ** (1 - 2 * n) / (2 * mp.pi)
            value = base * (
                mp.log(zero_list.modulus * last / (2 * mp.pi)) / (2 * n - 1)
                + mpf(1) / (2 * n - 1) ** 2
            )
            value *= mpf("1.15")
            return TailEstimate(
                value=+value,
                bound_kind="asymptotic-density",
                confidence_note=(
                    "critical-line density integral (smooth counting term with "
                    "the conductor), inflated 15% to cover ordinate fluctuations"
                ),
            )
    raise DomainError(f"no tail model for family {fam!r}")


def truncated_power_sum(zero_list, n, exponent_mode=None, prec=DEFAULT_PREC, tail=None):
    """Order-n power sum over the computed zeros with a two-part bound.

    exponent_mode "squared" sums 1/zero^(2n), "plain" sums 1/zero^n;
    None takes the mode the zero list was built with.  Terms are
    accumulated smallest first (descending zeros).  error_bound is the
    tail estimate plus the propagated zero-location uncertainty (with a
    2x margin), since at large counts the partial sum's own accuracy,
    not the tail, limits the bracket.  The true sum is expected to lie
    in [estimate - error_bound, estimate + error_bound], and because
    truncation always undershoots, in practice in
    [estimate, estimate + error_bound].
    """
    check_precision(prec)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"order must be a positive integer, got {n!r}")
    if exponent_mode is None:
        exponent_mode = zero_list.lambda_mode
    if exponent_mode not in (MODE_SQUARED, MODE_PLAIN):
        raise DomainError(f"unknown exponent mode {exponent_mode!r}")
    if tail is None:
        tail = tail_estimate(zero_list, n, prec)
    with working(prec, 15):
        power = 2 * n if exponent_mode == MODE_SQUARED else n
        acc = mp.zero
        location = mp.zero
        for z in reversed(zero_list.zeros):
            zv = to_real(z, prec)
            term = zv ** (-power)
            acc += term
            if zero_list.tol is not None:
                rel = zero_list.tol / zv if zero_list.tol_kind == "absolute" else zero_list.tol
                location += power * rel * term
        return TruncatedPowerSum(
            estimate=+acc,
            error_bound=+(tail.value + 2 * location),
            order=n,
            tail=tail,
            family=zero_list.family,
        )
