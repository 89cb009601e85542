"""Smooth bumps, Fourier transforms, and oscillatory-integral bounds.

The two canonical bumps:

    psi: supported on [1/2, 5/2], identically 1 on [1, 2]
    phi: supported on [-2, 2],   identically 1 on [-1, 1]

Both are built from the C-infinity ramp

    sigma(t) = exp(-1/t) / (exp(-1/t) + exp(-1/(1-t)))

rising from 0 at t=0 to 1 at t=1. Derivatives up to order 10 are computed
exactly by Taylor-jet arithmetic: exp(-1/t) has j-th derivative
exp(-1/t) * P_j(1/t) for an integer polynomial family P_j, and the quotient
is expanded by power-series division at the evaluation point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import factorial
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from .parallel import pairwise_sum

KMAX_DERIVATIVE = 10

_RAMP_CUT = 0.005  # below this the ramp and all its derivatives underflow

TWO_PI = 2.0 * math.pi

_MAX_PANELS = 8192


class QuadratureError(ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""

    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error {achieved:.3e})")
        self.achieved = achieved


class RejectedSpecError(ValueError):
    """Sampled hypotheses of a bound check failed; the spec is rejected."""


class BoundViolationError(AssertionError):
    """An explicit-constant oscillatory bound was violated."""


# ---------------------------------------------------------------------------
# the C-infinity ramp and its jets
# ---------------------------------------------------------------------------

def _build_exp_inv_polys(kmax: int) -> list[list[int]]:
    # P_0 = 1, P_{j+1}(s) = s^2 (P_j(s) - P_j'(s));  d^j/dt^j exp(-1/t)
    # equals exp(-1/t) * P_j(1/t)
    polys = [[1]]
    for _ in range(kmax):
        p = polys[-1]
        dp = [i * p[i] for i in range(1, len(p))]
        diff = [p[i] - (dp[i] if i < len(dp) else 0) for i in range(len(p))]
        polys.append([0, 0] + diff)
    return polys


_EXP_INV_POLYS = _build_exp_inv_polys(KMAX_DERIVATIVE)


def _polyval(coeffs: list[int], s: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc


def _exp_inv_taylor(t: float, order: int) -> list[float]:
    # Taylor coefficients of u(s) = exp(-1/s) at s = t
    u = math.exp(-1.0 / t)
    s = 1.0 / t
    return [u * _polyval(_EXP_INV_POLYS[j], s) / factorial(j) for j in range(order + 1)]


def _series_divide(num: list[float], den: list[float]) -> list[float]:
    out: list[float] = []
    for n in range(len(num)):
        acc = num[n]
        for i in range(n):
            acc -= out[i] * den[n - i]
        out.append(acc / den[0])
    return out


def _ramp_taylor(t: float, order: int) -> list[float]:
    if t <= _RAMP_CUT:
        return [0.0] * (order + 1)
    if t >= 1.0 - _RAMP_CUT:
        return [1.0] + [0.0] * order
    if t > 0.5:
        # sigma(t) = 1 - sigma(1-t); keeps the exp arguments well conditioned
        mirror = _ramp_taylor(1.0 - t, order)
        out = [((-1.0) ** (j + 1)) * mirror[j] for j in range(order + 1)]
        out[0] += 1.0
        return out
    u = _exp_inv_taylor(t, order)
    g = _exp_inv_taylor(1.0 - t, order)
    v = [g[j] * ((-1.0) ** j) for j in range(order + 1)]
    w = [u[j] + v[j] for j in range(order + 1)]
    return _series_divide(u, w)


def ramp_derivative(t: float, order: int = 0) -> float:
    """order-th derivative of the canonical ramp sigma at t."""
    if not 0 <= order <= KMAX_DERIVATIVE:
        raise ValueError(f"derivative order must be in [0, {KMAX_DERIVATIVE}]")
    if t <= 0.0:
        return 0.0
    if t >= 1.0:
        return 1.0 if order == 0 else 0.0
    return _ramp_taylor(t, order)[order] * factorial(order)


# ---------------------------------------------------------------------------
# smooth bumps
# ---------------------------------------------------------------------------

class SmoothBump:
    """A plateau bump with two C-infinity monotone ramps."""

    def __init__(self, kind: str):
        if kind == "psi":
            self.support = (0.5, 2.5)
            self.plateau = (1.0, 2.0)
        elif kind == "phi":
            self.support = (-2.0, 2.0)
            self.plateau = (-1.0, 1.0)
        else:
            raise ValueError(f"unknown bump kind {kind!r}")
        self.kind = kind
        lo, hi = self.support
        p0, p1 = self.plateau
        self._rise_scale = 1.0 / (p0 - lo)
        self._fall_scale = 1.0 / (hi - p1)

    @property
    def monotone_pieces(self) -> int:
        return 2

    def derivative(self, x: float, order: int = 0) -> float:
        if not 0 <= order <= KMAX_DERIVATIVE:
            raise ValueError(f"derivative order must be in [0, {KMAX_DERIVATIVE}]")
        lo, hi = self.support
        p0, p1 = self.plateau
        if x <= lo or x >= hi:
            return 0.0
        if p0 <= x <= p1:
            return 1.0 if order == 0 else 0.0
        if x < p0:
            t = (x - lo) * self._rise_scale
            return ramp_derivative(t, order) * self._rise_scale**order
        t = (hi - x) * self._fall_scale
        return ramp_derivative(t, order) * (-self._fall_scale) ** order

    def __call__(self, x: float) -> float:
        return self.derivative(x, 0)


PSI = SmoothBump("psi")
PHI = SmoothBump("phi")


def bump_eval(kind: str, x: float, order: int = 0) -> float:
    """Value (order 0) or derivative of the canonical psi/phi bump."""
    if kind == "psi":
        return PSI.derivative(x, order)
    if kind == "phi":
        return PHI.derivative(x, order)
    raise ValueError(f"unknown bump kind {kind!r}")


# ---------------------------------------------------------------------------
# Fourier transform over R:  fhat(k) = int f(u) e(-k u) du,  e(x) = exp(2 pi i x)
# ---------------------------------------------------------------------------

def _pieces(support, breakpoints):
    lo, hi = support
    cuts = sorted({float(c) for c in breakpoints or () if lo < c < hi})
    edges = [float(lo), *cuts, float(hi)]
    return list(zip(edges[:-1], edges[1:]))


def _ft_raw(func, pieces, k: float, tol: float):
    # int func(u) e(-k u) du over the given smooth pieces
    omega = TWO_PI * abs(k)
    eps = tol / (4 * len(pieces))
    total = 0.0 + 0.0j
    err = 0.0
    for a, b in pieces:
        if omega == 0.0:
            re, ere = quad(func, a, b, epsabs=eps, epsrel=1e-12, limit=300)
            im, eim = 0.0, 0.0
        else:
            re, ere = quad(func, a, b, weight="cos", wvar=omega,
                           epsabs=eps, epsrel=1e-12, limit=300)
            im, eim = quad(func, a, b, weight="sin", wvar=omega,
                           epsabs=eps, epsrel=1e-12, limit=300)
        if k < 0:
            im = -im
        total += complex(re, -im)
        err += ere + eim
    return total, err


def fourier_transform(f, k: float, support=None, tol: float = 1e-10,
                      breakpoints=None) -> complex:
    """Fourier transform of a compactly supported integrable f at frequency k.

    For the canonical smooth bumps at large |k| the integral is first
    integrated by parts four times (with exact bump derivatives), pulling out
    the real factor (2 pi k)^(-4), which keeps the oscillatory quadrature at
    full relative accuracy.
    """
    is_bump = isinstance(f, SmoothBump)
    if support is None:
        if not is_bump:
            raise ValueError("support interval required for non-bump functions")
        support = f.support
    if breakpoints is None and is_bump:
        breakpoints = f.plateau
    pieces = _pieces(support, breakpoints)

    if is_bump and abs(k) >= 4.0:
        scale = 1.0 / (TWO_PI * k) ** 4
        raw, err = _ft_raw(lambda u: f.derivative(u, 4), pieces, k, tol / scale)
        val, err = raw * scale, err * scale
    else:
        val, err = _ft_raw(f, pieces, k, tol)
    if err > tol:
        raise QuadratureError(f"fourier_transform did not converge at k={k}", achieved=err)
    return val


# ---------------------------------------------------------------------------
# oscillatory integrals  int_a^b G(x) exp(i F(x)) dx
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhaseSpec:
    """Phase/amplitude data for one oscillatory integral on [a, b]."""

    f: Callable[[float], float]        # phase F
    df: Callable[[float], float]       # F'
    g: Callable[[float], float]        # amplitude G
    a: float
    b: float
    amp_bound: float                   # M >= sup |G|
    d2f: Callable[[float], float] | None = None  # F'' when available
    g_pieces: int = 1                  # monotone pieces of G

    def __post_init__(self):
        if not self.a < self.b:
            raise ValueError("interval must satisfy a < b")
        if self.amp_bound < 0:
            raise ValueError("amplitude bound must be nonnegative")
        if self.g_pieces < 1:
            raise ValueError("g_pieces must be >= 1")


@dataclass(frozen=True)
class OscillatoryResult:
    value: complex
    error: float
    panels: int

    def __abs__(self) -> float:
        return abs(self.value)


def oscillatory_integral(spec: PhaseSpec, tol: float = 1e-8) -> OscillatoryResult:
    """Adaptive quadrature of int G e^{iF}; panels are chosen from the
    sampled phase derivative so each holds at most a few oscillations."""
    xs = np.linspace(spec.a, spec.b, 2049)
    dphi = np.abs([spec.df(float(x)) for x in xs])
    cum = np.concatenate([[0.0], np.cumsum((dphi[1:] + dphi[:-1]) * 0.5 * np.diff(xs))])
    total_phase = float(cum[-1])
    n_panels = max(1, int(math.ceil(total_phase / (8.0 * math.pi))))
    if n_panels > _MAX_PANELS:
        raise QuadratureError(
            f"phase varies too fast: {n_panels} panels needed", achieved=float("inf")
        )
    targets = np.linspace(0.0, total_phase, n_panels + 1)
    idx = np.searchsorted(cum, targets[1:-1])
    edges = [spec.a, *[float(xs[min(i, len(xs) - 1)]) for i in idx], spec.b]
    edges = sorted(set(edges))

    eps = tol / (4 * max(1, len(edges) - 1))
    re_parts, im_parts, err = [], [], 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        re, ere = quad(lambda x: spec.g(x) * math.cos(spec.f(x)), a, b,
                       epsabs=eps, epsrel=1e-10, limit=200)
        im, eim = quad(lambda x: spec.g(x) * math.sin(spec.f(x)), a, b,
                       epsabs=eps, epsrel=1e-10, limit=200)
        re_parts.append(re)
        im_parts.append(im)
        err += ere + eim
    value = complex(pairwise_sum(re_parts), pairwise_sum(im_parts))
    if err > tol:
        raise QuadratureError("oscillatory integral did not converge", achieved=err)
    return OscillatoryResult(value=value, error=err, panels=len(edges) - 1)


# ---------------------------------------------------------------------------
# explicit-constant bound checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCheckReport:
    label: str
    observed: float
    bound: float
    quadrature_error: float
    passed: bool


def _sample(fn, a, b, n):
    return np.array([fn(float(x)) for x in np.linspace(a, b, n)])


def _is_monotone(values: np.ndarray, slack: float) -> bool:
    d = np.diff(values)
    return bool(np.all(d >= -slack) or np.all(d <= slack))


def _count_monotone_pieces(values: np.ndarray, slack: float) -> int:
    d = np.diff(values)
    signs = [1 if v > slack else -1 if v < -slack else 0 for v in d]
    pieces, current = 1, 0
    for s in signs:
        if s == 0:
            continue
        if current == 0:
            current = s
        elif s != current:
            pieces += 1
            current = s
    return pieces


def check_first_derivative_bound(spec: PhaseSpec, m: float, samples: int = 4001,
                                 strict: bool = True) -> BoundCheckReport:
    """Monotone-amplitude, nonvanishing-phase-derivative bound
    |int G e^{iF}| <= 4 M / m.

    Hypotheses are verified by dense sampling; inputs failing them are
    rejected rather than asserted.
    """
    if m <= 0:
        raise ValueError("m must be positive")
    g_vals = _sample(spec.g, spec.a, spec.b, samples)
    slack = 1e-12 * (1.0 + float(np.max(np.abs(g_vals))))
    if not _is_monotone(g_vals, slack):
        raise RejectedSpecError("G is not monotonic on [a, b]")
    if np.min(g_vals) < -slack or np.max(g_vals) > spec.amp_bound + slack:
        raise RejectedSpecError("G leaves [0, M]")
    df_vals = _sample(spec.df, spec.a, spec.b, samples)
    if not (np.all(df_vals > m) or np.all(df_vals < -m)):
        raise RejectedSpecError("F' does not stay one-signed above m")
    result = oscillatory_integral(spec)
    bound = 4.0 * spec.amp_bound / m
    observed = abs(result.value)
    passed = observed <= bound + result.error + 1e-12
    report = BoundCheckReport("first-derivative 4M/m", observed, bound, result.error, passed)
    if strict and not passed:
        raise BoundViolationError(f"|I| = {observed} exceeds 4M/m = {bound}")
    return report


def check_second_derivative_bound(spec: PhaseSpec, r: float, pieces: int | None = None,
                                  samples: int = 4001, strict: bool = True) -> BoundCheckReport:
    """Convex/concave-phase bound |int G e^{iF}| <= 8 K M / sqrt(r) for
    piecewise-monotone G with K pieces."""
    if r <= 0:
        raise ValueError("r must be positive")
    if spec.d2f is None:
        raise ValueError("spec must provide F'' for the second-derivative bound")
    k_pieces = spec.g_pieces if pieces is None else pieces
    g_vals = _sample(spec.g, spec.a, spec.b, samples)
    slack = 1e-12 * (1.0 + float(np.max(np.abs(g_vals))))
    if np.min(g_vals) < -slack or np.max(g_vals) > spec.amp_bound + slack:
        raise RejectedSpecError("G leaves [0, M]")
    if _count_monotone_pieces(g_vals, slack) > k_pieces:
        raise RejectedSpecError(f"G has more than {k_pieces} monotone pieces")
    d2_vals = _sample(spec.d2f, spec.a, spec.b, samples)
    if not (np.all(d2_vals > r) or np.all(d2_vals < -r)):
        raise RejectedSpecError("F'' does not stay one-signed above r")
    result = oscillatory_integral(spec)
    bound = 8.0 * k_pieces * spec.amp_bound / math.sqrt(r)
    observed = abs(result.value)
    passed = observed <= bound + result.error + 1e-12
    report = BoundCheckReport("second-derivative 8KM/sqrt(r)", observed, bound,
                              result.error, passed)
    if strict and not passed:
        raise BoundViolationError(f"|I| = {observed} exceeds 8KM/sqrt(r) = {bound}")
    return report


@dataclass(frozen=True)
class DecayReport:
    order: int
    phis: tuple[float, ...]
    observed: tuple[float, ...]      # |I| per family member
    quantities: tuple[float, ...]    # (b-a)^(1-N) * Phi^(-N)
    ratios: tuple[float, ...]
    fitted_constant: float


def check_nonstationary_decay(specs: Sequence[PhaseSpec], order: int,
                              hyp_constant: float = 10.0,
                              samples: int = 2001) -> DecayReport:
    """Repeated integration-by-parts decay: |int e^{iF} W| against
    (b-a)^(1-N) Phi^(-N) across a family with growing Phi = inf |F'|.

    Scale hypotheses (W and F derivatives bounded on the interval scale,
    relative to Phi) are verified by sampling with the given constant.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    phis, observed, quantities, ratios = [], [], [], []
    for spec in specs:
        length = spec.b - spec.a
        df_vals = _sample(spec.df, spec.a, spec.b, samples)
        phi = float(np.min(np.abs(df_vals)))
        if phi <= 0.0:
            raise RejectedSpecError("F' vanishes; Phi must be positive")
        if float(np.max(np.abs(df_vals))) > hyp_constant * phi:
            raise RejectedSpecError("F' is not comparable to Phi on the interval")
        if spec.d2f is not None:
            d2_vals = _sample(spec.d2f, spec.a, spec.b, samples)
            if float(np.max(np.abs(d2_vals))) * length > hyp_constant * phi:
                raise RejectedSpecError("F'' violates the scale hypothesis")
        g_vals = _sample(spec.g, spec.a, spec.b, samples)
        if float(np.max(np.abs(g_vals))) > hyp_constant:
            raise RejectedSpecError("W violates the scale hypothesis at order 0")
        step = length / (samples - 1)
        w1 = np.diff(g_vals) / step
        if float(np.max(np.abs(w1))) * length > hyp_constant * 1.5:
            raise RejectedSpecError("W' violates the scale hypothesis")
        result = oscillatory_integral(spec)
        quantity = length ** (1 - order) * phi ** (-order)
        phis.append(phi)
        observed.append(abs(result.value))
        quantities.append(quantity)
        ratios.append(abs(result.value) / quantity)
    return DecayReport(
        order=order,
        phis=tuple(phis),
        observed=tuple(observed),
        quantities=tuple(quantities),
        ratios=tuple(ratios),
        fitted_constant=max(ratios),
    )


# ---------------------------------------------------------------------------
# randomized spec families (seeded; used by the verification campaigns)
# ---------------------------------------------------------------------------

def random_first_derivative_spec(rng) -> tuple[PhaseSpec, float]:
    """A random spec satisfying the monotone-amplitude hypotheses, plus its m."""
    a = rng.uniform(0.0, 2.0)
    b = a + rng.uniform(0.5, 3.0)
    alpha = rng.uniform(0.5, 30.0)
    beta = rng.uniform(0.0, 10.0)
    sign = rng.choice((-1.0, 1.0))
    f = lambda x: sign * (alpha * x + beta * x**3)
    df = lambda x: sign * (alpha + 3.0 * beta * x * x)
    ga = rng.uniform(0.0, 3.0)
    gb = rng.uniform(0.0, 3.0)
    slope = (gb - ga) / (b - a)
    g = lambda x: ga + slope * (x - a)
    m_floor = alpha + 3.0 * beta * a * a
    spec = PhaseSpec(f=f, df=df, g=g, a=a, b=b, amp_bound=max(ga, gb))
    return spec, 0.999 * m_floor


def random_second_derivative_spec(rng) -> tuple[PhaseSpec, float]:
    """A random spec with one-signed F'' and piecewise-monotone G, plus its r."""
    a = rng.uniform(-2.0, 1.0)
    b = a + rng.uniform(0.5, 2.5)
    gamma = rng.uniform(2.0, 200.0)
    delta = rng.uniform(-50.0, 50.0)
    sign = rng.choice((-1.0, 1.0))
    f = lambda x: sign * (0.5 * gamma * x * x + delta * x)
    df = lambda x: sign * (gamma * x + delta)
    d2f = lambda x: sign * gamma
    k_pieces = rng.randint(1, 3)
    knots_x = np.linspace(a, b, k_pieces + 1)
    knots_y = [rng.uniform(0.0, 3.0) for _ in range(k_pieces + 1)]

    def g(x, kx=knots_x, ky=knots_y):
        return float(np.interp(x, kx, ky))

    spec = PhaseSpec(f=f, df=df, d2f=d2f, g=g, a=a, b=b,
                     amp_bound=max(knots_y), g_pieces=k_pieces)
    return spec, 0.999 * gamma
