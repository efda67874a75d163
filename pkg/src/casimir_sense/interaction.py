"""Casimir-Polder level shifts, decay rates and the motion-coupling gradient.

All quantities derive from the reflected Green's-function trace:

    ground shift      dw_g = (c Gamma0 / w0^2) Int_0^inf du u^2/(w0^2+u^2)
                                                  Tr G(d, d, iu)
    excited shift     dw_e = -dw_g - (Gamma0 pi c / w0) Re Tr G(d, d, w0)
    total decay       Gamma = Gamma0 + (2 Gamma0 pi c / w0) Im Tr G(d, d, w0)

with the radiative/non-radiative split of Gamma by the light-line partition
of the k_par integral (propagating vs evanescent).

The ground-shift prefactor here is c Gamma0/w0^2, i.e. the standard isotropic
two-level result (it reproduces the textbook -Gamma0/16 (k0 d)^-3 perfect-
mirror limit and is the only choice consistent with the decay-rate formula
above, which is anchored by Gamma(free space) = Gamma0).

The semi-infinite u integral is evaluated with the substitution u = w0 tan(t)
and adaptive refinement; the transition gradient is a Richardson-extrapolated
central difference in d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS, PhysicalConstants
from .graphene import _sigma_ec, FrequencyAxis
from .greens import _trace_imag_scaled, trace_green_real_parts
from .params import EmitterParams, GrapheneParams, ScenarioParams
from .quadrature import clip_edges, integrate_refined

#: relative tolerance of the outer (frequency) integral
_U_RTOL = 1e-8


class NumericsError(RuntimeError):
    """A shift/gradient evaluation failed to reach its error target."""


@dataclass(frozen=True)
class InteractionResult:
    """Shifts and decay rates of the emitter at distance d (all rad/s)."""

    d: float
    delta_g: float
    delta_e: float
    delta_omega: float      # delta_e - delta_g
    gamma: float
    gamma_rad: float
    gamma_nonrad: float


@dataclass(frozen=True)
class CouplingGradient:
    """d(delta_omega)/dd with a Richardson error estimate."""

    d: float
    g_value: float          # rad/s per m (signed)
    stencil_step: float     # m
    error_estimate: float   # rad/s per m


def ground_shift(d: float, e: EmitterParams, g: GrapheneParams,
                 constants: PhysicalConstants = CONSTANTS) -> float:
    """Ground-state Casimir-Polder shift dw_g(d) in rad/s (negative)."""
    if d <= 0:
        raise ValueError("d must be positive")
    if g.sigma_zero:
        return 0.0
    w0 = e.omega0
    c = constants.c

    def integrand(theta):
        out = np.empty_like(theta)
        for i, th in enumerate(theta):
            u = w0 * math.tan(th)
            s = float(np.real(_sigma_ec(FrequencyAxis.IMAG, u, g, constants)))
            zb = d * u / c
            t_val = _trace_imag_scaled(zb, s)
            out[i] = (math.tan(th) / math.cos(th) ** 2) \
                * math.sin(th) ** 2 * t_val
        return out

    # knees of the integrand: intraband loss, interband edge, weight, kernel
    u_edges = [g.gamma_g, 2.0 * g.mu, w0, c / (2.0 * d), 4.0 * c / d]
    u_max = 40.0 * c / d
    theta_edges = clip_edges([math.atan(u / w0) for u in u_edges if u > 0],
                             0.0, math.atan(u_max / w0))
    val, _ = integrate_refined(integrand, theta_edges, rtol=_U_RTOL)
    return e.gamma0 * float(val)


def excited_shift(d: float, e: EmitterParams, g: GrapheneParams,
                  constants: PhysicalConstants = CONSTANTS) -> float:
    """Excited-state shift dw_e(d) = -dw_g - (Gamma0 pi c/w0) Re Tr G(w0)."""
    dg = ground_shift(d, e, g, constants)
    prop, evan = trace_green_real_parts(d, e.omega0, g, constants)
    resonant = e.gamma0 * math.pi * constants.c / e.omega0 * (prop + evan).real
    return -dg - resonant


def decay_rates(d: float, e: EmitterParams, g: GrapheneParams,
                constants: PhysicalConstants = CONSTANTS) -> InteractionResult:
    """Full interaction result at distance d (shifts and decay channels).

    Gamma_rad keeps the free-space Gamma0 plus the propagating-sector
    interference; Gamma_nonrad is the evanescent sector (plasmons and
    absorption).  Gamma is their sum by construction.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    dg = ground_shift(d, e, g, constants)
    prop, evan = trace_green_real_parts(d, e.omega0, g, constants)
    scale = 2.0 * e.gamma0 * math.pi * constants.c / e.omega0
    gamma_rad = e.gamma0 + scale * prop.imag
    gamma_nonrad = scale * evan.imag
    de = -dg - 0.5 * scale * (prop + evan).real
    return InteractionResult(
        d=d, delta_g=dg, delta_e=de, delta_omega=de - dg,
        gamma=gamma_rad + gamma_nonrad,
        gamma_rad=gamma_rad, gamma_nonrad=gamma_nonrad,
    )


def transition_shift(d: float, e: EmitterParams, g: GrapheneParams,
                     constants: PhysicalConstants = CONSTANTS) -> float:
    """Transition shift delta_omega(d) = dw_e - dw_g in rad/s."""
    dg = ground_shift(d, e, g, constants)
    prop, evan = trace_green_real_parts(d, e.omega0, g, constants)
    resonant = e.gamma0 * math.pi * constants.c / e.omega0 * (prop + evan).real
    return -2.0 * dg - resonant


def transition_gradient(d: float, e: EmitterParams, g: GrapheneParams,
                        constants: PhysicalConstants = CONSTANTS,
                        rel_step: float = 0.01) -> CouplingGradient:
    """d(delta_omega)/dd by Richardson-extrapolated central differences.

    The step starts at d * rel_step and is halved until the extrapolation
    correction drops below 1% of the gradient; failing that, NumericsError.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    if g.sigma_zero:
        return CouplingGradient(d=d, g_value=0.0, stencil_step=d * rel_step,
                                error_estimate=0.0)
    h = d * rel_step
    for _ in range(3):
        if d - h <= 0:
            raise NumericsError("stencil step underflows the distance")
        f = {dd: transition_shift(dd, e, g, constants)
             for dd in (d + h, d - h, d + h / 2, d - h / 2)}
        coarse = (f[d + h] - f[d - h]) / (2.0 * h)
        fine = (f[d + h / 2] - f[d - h / 2]) / h
        value = (4.0 * fine - coarse) / 3.0
        estimate = abs(value - fine)
        if estimate <= 0.01 * abs(value):
            return CouplingGradient(d=d, g_value=value, stencil_step=h,
                                    error_estimate=estimate)
        h *= 0.5
    raise NumericsError("gradient extrapolation did not converge")


def scattering_rate_map(d: float, omega_l: float, s: ScenarioParams) -> float:
    """Radiative scattering rate f(d, omega_L)/f0 for weak excitation.

    f = Gamma_rad (Omega/2)^2 / ((Gamma/2)^2 + (w0 + dw - omega_L)^2),
    normalized by the free-space resonant rate f0 = Omega^2/Gamma0; the Rabi
    frequency cancels.  Shifts and rates are evaluated at the emitter
    resonance.
    """
    ir = decay_rates(d, s.emitter, s.graphene, s.constants)
    detune = s.emitter.omega0 + ir.delta_omega - omega_l
    return (ir.gamma_rad * s.emitter.gamma0 / 4.0) \
        / ((ir.gamma / 2.0) ** 2 + detune**2)
