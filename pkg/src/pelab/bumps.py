"""Quintic smoothstep profiles and plateau windows.

All localized weights in this package (test windows, cutoff plateaus, the
boundary collar profile) are built from the same C^2 quintic smoothstep,
so their maximum slopes are known in closed form: the unit smoothstep has
max slope 15/8 at the midpoint.
"""

import numpy as np

SMOOTHSTEP_MAX_SLOPE = 15.0 / 8.0


def smoothstep(t):
    """Quintic smoothstep: 0 for t<=0, 1 for t>=1, C^2 at both ends."""
    t = np.clip(t, 0.0, 1.0)
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t))


def smoothstep_deriv(t):
    t = np.asarray(t, dtype=float)
    inside = (t > 0.0) & (t < 1.0)
    tc = np.clip(t, 0.0, 1.0)
    d = 30.0 * tc * tc * (1.0 - tc) ** 2
    return np.where(inside, d, 0.0)


def plateau(s, a, b, c, d):
    """Window equal to 1 on [b, c], 0 outside (a, d), smoothstep in between.

    Requires a < b <= c < d.  C^2 everywhere, values in [0, 1].
    """
    if not (a < b <= c < d):
        raise ValueError(f"plateau breakpoints must satisfy a < b <= c < d, got {(a, b, c, d)}")
    s = np.asarray(s, dtype=float)
    rise = smoothstep((s - a) / (b - a))
    fall = smoothstep((d - s) / (d - c))
    return rise * fall


def plateau_deriv(s, a, b, c, d):
    """Analytic derivative of :func:`plateau` (used by energy-flux oracles)."""
    s = np.asarray(s, dtype=float)
    rise = smoothstep((s - a) / (b - a))
    fall = smoothstep((d - s) / (d - c))
    drise = smoothstep_deriv((s - a) / (b - a)) / (b - a)
    dfall = -smoothstep_deriv((d - s) / (d - c)) / (d - c)
    return drise * fall + rise * dfall
