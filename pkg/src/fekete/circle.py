"""Closed-form weighted Fekete points on the unit circle.

The weight is w(z) = 1/|z - b| with a real charge location b != +-1.  The
self-inverse Moebius map phi(w) = (bw - 1)/(w - b) preserves the unit circle
and carries chord lengths so that the weighted Vandermonde product of
phi-images equals the unweighted one of the preimages up to the constant
|1 - b^2|.  Consequently every maximizer is the phi-image of n equally spaced
points, with one free rotation alpha, and the weighted n-th diameter is
n^(1/(n-1)) / |1 - b^2|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

__all__ = ["CircleWeight", "CircleSolution", "mobius", "circle_points", "circle_diameter"]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CircleWeight:
    """Weight w(z) = 1/|z - b| on the unit circle, b real with |b| != 1."""

    b: float

    def __post_init__(self):
        b = float(self.b)
        if abs(b) == 1.0:
            raise InvalidInputError("charge location b = +-1 sits on the circle; excluded")
        object.__setattr__(self, "b", b)

    def log_w(self, angles):
        """log w(e^{it}) = -(1/2) log(1 - 2b cos t + b^2), vectorized over angles."""
        t = np.asarray(angles, dtype=float)
        return -0.5 * np.log(1.0 - 2.0 * self.b * np.cos(t) + self.b * self.b)


@dataclass(frozen=True)
class CircleSolution:
    """A weighted Fekete set on the circle: free phase, points, sorted angles.

    Points are reported sorted by angle; angles live in [0, 2 pi).  Applying
    the (involutive) Moebius map to the points recovers preimages whose
    arguments are equally spaced with gap 2 pi / n.
    """

    alpha: float
    points: tuple[complex, ...]
    angles: tuple[float, ...]


def mobius(b: float, w):
    """phi(w) = (bw - 1)/(w - b): a self-inverse bijection of the unit circle.

    Accepts scalars or arrays; w = b (the pole) is rejected, which cannot
    happen for |w| = 1 and |b| != 1.
    """
    b = CircleWeight(b).b
    w_arr = np.asarray(w, dtype=complex)
    if np.any(w_arr == b):
        raise InvalidInputError(f"mobius pole: w = b = {b}")
    out = (b * w_arr - 1.0) / (w_arr - b)
    return complex(out) if out.ndim == 0 else out


def circle_points(b: float, n: int, alpha: float = 0.0) -> CircleSolution:
    """Fekete set {phi(e^{i(alpha + 2 pi k/n)}), k = 0..n-1}; any alpha is optimal."""
    weight = CircleWeight(b)
    if int(n) != n or n < 2:
        raise InvalidInputError(f"n must be an integer >= 2, got {n!r}")
    n = int(n)
    alpha = float(alpha)
    pre = np.exp(1j * (alpha + TWO_PI * np.arange(n) / n))
    pts = mobius(weight.b, pre)
    angles = np.mod(np.angle(pts), TWO_PI)
    order = np.argsort(angles)
    return CircleSolution(
        alpha=alpha,
        points=tuple(complex(z) for z in pts[order]),
        angles=tuple(float(t) for t in angles[order]),
    )


def circle_diameter(b: float, n: int) -> float:
    """Weighted n-th diameter on the circle: n^(1/(n-1)) / |1 - b^2|."""
    weight = CircleWeight(b)
    if int(n) != n or n < 2:
        raise InvalidInputError(f"n must be an integer >= 2, got {n!r}")
    n = int(n)
    return n ** (1.0 / (n - 1)) / abs(1.0 - weight.b * weight.b)
