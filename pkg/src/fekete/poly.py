"""Dense univariate polynomials with complex coefficients.

Coefficients are stored in ascending degree order and trailing zeros are
trimmed on construction, so ``degree == len(coeffs) - 1`` and the leading
coefficient is nonzero unless the polynomial is identically zero.  Values are
immutable after construction; everything here is a pure function and safe for
concurrent use.

Root extraction uses companion-matrix eigenvalues refined by a few Newton
steps.  The discriminant is computed from the Sylvester resultant of p and p'
and serves as a small-degree oracle against closed-form discriminants
implemented elsewhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "Poly",
    "roots",
    "discriminant_resultant",
    "pochhammer",
    "log_abs_pochhammer",
]


class Poly:
    """Immutable polynomial c[0] + c[1] x + ... + c[n] x^n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidInputError("coefficients must form a non-empty 1-d sequence")
        last = arr.size - 1
        while last > 0 and arr[last] == 0:
            last -= 1
        arr = arr[: last + 1]
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, ascending degree."""
        return self._coeffs

    @property
    def degree(self) -> int:
        return self._coeffs.size - 1

    @property
    def leading(self) -> complex:
        return complex(self._coeffs[-1])

    def is_zero(self) -> bool:
        return self.degree == 0 and self._coeffs[0] == 0

    def eval(self, z):
        """Evaluate at z (scalar or array) by Horner's nested scheme."""
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self._coeffs[-1], dtype=complex)
        for c in self._coeffs[-2::-1]:
            out = out * z + c
        return complex(out) if out.ndim == 0 else out

    def __call__(self, z):
        return self.eval(z)

    def derivative(self) -> "Poly":
        if self.degree == 0:
            return Poly([0.0])
        k = np.arange(1, self.degree + 1)
        return Poly(self._coeffs[1:] * k)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self._coeffs, other._coeffs
        if a.size < b.size:
            a, b = b, a
        out = a.copy()
        out[: b.size] += b
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(-self._coeffs)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly(np.convolve(self._coeffs, other._coeffs))
        return Poly(self._coeffs * complex(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def shifted_up(self) -> "Poly":
        """Multiply by x."""
        return Poly(np.concatenate(([0.0], self._coeffs)))

    def __repr__(self) -> str:
        return f"Poly(degree={self.degree}, coeffs={np.array2string(self._coeffs, precision=6)})"


def roots(p: Poly, newton_steps: int = 3) -> np.ndarray:
    """All roots of p with multiplicity, sorted by real part then imaginary part.

    Companion-matrix eigenvalues followed by Newton refinement; refinement
    steps are kept only where they do not increase the residual |p(r)|.
    """
    if p.is_zero() or p.degree < 1:
        raise InvalidInputError("root extraction requires a nonzero polynomial of degree >= 1")
    r = np.roots(p.coeffs[::-1])
    dp = p.derivative()
    for _ in range(newton_steps):
        pv = p.eval(r)
        dv = dp.eval(r)
        safe = np.abs(dv) > 0
        step = np.zeros_like(r)
        step[safe] = pv[safe] / dv[safe]
        candidate = r - step
        better = np.abs(p.eval(candidate)) <= np.abs(pv)
        r = np.where(better, candidate, r)
    order = np.lexsort((r.imag, r.real))
    return r[order]


class _GaussRat:
    """Exact complex number with rational real and imaginary parts.

    Floating-point coefficients are dyadic rationals, so lifting them here
    makes the Sylvester determinant exact; double-precision elimination loses
    too many digits to the cancellation inherent in resultants.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction, im: Fraction):
        self.re = re
        self.im = im

    @classmethod
    def from_complex(cls, z: complex) -> "_GaussRat":
        return cls(Fraction(z.real), Fraction(z.imag))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __mul__(self, other: "_GaussRat") -> "_GaussRat":
        return _GaussRat(self.re * other.re - self.im * other.im,
                         self.re * other.im + self.im * other.re)

    def __sub__(self, other: "_GaussRat") -> "_GaussRat":
        return _GaussRat(self.re - other.re, self.im - other.im)

    def __truediv__(self, other: "_GaussRat") -> "_GaussRat":
        norm = other.re * other.re + other.im * other.im
        return _GaussRat((self.re * other.re + self.im * other.im) / norm,
                         (self.im * other.re - self.re * other.im) / norm)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))


def _sylvester(p: Poly, q: Poly) -> list[list[_GaussRat]]:
    m, n = p.degree, q.degree
    zero = _GaussRat(Fraction(0), Fraction(0))
    s = [[zero for _ in range(m + n)] for _ in range(m + n)]
    pc = [_GaussRat.from_complex(c) for c in p.coeffs[::-1]]
    qc = [_GaussRat.from_complex(c) for c in q.coeffs[::-1]]
    for i in range(n):
        s[i][i : i + m + 1] = pc
    for i in range(m):
        s[n + i][i : i + n + 1] = qc
    return s


def _det_bareiss(a: list[list[_GaussRat]]) -> _GaussRat:
    """Fraction-free Gaussian elimination; exact for exact entries."""
    size = len(a)
    sign = 1
    prev = _GaussRat(Fraction(1), Fraction(0))
    for k in range(size - 1):
        if a[k][k].is_zero():
            pivot = next((i for i in range(k + 1, size) if not a[i][k].is_zero()), None)
            if pivot is None:
                return _GaussRat(Fraction(0), Fraction(0))
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    det = a[size - 1][size - 1]
    if sign < 0:
        det = _GaussRat(Fraction(0), Fraction(0)) - det
    return det


def discriminant_resultant(p: Poly) -> complex:
    """Discriminant of p via the Sylvester resultant of p and p'.

    Equals gamma^(2n-2) * prod_{j<k} (r_j - r_k)^2 over the roots r of p with
    leading coefficient gamma; in particular the squared root-gap product for
    monic p.  The determinant is evaluated exactly (Bareiss elimination over
    the rational re/im parts of the coefficients), so the only error is the
    final conversion to a double.  Intended as a small-degree oracle
    (degree <= 8 keeps the exact arithmetic cheap).
    """
    n = p.degree
    if p.is_zero() or n < 2:
        raise InvalidInputError("discriminant requires degree >= 2 and a nonzero leading coefficient")
    res = _det_bareiss(_sylvester(p, p.derivative())).to_complex()
    sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    return complex(sign * res / p.leading)


def pochhammer(t: float, n: int) -> float:
    """Rising factorial t (t+1) ... (t+n-1); the empty product (n = 0) is 1."""
    if n < 0:
        raise InvalidInputError("pochhammer requires n >= 0")
    out = 1.0
    for i in range(n):
        out *= t + i
    return out


def log_abs_pochhammer(t: float, n: int) -> tuple[float, int]:
    """Return (log |(t)_n|, sign) with sign in {-1, 0, +1}.

    Keeps magnitudes representable for large n where the plain product would
    overflow; sign 0 (with log -inf) flags a zero factor.
    """
    if n < 0:
        raise InvalidInputError("pochhammer requires n >= 0")
    log = 0.0
    sign = 1
    for i in range(n):
        f = t + i
        if f == 0:
            return -math.inf, 0
        log += math.log(abs(f))
        if f < 0:
            sign = -sign
    return log, sign
