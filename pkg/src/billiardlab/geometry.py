"""Strictly convex planar boundary curves.

Curves are represented through their support function H(theta), theta being
the outward-normal angle.  Strict convexity is then the pointwise condition
H + H'' > 0, and H + H'' is the curvature radius.  Arclength is the canonical
boundary coordinate for everything downstream; all angles are radians.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy.special import ellipe, ellipeinc

from .errors import ConvexityViolation

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Frame:
    """Boundary data at one point: position, unit tangent, inward normal, curvature."""

    position: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray
    curvature: float


class BoundaryCurve:
    """Closed strictly convex curve defined by a finite support-function series.

    H(theta) = cos_coeffs[0] + sum_k cos_coeffs[k] cos(k theta)
                             + sum_k sin_coeffs[k] sin(k theta)

    Parameters
    ----------
    cos_coeffs, sin_coeffs : array_like
        Trigonometric coefficients of H; sin_coeffs[0] is ignored.
    grid : int
        Number of theta nodes for the arclength lookup table.
    """

    kind = "support"

    def __init__(self, cos_coeffs, sin_coeffs=None, grid=4096):
        a = np.atleast_1d(np.asarray(cos_coeffs, dtype=float)).copy()
        if sin_coeffs is None:
            b = np.zeros_like(a)
        else:
            b = np.atleast_1d(np.asarray(sin_coeffs, dtype=float)).copy()
        n = max(a.size, b.size)
        self.cos_coeffs = np.zeros(n)
        self.sin_coeffs = np.zeros(n)
        self.cos_coeffs[: a.size] = a
        self.sin_coeffs[: b.size] = b
        self.sin_coeffs[0] = 0.0
        self.grid = int(grid)
        self._k = np.arange(n, dtype=float)
        self._certify_convexity()
        self._build_tables()

    # -- support function and derivatives ------------------------------------

    def _trig_eval(self, theta, ca, cb):
        theta = np.asarray(theta, dtype=float)
        kt = np.multiply.outer(theta, self._k)
        return np.cos(kt) @ ca + np.sin(kt) @ cb

    def support(self, theta):
        return self._trig_eval(theta, self.cos_coeffs, self.sin_coeffs)

    def support_derivative(self, theta, order=1):
        k = self._k
        ca, cb = self.cos_coeffs, self.sin_coeffs
        for _ in range(order):
            ca, cb = k * cb, -k * ca
        return self._trig_eval(theta, ca, cb)

    def curvature_radius(self, theta):
        """H + H'' at the outward-normal angle theta."""
        w = 1.0 - self._k**2
        return self._trig_eval(theta, w * self.cos_coeffs, w * self.sin_coeffs)

    def _certify_convexity(self):
        theta = np.linspace(0.0, TWO_PI, 8 * max(self.grid, 256), endpoint=False)
        rho = self.curvature_radius(theta)
        bad = np.nonzero(rho <= 0.0)[0]
        if bad.size:
            i = bad[np.argmin(rho[bad])]
            raise ConvexityViolation(theta[bad[0]], rho[i])

    # -- arclength tables -----------------------------------------------------

    def arclength_from_angle(self, theta):
        """Exact integral of the curvature radius from 0 to theta."""
        theta = np.asarray(theta, dtype=float)
        k = self._k
        w = 1.0 - k**2
        a = w * self.cos_coeffs
        b = w * self.sin_coeffs
        s = a[0] * theta
        kt = np.multiply.outer(theta, k[1:])
        s = s + np.sin(kt) @ (a[1:] / k[1:]) - (np.cos(kt) - 1.0) @ (b[1:] / k[1:])
        return s

    def _build_tables(self):
        self.perimeter = TWO_PI * self.cos_coeffs[0]
        self._theta_table = np.linspace(0.0, TWO_PI, self.grid + 1)
        self._s_table = self.arclength_from_angle(self._theta_table)

    def angle_from_arclength(self, s):
        """Invert s(theta) by table lookup plus Newton polish."""
        s = np.asarray(s, dtype=float)
        sm = np.mod(s, self.perimeter)
        wraps = (s - sm) / self.perimeter
        theta = np.interp(sm, self._s_table, self._theta_table)
        for _ in range(4):
            theta = theta - (self.arclength_from_angle(theta) - sm) / self.curvature_radius(theta)
        return theta + TWO_PI * wraps

    # -- frames ---------------------------------------------------------------

    def _frame_at_angle(self, theta):
        h = self.support(theta)
        hp = self.support_derivative(theta, 1)
        ct, st = np.cos(theta), np.sin(theta)
        pos = np.stack([h * ct - hp * st, h * st + hp * ct], axis=-1)
        tan = np.stack([-st, ct], axis=-1)
        nrm = np.stack([-ct, -st], axis=-1)
        kappa = 1.0 / self.curvature_radius(theta)
        return pos, tan, nrm, kappa

    def frame(self, s):
        """Position, unit tangent, inward unit normal and curvature at arclength s."""
        theta = self.angle_from_arclength(s)
        pos, tan, nrm, kappa = self._frame_at_angle(theta)
        return Frame(pos, tan, nrm, float(kappa) if np.ndim(kappa) == 0 else kappa)

    def curvature(self, s):
        return 1.0 / self.curvature_radius(self.angle_from_arclength(s))

    def curvature_arclength_derivative(self, s):
        """d(kappa)/ds = -rho'(theta)/rho^3."""
        theta = self.angle_from_arclength(s)
        k = self._k
        w = 1.0 - k**2
        rho = self.curvature_radius(theta)
        rho_p = self._trig_eval(theta, w * k * self.sin_coeffs, -w * k * self.cos_coeffs)
        return -rho_p / rho**3

    # -- serialization ----------------------------------------------------------

    def to_json(self):
        return json.dumps(
            {
                "kind": "support",
                "cos": self.cos_coeffs.tolist(),
                "sin": self.sin_coeffs.tolist(),
                "grid": self.grid,
            }
        )

    def __repr__(self):
        return f"<{type(self).__name__} perimeter={self.perimeter:.6g} modes={self.cos_coeffs.size}>"


class EllipseCurve(BoundaryCurve):
    """Ellipse (a cos t, b sin t) with exact closed-form boundary operations.

    The support series is fitted (it converges geometrically) so the generic
    machinery still applies, but frames, arclength and curvature bypass it.
    """

    kind = "ellipse"

    def __init__(self, a, b, grid=4096):
        self.a = float(a)
        self.b = float(b)
        self.m = 1.0 - (self.b / self.a) ** 2  # squared eccentricity
        theta = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
        h = np.sqrt(self.a**2 * np.cos(theta) ** 2 + self.b**2 * np.sin(theta) ** 2)
        coeffs = np.fft.rfft(h) / theta.size
        cos_c = 2.0 * coeffs.real
        cos_c[0] *= 0.5
        keep = max(8, int(np.max(np.nonzero(np.abs(cos_c) > 1e-15 * self.a)[0])) + 1)
        super().__init__(cos_c[:keep], None, grid=grid)
        # exact perimeter overrides the series value (they agree to ~1e-14)
        self.perimeter = 4.0 * self.a * float(ellipe(self.m))
        self._quarter = self.perimeter / 4.0

    # parameter t of (a cos t, b sin t)

    def arclength_from_param(self, t):
        t = np.asarray(t, dtype=float)
        tm = np.mod(t, TWO_PI)
        wraps = (t - tm) / TWO_PI
        quad = np.floor(tm / (np.pi / 2.0))
        # reduce to [0, pi/2) using the ellipse symmetries
        r = tm - quad * (np.pi / 2.0)
        e_full = self.perimeter / 4.0
        base = np.asarray(ellipe(self.m) - ellipeinc(np.pi / 2.0 - r, self.m)) * self.a
        odd = np.mod(quad, 2.0) == 1.0
        seg = np.where(odd, e_full - np.asarray(
            ellipe(self.m) - ellipeinc(np.pi / 2.0 - (np.pi / 2.0 - r), self.m)
        ) * self.a, base)
        return quad * e_full + seg + wraps * self.perimeter

    def param_speed(self, t):
        t = np.asarray(t, dtype=float)
        return np.sqrt(self.a**2 * np.sin(t) ** 2 + self.b**2 * np.cos(t) ** 2)

    def param_from_arclength(self, s):
        s = np.asarray(s, dtype=float)
        sm = np.mod(s, self.perimeter)
        wraps = (s - sm) / self.perimeter
        t = sm / self.perimeter * TWO_PI
        for _ in range(6):
            t = t - (self.arclength_from_param(t) - sm) / self.param_speed(t)
        return t + TWO_PI * wraps

    def point_at_param(self, t):
        t = np.asarray(t, dtype=float)
        return np.stack([self.a * np.cos(t), self.b * np.sin(t)], axis=-1)

    def curvature_at_param(self, t):
        return self.a * self.b / self.param_speed(t) ** 3

    def frame(self, s):
        t = self.param_from_arclength(s)
        v = self.param_speed(t)
        ct, st = np.cos(t), np.sin(t)
        pos = np.stack([self.a * ct, self.b * st], axis=-1)
        tan = np.stack([-self.a * st / v, self.b * ct / v], axis=-1)
        nrm = np.stack([-self.b * ct / v, -self.a * st / v], axis=-1)
        kappa = self.a * self.b / v**3
        return Frame(pos, tan, nrm, float(kappa) if np.ndim(kappa) == 0 else kappa)

    def curvature(self, s):
        return self.curvature_at_param(self.param_from_arclength(s))

    def curvature_arclength_derivative(self, s):
        t = self.param_from_arclength(s)
        v = self.param_speed(t)
        dv_dt = (self.a**2 - self.b**2) * np.sin(t) * np.cos(t) / v
        return -3.0 * self.a * self.b * dv_dt / v**5

    def to_json(self):
        return json.dumps({"kind": "ellipse", "a": self.a, "b": self.b, "grid": self.grid})


def make_ellipse(a, b, grid=4096):
    """Ellipse boundary {(a cos t, b sin t)} with a >= b > 0."""
    if not (a > 0 and b > 0):
        raise ValueError(f"axes must be positive, got a={a}, b={b}")
    if a < b:
        raise ValueError(f"require a >= b, got a={a} < b={b}")
    return EllipseCurve(a, b, grid=grid)


def make_support_curve(cos_coeffs, sin_coeffs=None, grid=4096):
    """Curve with the given support-function coefficients; convexity certified."""
    return BoundaryCurve(cos_coeffs, sin_coeffs, grid=grid)


def frame(curve, s):
    """Free-function alias for curve.frame(s)."""
    return curve.frame(s)


def curve_from_json(text):
    doc = json.loads(text)
    if doc["kind"] == "ellipse":
        return EllipseCurve(doc["a"], doc["b"], grid=doc.get("grid", 4096))
    if doc["kind"] == "support":
        return BoundaryCurve(doc["cos"], doc["sin"], grid=doc.get("grid", 4096))
    raise ValueError(f"unknown curve kind {doc['kind']!r}")
