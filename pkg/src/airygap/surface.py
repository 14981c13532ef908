"""Genus-one surface attached to a two-interval gap.

For endpoints ``x3 < x2 < x1 < 0`` we work in shifted coordinates
``y1 = x1 - x3``, ``y2 = x2 - x3`` and ``y3 = 0``. The curve is
``w^2 = R(z) = (z - y1)(z - y2) z`` with cuts ``(-inf, 0]`` and ``[y2, y1]``.
Everything in this module is derived from that curve: the quadratic ``p``
behind the g-function, the periods, the Abel map and its inverse.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .specfun import ThetaFunction, elliptic_KE, integrate, jacobi_sn, jacobi_sn_cn_dn

__all__ = [
    "GapConfig",
    "SurfaceQuantities",
    "build_surface",
    "p_eval",
    "q_eval",
    "sqrt_R",
    "abelian_integral",
    "g_eval",
    "abel_phi",
    "abel_inverse",
    "a_of_r",
    "nu_raw",
    "inv_a",
    "A_GUARD",
]

# |nu - 1/2 mod 1| below this maps a(r) to +inf
A_GUARD = 1e-8
_QUAD_TOL = 1e-15


@dataclass(frozen=True)
class GapConfig:
    """Endpoints of the gap ``(x3, x2) U (x1, +inf)``, with ``x3 < x2 < x1 < 0``."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        vals = (self.x1, self.x2, self.x3)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError("endpoints must be finite")
        if not self.x1 < 0:
            raise DomainError(f"need x1 < 0, got x1 = {self.x1}")
        if not self.x2 < self.x1:
            raise DomainError(f"need x2 < x1, got x2 = {self.x2}, x1 = {self.x1}")
        if not self.x3 < self.x2:
            raise DomainError(f"need x3 < x2, got x3 = {self.x3}, x2 = {self.x2}")

    @property
    def y1(self):
        return self.x1 - self.x3

    @property
    def y2(self):
        return self.x2 - self.x3

    @property
    def xsum(self):
        return self.x1 + self.x2 + self.x3

    def intervals(self, r, T):
        """Scaled gap ``(r x3, r x2) U (r x1, T)``."""
        return [(r * self.x3, r * self.x2), (r * self.x1, T)]


@dataclass(frozen=True)
class SurfaceQuantities:
    """Derived data of the genus-one surface.

    ``p(z) = -z^2 + (y1 + y2 - x3) z / 2 + alpha`` and
    ``q(z) = p(z - x3) = -z^2 + (x1 + x2 + x3) z / 2 - q0``.
    """

    cfg: GapConfig
    y1: float
    y2: float
    k_star: float
    k_star_prime: float
    K: float
    E: float
    K_prime: float
    alpha: float
    g1: float
    q0: float
    c0: float
    tau: complex
    Omega: float
    c: float
    theta: ThetaFunction
    tau_quadrature: complex
    c0_quadrature: float


def _alpha(y1, y2, x3, e_over_k):
    return 0.5 * y1 * ((y1 - y2) / 3.0 + x3 - e_over_k * ((y1 + y2) / 3.0 + x3))


def _cut_integral_B(fun, y1, y2):
    """int_{y2}^{y1} fun(s) / sqrt(s (s - y2)(y1 - s)) ds via s = m + h sin(t)."""
    m = 0.5 * (y1 + y2)
    h = 0.5 * (y1 - y2)

    def f(t):
        s = m + h * np.sin(t)
        return fun(s) / np.sqrt(s)

    return integrate(f, -0.5 * np.pi, 0.5 * np.pi, tol=_QUAD_TOL)


def _cut_integral_A(fun, y1, y2):
    """int_0^{y2} fun(s) / sqrt(s (y2 - s)(y1 - s)) ds via s = y2 sin^2(t)."""

    def f(t):
        s = y2 * np.sin(t) ** 2
        return 2.0 * fun(s) / np.sqrt(y1 - s)

    return integrate(f, 0.0, 0.5 * np.pi, tol=_QUAD_TOL)


def build_surface(cfg, theta_tol=1e-17):
    """Compute every surface constant for a gap configuration.

    ``alpha`` and ``g1`` use the closed form in complete elliptic integrals.
    ``Omega`` is a cut integral done by quadrature; ``tau`` and ``c0`` are
    taken from the elliptic route with their quadrature versions stored for
    cross-checking.
    """
    if not isinstance(cfg, GapConfig):
        raise DomainError("build_surface expects a GapConfig")
    x1, x2, x3 = cfg.x1, cfg.x2, cfg.x3
    y1, y2 = cfg.y1, cfg.y2
    k = math.sqrt(y2 / y1)
    kp = math.sqrt((x1 - x2) / (x1 - x3))
    K, E = elliptic_KE(k, kp)
    Kp, _ = elliptic_KE(kp, k)
    alpha = _alpha(y1, y2, x3, E / K)
    g1 = x3 * (y1 + y2) / 4.0 + (y1 - y2) ** 2 / 8.0 - alpha
    q0 = g1 + (2 * x1 * x2 + 2 * x1 * x3 + 2 * x2 * x3 - x1 * x1 - x2 * x2) / 8.0
    c = (x1**3 + x2**3 + x3**3 - (x1 + x2) * (x1 + x3) * (x2 + x3)) / 12.0 + q0 * cfg.xsum / 3.0
    c0 = math.sqrt(y1) / (4.0 * K)
    tau = 1j * Kp / K

    def p(s):
        return -s * s + 0.5 * (y1 + y2 - x3) * s + alpha

    Omega = 2.0 * _cut_integral_B(p, y1, y2)
    ones = lambda s: np.ones_like(s)  # noqa: E731
    c0_quad = 1.0 / (2.0 * _cut_integral_A(ones, y1, y2))
    tau_quad = 2j * c0 * _cut_integral_B(ones, y1, y2)
    return SurfaceQuantities(
        cfg=cfg,
        y1=y1,
        y2=y2,
        k_star=k,
        k_star_prime=kp,
        K=K,
        E=E,
        K_prime=Kp,
        alpha=alpha,
        g1=g1,
        q0=q0,
        c0=c0,
        tau=tau,
        Omega=float(Omega),
        c=c,
        theta=ThetaFunction(tau, tol=theta_tol),
        tau_quadrature=complex(tau_quad),
        c0_quadrature=float(c0_quad),
    )


def p_eval(sq, z):
    """Quadratic ``p`` of the g-function derivative ``g' = p / sqrt(R)``."""
    return -z * z + 0.5 * (sq.y1 + sq.y2 - sq.cfg.x3) * z + sq.alpha


def q_eval(sq, z):
    """``q(z) = p(z - x3)``, the same quadratic in unshifted coordinates."""
    return p_eval(sq, z - sq.cfg.x3)


def p_prime(sq, z):
    return -2.0 * z + 0.5 * (sq.y1 + sq.y2 - sq.cfg.x3)


# ---------------------------------------------------------------------------
# Branches and integrals on the first sheet

_SIDES = {"above": 1.0, "below": -1.0, "+": 1.0, "-": -1.0}


def _side_sign(side):
    if side is None:
        return None
    try:
        return _SIDES[side]
    except KeyError:
        raise DomainError(f"side must be 'above' or 'below', got {side!r}") from None


def _on_cut(sq, z):
    return z.imag == 0 and (z.real < 0 or sq.y2 < z.real < sq.y1)


def _with_side(w, sign):
    """Attach a signed zero imaginary part so principal roots pick the boundary value."""
    w = complex(w)
    if w.imag == 0 and sign is not None:
        return complex(w.real, math.copysign(0.0, sign))
    return w


def sqrt_R(sq, z, side=None):
    """``sqrt(R(z))`` with principal roots of each factor.

    Analytic off ``(-inf, 0] U [y2, y1]`` and ~ ``z^(3/2)`` at infinity. For
    real `z` on a cut, `side` selects the boundary value from above or below.
    """
    z = complex(z)
    sign = _side_sign(side)
    if _on_cut(sq, z) and sign is None:
        raise DomainError("z lies on a cut; pass side='above' or 'below'")
    zs = _with_side(z, sign)
    return np.sqrt(zs - sq.y1) * np.sqrt(zs - sq.y2) * np.sqrt(zs)


def _segment_from_branch(sq, b, z, numer, sign):
    """int_b^z numer(s) / sqrt(R(s)) ds along the straight segment from branch point b.

    With s = b + (z - b) t^2 the square-root singularity at b disappears.
    Boundary values on cuts come from the signed zero carried by `sign`.
    """
    zs = _with_side(z, sign)
    dz = zs - b
    if dz == 0:
        return 0j
    others = [v for v in (sq.y1, sq.y2, 0.0) if v != b]
    root_dz = np.sqrt(dz)
    tiny = math.copysign(0.0, sign) if sign is not None else 0.0

    def f(t):
        s = b + dz * t * t
        if zs.imag == 0:
            # keep points of a real segment on the requested side of any cut;
            # assign the signed zero directly, since 1j * -0.0 loses the sign
            s = s.real.astype(complex)
            s.imag = tiny
        den = np.sqrt(s - others[0]) * np.sqrt(s - others[1])
        return 2.0 * root_dz * numer(s) / den

    return complex(integrate(f, 0.0, 1.0, tol=_QUAD_TOL))


def abelian_integral(sq, numer, z, side=None):
    """``int_{y1}^z numer(s) / sqrt(R(s)) ds`` on the first sheet.

    The path does not cross ``(-inf, y1]``: a straight segment for complex or
    real ``z > y1``, and along the upper or lower edge of the cuts otherwise.
    Real pieces are split at midpoints so each quadrature segment carries an
    endpoint singularity at one end only.
    """
    z = complex(z)
    sign = _side_sign(side)
    y1, y2 = sq.y1, sq.y2
    seg = lambda b, w: _segment_from_branch(sq, b, w, numer, sign)  # noqa: E731
    if z.imag != 0 or z.real >= y1:
        return seg(y1, z)
    if sign is None:
        raise DomainError("z lies on a cut or branch point; pass side='above' or 'below'")
    x = z.real
    m12 = 0.5 * (y1 + y2)
    if x >= m12:
        return seg(y1, x)
    total = seg(y1, m12) - seg(y2, m12)
    if x >= y2:
        return total + seg(y2, x)
    m0 = 0.5 * y2
    if x >= m0:
        return total + seg(y2, x)
    total += seg(y2, m0) - seg(0.0, m0)
    return total + seg(0.0, x)


def g_eval(sq, z, side=None):
    """``g(z) = int_{y1}^z p(s) / sqrt(R(s)) ds``; ``g(y1) = 0``."""
    return abelian_integral(sq, lambda s: p_eval(sq, s), z, side)


def abel_phi(sq, z, side=None):
    """``phi(z) = int_{y1}^z c0 / sqrt(R(s)) ds`` on the first sheet."""
    z = complex(z)
    if math.isinf(z.real) and z.real > 0 and z.imag == 0:
        return 0.5 + 0j
    return sq.c0 * abelian_integral(sq, np.ones_like, z, side)


def abel_inverse(sq, u):
    """Projection to the plane of the inverse Abel map.

    ``y1 + (y2 - y1) sn^2(2 i K u, k)`` where ``2K = sqrt(y1)/(2 c0)`` and the
    elliptic modulus is ``k = sqrt(1 - y2/y1)`` (so ``1 - y2/y1`` is the
    parameter ``m = k^2``). Real `u` in the guard band around ``1/2 mod 1``
    returns ``inf``.
    """
    u = complex(u)
    if u.imag == 0:
        red = (u.real + 0.5) % 1.0 - 0.5
        if abs(abs(red) - 0.5) < A_GUARD:
            return complex(math.inf, 0.0)
        u = complex(red, 0.0)
    arg = 2j * sq.K * u
    s = jacobi_sn(arg, sq.k_star_prime, sq.k_star)
    if not np.isfinite(s):
        return complex(math.inf, 0.0)
    return sq.y1 + (sq.y2 - sq.y1) * s * s


def nu_raw(sq, r):
    """``nu = -Omega r^(3/2) / (2 pi)`` without reduction."""
    return -sq.Omega * r**1.5 / (2.0 * math.pi)


def a_of_r(sq, r):
    """``a(r)`` = inverse Abel map at ``nu(r)``; lies in ``[y1, +inf]``."""
    if not r > 0:
        raise DomainError("r must be positive")
    a = abel_inverse(sq, nu_raw(sq, r))
    return float(a.real) if np.isfinite(a) else math.inf


def inv_a(sq, nu):
    """``1 / a`` at real ``nu``, vectorized.

    With ``a = y1 + (y1 - y2) sc^2(2 K u, k_star)`` this is
    ``cn^2 / (y1 cn^2 + (y1 - y2) sn^2)``, a smooth periodic function that
    vanishes where ``a`` is infinite.
    """
    nu = np.asarray(nu, dtype=float)
    u = np.abs((nu + 0.5) % 1.0 - 0.5)
    s, c, _ = jacobi_sn_cn_dn(2.0 * sq.K * u, sq.k_star, sq.k_star_prime)
    return c * c / (sq.y1 * c * c + (sq.y1 - sq.y2) * s * s)
