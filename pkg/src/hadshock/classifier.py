"""Uniform-vs-weak stability classification of a Lax front.

The decision rule: a front with stability parameter rho <= 0 is
uniformly stable outright; for rho > 0 it is uniformly stable iff

    G(xi) = (sqrt(zeta) + tau*eta)^2 - rho kappa2+ P / (s^2 theta11)

stays positive for every unit transverse vector xi, and weakly stable
(a surface wave exists) as soon as G touches zero.  G is homogeneous of
degree two, so the sphere search decides the sign globally.
"""

import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BadParams, DegenerateModuli, InvalidBracket
from .lopatinskii import _sqrt_anchored, imag_scan, winding
from .materials import MaterialModel
from .shock import ElasticState, ShockFront, build, freq_coeffs, lax_check

__all__ = [
    "UNIFORM",
    "WEAK",
    "INCONSISTENT",
    "Witness",
    "StabilityVerdict",
    "classify",
    "criterion_values",
    "cg_alpha_star",
    "transition_alpha",
    "reference_delta",
]

UNIFORM = "uniform"
WEAK = "weak"
INCONSISTENT = "inconsistent"

MARGINAL_BAND = 1e-10


@dataclass
class Witness:
    """Frequency direction and imaginary-axis root certifying weak stability."""

    xi_t: np.ndarray
    t_root: float
    criterion_value: float


@dataclass
class StabilityVerdict:
    kind: str
    rho: float
    min_criterion: Optional[float] = None
    witness: Optional[Witness] = None
    marginal: bool = False
    diagnostic: Optional[str] = None


def criterion_values(sf: ShockFront, points: np.ndarray) -> np.ndarray:
    """Vectorized G over rows of unit transverse vectors."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    th = sf.theta
    t1 = th[0, 1:]
    eta = points @ t1
    Nsq = np.einsum("ni,ij,nj->n", points, th[1:, 1:], points)
    h2p = sf.h2_plus
    norms = np.einsum("ni,ni->n", points, points)
    omega = sf.material.mu * norms + h2p * Nsq
    P = sf.theta11 * Nsq - eta**2
    zeta = omega - h2p**2 * eta**2 / sf.kappa2_plus
    sz = np.sqrt(np.maximum(zeta, 0.0))
    return (sz + sf.tau * eta) ** 2 - sf.rho * sf.kappa2_plus * P / (sf.speed**2 * sf.theta11)


def _sphere_grid(k: int, resolution: int) -> np.ndarray:
    """Deterministic covering of the unit sphere in R^k (both hemispheres)."""
    if k == 1:
        return np.array([[-1.0], [1.0]])
    if k == 2:
        n = 64 * resolution
        ang = 2.0 * np.pi * np.arange(n) / n
        return np.column_stack([np.cos(ang), np.sin(ang)])
    if k == 3:
        n = 64 * resolution
        i = np.arange(n) + 0.5
        phi = np.arccos(1.0 - 2.0 * i / n)
        golden = np.pi * (1.0 + np.sqrt(5.0))
        theta = golden * i
        return np.column_stack(
            [np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)]
        )
    rng = np.random.default_rng(0)
    pts = rng.standard_normal((64 * resolution, k))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def _tangent_basis(x: np.ndarray) -> np.ndarray:
    k = x.size
    basis = []
    for e in np.eye(k):
        v = e - (e @ x) * x
        for b in basis:
            v -= (v @ b) * b
        n = np.linalg.norm(v)
        if n > 1e-8:
            basis.append(v / n)
    return np.array(basis[: k - 1])


def _refine_minimum(sf: ShockFront, x0: np.ndarray) -> tuple:
    """Nelder-Mead polish of G on a local chart of the sphere."""
    from scipy.optimize import minimize

    B = _tangent_basis(x0)
    if B.size == 0:
        return x0, float(criterion_values(sf, x0[None, :])[0])

    def chart(t):
        v = x0 + t @ B
        return v / np.linalg.norm(v)

    def gfun(t):
        return float(criterion_values(sf, chart(t)[None, :])[0])

    res = minimize(
        gfun,
        np.zeros(B.shape[0]),
        method="Nelder-Mead",
        options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 400},
    )
    x = chart(res.x)
    val = float(criterion_values(sf, x[None, :])[0])
    x0_val = float(criterion_values(sf, x0[None, :])[0])
    if x0_val < val:
        return x0, x0_val
    return x, val


def _lexicographic_argmin(points: np.ndarray, values: np.ndarray) -> int:
    vmin = values.min()
    ties = np.flatnonzero(values == vmin)
    if ties.size == 1:
        return int(ties[0])
    order = np.lexsort(points[ties].T[::-1])
    return int(ties[order[0]])


def classify(
    sf: ShockFront, sphere_resolution: int = 128, check_winding: bool = False
) -> StabilityVerdict:
    """Decide uniform vs weak stability of a constructed Lax front.

    rho <= 0 short-circuits to Uniform with no sphere search.  For
    rho > 0 the criterion G is minimized over the unit sphere of
    transverse directions (exact two-point evaluation when the sphere is
    {-1, +1}; otherwise a deterministic grid plus local Nelder-Mead
    polish).  A minimum within +/-1e-10 of zero is reported Weak with
    the ``marginal`` flag, since the exact threshold carries the root at
    t = sqrt(zeta).  With ``check_winding`` and rho < 0, a nonzero
    winding count (impossible for a consistent model) yields an
    Inconsistent verdict instead of a stability claim.
    """
    if not lax_check(sf).ok:
        raise InvalidBracket("classify requires a front with strict Lax margins")
    if sf.alpha > 0:
        warnings.warn(
            "classification is certified for the h''' < 0, alpha < 0 regime; "
            "alpha > 0 results are best-effort",
            stacklevel=2,
        )

    if sf.rho <= 0:
        if check_winding and sf.rho < 0:
            for xi in np.eye(sf.dim - 1):
                w = winding(sf, xi, R=20.0)
                if w != 0:
                    return StabilityVerdict(
                        kind=INCONSISTENT,
                        rho=sf.rho,
                        diagnostic=f"winding {w} != 0 at xi_t={xi.tolist()}, rho={sf.rho}",
                    )
        return StabilityVerdict(kind=UNIFORM, rho=sf.rho, min_criterion=None)

    pts = _sphere_grid(sf.dim - 1, sphere_resolution)
    vals = criterion_values(sf, pts)
    idx = _lexicographic_argmin(pts, vals)
    x_best, v_best = pts[idx], float(vals[idx])
    if sf.dim > 2:
        x_best, v_best = _refine_minimum(sf, x_best)

    if v_best >= MARGINAL_BAND:
        return StabilityVerdict(kind=UNIFORM, rho=sf.rho, min_criterion=v_best)

    marginal = abs(v_best) < MARGINAL_BAND
    scan = imag_scan(sf, x_best)
    if scan.roots:
        t_root = scan.roots[0]
    else:
        # marginal case with G just above zero: the root degenerates to
        # the branch point t = sqrt(zeta)
        t_root = float(np.sqrt(freq_coeffs(sf, x_best).zeta))
    witness = Witness(xi_t=x_best, t_root=t_root, criterion_value=v_best)
    return StabilityVerdict(
        kind=WEAK, rho=sf.rho, min_criterion=v_best, witness=witness, marginal=marginal
    )


def cg_alpha_star(mu: float, kappa: float) -> float:
    """Exact weak/uniform threshold intensity for the 2-D Ciarlet-Geymonat
    model with undeformed base state:
    -(mu + sqrt(mu^2 + 4(kappa^2 - mu^2))) / (2(kappa - mu)).
    """
    if not (mu > 0) or kappa <= mu:
        raise DegenerateModuli(f"requires kappa > mu > 0, got mu={mu}, kappa={kappa}")
    return -(mu + np.sqrt(mu**2 + 4.0 * (kappa**2 - mu**2))) / (2.0 * (kappa - mu))


def transition_alpha(
    m: MaterialModel,
    U_plus: np.ndarray,
    v_plus: np.ndarray,
    alpha_lo: float,
    alpha_hi: float,
    tol: float = 1e-6,
    sphere_resolution: int = 128,
) -> Optional[float]:
    """Bisect the intensity at which the verdict flips inside a bracket.

    Both endpoints must build valid fronts; returns None when the
    verdict is the same at both ends, otherwise the flip location to
    within ``tol``.
    """

    def verdict_at(alpha: float) -> str:
        sf = build(m, ElasticState(U_plus, v_plus), alpha)
        return classify(sf, sphere_resolution=sphere_resolution).kind

    try:
        k_lo = verdict_at(alpha_lo)
        k_hi = verdict_at(alpha_hi)
    except Exception as exc:
        raise InvalidBracket(f"bracket endpoint failed to build/classify: {exc}") from exc
    if k_lo == k_hi:
        return None
    lo, hi = float(alpha_lo), float(alpha_hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if verdict_at(mid) == k_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def reference_delta(example: str, params: dict, gamma: complex, xi_t=None) -> complex:
    """Closed-form determinants of the two worked model scenarios.

    ``CG2D``: 2-D Ciarlet-Geymonat, undeformed base state.  ``Blatz3D``:
    3-D Blatz, undeformed base state, with |xi_t|^2 eliminated through
    the hemisphere constraint so the value depends on gamma alone.
    Both serve as independent cross-checks of delta_v2.
    """
    gamma = complex(gamma)
    mu = float(params["mu"])
    kappa = float(params["kappa"])
    alpha = float(params["alpha"])
    if example == "CG2D":
        if not (kappa > mu > 0):
            raise BadParams(f"CG2D requires kappa > mu > 0, got mu={mu}, kappa={kappa}")
        if alpha >= 0:
            raise BadParams(f"CG2D requires alpha < 0, got {alpha}")
        xi2 = 1.0 if xi_t is None else float(np.atleast_1d(xi_t)[0])
        s_sq = kappa + mu / (1.0 - alpha)
        k2 = mu + kappa
        c = np.sqrt(k2 / s_sq)  # -sqrt(kappa2+)/s with s < 0
        zeta = k2 * xi2 * xi2
        root = _sqrt_anchored(gamma, zeta)
        return complex((gamma + c * root) ** 2 - alpha * (kappa**2 - mu**2) * xi2 * xi2 / s_sq)
    if example == "Blatz3D":
        if not (kappa > 2.0 * mu / 3.0) or not (mu > 0):
            raise BadParams(f"Blatz3D requires kappa > 2mu/3 > 0, got mu={mu}, kappa={kappa}")
        if alpha >= 0:
            raise BadParams(f"Blatz3D requires alpha < 0, got {alpha}")
        k2 = kappa + 4.0 * mu / 3.0
        s_sq = mu + (kappa + mu / 3.0) / (1.0 - alpha)
        c1 = np.sqrt(k2 / s_sq)  # -sqrt(kappa2+)/s
        xi_sq = 1.0 - (k2 - s_sq) / k2 * abs(gamma) ** 2
        if xi_sq < -1e-12:
            raise BadParams(f"gamma = {gamma} lies outside the remapped hemisphere")
        zeta = k2 * max(xi_sq, 0.0)
        root = _sqrt_anchored(gamma, zeta)
        return complex((gamma + c1 * root) ** 2)
    raise BadParams(f"unknown reference example {example!r}")
