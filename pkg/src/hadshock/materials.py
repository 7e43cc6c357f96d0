"""Hadamard material models and their elastic tensors.

A material is a shear modulus ``mu`` plus a volumetric energy ``h(J)``
with derivatives ``h1, h2, h3``; the stored energy density is

    W(U) = (mu/2) tr(U^T U) + h(det U).

The built-in catalog covers the standard compressible neo-Hookean
extensions (Ciarlet-Geymonat, Blatz, Ogden foam, Levinson-Burgess,
Simo-Taylor, Ogden-Hill, Simo-Miehe, Bischoff-Arruda-Grosh).  Convexity
of h (h'' > 0) makes the acoustic tensor positive definite for every
deformation, which is what the shock machinery relies on.
"""

import functools
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import BadModuli, NonPositiveJacobian, UnknownModel, ZeroFrequency
from .linalg import cofactor

__all__ = [
    "MaterialModel",
    "HypothesisReport",
    "AcousticSpectrum",
    "CATALOG_NAMES",
    "catalog",
    "check_hypotheses",
    "energy",
    "piola_kirchhoff",
    "cauchy_stress",
    "b_tensor",
    "acoustic_tensor",
    "acoustic_spectrum",
    "char_speeds",
    "strain_invariants",
    "default_J_grid",
]

CATALOG_NAMES = (
    "ciarlet-geymonat",
    "blatz",
    "ogden-foam",
    "levinson-burgess",
    "simo-taylor",
    "ogden-hill",
    "simo-miehe",
    "bischoff-arruda-grosh",
)


@dataclass
class MaterialModel:
    """Shear modulus plus volumetric energy h with three derivatives.

    ``h, h1, h2, h3`` accept a float or a numpy array of J > 0 values.
    ``declared_bulk`` records the bulk modulus the model was built from,
    when it was; the hypothesis report compares it with the small-strain
    bulk modulus implied by h''(1).
    """

    name: str
    mu: float
    h: Callable
    h1: Callable
    h2: Callable
    h3: Callable
    declared_bulk: Optional[float] = None
    dimension: Optional[int] = None
    derivatives_synthesized: bool = False

    def __post_init__(self):
        if not (self.mu > 0):
            raise BadModuli(f"shear modulus must be positive, got {self.mu}")


@dataclass
class HypothesisReport:
    """Outcome of sampling the material hypotheses on a J-grid."""

    h2_positive: bool
    h3_negative: bool
    free_stress: bool
    bulk_relation: bool
    poisson: float
    lame_first: float
    J_grid: np.ndarray
    fd_consistent: bool
    fd_max_rel_err: float
    effective_bulk: float
    h_nonincreasing: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.h2_positive
            and self.h3_negative
            and self.free_stress
            and self.bulk_relation
            and self.fd_consistent
        )


@dataclass
class AcousticSpectrum:
    """Eigenvalues of the acoustic tensor: kappa1 (d-1 fold) and kappa2 (simple)."""

    kappa1: float
    mult1: int
    kappa2: float
    mult2: int
    eigvec2: np.ndarray


# ---------------------------------------------------------------------------
# catalog h-forms (module level so models stay picklable)

def _h_cg(J, mu, c2, d):
    return -0.5 * d * mu - mu * np.log(J) + c2 * (J - 1.0) ** 2


def _h1_cg(J, mu, c2, d):
    return -mu / J + 2.0 * c2 * (J - 1.0)


def _h2_cg(J, mu, c2, d):
    return mu / J**2 + 2.0 * c2


def _h3_cg(J, mu, c2, d):
    return -2.0 * mu / J**3


def _h_blatz(J, mu, lin, logc, d):
    return -0.5 * d * mu + lin * (J - 1.0) - logc * np.log(J)


def _h1_blatz(J, mu, lin, logc, d):
    return lin - logc / J


def _h2_blatz(J, mu, lin, logc, d):
    return logc / J**2


def _h3_blatz(J, mu, lin, logc, d):
    return -2.0 * logc / J**3


def _h_foam(J, mu, c1, d):
    return -0.5 * d * mu + 0.5 * mu / c1 * (J ** (-2.0 * c1) - 1.0)


def _h1_foam(J, mu, c1, d):
    return -mu * J ** (-2.0 * c1 - 1.0)


def _h2_foam(J, mu, c1, d):
    return mu * (2.0 * c1 + 1.0) * J ** (-2.0 * c1 - 2.0)


def _h3_foam(J, mu, c1, d):
    return -mu * (2.0 * c1 + 1.0) * (2.0 * c1 + 2.0) * J ** (-2.0 * c1 - 3.0)


def _h_lb(J, mu, cbar, d):
    return -0.5 * d * mu + 0.5 * mu * (cbar * (J**2 - 1.0) + 2.0 * (cbar + 1.0) * (1.0 - J))


def _h1_lb(J, mu, cbar, d):
    return mu * (cbar * J - cbar - 1.0)


def _h2_lb(J, mu, cbar, d):
    return mu * cbar * np.ones_like(np.asarray(J, dtype=float))


def _h3_lb(J, mu, cbar, d):
    return np.zeros_like(np.asarray(J, dtype=float))


def _h_st(J, mu, lam, d):
    return -0.5 * d * mu - mu * np.log(J) + 0.5 * lam * (0.5 * J**2 - np.log(J) - 0.5)


def _h1_st(J, mu, lam, d):
    return -mu / J + 0.5 * lam * (J - 1.0 / J)


def _h2_st(J, mu, lam, d):
    return mu / J**2 + 0.5 * lam * (1.0 + 1.0 / J**2)


def _h3_st(J, mu, lam, d):
    return -(2.0 * mu + lam) / J**3


def _h_oh(J, mu, b, d):
    return -0.5 * d * mu + (J - 1.0) ** 2 / b


def _h1_oh(J, mu, b, d):
    return 2.0 * (J - 1.0) / b


def _h2_oh(J, mu, b, d):
    return 2.0 / b * np.ones_like(np.asarray(J, dtype=float))


def _h3_oh(J, mu, b, d):
    return np.zeros_like(np.asarray(J, dtype=float))


def _h_sm(J, mu, kap, d):
    return -0.5 * d * mu + 0.25 * kap * (J**2 - 1.0 - 2.0 * np.log(J))


def _h1_sm(J, mu, kap, d):
    return 0.5 * kap * (J - 1.0 / J)


def _h2_sm(J, mu, kap, d):
    return 0.5 * kap * (1.0 + 1.0 / J**2)


def _h3_sm(J, mu, kap, d):
    return -kap / J**3


def _h_bag(J, mu, cbar, b, d):
    return -0.5 * d * mu + cbar / b**2 * (np.cosh(b * (J - 1.0)) - 1.0)


def _h1_bag(J, mu, cbar, b, d):
    return cbar / b * np.sinh(b * (J - 1.0))


def _h2_bag(J, mu, cbar, b, d):
    return cbar * np.cosh(b * (J - 1.0))


def _h3_bag(J, mu, cbar, b, d):
    return cbar * b * np.sinh(b * (J - 1.0))


def _bind(fns, **coeffs):
    return tuple(functools.partial(f, **coeffs) for f in fns)


def _require_poisson_positive(name, mu, kappa, d):
    if not (kappa > 2.0 * mu / d):
        raise BadModuli(f"{name} requires kappa > 2*mu/d, got kappa={kappa}, mu={mu}, d={d}")


def _ensure_vectorized(f):
    """Make a user-supplied scalar callable accept numpy arrays of J."""
    try:
        probe = np.asarray(f(np.array([0.5, 2.0])), dtype=float)
        if probe.shape == (2,):
            return f
    except Exception:
        pass
    return np.vectorize(f, otypes=[float])


def _fd_derivative(f):
    """High-order central difference d/dJ with a J-proportional step."""

    def deriv(J):
        J = np.asarray(J, dtype=float)
        e = 1e-3 * np.maximum(J, 1e-8)
        # 4th order 5-point stencil, Richardson-extrapolated once
        def d4(step):
            return (f(J - 2 * step) - 8 * f(J - step) + 8 * f(J + step) - f(J + 2 * step)) / (12 * step)

        a, b = d4(e), d4(e / 2.0)
        out = (16.0 * b - a) / 15.0
        return out if out.shape else float(out)

    return deriv


def catalog(name: str, params: dict) -> MaterialModel:
    """Build a catalog material (or wrap a custom one) from parameters.

    ``params`` carries the dimension ``d`` plus the moduli the requested
    form needs: ``mu`` always; ``kappa`` for the nearly incompressible
    forms; ``c1`` (or ``kappa``) for the Ogden foam; ``b`` for
    Ogden-Hill; ``cbar``/``b`` for Bischoff-Arruda-Grosh.  For
    ``custom``, params supply callables ``h`` and optionally
    ``h1, h2, h3``; missing derivatives are synthesized by high-order
    central differences and flagged via ``derivatives_synthesized``.
    """
    params = dict(params)
    d = int(params.get("d", params.get("dimension", 3)))
    if d < 2:
        raise BadModuli(f"dimension must be >= 2, got {d}")
    mu = float(params.get("mu", 1.0))
    if not (mu > 0):
        raise BadModuli(f"mu must be positive, got {mu}")
    kappa = params.get("kappa")
    kappa = None if kappa is None else float(kappa)

    if name == "custom":
        h = _ensure_vectorized(params["h"])
        fns = [h]
        synthesized = False
        for key in ("h1", "h2", "h3"):
            g = params.get(key)
            if g is None:
                g = _fd_derivative(fns[-1])
                synthesized = True
            else:
                g = _ensure_vectorized(g)
            fns.append(g)
        return MaterialModel(
            name=params.get("label", "custom"), mu=mu, h=fns[0], h1=fns[1],
            h2=fns[2], h3=fns[3], declared_bulk=kappa, dimension=d,
            derivatives_synthesized=synthesized,
        )

    if name == "ciarlet-geymonat":
        if kappa is None:
            raise BadModuli("ciarlet-geymonat requires kappa")
        _require_poisson_positive(name, mu, kappa, d)
        c2 = 0.5 * kappa - mu / d
        h, h1, h2, h3 = _bind((_h_cg, _h1_cg, _h2_cg, _h3_cg), mu=mu, c2=c2, d=d)
    elif name == "blatz":
        if kappa is None:
            raise BadModuli("blatz requires kappa")
        _require_poisson_positive(name, mu, kappa, d)
        lin = kappa - 2.0 * mu / d
        logc = kappa + (d - 2.0) * mu / d
        h, h1, h2, h3 = _bind((_h_blatz, _h1_blatz, _h2_blatz, _h3_blatz), mu=mu, lin=lin, logc=logc, d=d)
    elif name == "ogden-foam":
        c1 = params.get("c1")
        if c1 is None:
            if kappa is None:
                raise BadModuli("ogden-foam requires c1 or kappa")
            _require_poisson_positive(name, mu, kappa, d)
            c1 = (d * kappa - 2.0 * mu) / (2.0 * d * mu)
        c1 = float(c1)
        if not (c1 > 0):
            raise BadModuli(f"ogden-foam requires c1 > 0, got {c1}")
        if kappa is None:
            kappa = mu * (2.0 * c1 * d + 2.0) / d  # invert c1 = (d k - 2 mu)/(2 d mu)
        h, h1, h2, h3 = _bind((_h_foam, _h1_foam, _h2_foam, _h3_foam), mu=mu, c1=c1, d=d)
    elif name == "levinson-burgess":
        if kappa is None:
            raise BadModuli("levinson-burgess requires kappa")
        _require_poisson_positive(name, mu, kappa, d)
        cbar = kappa / mu - 2.0 / d + 1.0
        h, h1, h2, h3 = _bind((_h_lb, _h1_lb, _h2_lb, _h3_lb), mu=mu, cbar=cbar, d=d)
    elif name == "simo-taylor":
        if kappa is None:
            raise BadModuli("simo-taylor requires kappa")
        _require_poisson_positive(name, mu, kappa, d)
        lam = kappa - 2.0 * mu / d
        h, h1, h2, h3 = _bind((_h_st, _h1_st, _h2_st, _h3_st), mu=mu, lam=lam, d=d)
    elif name == "ogden-hill":
        b = float(params.get("b", 0.0))
        if not (b > 0):
            raise BadModuli(f"ogden-hill requires b > 0, got {b}")
        h, h1, h2, h3 = _bind((_h_oh, _h1_oh, _h2_oh, _h3_oh), mu=mu, b=b, d=d)
        kappa = None  # b is an empirical coefficient, not a declared bulk modulus
    elif name == "simo-miehe":
        if kappa is None or not (kappa > 0):
            raise BadModuli("simo-miehe requires kappa > 0")
        h, h1, h2, h3 = _bind((_h_sm, _h1_sm, _h2_sm, _h3_sm), mu=mu, kap=kappa, d=d)
    elif name == "bischoff-arruda-grosh":
        cbar = float(params.get("cbar", 0.0))
        b = float(params.get("b", 0.0))
        if not (cbar > 0 and b > 0):
            raise BadModuli(f"bischoff-arruda-grosh requires cbar, b > 0, got {cbar}, {b}")
        h, h1, h2, h3 = _bind((_h_bag, _h1_bag, _h2_bag, _h3_bag), mu=mu, cbar=cbar, b=b, d=d)
        kappa = None
    else:
        raise UnknownModel(f"unknown material model {name!r}")

    return MaterialModel(name=name, mu=mu, h=h, h1=h1, h2=h2, h3=h3,
                         declared_bulk=kappa, dimension=d)


# ---------------------------------------------------------------------------
# hypothesis checks

def default_J_grid() -> np.ndarray:
    """Log-spaced sampling grid for the pointwise hypotheses on h."""
    return np.geomspace(1e-3, 1e3, 400)


def _fd_chain_error(g, g_prime, J):
    """Max relative error of g' against Richardson central differences of g.

    The step is proportional to J, so the check is scale invariant; the
    denominator mixes |g'| with |g|/J so identically-zero derivatives
    (e.g. a constant h'') are judged against the parent scale instead of
    against roundoff noise.  Points where g overflows are skipped.
    """
    rel = 1e-5
    e = rel * J
    with np.errstate(over="ignore", invalid="ignore"):
        def cd(step):
            return (g(J + step) - g(J - step)) / (2.0 * step)

        d1, d2 = cd(e), cd(e / 2.0)
        fd = (4.0 * d2 - d1) / 3.0
        an = g_prime(J)
        gj = np.abs(g(J))
    denom = np.maximum(np.abs(an), gj / J)
    ok = np.isfinite(fd) & np.isfinite(an) & np.isfinite(denom) & (denom > 0)
    if not np.any(ok):
        return 0.0
    return float(np.max(np.abs(fd[ok] - an[ok]) / denom[ok]))


def check_hypotheses(m: MaterialModel, d: int, J_grid=None) -> HypothesisReport:
    """Sample the convexity hypotheses and small-strain relations of m.

    Verifies on the grid: h'' > 0, h''' < 0, the stress-free reference
    h'(1) = -mu, the bulk relation kappa = mu(2/d - 1) + h''(1) against
    the declared bulk modulus, and consistency of h1..h3 with finite
    differences.  Poisson ratio and first Lame parameter are derived
    from the effective (h''-implied) bulk modulus.
    """
    J = np.asarray(default_J_grid() if J_grid is None else J_grid, dtype=float)
    if J.size == 0 or np.any(J <= 0):
        raise ValueError("J_grid must be a nonempty subset of (0, inf)")
    with np.errstate(over="ignore", invalid="ignore"):
        h2_vals = np.asarray(m.h2(J), dtype=float)
        h3_vals = np.asarray(m.h3(J), dtype=float)
        h1_vals = np.asarray(m.h1(J), dtype=float)
    h2_positive = bool(np.all(h2_vals > 0))
    h3_negative = bool(np.all(h3_vals < 0))
    h_nonincreasing = bool(np.all(h1_vals[np.isfinite(h1_vals)] <= 0))

    free_stress = bool(abs(float(m.h1(1.0)) + m.mu) <= 1e-9 * m.mu)
    effective_bulk = m.mu * (2.0 / d - 1.0) + float(m.h2(1.0))
    if m.declared_bulk is None:
        bulk_relation = True
    else:
        bulk_relation = bool(
            abs(m.declared_bulk - effective_bulk) <= 1e-9 * max(abs(m.declared_bulk), m.mu)
        )

    kap = effective_bulk
    poisson = (d * kap - 2.0 * m.mu) / (2.0 * m.mu + d * (d - 1.0) * kap)
    lame_first = kap - 2.0 * m.mu / d

    errs = [
        _fd_chain_error(m.h, m.h1, J),
        _fd_chain_error(m.h1, m.h2, J),
        _fd_chain_error(m.h2, m.h3, J),
    ]
    fd_max = max(errs)
    return HypothesisReport(
        h2_positive=h2_positive,
        h3_negative=h3_negative,
        free_stress=free_stress,
        bulk_relation=bulk_relation,
        poisson=float(poisson),
        lame_first=float(lame_first),
        J_grid=J,
        fd_consistent=bool(fd_max <= 1e-6),
        fd_max_rel_err=fd_max,
        effective_bulk=float(effective_bulk),
        h_nonincreasing=h_nonincreasing,
    )


# ---------------------------------------------------------------------------
# stress and acoustic tensors

def _jacobian(U: np.ndarray) -> float:
    J = float(np.linalg.det(U))
    if J <= 0:
        raise NonPositiveJacobian(f"det U = {J} <= 0")
    return J


def strain_invariants(U: np.ndarray):
    """Trace invariant I1 = tr(U^T U) and volume ratio J = det U."""
    U = np.asarray(U, dtype=float)
    return float(np.sum(U * U)), float(np.linalg.det(U))


def energy(m: MaterialModel, U: np.ndarray) -> float:
    """Stored energy density W(U) = (mu/2) tr(U^T U) + h(det U)."""
    U = np.asarray(U, dtype=float)
    J = _jacobian(U)
    return 0.5 * m.mu * float(np.sum(U * U)) + float(m.h(J))


def piola_kirchhoff(m: MaterialModel, U: np.ndarray) -> np.ndarray:
    """First Piola-Kirchhoff stress: mu U + h'(J) Cof U."""
    U = np.asarray(U, dtype=float)
    J = _jacobian(U)
    return m.mu * U + float(m.h1(J)) * cofactor(U)


def cauchy_stress(m: MaterialModel, U: np.ndarray) -> np.ndarray:
    """Cauchy stress: (mu/J) U U^T + h'(J) I."""
    U = np.asarray(U, dtype=float)
    J = _jacobian(U)
    d = U.shape[0]
    return (m.mu / J) * (U @ U.T) + float(m.h1(J)) * np.eye(d)


def b_tensor(m: MaterialModel, U: np.ndarray, i: int, j: int) -> np.ndarray:
    """Second-derivative block B_i^j with (l, k) entry d2W / dU_lj dU_ki.

    Indices are 1-based.  B_i^j = mu delta_ij I + h''(J) (V_j x V_i)
    + (h'(J)/J) (V_j x V_i - V_i x V_j), with V = Cof U.
    """
    U = np.asarray(U, dtype=float)
    d = U.shape[0]
    if not (1 <= i <= d and 1 <= j <= d):
        raise ValueError(f"indices must lie in 1..{d}, got ({i}, {j})")
    J = _jacobian(U)
    V = cofactor(U)
    vi, vj = V[:, i - 1], V[:, j - 1]
    out = float(m.h2(J)) * np.outer(vj, vi)
    out += float(m.h1(J)) / J * (np.outer(vj, vi) - np.outer(vi, vj))
    if i == j:
        out += m.mu * np.eye(d)
    return out


def acoustic_tensor(m: MaterialModel, U: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Symmetric acoustic tensor mu |xi|^2 I + h''(J) (V xi) x (V xi)."""
    U = np.asarray(U, dtype=float)
    xi = np.asarray(xi, dtype=float)
    J = _jacobian(U)
    d = U.shape[0]
    w = cofactor(U) @ xi
    return m.mu * float(xi @ xi) * np.eye(d) + float(m.h2(J)) * np.outer(w, w)


def acoustic_spectrum(m: MaterialModel, U: np.ndarray, xi: np.ndarray) -> AcousticSpectrum:
    """Closed-form eigenvalues of the acoustic tensor for xi != 0.

    kappa1 = mu |xi|^2 with multiplicity d-1 and kappa2 = kappa1
    + h''(J) |V xi|^2 with multiplicity 1 and eigenvector V xi.
    Both are positive whenever h'' > 0.
    """
    U = np.asarray(U, dtype=float)
    xi = np.asarray(xi, dtype=float)
    if float(xi @ xi) == 0.0:
        raise ZeroFrequency("acoustic spectrum needs xi != 0")
    J = _jacobian(U)
    d = U.shape[0]
    w = cofactor(U) @ xi
    k1 = m.mu * float(xi @ xi)
    k2 = k1 + float(m.h2(J)) * float(w @ w)
    return AcousticSpectrum(kappa1=k1, mult1=d - 1, kappa2=k2, mult2=1, eigvec2=w)


def char_speeds(m: MaterialModel, U: np.ndarray):
    """Characteristic speeds in the e1 direction with multiplicities.

    Returns the five distinct speeds in ascending order as
    (value, multiplicity) pairs; multiplicities sum to d^2 + d.
    """
    U = np.asarray(U, dtype=float)
    J = _jacobian(U)
    d = U.shape[0]
    v1 = cofactor(U)[:, 0]
    c2 = np.sqrt(m.mu + float(m.h2(J)) * float(v1 @ v1))
    c1 = np.sqrt(m.mu)
    return [
        (-c2, 1),
        (-c1, d - 1),
        (0.0, d * d - d),
        (c1, d - 1),
        (c2, 1),
    ]
