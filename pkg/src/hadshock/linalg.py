"""Small dense real/complex matrix kernel.

Cofactors, stable quadratic roots and a principal complex square root
with a fixed convention on the negative real axis.  Everything operates
on plain numpy arrays; matrices are tiny (d <= a few), so clarity beats
asymptotics.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateQuadratic

__all__ = [
    "ComplexScalarPair",
    "cofactor",
    "quad_roots",
    "sqrt_principal",
]

ABS_FLOOR = 1e-14


@dataclass
class ComplexScalarPair:
    """The two roots of a quadratic, ordered by real part (then imaginary)."""

    root_minus: complex
    root_plus: complex

    def __iter__(self):
        return iter((self.root_minus, self.root_plus))


def _minor_expansion(a: np.ndarray) -> np.ndarray:
    d = a.shape[0]
    rows = np.arange(d)
    cof = np.empty_like(a)
    for i in range(d):
        for j in range(d):
            sub = a[np.ix_(rows != i, rows != j)]
            cof[i, j] = (-1) ** (i + j) * np.linalg.det(sub)
    return cof


def cofactor(a: np.ndarray) -> np.ndarray:
    """Cofactor matrix C with C[i, j] the signed (d-1)-minor of a.

    Satisfies C^T a = a C^T = det(a) I, also for singular a.  Dimensions
    up to 4 use direct minor expansion; larger ones use the adjugate
    computed from an LU factorization, falling back to minors when a is
    close to singular.
    """
    a = np.asarray(a, dtype=float)
    d = a.shape[0]
    if a.shape != (d, d) or d < 2:
        raise ValueError("cofactor expects a square matrix with dim >= 2")
    if d == 2:
        return np.array([[a[1, 1], -a[1, 0]], [-a[0, 1], a[0, 0]]])
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if d <= 4:
            return _minor_expansion(a)
        det = np.linalg.det(a)
        scale = np.linalg.norm(a, ord=np.inf) ** d
        if abs(det) > 1e-10 * max(scale, ABS_FLOOR):
            return det * np.linalg.inv(a).T
        return _minor_expansion(a)


def quad_roots(a: complex, b: complex, c: complex) -> ComplexScalarPair:
    """Both roots of a*x**2 + b*x + c = 0, numerically stable.

    The larger-magnitude root is taken as -(b + sgn * sqrt(disc)) / (2a)
    with sgn chosen to avoid cancellation; the other root comes from the
    product c / (a * x1).
    """
    a, b, c = complex(a), complex(b), complex(c)
    if abs(a) <= ABS_FLOOR * max(abs(b), abs(c), 1.0):
        raise DegenerateQuadratic(f"leading coefficient {a!r} too small")
    disc = b * b - 4.0 * a * c
    sq = sqrt_principal(disc)
    # pick the sign that adds magnitudes instead of cancelling
    if (b.conjugate() * sq).real >= 0.0:
        q = -0.5 * (b + sq)
    else:
        q = -0.5 * (b - sq)
    if q == 0.0:
        # b == 0 and disc == 0: double root at zero (c must be 0 too)
        r1 = r2 = 0.0 + 0.0j
    else:
        r1 = q / a
        r2 = c / q
    lo, hi = sorted((r1, r2), key=lambda z: (z.real, z.imag))
    return ComplexScalarPair(lo, hi)


def sqrt_principal(z: complex) -> complex:
    """Principal square root with Re >= 0; negative reals map upward.

    For z = -t**2 with t > 0 the result is +i*t regardless of the sign
    of the (zero) imaginary part, so the branch cut never flips due to
    -0.0 artifacts.
    """
    z = complex(z)
    if z.imag == 0.0:
        if z.real >= 0.0:
            return complex(np.sqrt(z.real))
        return 1j * np.sqrt(-z.real)
    w = np.sqrt(complex(z))
    if w.real < 0.0:
        w = -w
    return complex(w)
