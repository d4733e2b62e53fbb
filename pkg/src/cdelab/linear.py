"""Jacobians of both charts, 4x4 eigenvalues, Lyapunov period prediction.

Eigenvalues are computed from the explicit quartic characteristic polynomial
(Faddeev-LeVerrier coefficients), rooted with a companion-matrix solver and
polished with one Newton step per simple root.  A fixed-size eigensolver is
all this phase space needs; the residual check guards conditioning.
"""

import numpy as np
from dataclasses import dataclass, field

from .errors import ConvergenceFailure, NoEllipticPair
from . import dynamics

#: relative threshold below which the real/imaginary part of an eigenvalue
#: is treated as zero when classifying pairs
CLASSIFY_TOL = 1e-9

#: roots closer than this (relative to the eigenvalue scale) are treated as
#: a multiple eigenvalue and collapsed to their cluster centroid; a companion
#: solver smears an m-fold root over a radius ~eps^(1/m), so this must sit
#: above eps^(1/4)
CLUSTER_TOL = 1e-3


@dataclass(frozen=True)
class Jacobian4:
    """Analytic Jacobian of one chart's vector field at a base point."""
    entries: np.ndarray
    chart: str
    base_point: np.ndarray


@dataclass(frozen=True)
class SpectrumReport:
    """Four eigenvalues, classified into hyperbolic/elliptic pairs if present.

    ``hyperbolic_mu`` is mu for a real pair {+mu, -mu}; ``elliptic_omega`` is
    omega > 0 for a purely imaginary pair {+i omega, -i omega}.  Either may be
    None when the corresponding pair is absent.
    """
    eigenvalues: np.ndarray
    hyperbolic_mu: float | None = None
    elliptic_omega: float | None = None
    eigenvectors: np.ndarray = field(default=None, repr=False)
    residuals: np.ndarray = field(default=None, repr=False)


def jacobian_at(point, chart="original"):
    """Analytic partial derivatives of the requested chart's vector field."""
    point = np.asarray(point, dtype=float)
    u, v, a, b = point
    if chart == "original":
        m = np.array([
            [0.0, 1.0, 0.0, 0.0],
            [-(a * a + b * b - 0.25), 0.0, -2.0 * a * u, -2.0 * b * u],
            [2.0 * u * b, 0.0, -1.0, u * u],
            [-2.0 * u * a, 0.0, -u * u, 1.0],
        ])
    elif chart == "rotated":
        m = np.array([
            [0.0, 1.0, 0.0, 0.0],
            [0.25 - a * a - b * b, 0.0, -2.0 * a * u, -2.0 * b * u],
            [-2.0 * u * b, 0.0, 0.0, -(1.0 + u * u)],
            [2.0 * u * a, 0.0, u * u - 1.0, 0.0],
        ])
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return Jacobian4(entries=m, chart=chart, base_point=point)


def matrix_c():
    """Linearization at the rotated-chart center equilibrium (1, 0, 1/2, 0)."""
    return jacobian_at(dynamics.P_PLUS_ROTATED, chart="rotated").entries


def characteristic_coefficients(m):
    """Coefficients [1, c1, c2, c3, c4] of det(lambda I - M), Faddeev-LeVerrier."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    coeffs = [1.0]
    mk = np.zeros_like(m)
    for k in range(1, n + 1):
        mk = m @ (mk + coeffs[-1] * np.eye(n)) if k > 1 else m.copy()
        coeffs.append(-np.trace(mk) / k)
    return np.array(coeffs)


def _cluster_roots(roots):
    """Collapse root clusters to their centroid (multiple-eigenvalue rescue)."""
    scale = max(1.0, np.abs(roots).max())
    out = roots.copy()
    used = np.zeros(len(roots), dtype=bool)
    for i in range(len(roots)):
        if used[i]:
            continue
        group = [j for j in range(len(roots))
                 if not used[j] and abs(roots[j] - roots[i]) <= CLUSTER_TOL * scale]
        if len(group) > 1:
            centroid = np.mean([roots[j] for j in group])
            for j in group:
                out[j] = centroid
                used[j] = True
    return out


def eigenvalues_4x4(m):
    """Eigenvalues of a real 4x4 matrix via the quartic characteristic polynomial.

    Each returned eigenvalue carries a unit eigenvector (smallest singular
    vector of M - lambda I) whose residual must satisfy
    ||(M - lambda I) x|| <= 1e-10 ||M||, otherwise ConvergenceFailure is
    raised.  The eigenvalue set is closed under complex conjugation.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    coeffs = characteristic_coefficients(m)
    roots = np.roots(coeffs)

    # one Newton polish per root (skipped inside clusters, where p' ~ 0)
    dcoeffs = np.polyder(coeffs)
    scale = max(1.0, np.abs(roots).max())
    polished = []
    for r in roots:
        others = [q for q in roots if abs(q - r) > 1e-12]
        simple = all(abs(q - r) > CLUSTER_TOL * scale for q in others)
        if simple:
            p, dp = np.polyval(coeffs, r), np.polyval(dcoeffs, r)
            if dp != 0:
                r = r - p / dp
        polished.append(r)
    roots = _cluster_roots(np.array(polished))

    # enforce closure under conjugation
    roots = _conjugate_symmetrize(roots)

    mnorm = np.linalg.norm(m, 2)
    vecs = np.zeros((4, 4), dtype=complex)
    residuals = np.zeros(4)
    for i, lam in enumerate(roots):
        shifted = m - lam * np.eye(4)
        _, sing, vh = np.linalg.svd(shifted)
        x = vh[-1].conj()
        vecs[:, i] = x
        residuals[i] = np.linalg.norm(shifted @ x)
    if np.any(residuals > 1e-10 * max(mnorm, 1e-300)):
        raise ConvergenceFailure(
            f"eigenvector residuals {residuals} exceed 1e-10*||M||={1e-10 * mnorm:.3e}")

    hyper, ellip = _classify_pairs(roots)
    return SpectrumReport(eigenvalues=roots, hyperbolic_mu=hyper,
                          elliptic_omega=ellip, eigenvectors=vecs,
                          residuals=residuals)


def _conjugate_symmetrize(roots):
    scale = max(1.0, np.abs(roots).max())
    out = []
    remaining = list(roots)
    while remaining:
        r = remaining.pop(0)
        if abs(r.imag) <= CLASSIFY_TOL * scale:
            out.append(complex(r.real, 0.0))
            continue
        # find the conjugate partner and average the pair
        j = int(np.argmin([abs(np.conj(r) - q) for q in remaining]))
        q = remaining.pop(j)
        z = 0.5 * (r + np.conj(q))
        out.extend([z, np.conj(z)])
    return np.array(out)


def _classify_pairs(roots):
    scale = max(1.0, np.abs(roots).max())
    hyper = None
    ellip = None
    reals = sorted(r.real for r in roots
                   if abs(r.imag) <= CLASSIFY_TOL * scale and abs(r.real) > CLASSIFY_TOL * scale)
    if reals:
        mu = max(abs(r) for r in reals)
        if any(abs(r + mu) <= CLASSIFY_TOL * scale * 10 for r in reals):
            hyper = mu
    imags = sorted(r.imag for r in roots
                   if abs(r.real) <= CLASSIFY_TOL * max(1.0, abs(r)) and abs(r.imag) > CLASSIFY_TOL * scale)
    if imags:
        om = max(abs(x) for x in imags)
        if any(abs(x + om) <= CLASSIFY_TOL * scale * 10 for x in imags):
            ellip = om
    return hyper, ellip


def lyapunov_period(report):
    """Limiting period 2*pi/omega of the orbit family at an elliptic pair.

    Requires a purely imaginary pair +/- i omega in the report (tolerance
    |Re| <= 1e-9 max(1, |lambda|)); raises NoEllipticPair otherwise.
    """
    if report.elliptic_omega is None or report.elliptic_omega <= 0:
        raise NoEllipticPair("spectrum has no purely imaginary pair")
    return 2.0 * np.pi / report.elliptic_omega
