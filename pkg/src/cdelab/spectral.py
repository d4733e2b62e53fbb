"""Fourier-spectral machinery for the rescaled periodic problem.

Everything lives in the epsilon-chart: 2-periodic fields on [-1, 1] with
epsilon = 1/T, where 2T is the period in the original time variable.  A field
is a scalar u plus a two-component spinor z = (a, b); the first-order spinor
operator acts per Fourier mode k as the Hermitian matrix

    [[0, 1 - i w_k], [1 + i w_k, 0]],   w_k = k*pi/T = eps*k*pi,

with eigenvalues +/- sqrt(1 + w_k^2) and no kernel (min |lambda| = 1).  Spinor
coefficients are stored in this eigenbasis, split into plus/minus parts.

Discretization: truncated Fourier collocation with K modes and a dealiased
grid of N = 4(K+1) points, which integrates the quartic coupling term exactly.
Coefficient arrays use the centered order k = -K..K.

The rescaled energy of a field is

    E_eps(u, z) = (1/(2 eps)) * int_{-1}^{1} [ eps^2 |u'|^2 + u^2/4
                    + <A_eps z, z> - u^2 |z|^2 ] dt

and its critical points solve -eps^2 u'' + u/4 = u |z|^2, A_eps z = u^2 z.
"""

import numpy as np
from dataclasses import dataclass, replace

from .errors import TruncationMismatch, SolverStall, NonConvergence
from . import homoclinic

#: documented truncation table: coefficient tails of the limit profile fall
#: below 1e-10 once K >= 6.4/eps (decay rate exp(-K*eps*pi^2/2)), giving
#: K = 32, 64, 128 at eps = 0.2, 0.1, 0.05
def default_modes(eps):
    return int(np.ceil(6.4 / eps))


def grid_size(K):
    """Collocation size with 2x dealiasing for the quartic nonlinearity."""
    return 4 * (K + 1)


def grid(N):
    """Collocation nodes t_j = -1 + 2j/N on the period-2 interval."""
    return -1.0 + 2.0 * np.arange(N) / N


# ----------------------------------------------------------------------
# coefficient <-> value transforms (centered order k = -K..K)

def coeffs_to_values(c, N):
    """Evaluate sum_k c_k e^{i pi k t} on the N-point grid; batched on axis 1."""
    c = np.asarray(c)
    single = c.ndim == 1
    cc = c[:, None] if single else c
    M = cc.shape[0]
    K = (M - 1) // 2
    if N < M:
        raise ValueError("grid too coarse for the truncation")
    k = np.arange(-K, K + 1)
    spread = np.zeros((N,) + cc.shape[1:], dtype=complex)
    phase = np.where(k % 2 == 0, 1.0, -1.0)       # e^{-i pi k} shift to t=-1
    np.add.at(spread, k % N, cc * phase[:, None])
    vals = N * np.fft.ifft(spread, axis=0)
    return vals[:, 0] if single else vals


def values_to_coeffs(v, K):
    """Truncated Fourier coefficients of grid samples; batched on axis 1."""
    v = np.asarray(v)
    single = v.ndim == 1
    vv = v[:, None] if single else v
    N = vv.shape[0]
    F = np.fft.fft(vv, axis=0) / N
    k = np.arange(-K, K + 1)
    phase = np.where(k % 2 == 0, 1.0, -1.0)
    c = F[k % N] * phase[:, None]
    return c[:, 0] if single else c


def derivative_coeffs(c):
    """d/dt on [-1,1]: multiply mode k by i*pi*k."""
    c = np.asarray(c)
    K = (c.shape[0] - 1) // 2
    k = np.arange(-K, K + 1)
    mult = 1j * np.pi * k
    return c * (mult[:, None] if c.ndim > 1 else mult)


# ----------------------------------------------------------------------
# the spinor operator

@dataclass(frozen=True)
class SpectrumA:
    """Eigen-decomposition of the spinor operator on modes |k| <= K.

    Per mode the eigenvalues are +/- lam_k with lam_k = sqrt(1 + omega_k^2)
    exactly, omega_k = k*pi/T; ``eigvec_plus``/``eigvec_minus`` hold the
    orthonormal eigenvectors in the (a, b) Fourier representation.
    """
    half_period: float
    num_modes: int
    k: np.ndarray
    omega: np.ndarray
    lam: np.ndarray
    eigvec_plus: np.ndarray      # (M, 2) complex
    eigvec_minus: np.ndarray     # (M, 2) complex

    @property
    def epsilon(self):
        return 1.0 / self.half_period

    def eigenvalue_table(self):
        """Rows (k, omega, +lam, -lam) for every retained mode."""
        return np.stack([self.k, self.omega, self.lam, -self.lam], axis=1)


def build_spectrum(T, K):
    """Eigenpairs of the spinor operator for half-period T, truncation K."""
    if T <= 0 or K < 1:
        raise ValueError("require T > 0 and K >= 1")
    k = np.arange(-K, K + 1)
    omega = k * np.pi / T
    lam = np.sqrt(1.0 + omega * omega)
    top = (1.0 - 1j * omega) / (np.sqrt(2.0) * lam)
    vp = np.stack([top, np.full_like(lam, 1.0 / np.sqrt(2.0)) + 0j], axis=1)
    vm = np.stack([top, np.full_like(lam, -1.0 / np.sqrt(2.0)) + 0j], axis=1)
    return SpectrumA(half_period=float(T), num_modes=K, k=k, omega=omega,
                     lam=lam, eigvec_plus=vp, eigvec_minus=vm)


def split_spinor(z_ab, sp):
    """(a, b) coefficients (M, 2) -> eigenbasis coordinates (plus, minus)."""
    _check_modes(z_ab.shape[0], sp)
    p = np.einsum('ki,ki->k', np.conj(sp.eigvec_plus), z_ab)
    m = np.einsum('ki,ki->k', np.conj(sp.eigvec_minus), z_ab)
    return p, m


def merge_spinor(p, m, sp):
    """Eigenbasis coordinates -> (a, b) coefficients (M, 2)."""
    _check_modes(p.shape[0], sp)
    return p[:, None] * sp.eigvec_plus + m[:, None] * sp.eigvec_minus


def project(z_ab, sp):
    """Split z into its plus/minus spectral parts, both in (a, b) coefficients.

    The parts are complementary (z = z_plus + z_minus), the projectors are
    idempotent, and the parts are L^2-orthogonal.
    """
    p, m = split_spinor(z_ab, sp)
    zero = np.zeros_like(p)
    return merge_spinor(p, zero, sp), merge_spinor(zero, m, sp)


def apply_A(z_plus, z_minus, sp):
    """Diagonal action of the operator: +lam on plus, -lam on minus coords."""
    _check_modes(z_plus.shape[0], sp)
    _check_modes(z_minus.shape[0], sp)
    return sp.lam * z_plus, -sp.lam * z_minus


def apply_A_ab(z_ab, sp):
    """Same operator in the (a, b) representation: per-mode Hermitian matrix."""
    _check_modes(z_ab.shape[0], sp)
    out = np.empty_like(z_ab)
    out[:, 0] = (1.0 - 1j * sp.omega) * z_ab[:, 1]
    out[:, 1] = (1.0 + 1j * sp.omega) * z_ab[:, 0]
    return out


def _check_modes(M, sp):
    if M != 2 * sp.num_modes + 1:
        raise TruncationMismatch(
            f"field truncation {(M - 1) // 2} != spectrum truncation {sp.num_modes}")


# ----------------------------------------------------------------------
# fields

@dataclass
class PeriodicField:
    """Scalar/spinor pair in coefficient space at a fixed epsilon.

    ``u_coeffs`` are the Fourier coefficients of the real scalar (conjugate
    symmetric); ``z_plus``/``z_minus`` are the spinor coordinates against the
    positive/negative eigenvectors of the operator spectrum.
    """
    epsilon: float
    num_modes: int
    u_coeffs: np.ndarray
    z_plus: np.ndarray
    z_minus: np.ndarray
    spectrum: SpectrumA = None

    def __post_init__(self):
        if self.spectrum is None:
            self.spectrum = build_spectrum(1.0 / self.epsilon, self.num_modes)

    # -- views -----------------------------------------------------------
    def z_ab_coeffs(self):
        return merge_spinor(self.z_plus, self.z_minus, self.spectrum)

    def u_values(self, N=None):
        N = N or grid_size(self.num_modes)
        return coeffs_to_values(self.u_coeffs, N).real

    def z_values(self, N=None):
        N = N or grid_size(self.num_modes)
        return coeffs_to_values(self.z_ab_coeffs(), N).real

    def u_slope_values(self, N=None):
        """du/dt in the original (unrescaled) time variable, i.e. eps * d/ds."""
        N = N or grid_size(self.num_modes)
        du = derivative_coeffs(self.u_coeffs) * self.epsilon
        return coeffs_to_values(du, N).real

    def shifted(self, tau):
        """Translate the field by tau in s: f(s) -> f(s + tau)."""
        k = np.arange(-self.num_modes, self.num_modes + 1)
        phase = np.exp(1j * np.pi * k * tau)
        return replace(self, u_coeffs=self.u_coeffs * phase,
                       z_plus=self.z_plus * phase,
                       z_minus=self.z_minus * phase,
                       spectrum=self.spectrum)


def zero_field(eps, K):
    M = 2 * K + 1
    z = np.zeros(M, dtype=complex)
    return PeriodicField(epsilon=eps, num_modes=K, u_coeffs=z.copy(),
                         z_plus=z.copy(), z_minus=z.copy())


def field_from_values(eps, K, u_vals, z_vals):
    """Build a field from real samples on any uniform grid with N > 2K nodes."""
    sp = build_spectrum(1.0 / eps, K)
    u_hat = values_to_coeffs(np.asarray(u_vals, dtype=float), K)
    z_ab = values_to_coeffs(np.asarray(z_vals, dtype=float), K)
    p, m = split_spinor(z_ab, sp)
    return PeriodicField(epsilon=eps, num_modes=K, u_coeffs=u_hat,
                         z_plus=p, z_minus=m, spectrum=sp)


def equilibrium_field(eps, K):
    """The constant solution u = 1, z = (1, 1)/(2*sqrt(2))."""
    f = zero_field(eps, K)
    f.u_coeffs[K] = 1.0
    c = 1.0 / (2.0 * np.sqrt(2.0))
    z_ab = np.zeros((2 * K + 1, 2), dtype=complex)
    z_ab[K] = (c, c)
    p, m = split_spinor(z_ab, f.spectrum)
    return replace(f, z_plus=p, z_minus=m, spectrum=f.spectrum)


# ----------------------------------------------------------------------
# energy, norms, gradient

@dataclass(frozen=True)
class EnergyBreakdown:
    scalar_quadratic: float   # squared (1,eps)-norm of u
    spinor_quadratic: float   # (1/eps) int <A_eps z, z>
    coupling: float           # (1/eps) int u^2 |z|^2
    total: float


def _scalar_multiplier(field):
    k = np.arange(-field.num_modes, field.num_modes + 1)
    om = field.epsilon * np.pi * k
    return om * om + 0.25


def norms(field):
    """Rescaled norms; ``h1`` and ``half`` are the squared norms."""
    eps = field.epsilon
    mult = _scalar_multiplier(field)
    h1 = (2.0 / eps) * float(np.sum(mult * np.abs(field.u_coeffs) ** 2))
    lam = field.spectrum.lam
    half = (2.0 / eps) * float(np.sum(lam * (np.abs(field.z_plus) ** 2
                                             + np.abs(field.z_minus) ** 2)))
    N = grid_size(field.num_modes)
    u = field.u_values(N)
    z = field.z_values(N)
    z2 = z[:, 0] ** 2 + z[:, 1] ** 2
    l4_u = ((2.0 / (N * eps)) * float(np.sum(u ** 4))) ** 0.25
    l4_z = ((2.0 / (N * eps)) * float(np.sum(z2 ** 2))) ** 0.25
    return {"h1": h1, "half": half, "l4_u": l4_u, "l4_z": l4_z}


def energy(field):
    """Rescaled energy with its quadratic/coupling breakdown."""
    eps = field.epsilon
    mult = _scalar_multiplier(field)
    scal = (2.0 / eps) * float(np.sum(mult * np.abs(field.u_coeffs) ** 2))
    lam = field.spectrum.lam
    spin = (2.0 / eps) * float(np.sum(lam * (np.abs(field.z_plus) ** 2
                                             - np.abs(field.z_minus) ** 2)))
    N = grid_size(field.num_modes)
    u = field.u_values(N)
    z = field.z_values(N)
    coup = (2.0 / (N * eps)) * float(np.sum(u ** 2 * (z[:, 0] ** 2 + z[:, 1] ** 2)))
    return EnergyBreakdown(scalar_quadratic=scal, spinor_quadratic=spin,
                           coupling=coup, total=0.5 * (scal + spin - coup))


def gradient(field):
    """Euler-Lagrange residual pair as a field in the same coefficient space.

    The scalar part is -eps^2 u'' + u/4 - u|z|^2 and the spinor part is
    A_eps z - u^2 z; both vanish exactly at solutions.  Pairing a direction h
    against this representative in the eps-weighted L^2 product reproduces
    the directional derivative of the energy.
    """
    K = field.num_modes
    N = grid_size(K)
    u = field.u_values(N)
    z = field.z_values(N)
    z2 = z[:, 0] ** 2 + z[:, 1] ** 2
    gu = _scalar_multiplier(field) * field.u_coeffs - values_to_coeffs(u * z2, K)
    gz_ab = apply_A_ab(field.z_ab_coeffs(), field.spectrum) \
        - values_to_coeffs(u[:, None] ** 2 * z, K)
    gp, gm = split_spinor(gz_ab, field.spectrum)
    return replace(field, u_coeffs=gu, z_plus=gp, z_minus=gm,
                   spectrum=field.spectrum)


def gradient_norm(field_or_grad, is_gradient=False):
    """eps-weighted L^2 norm of the Euler-Lagrange residual."""
    g = field_or_grad if is_gradient else gradient(field_or_grad)
    eps = g.epsilon
    total = (np.sum(np.abs(g.u_coeffs) ** 2) + np.sum(np.abs(g.z_plus) ** 2)
             + np.sum(np.abs(g.z_minus) ** 2))
    return float(np.sqrt((2.0 / eps) * total))


# ----------------------------------------------------------------------
# concave reduction onto the minus space

def reduce_g(u_coeffs, z_plus, sp, tol=1e-12, max_iter=2000):
    """Unique maximizer of the concave minus-space restriction.

    Solves lam*w + P^-(u^2 (w + v)) = 0 in minus coordinates by conjugate
    gradient on the (positive definite) operator lam + P^- u^2 P^-, with the
    diagonal 1/lam preconditioner.  The returned w satisfies
    A_eps w - P^-(u^2 (w + v)) = 0 to the requested tolerance.
    """
    M = u_coeffs.shape[0]
    K = (M - 1) // 2
    _check_modes(M, sp)
    N = grid_size(K)
    u = coeffs_to_values(u_coeffs, N).real
    u2 = u * u
    zero = np.zeros(M, dtype=complex)

    def minus_part_of_u2_times(p, m):
        z_ab = merge_spinor(p, m, sp)
        zv = coeffs_to_values(z_ab, N).real
        prod = values_to_coeffs(u2[:, None] * zv, K)
        _, mm = split_spinor(prod, sp)
        return mm

    def operator(m):
        return sp.lam * m + minus_part_of_u2_times(zero, m)

    rhs = -minus_part_of_u2_times(z_plus, zero)
    rhs_norm = np.linalg.norm(rhs)
    if rhs_norm == 0.0:
        return np.zeros(M, dtype=complex)

    def inner(x, y):
        return float(np.real(np.sum(np.conj(x) * y)))

    w = np.zeros(M, dtype=complex)
    r = rhs - operator(w)
    z = r / sp.lam
    d = z.copy()
    rz = inner(r, z)
    for _ in range(max_iter):
        if np.linalg.norm(r) <= tol * rhs_norm:
            return w
        ad = operator(d)
        alpha = rz / inner(d, ad)
        w = w + alpha * d
        r = r - alpha * ad
        z = r / sp.lam
        rz_new = inner(r, z)
        d = z + (rz_new / rz) * d
        rz = rz_new
    if np.linalg.norm(r) <= tol * rhs_norm * 100:
        return w
    raise SolverStall(
        f"reduction CG stalled at relative residual {np.linalg.norm(r) / rhs_norm:.3e}")


# ----------------------------------------------------------------------
# Nehari residuals

@dataclass(frozen=True)
class NehariResiduals:
    """Defects of the three natural critical-point identities.

    r1: scalar identity |  ||u||^2_{1,eps} - c |
    r2: spinor identity |  (1/eps) int <A_eps z, z> - c |
    r3: eps-L^2 norm of the minus-space residual P^-(A_eps z - u^2 z)
    with c the coupling (1/eps) int u^2 |z|^2.  The zero field satisfies all
    three trivially but is excluded from the constraint set; it is flagged.
    """
    r1: float
    r2: float
    r3: float
    coupling: float
    excluded_trivial: bool = False

    def relative(self):
        floor = max(abs(self.coupling), 1e-300)
        return (self.r1 / floor, self.r2 / floor, self.r3 / floor)

    def max_relative(self):
        return max(self.relative())


def nehari_residuals(field):
    eb = energy(field)
    g = gradient(field)
    r3 = float(np.sqrt((2.0 / field.epsilon) * np.sum(np.abs(g.z_minus) ** 2)))
    trivial = (np.max(np.abs(field.u_coeffs), initial=0.0) < 1e-14
               and np.max(np.abs(field.z_plus), initial=0.0) < 1e-14
               and np.max(np.abs(field.z_minus), initial=0.0) < 1e-14)
    return NehariResiduals(r1=abs(eb.scalar_quadratic - eb.coupling),
                           r2=abs(eb.spinor_quadratic - eb.coupling),
                           r3=r3, coupling=eb.coupling,
                           excluded_trivial=bool(trivial))


# ----------------------------------------------------------------------
# cutoff test pair

def bump(t):
    """Smooth bump: 1 on [-1/2, 1/2], supported in (-1, 1)."""
    t = np.asarray(t, dtype=float)

    def psi(x):
        out = np.zeros_like(x)
        pos = x > 0
        out[pos] = np.exp(-1.0 / x[pos])
        return out

    x = np.clip((1.0 - np.abs(t)) / 0.5, 0.0, 1.0)
    num = psi(x)
    return num / (num + psi(1.0 - x))


def cutoff_test_pair(eps, K=None):
    """Bump-localized copy of the limit profile, rescaled into [-1, 1].

    u(t) = beta(t) U(t/eps), z(t) = beta(t) Z(t/eps) with (U, Z) the derived
    homoclinic profile and beta the smooth bump above.  Requires eps <= 1/4
    so the localized pulse fits inside the bump plateau.
    """
    if eps > 0.25:
        raise ValueError("cutoff pair requires eps <= 1/4")
    K = K or default_modes(eps)
    N = grid_size(K)
    t = grid(N)
    prof = homoclinic.derived_profile()
    states = prof(t / eps)
    beta = bump(t)
    u_vals = beta * states[0]
    z_vals = np.stack([beta * states[2], beta * states[3]], axis=1)
    return field_from_values(eps, K, u_vals, z_vals)


# ----------------------------------------------------------------------
# ground-state solver

@dataclass
class GroundStateResult:
    field: PeriodicField
    delta_eps: float
    diagnostics: dict
    converged: bool = True


def _pack(u_hat, z_ab, K):
    def one(c):
        return np.concatenate([[c[K].real], c[K + 1:].real, c[K + 1:].imag])
    return np.concatenate([one(u_hat), one(z_ab[:, 0]), one(z_ab[:, 1])])


def _unpack(x, K):
    M = 2 * K + 1

    def one(seg):
        c = np.zeros(M, dtype=complex)
        c[K] = seg[0]
        c[K + 1:] = seg[1:K + 1] + 1j * seg[K + 1:]
        c[:K] = np.conj(c[K + 1:][::-1])
        return c

    u = one(x[:M])
    z_ab = np.stack([one(x[M:2 * M]), one(x[2 * M:])], axis=1)
    return u, z_ab


def _residual_coeffs(u_hat, z_ab, sp, eps, N, mult_u):
    K = sp.num_modes
    u = coeffs_to_values(u_hat, N).real
    zv = coeffs_to_values(z_ab, N).real
    z2 = zv[:, 0] ** 2 + zv[:, 1] ** 2
    gu = mult_u * u_hat - values_to_coeffs(u * z2, K)
    gz = apply_A_ab(z_ab, sp) - values_to_coeffs(u[:, None] ** 2 * zv, K)
    return gu, gz, u, zv


def _jacobian(u_hat, z_ab, sp, eps, N, mult_u):
    """Exact dense Jacobian of the Euler-Lagrange residual, batched assembly."""
    K = sp.num_modes
    M = 2 * K + 1
    n = 3 * M
    u = coeffs_to_values(u_hat, N).real
    zv = coeffs_to_values(z_ab, N).real
    z2 = zv[:, 0] ** 2 + zv[:, 1] ** 2

    eye = np.eye(n)
    HU = np.zeros((M, n), dtype=complex)
    HA = np.zeros((M, n), dtype=complex)
    HB = np.zeros((M, n), dtype=complex)
    for i in range(n):
        hu, hz = _unpack(eye[i], K)
        HU[:, i] = hu
        HA[:, i] = hz[:, 0]
        HB[:, i] = hz[:, 1]
    hu_v = coeffs_to_values(HU, N).real
    ha_v = coeffs_to_values(HA, N).real
    hb_v = coeffs_to_values(HB, N).real

    a, b = zv[:, 0][:, None], zv[:, 1][:, None]
    uu = u[:, None]
    dGu = mult_u[:, None] * HU - values_to_coeffs(
        hu_v * z2[:, None] + 2.0 * uu * (a * ha_v + b * hb_v), K)
    om = sp.omega[:, None]
    dGa = (1.0 - 1j * om) * HB - values_to_coeffs(
        uu ** 2 * ha_v + 2.0 * uu * a * hu_v, K)
    dGb = (1.0 + 1j * om) * HA - values_to_coeffs(
        uu ** 2 * hb_v + 2.0 * uu * b * hu_v, K)

    cols = np.empty((n, n))
    for i in range(n):
        cols[:, i] = _pack(dGu[:, i], np.stack([dGa[:, i], dGb[:, i]], axis=1), K)
    return cols


def nehari_scale(u_hat, z_plus, sp, tol=1e-11, max_iter=40):
    """Scalings (t, s) putting (t*u, s*z_plus + g(t*u, s*z_plus)) on the
    constraint set; 2D Newton with finite-difference Jacobian."""
    eps = sp.epsilon
    K = sp.num_modes

    def point(t, s):
        uh = t * u_hat
        ph = s * z_plus
        f = PeriodicField(epsilon=eps, num_modes=K, u_coeffs=uh,
                          z_plus=ph, z_minus=reduce_g(uh, ph, sp),
                          spectrum=sp)
        eb = energy(f)
        scale = max(1.0, abs(eb.coupling))
        return np.array([eb.scalar_quadratic - eb.coupling,
                         eb.spinor_quadratic - eb.coupling]) / scale, f

    ts = np.array([1.0, 1.0])
    res, f = point(*ts)
    for _ in range(max_iter):
        if np.max(np.abs(res)) <= tol:
            return ts[0], ts[1], f
        jac = np.empty((2, 2))
        for j in range(2):
            d = np.zeros(2)
            d[j] = 1e-6 * max(ts[j], 1e-3)
            rp, _ = point(*(ts + d))
            jac[:, j] = (rp - res) / d[j]
        try:
            dts = np.linalg.solve(jac, -res)
        except np.linalg.LinAlgError:
            break
        lam = 1.0
        while np.any(ts + lam * dts <= 0):
            lam *= 0.5
            if lam < 1e-8:
                break
        ts = ts + lam * dts
        res, f = point(*ts)
    if np.max(np.abs(res)) <= tol * 100:
        return ts[0], ts[1], f
    raise NonConvergence("Nehari scaling Newton did not converge", best=f)


def center_phase(field):
    """Translate so the circular centroid of the u^2 mass sits at t = 0."""
    N = grid_size(field.num_modes)
    u = field.u_values(N)
    t = grid(N)
    w = u * u
    zc = np.sum(w * np.exp(1j * np.pi * t))
    if abs(zc) < 1e-300:
        return field
    tau = np.angle(zc) / np.pi
    return field.shifted(tau)


def ground_state(eps, K=None, init=None, grad_tol=1e-8, nehari_rel_tol=1e-6,
                 max_pg_iters=80, max_newton_iters=40):
    """Ground state of the rescaled problem at the given epsilon.

    Strategy: minimize the reduced functional over the Nehari constraint by
    a preconditioned projected gradient (inner Newton for the (t, s) scaling,
    conjugate-gradient reduction onto the minus space), then polish with a
    full-space Newton iteration using the exact Jacobian (minimum-norm steps
    absorb the time-translation null direction).  The phase is fixed by
    centering the u^2 mass at t = 0.

    Returns a :class:`GroundStateResult`; raises NonConvergence with the best
    iterate attached when the tolerances cannot be met.
    """
    K = K or default_modes(eps)
    N = grid_size(K)
    sp = build_spectrum(1.0 / eps, K)
    mult_u = sp.omega ** 2 + 0.25

    if init is None:
        if eps <= 0.25:
            field = cutoff_test_pair(eps, K)
        else:
            field = equilibrium_field(eps, K)
            field.u_coeffs[K + 1] += 0.05
            field.u_coeffs[K - 1] += 0.05
            field.z_plus[K + 1] += 0.05
            field.z_plus[K - 1] += 0.05
    else:
        field = init
        if field.num_modes != K or abs(field.epsilon - eps) > 1e-12:
            raise TruncationMismatch("init field does not match eps/K")

    grad_history = []
    energy_history = []

    # ---- phase 1: projected gradient on the Nehari constraint ----------
    u_hat = field.u_coeffs.copy()
    z_p = field.z_plus.copy()
    pg_iters = 0
    switch_tol = max(grad_tol, 1e-4)
    for pg_iters in range(max_pg_iters):
        try:
            _, _, f = nehari_scale(u_hat, z_p, sp)
        except NonConvergence:
            f = PeriodicField(epsilon=eps, num_modes=K, u_coeffs=u_hat,
                              z_plus=z_p, z_minus=reduce_g(u_hat, z_p, sp),
                              spectrum=sp)
        u_hat, z_p = f.u_coeffs, f.z_plus
        g = gradient(f)
        gn = gradient_norm(g, is_gradient=True)
        eb = energy(f)
        grad_history.append(gn)
        energy_history.append(eb.total)
        if gn <= switch_tol:
            break
        # preconditioned descent in the reduced variables
        du = -g.u_coeffs / mult_u
        dp = -g.z_plus / sp.lam
        eta = 1.0
        accepted = False
        for _ in range(25):
            try:
                _, _, f_try = nehari_scale(u_hat + eta * du, z_p + eta * dp, sp)
            except (NonConvergence, SolverStall):
                eta *= 0.5
                continue
            if energy(f_try).total < eb.total - 1e-14:
                u_hat, z_p = f_try.u_coeffs, f_try.z_plus
                accepted = True
                break
            eta *= 0.5
        if not accepted:
            break
    field = PeriodicField(epsilon=eps, num_modes=K, u_coeffs=u_hat, z_plus=z_p,
                          z_minus=reduce_g(u_hat, z_p, sp), spectrum=sp)

    # ---- phase 2: full-space Newton polish ------------------------------
    x = _pack(field.u_coeffs, field.z_ab_coeffs(), K)
    newton_iters = 0
    target = min(grad_tol, 1e-10)
    for newton_iters in range(max_newton_iters):
        uh, z_ab = _unpack(x, K)
        gu, gz, _, _ = _residual_coeffs(uh, z_ab, sp, eps, N, mult_u)
        gn = float(np.sqrt((2.0 / eps) * (np.sum(np.abs(gu) ** 2)
                                          + np.sum(np.abs(gz) ** 2))))
        grad_history.append(gn)
        if gn <= target:
            break
        jac = _jacobian(uh, z_ab, sp, eps, N, mult_u)
        r = _pack(gu, gz, K)
        dx, *_ = np.linalg.lstsq(jac, -r, rcond=1e-12)
        lam = 1.0
        improved = False
        for _ in range(30):
            uh2, z2 = _unpack(x + lam * dx, K)
            gu2, gz2, _, _ = _residual_coeffs(uh2, z2, sp, eps, N, mult_u)
            gn2 = float(np.sqrt((2.0 / eps) * (np.sum(np.abs(gu2) ** 2)
                                               + np.sum(np.abs(gz2) ** 2))))
            if gn2 < gn:
                improved = True
                break
            lam *= 0.5
        if not improved:
            break
        x = x + lam * dx

    uh, z_ab = _unpack(x, K)
    p, m = split_spinor(z_ab, sp)
    field = PeriodicField(epsilon=eps, num_modes=K, u_coeffs=uh,
                          z_plus=p, z_minus=m, spectrum=sp)
    field = center_phase(field)

    eb = energy(field)
    energy_history.append(eb.total)
    gn = gradient_norm(field)
    res = nehari_residuals(field)
    diagnostics = {
        "epsilon": eps, "modes": K, "grid": N,
        "gradient_history": grad_history,
        "energy_history": energy_history,
        "pg_iterations": pg_iters + 1,
        "newton_iterations": newton_iters,
        "final_gradient_norm": gn,
        "nehari": res,
        "condition_a": {
            "energy_lower": float(np.min(energy_history)),
            "energy_upper": float(np.max(energy_history)),
            "gradient_final": gn,
        },
    }

    nontrivial = eb.coupling > 1e-8
    equilibrium_like = (abs(eb.total - 1.0 / (4.0 * eps)) < 1e-10
                        and np.max(np.abs(field.u_coeffs[np.arange(2 * K + 1) != K])) < 1e-10)
    ok = (gn <= grad_tol and res.max_relative() <= nehari_rel_tol
          and nontrivial and not equilibrium_like)
    result = GroundStateResult(field=field, delta_eps=eb.total,
                               diagnostics=diagnostics, converged=ok)
    if not ok:
        raise NonConvergence(
            f"ground state at eps={eps} stopped with gradient {gn:.3e}, "
            f"nehari {res.max_relative():.3e}", best=result,
            diagnostics=diagnostics)
    return result


# ----------------------------------------------------------------------
# concentration diagnostic

def concentration_diagnostic(field, r0):
    """Windowed-mass concentration check.

    Finds the window center y maximizing (1/eps) * int_{|t-y| <= eps*r0} u^2
    (periodic distance) and reports that mass together with the spinor mass
    in the same window.
    """
    eps = field.epsilon
    N = grid_size(field.num_modes)
    t = grid(N)
    u = field.u_values(N)
    z = field.z_values(N)
    z2 = z[:, 0] ** 2 + z[:, 1] ** 2
    half_width = eps * r0
    # circular convolution with the window indicator via FFT
    dt_idx = np.minimum(np.arange(N), N - np.arange(N)) * (2.0 / N)
    kernel = (dt_idx <= half_width).astype(float)
    fu = np.fft.ifft(np.fft.fft(u * u) * np.fft.fft(kernel)).real
    fz = np.fft.ifft(np.fft.fft(z2) * np.fft.fft(kernel)).real
    masses_u = (2.0 / (N * eps)) * fu
    j = int(np.argmax(masses_u))
    masses_z = (2.0 / (N * eps)) * fz
    return {"y_center": float(t[j]), "mass_u": float(masses_u[j]),
            "mass_z": float(masses_z[j])}
