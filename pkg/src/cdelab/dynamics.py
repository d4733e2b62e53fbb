"""Closed-form evaluation of the cylinder Hamiltonian system.

The phase space is the set of 4-vectors ``(u, v, a, b)`` with ``v = u'`` and
``(a, b)`` the two real spinor components.  States are plain numpy arrays of
64-bit reals; the complex spinor form is a view, not storage.  All functions
accept either a single state of shape ``(4,)`` or a batch of states stacked
along trailing axes, shape ``(4, ...)``.

The flow is generated by

    H(u, v, a, b) = v**2/2 + u**2/2 * (a**2 + b**2 - 1/4) - a*b

with canonical pairs (u, v) and (a, b).
"""

import numpy as np
from dataclasses import dataclass

from .errors import NonConjugatePair

SQRT2 = np.sqrt(2.0)

#: saddle equilibrium at the origin
P0 = np.zeros(4)
#: center equilibria (u >= 0 branch)
P_PLUS = np.array([1.0, 0.0, 1.0 / (2.0 * SQRT2), 1.0 / (2.0 * SQRT2)])
P_MINUS = np.array([1.0, 0.0, -1.0 / (2.0 * SQRT2), -1.0 / (2.0 * SQRT2)])


def hamiltonian(s):
    """Conserved energy H of a state (vectorized over trailing axes)."""
    u, v, a, b = np.asarray(s, dtype=float)
    return 0.5 * v * v + 0.5 * u * u * (a * a + b * b - 0.25) - a * b


def hamiltonian_grouped(s):
    """Algebraically regrouped form of the same energy.

    Identical to :func:`hamiltonian` in exact arithmetic; kept as an
    independent expression so rounding agreement can be cross-checked.
    """
    u, v, a, b = np.asarray(s, dtype=float)
    q = a * a + b * b - 0.25
    return 0.5 * v * v + 0.5 * (u * u - 1.0) * q + 0.5 * ((a - b) ** 2 - 0.25)


def vector_field(s):
    """Right-hand side (u', v', a', b') of the cylinder system."""
    u, v, a, b = np.asarray(s, dtype=float)
    return np.stack([
        v,
        -(a * a + b * b - 0.25) * u,
        -a + u * u * b,
        b - u * u * a,
    ])


def time_reversal_swap(s):
    """Discrete symmetry (u, v, a, b) -> (u, -v, b, a).

    If t -> s(t) solves the system, so does t -> time_reversal_swap(s(-t)).
    Equivalently f(sigma(s)) = -sigma(f(s)) for the vector field f.
    """
    u, v, a, b = np.asarray(s, dtype=float)
    return np.stack([u, -v, b, a])


def to_rotated(s):
    """Rotate (a, b) into the diagonalizing variables (abar, bbar).

    abar = (a+b)/sqrt(2), bbar = (a-b)/sqrt(2).  The rotation is a symmetric
    orthogonal involution, so :func:`from_rotated` applies the same formula.
    """
    u, v, a, b = np.asarray(s, dtype=float)
    return np.stack([u, v, (a + b) / SQRT2, (a - b) / SQRT2])


def from_rotated(r):
    """Inverse of :func:`to_rotated` (the same involution)."""
    return to_rotated(r)


def rotated_vector_field(r):
    """Right-hand side of the system in the rotated chart."""
    u, v, ab, bb = np.asarray(r, dtype=float)
    return np.stack([
        v,
        (0.25 - (ab * ab + bb * bb)) * u,
        -(1.0 + u * u) * bb,
        (u * u - 1.0) * ab,
    ])


def hamiltonian_rotated(r):
    """Energy in the rotated chart; equals hamiltonian(from_rotated(r))."""
    u, v, ab, bb = np.asarray(r, dtype=float)
    return (0.5 * v * v
            + 0.5 * (u * u - 1.0) * (ab * ab + bb * bb - 0.25)
            + 0.5 * (2.0 * bb * bb - 0.25))


#: rotated-chart center equilibria (1, 0, ±1/2, 0); exactly representable,
#: so they are written out rather than produced by the rotation
P_PLUS_ROTATED = np.array([1.0, 0.0, 0.5, 0.0])
P_MINUS_ROTATED = np.array([1.0, 0.0, -0.5, 0.0])


@dataclass(frozen=True)
class SpinorPair:
    """Complex view psi_plus = a + i b, psi_minus = a - i b of a state."""
    psi_plus: complex
    psi_minus: complex


@dataclass(frozen=True)
class EquilibriumCatalog:
    """The three equilibria with u >= 0 and their energies."""
    p0: np.ndarray
    p_plus: np.ndarray
    p_minus: np.ndarray
    energies: tuple

    def items(self):
        return (("P0", self.p0, self.energies[0]),
                ("P+", self.p_plus, self.energies[1]),
                ("P-", self.p_minus, self.energies[2]))


def equilibria():
    """Catalog of equilibrium points; energies are H evaluated exactly."""
    return EquilibriumCatalog(
        p0=P0.copy(),
        p_plus=P_PLUS.copy(),
        p_minus=P_MINUS.copy(),
        energies=(float(hamiltonian(P0)),
                  float(hamiltonian(P_PLUS)),
                  float(hamiltonian(P_MINUS))),
    )


def spinor_from_state(s):
    """Complex spinor view of the (a, b) components."""
    _, _, a, b = np.asarray(s, dtype=float)
    return SpinorPair(psi_plus=complex(a, b), psi_minus=complex(a, -b))


def state_from_spinor(u, v, pair, tol=1e-12):
    """Rebuild a state from (u, v) and a conjugate spinor pair.

    Raises NonConjugatePair when conj(psi_plus) differs from psi_minus by
    more than ``tol`` relative to the pair magnitude.
    """
    scale = max(1.0, abs(pair.psi_plus))
    if abs(np.conj(pair.psi_plus) - pair.psi_minus) > tol * scale:
        raise NonConjugatePair(
            f"conj(psi_plus) != psi_minus beyond tolerance {tol}")
    return np.array([u, v, pair.psi_plus.real, pair.psi_plus.imag])
