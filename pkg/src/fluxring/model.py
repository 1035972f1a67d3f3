"""Ring-lattice Hamiltonians with balanced gain/loss and an enclosed flux.

The system is a tight-binding ring of 2N sites with hopping strength 1,
gain +i*gamma on site 1, loss -i*gamma on site N+1, and a magnetic flux
Phi threading the ring.  The flux can be gauged two ways:

* ``UNIFORM_PHASE``: every hopping carries the averaged Peierls phase
  ``exp(+/- i*Phi/(2N))``.
* ``CONCENTRATED_LINK``: all hoppings are -1 except the link between
  sites 1 and 2N, which carries the full nonreciprocal phase
  ``exp(-/+ i*Phi)``.

Both gauges are related by a diagonal similarity transformation and share
one spectrum.  Site labels are 1-based in documentation and file output,
0-based in array indices (the gain site is index 0, the loss site index N).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError


class Gauge(enum.Enum):
    UNIFORM_PHASE = "uniform"
    CONCENTRATED_LINK = "link"


@dataclass(frozen=True)
class RingParams:
    """Physical configuration of a 2N-site gain/loss ring.

    n       half the site count; the ring has 2n sites (n >= 2)
    gamma   gain/loss rate in units of the hopping strength (gamma >= 0)
    flux    total enclosed flux in radians; stored unreduced, all spectral
            outputs are 2*pi-periodic in it
    gauge   which of the two equivalent Hamiltonian forms to build
    """

    n: int
    gamma: float
    flux: float = 0.0
    gauge: Gauge = Gauge.UNIFORM_PHASE

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ParameterDomainError(
                f"half size n must be an integer >= 2, got {self.n!r}")
        if not np.isfinite(self.gamma) or self.gamma < 0:
            raise ParameterDomainError(
                f"gain/loss rate must be finite and >= 0, got {self.gamma!r}")
        if not np.isfinite(self.flux):
            raise ParameterDomainError(f"flux must be finite, got {self.flux!r}")

    @property
    def size(self) -> int:
        """Number of sites, 2n."""
        return 2 * self.n

    @property
    def link_phase(self) -> float:
        """Per-link Peierls phase Phi/(2n) in the uniform gauge."""
        return self.flux / (2 * self.n)


def _gain_loss_diagonal(params: RingParams) -> np.ndarray:
    d = np.zeros(params.size, dtype=complex)
    d[0] = 1j * params.gamma
    d[params.n] = -1j * params.gamma
    return d


def uniform_phase_hamiltonian(params: RingParams) -> np.ndarray:
    """Dense 2n x 2n Hamiltonian with the flux spread evenly over all links.

    Entry (j, j+1) is -exp(i*phi) and (j+1, j) is -exp(-i*phi) cyclically,
    with phi = Phi/(2n); the diagonal carries +i*gamma at site 1 and
    -i*gamma at site N+1.
    """
    d = params.size
    fwd = -np.exp(1j * params.link_phase)
    h = np.zeros((d, d), dtype=complex)
    idx = np.arange(d)
    nxt = (idx + 1) % d
    h[idx, nxt] = fwd
    h[nxt, idx] = np.conj(fwd)
    h[idx, idx] = _gain_loss_diagonal(params)
    return h


def concentrated_link_hamiltonian(params: RingParams) -> np.ndarray:
    """Dense 2n x 2n Hamiltonian with the whole flux on the (1, 2n) link.

    Interior hoppings are -1; the corner entries are -exp(-i*Phi) from
    site 2n to site 1 and -exp(+i*Phi) back, making that single link
    nonreciprocal.  Same gain/loss diagonal as the uniform gauge.
    """
    d = params.size
    h = np.zeros((d, d), dtype=complex)
    idx = np.arange(d - 1)
    h[idx, idx + 1] = -1.0
    h[idx + 1, idx] = -1.0
    h[0, d - 1] = -np.exp(-1j * params.flux)
    h[d - 1, 0] = -np.exp(1j * params.flux)
    h[np.arange(d), np.arange(d)] = _gain_loss_diagonal(params)
    return h


def build_hamiltonian(params: RingParams) -> np.ndarray:
    """Build the Hamiltonian in the gauge selected by ``params.gauge``."""
    if params.gauge is Gauge.CONCENTRATED_LINK:
        return concentrated_link_hamiltonian(params)
    return uniform_phase_hamiltonian(params)


def gauge_transform(h: np.ndarray, params: RingParams) -> np.ndarray:
    """Map the uniform-phase Hamiltonian onto the concentrated-link one.

    Applies the site-local phase redefinition D @ h @ D^-1 with
    D = diag(exp(i*phi*j)) over 1-based site labels j = 1..2n.  For the
    uniform-phase Hamiltonian of ``params`` the result equals
    ``concentrated_link_hamiltonian(params)`` entrywise.
    """
    d = params.size
    if h.shape != (d, d):
        raise ParameterDomainError(
            f"matrix shape {h.shape} does not match 2n = {d}")
    phases = np.exp(1j * params.link_phase * np.arange(1, d + 1))
    return (phases[:, None] * h) * np.conj(phases)[None, :]


def parity_indices(n: int) -> np.ndarray:
    """0-based source index for each site under the reflection j -> N+2-j.

    The reflection axis passes through the gain and loss sites; index 0
    (site 1) and index n (site N+1) are fixed points, everything else is
    mirrored with modular wrap-around.
    """
    if n < 2:
        raise ParameterDomainError(f"half size n must be >= 2, got {n!r}")
    return (n - np.arange(2 * n)) % (2 * n)


def apply_pt(state: np.ndarray, n: int | None = None) -> np.ndarray:
    """Apply the combined parity + time-reversal operation to a state.

    Output component j is the complex conjugate of input component N+2-j
    (1-based sites, modular).  ``n`` defaults to half the vector length;
    passing it explicitly asserts the expected system size.
    """
    state = np.asarray(state)
    if state.ndim != 1 or state.size % 2 or state.size < 4:
        raise ParameterDomainError(
            f"state must be a 1-d vector of even length >= 4, got shape {state.shape}")
    if n is None:
        n = state.size // 2
    elif state.size != 2 * n:
        raise ParameterDomainError(
            f"state length {state.size} does not match 2n = {2 * n}")
    return np.conj(state[parity_indices(n)])
