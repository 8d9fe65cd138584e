"""Physical model of the driven, dissipative qubit pair.

Two qubits share a static exchange coupling and are flipped by periodic
near-pi pulses while both couple to a thermal bath.  One drive period of
length ``T`` has two segments:

* pulse segment, ``0 < t < t1``: drive (alpha/2)(sx1 + sx2) on top of the
  coupling, with alpha * t1 = pi - 2*epsilon,
* free segment, ``t1 < t < T``: coupling only.

The exchange coupling g * sum_{i != j} (sxi sxj + syi syj) = 2g(sx1 sx2 +
sy1 sy2) and the detuning terms (delta_i/2) szi act in both segments, as do
the six dissipation channels.

Basis and conventions: product basis |q1 q2> ordered (|00>, |01>, |10>,
|11>), sigma_z|0> = +|0>, and |0> is the ground state of the bath coupling
(at n_th = 0 the dissipative fixed point is |00><00|).  Density matrices are
vectorized by column stacking, vec(A X B) = (B^T kron A) vec(X), so a
Lindblad generator is a dense 16x16 matrix.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .linalg import as_matrix, kron

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
# sigma_z-raising / lowering: plus maps |1> -> |0>, minus maps |0> -> |1>.
SIGMA_PLUS = (SIGMA_X + 1j * SIGMA_Y) / 2
SIGMA_MINUS = (SIGMA_X - 1j * SIGMA_Y) / 2

_SINGLE_QUBIT = {
    "x": SIGMA_X,
    "y": SIGMA_Y,
    "z": SIGMA_Z,
    "plus": SIGMA_PLUS,
    "minus": SIGMA_MINUS,
}

PULSE = "pulse"
INTERACTION = "interaction"
PERIOD_MAP = "period-map"
SEGMENTS = (PULSE, INTERACTION)


@dataclass(frozen=True)
class ModelParams:
    """All physical and protocol parameters.

    epsilon        pulse detuning from an ideal pi flip (radians)
    g              qubit-qubit exchange coupling (inverse time)
    g1             qubit-bath coupling (inverse time)
    g2             dephasing coupling (inverse time)
    n_th           bath thermal occupation (dimensionless)
    T              drive period (time)
    pulse_fraction fraction t1/T of the period spent pulsing
    delta1, delta2 per-qubit frequency detunings (inverse time)

    The default pulse_fraction keeps the pulse short compared to the period;
    it is the calibration under which the constant-lifetime window sits
    between eps = gT/3 and eps = gT at weak dissipation.
    """

    epsilon: float = 0.0436
    g: float = 0.05
    g1: float = 0.01
    g2: float = 0.0025
    n_th: float = 0.08
    T: float = 1.0
    pulse_fraction: float = 0.032
    delta1: float = 0.0
    delta2: float = 0.0

    def __post_init__(self):
        for name in ("epsilon", "g", "g1", "g2", "n_th", "T",
                     "pulse_fraction", "delta1", "delta2"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.T <= 0:
            raise ValueError(f"T must be positive, got {self.T}")
        if not 0 < self.pulse_fraction < 1:
            raise ValueError(
                f"pulse_fraction must lie in (0, 1), got {self.pulse_fraction}"
            )
        if not 0 <= self.epsilon < math.pi / 2:
            raise ValueError(
                f"epsilon must lie in [0, pi/2), got {self.epsilon}"
            )
        for name in ("g1", "g2", "n_th"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.g1 < math.sqrt(2) * self.g2:
            warnings.warn(
                f"g1 < sqrt(2)*g2 (g1={self.g1}, g2={self.g2}); outside the "
                "relaxation/dephasing ratio satisfied by typical qubits",
                UserWarning,
                stacklevel=2,
            )

    @property
    def t1(self) -> float:
        """Pulse segment duration."""
        return self.pulse_fraction * self.T

    @property
    def t2(self) -> float:
        """Free (interaction-only) segment duration."""
        return self.T - self.t1

    @property
    def alpha(self) -> float:
        """Pulse amplitude fixed by alpha * t1 = pi - 2*epsilon."""
        return (math.pi - 2 * self.epsilon) / self.t1

    def with_(self, **changes) -> "ModelParams":
        return replace(self, **changes)


def pauli(which: str, qubit: int) -> np.ndarray:
    """Single-qubit operator embedded into the two-qubit space.

    Qubit 1 occupies the left tensor slot (op kron I), qubit 2 the right.
    """
    try:
        op = _SINGLE_QUBIT[which]
    except KeyError:
        raise ValueError(f"unknown Pauli label {which!r}") from None
    if qubit == 1:
        return kron(op, IDENTITY_2)
    if qubit == 2:
        return kron(IDENTITY_2, op)
    raise ValueError(f"qubit must be 1 or 2, got {qubit}")


def exchange_coupling(p: ModelParams) -> np.ndarray:
    """Static coupling g * sum_{i != j} (sxi sxj + syi syj)."""
    xx = pauli("x", 1) @ pauli("x", 2)
    yy = pauli("y", 1) @ pauli("y", 2)
    return 2 * p.g * (xx + yy)


def _detuning(p: ModelParams) -> np.ndarray:
    return 0.5 * p.delta1 * pauli("z", 1) + 0.5 * p.delta2 * pauli("z", 2)


def hamiltonian_segment(p: ModelParams, segment: str) -> np.ndarray:
    """Hamiltonian of one drive segment (Hermitian 4x4)."""
    h = exchange_coupling(p) + _detuning(p)
    if segment == PULSE:
        h = h + 0.5 * p.alpha * (pauli("x", 1) + pauli("x", 2))
    elif segment != INTERACTION:
        raise ValueError(f"unknown segment {segment!r}")
    return h


@dataclass(frozen=True)
class JumpChannel:
    """One dissipation channel: 4x4 jump operator with its rate."""

    operator: np.ndarray
    rate: float
    label: str


def jump_channels(p: ModelParams) -> list[JumpChannel]:
    """Six bath channels: decay, thermal excitation and dephasing per qubit.

    Labels are energy-referenced: "lower" loses a quantum to the bath at rate
    g1(1+n_th), "raise" absorbs one at rate g1*n_th.  Because the excited
    state is |1> (sigma_z = -1), energy decay is implemented by the
    sigma_z-raising matrix pauli("plus") and excitation by pauli("minus").
    """
    channels = []
    for q in (1, 2):
        channels.append(
            JumpChannel(pauli("plus", q), p.g1 * (1 + p.n_th), f"lower-q{q}")
        )
        channels.append(JumpChannel(pauli("minus", q), p.g1 * p.n_th, f"raise-q{q}"))
        channels.append(JumpChannel(pauli("z", q), p.g2, f"dephase-q{q}"))
    return channels


def liouvillian(h, channels: Iterable) -> np.ndarray:
    """Column-stacked Lindblad generator for any Hilbert dimension.

    L = -i(I kron H - H^T kron I)
        + sum_k rate_k [conj(A_k) kron A_k
                        - 1/2 I kron (A_k† A_k) - 1/2 (A_k† A_k)^T kron I]

    ``channels`` yields JumpChannel values or (operator, rate) pairs.
    """
    h = as_matrix(h, "hamiltonian")
    d = h.shape[0]
    eye = np.eye(d, dtype=complex)
    gen = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for ch in channels:
        if isinstance(ch, JumpChannel):
            a, rate = ch.operator, ch.rate
        else:
            a, rate = ch
        a = as_matrix(a, "jump operator")
        if rate < 0:
            raise ValueError(f"channel rate must be non-negative, got {rate}")
        if rate == 0:
            continue
        ada = a.conj().T @ a
        gen += rate * (
            np.kron(a.conj(), a)
            - 0.5 * np.kron(eye, ada)
            - 0.5 * np.kron(ada.T, eye)
        )
    return gen


@dataclass(frozen=True)
class Superoperator:
    """Dense matrix acting on column-stacked density matrices."""

    matrix: np.ndarray
    segment_tag: str = field(default=PERIOD_MAP)

    @property
    def dim(self) -> int:
        """Hilbert-space dimension the map acts on."""
        return int(round(np.sqrt(self.matrix.shape[0])))


def lindblad_superoperator(p: ModelParams, segment: str) -> Superoperator:
    """Vectorized Lindblad generator of one drive segment (16x16)."""
    gen = liouvillian(hamiltonian_segment(p, segment), jump_channels(p))
    return Superoperator(matrix=gen, segment_tag=segment)
