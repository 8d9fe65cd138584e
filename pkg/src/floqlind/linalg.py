"""Dense complex linear algebra for operators up to 16x16.

Matrices are plain ``numpy.ndarray`` values in row-major order with
``complex128`` entries.  Everything here is a pure function; inputs are never
mutated.  The eigensolvers delegate to LAPACK and enforce the residual and
Hermiticity contracts that the rest of the package relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ContractViolationError, NumericalError, ShapeError

# Tolerances for the numerical contracts.
RESIDUAL_TOL = 1e-10          # eigenpair residual, relative to ||M||
HERMITICITY_TOL = 1e-10       # allowed anti-Hermitian part, relative to ||M||
PSD_NOISE_FLOOR = -1e-10      # eigenvalue noise clipped to zero
PSD_VIOLATION = -1e-8         # below this the input is genuinely not PSD


def as_matrix(m, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2D complex array and check that every entry is finite."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ShapeError(f"{name} must be a 2D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise NumericalError(f"{name} contains non-finite entries")
    return a


def _square(m, name: str = "matrix") -> np.ndarray:
    a = as_matrix(m, name)
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {a.shape}")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def hermitize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (m + m†)/2."""
    return (m + m.conj().T) / 2


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product, block (i, j) equal to a[i, j] * b."""
    return np.kron(as_matrix(a, "a"), as_matrix(b, "b"))


def expm(m, scale: float = 1.0) -> np.ndarray:
    """Matrix exponential exp(scale * m).

    Uses scaling-and-squaring with a Pade approximant (scipy's dense expm).
    """
    a = _square(m, "expm input")
    if not np.isfinite(scale):
        raise NumericalError("expm scale must be finite")
    out = scipy.linalg.expm(a * scale)
    if not np.all(np.isfinite(out)):
        raise NumericalError(
            "expm overflowed during squaring; "
            f"||scale*m|| = {np.linalg.norm(a * scale):.3e}"
        )
    return out


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues with column-aligned eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _check_residual(m: np.ndarray, w: np.ndarray, v: np.ndarray) -> None:
    norm = np.linalg.norm(m, 2)
    resid = np.linalg.norm(m @ v - v * w[np.newaxis, :], axis=0)
    worst = float(np.max(resid))
    if worst > RESIDUAL_TOL * max(norm, 1e-300):
        raise NumericalError(
            f"eigenpair residual {worst:.3e} exceeds {RESIDUAL_TOL:.0e}*||M|| "
            f"(||M|| = {norm:.3e})"
        )


def eig_general(m) -> EigenDecomposition:
    """Full complex eigendecomposition; no eigenvalue ordering is guaranteed."""
    a = _square(m, "eig input")
    try:
        w, v = np.linalg.eig(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericalError(f"eigendecomposition did not converge: {exc}") from exc
    _check_residual(a, w, v)
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    norm = np.linalg.norm(m, 2)
    return np.linalg.norm(m - m.conj().T, 2) <= tol * max(norm, 1e-300)


def eigh(m) -> EigenDecomposition:
    """Hermitian eigendecomposition, eigenvalues sorted descending."""
    a = _square(m, "eigh input")
    if not is_hermitian(a):
        dev = np.linalg.norm(a - a.conj().T, 2)
        raise ContractViolationError(
            f"eigh input is not Hermitian within tolerance (deviation {dev:.3e})"
        )
    w, v = np.linalg.eigh(hermitize(a))
    order = np.argsort(w)[::-1]
    w, v = w[order].astype(float), v[:, order]
    _check_residual(a, w.astype(complex), v)
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)


def herm_sqrt(m) -> np.ndarray:
    """PSD square root of a Hermitian matrix, eigenvalue noise clipped at zero."""
    a = _square(m, "herm_sqrt input")
    dec = eigh(a)
    w = dec.eigenvalues
    norm = max(float(np.max(np.abs(w))), 1e-300)
    if float(np.min(w)) < PSD_VIOLATION * max(norm, 1.0):
        raise ContractViolationError(
            f"herm_sqrt input has eigenvalue {np.min(w):.3e}; not PSD"
        )
    root = np.sqrt(np.clip(w, 0.0, None))
    v = dec.eigenvectors
    return hermitize((v * root) @ v.conj().T)


def trace_norm(m) -> float:
    """Trace norm of a Hermitian matrix (sum of |eigenvalues|)."""
    a = _square(m, "trace_norm input")
    return float(np.sum(np.abs(np.linalg.eigvalsh(hermitize(a)))))


def vec(rho: np.ndarray) -> np.ndarray:
    """Column-stacking vectorization: vec([[a,b],[c,d]]) = (a, c, b, d)."""
    return np.asarray(rho, dtype=complex).flatten(order="F")


def unvec(v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`vec`; the length must be a perfect square."""
    v = np.asarray(v, dtype=complex).ravel()
    d = int(round(np.sqrt(v.size)))
    if d * d != v.size:
        raise ShapeError(f"cannot unvec a length-{v.size} vector")
    return v.reshape((d, d), order="F")
