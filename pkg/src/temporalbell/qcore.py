"""Dense complex matrix algebra and qubit state/observable primitives.

All operations are pure functions on immutable values; randomness enters only
through explicit seeds (or caller-supplied generators).  Supported dimensions
are 2 and 4 for density operators (single qubit, signal-meter pair) and up to
16 for the Hermitian operators handled by the process tools.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_ATOL = 1e-12
EIGENVALUE_FLOOR = -1e-12

IDENTITY_2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PURITY_CLASSES = ("pure", "mixed", "maximally-mixed-blend")


class InvalidObservableError(ValueError):
    """A Bloch vector does not describe a dichotomic qubit observable."""


class InvalidStateError(ValueError):
    """A matrix is not a valid density operator."""


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array)
    out.setflags(write=False)
    return out


def is_hermitian(m: np.ndarray, atol: float = HERMITIAN_ATOL) -> bool:
    """Entrywise check of m against its conjugate transpose."""
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= atol)


def outcome_sign(r: int) -> int:
    """Eigenvalue attached to a binary outcome label: +1 for 1, -1 for 0."""
    if r not in (0, 1):
        raise ValueError(f"outcome label must be 0 or 1, got {r!r}")
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class Observable:
    """Dichotomic qubit observable given by a unit Bloch direction.

    The associated operator is ``bloch . sigma`` with eigenvalues exactly
    {+1, -1}; outcome labels map to eigenvalues through :func:`outcome_sign`.
    """

    bloch: tuple[float, float, float]
    label: str = ""

    def __post_init__(self) -> None:
        vec = tuple(float(x) for x in self.bloch)
        if len(vec) != 3:
            raise InvalidObservableError("Bloch vector must have three components.")
        norm = float(np.sqrt(sum(x * x for x in vec)))
        if abs(norm - 1.0) > HERMITIAN_ATOL:
            raise InvalidObservableError(
                f"Bloch vector must be unit length within {HERMITIAN_ATOL}, got |v| = {norm!r}."
            )
        object.__setattr__(self, "bloch", vec)

    @classmethod
    def unit(cls, direction, label: str = "") -> "Observable":
        """Build an observable from any nonzero direction, normalizing it."""
        vec = np.asarray(direction, dtype=float)
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise InvalidObservableError("Cannot normalize a zero direction.")
        return cls(tuple(vec / norm), label)

    def matrix(self) -> np.ndarray:
        return observable_matrix(self)


def observable_matrix(obs: Observable) -> np.ndarray:
    """Return the 2x2 operator ``n_x X + n_y Y + n_z Z`` for the observable."""
    nx, ny, nz = obs.bloch
    return nx * PAULI_X + ny * PAULI_Y + nz * PAULI_Z


def projector(obs: Observable, outcome: int) -> np.ndarray:
    """Projector onto the eigenspace selected by a binary outcome label."""
    return (IDENTITY_2 + outcome_sign(outcome) * observable_matrix(obs)) / 2.0


def rotation_to_z(obs: Observable) -> np.ndarray:
    """Unitary U aligning the observable's axis with z: U (n.sigma) U^dag = Z."""
    _, vecs = np.linalg.eigh(observable_matrix(obs))
    # eigh returns ascending eigenvalues (-1, +1); rows of U are the bras of
    # the +1 and -1 eigenvectors so that |n,+> maps to |0>.
    return np.vstack([vecs[:, 1].conj(), vecs[:, 0].conj()])


def rotate_observable(obs: Observable, unitary: np.ndarray) -> Observable:
    """Conjugate the observable by a single-qubit unitary."""
    u = np.asarray(unitary, dtype=complex)
    m = u @ observable_matrix(obs) @ u.conj().T
    bloch = tuple(
        float(np.real(np.trace(sigma @ m))) / 2.0
        for sigma in (PAULI_X, PAULI_Y, PAULI_Z)
    )
    return Observable(bloch, obs.label)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive operator on one or two qubits."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidStateError(f"density matrix must be square, got shape {m.shape}.")
        dim = m.shape[0]
        if dim not in (2, 4):
            raise InvalidStateError(f"supported dimensions are 2 and 4, got {dim}.")
        if not is_hermitian(m):
            raise InvalidStateError("density matrix must be Hermitian within 1e-12.")
        trace = float(np.real(np.trace(m)))
        if abs(trace - 1.0) > HERMITIAN_ATOL:
            raise InvalidStateError(f"density matrix must have unit trace, got {trace!r}.")
        smallest = float(np.linalg.eigvalsh(m)[0])
        if smallest < EIGENVALUE_FLOOR:
            raise InvalidStateError(f"density matrix has negative eigenvalue {smallest!r}.")
        p = float(np.real(np.trace(m @ m)))
        if not (1.0 / dim - 1e-12 <= p <= 1.0 + 1e-12):
            raise InvalidStateError(f"purity {p!r} outside [1/{dim}, 1].")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_ket(cls, amplitudes) -> "DensityMatrix":
        """Rank-1 density operator |psi><psi| from (normalized) amplitudes."""
        psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
        norm = float(np.linalg.norm(psi))
        if norm == 0.0:
            raise InvalidStateError("cannot build a state from the zero vector.")
        psi = psi / norm
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    @classmethod
    def clamped(cls, matrix) -> "DensityMatrix":
        """Repair tiny numerical negativity before validating.

        Eigenvalues with magnitude below 1e-12 are clamped to zero and the
        trace is renormalized; anything worse still fails validation.
        """
        m = np.asarray(matrix, dtype=complex)
        vals, vecs = np.linalg.eigh((m + m.conj().T) / 2.0)
        vals = np.where(np.abs(vals) < 1e-12, 0.0, vals)
        repaired = (vecs * vals) @ vecs.conj().T
        trace = float(np.real(np.trace(repaired)))
        if trace <= 0.0:
            raise InvalidStateError("matrix trace vanished during repair.")
        return cls(repaired / trace)


def purity(rho: DensityMatrix) -> float:
    """Return Tr(rho^2), in [1/dim, 1]."""
    m = rho.matrix
    return float(np.real(np.trace(m @ m)))


def random_ket(dim: int, rng) -> np.ndarray:
    """Pure state drawn from the unitarily invariant measure.

    ``rng`` may be an integer seed or a ``numpy.random.Generator``.
    """
    rng = np.random.default_rng(rng)
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_density(dim: int, purity_class: str, seed) -> DensityMatrix:
    """Deterministically sample a density operator of the requested class.

    ``pure`` draws from the unitarily invariant measure on pure states; the
    ``mixed`` and ``maximally-mixed-blend`` classes both blend such a pure
    state with I/dim using a uniformly drawn weight.
    """
    if dim not in (2, 4):
        raise InvalidStateError(f"supported dimensions are 2 and 4, got {dim}.")
    if purity_class not in PURITY_CLASSES:
        raise ValueError(f"unknown purity class {purity_class!r}; expected one of {PURITY_CLASSES}.")
    rng = np.random.default_rng(seed)
    psi = random_ket(dim, rng)
    pure = np.outer(psi, psi.conj())
    if purity_class == "pure":
        return DensityMatrix(pure)
    weight = rng.uniform()
    return DensityMatrix(weight * pure + (1.0 - weight) * np.eye(dim) / dim)


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the first factor is the most significant subsystem."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[0] * b.shape[0] > 16:
        raise ValueError(
            f"tensor product dimension {a.shape[0] * b.shape[0]} exceeds the supported 16."
        )
    return np.kron(a, b)


def partial_trace(m: np.ndarray, keep: str) -> np.ndarray:
    """Trace one qubit out of a 4x4 operator, keeping ``first`` or ``second``."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"partial trace expects a 4x4 matrix, got shape {m.shape}.")
    t = m.reshape(2, 2, 2, 2)
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}.")
