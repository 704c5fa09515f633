"""Joint outcome distributions for sequential and spatially separated
dichotomic qubit measurements, and the equivalent correlator formulations.

The sequential (temporal) case applies a projective first measurement with
the standard state-update rule, then a projective second measurement on the
updated state.  For any input state the resulting correlator reduces to the
dot product of the two measurement directions, which is what the correlator
routines below expose in three interchangeable forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qcore import DensityMatrix, Observable, observable_matrix, projector, tensor

PROBABILITY_ATOL = 1e-12


@dataclass(frozen=True)
class SettingPair:
    """Measurement setting indices: k for the first site/time, l for the second."""

    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k not in (0, 1) or self.l not in (0, 1):
            raise ValueError(f"setting indices must be bits, got ({self.k!r}, {self.l!r}).")


@dataclass(frozen=True)
class MeasurementScheme:
    """The four observables of a two-setting, two-outcome scenario."""

    a0: Observable
    a1: Observable
    b0: Observable
    b1: Observable

    def alice(self, k: int) -> Observable:
        return self.a1 if k else self.a0

    def bob(self, l: int) -> Observable:
        return self.b1 if l else self.b0


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Joint outcome probabilities laid out as p[r][s]."""

    p: np.ndarray
    setting: SettingPair | None = None

    def __post_init__(self) -> None:
        p = np.array(self.p, dtype=float)
        if p.shape != (2, 2):
            raise ValueError(f"joint distribution must be 2x2, got shape {p.shape}.")
        if p.min() < -PROBABILITY_ATOL or p.max() > 1.0 + PROBABILITY_ATOL:
            raise ValueError(f"probabilities out of range: {p.tolist()!r}.")
        if abs(p.sum() - 1.0) > PROBABILITY_ATOL:
            raise ValueError(f"probabilities must sum to 1, got {p.sum()!r}.")
        p.setflags(write=False)
        object.__setattr__(self, "p", p)


@dataclass(frozen=True, eq=False)
class CorrelationTable:
    """Correlators c[k][l] for the four setting pairs."""

    c: np.ndarray

    def __post_init__(self) -> None:
        c = np.array(self.c, dtype=float)
        if c.shape != (2, 2):
            raise ValueError(f"correlation table must be 2x2, got shape {c.shape}.")
        if np.max(np.abs(c)) > 1.0 + PROBABILITY_ATOL:
            raise ValueError(f"correlators out of [-1, 1]: {c.tolist()!r}.")
        c.setflags(write=False)
        object.__setattr__(self, "c", c)


def clamp_probabilities(p: np.ndarray) -> np.ndarray:
    """Zero out sub-1e-12 negative entries and renormalize the table.

    Protects against slightly non-positive upstream numerics producing
    spurious tiny negative probabilities.
    """
    out = np.array(p, dtype=float)
    mask = (out < 0.0) & (out > -PROBABILITY_ATOL)
    out[mask] = 0.0
    total = out.sum()
    if total > 0.0:
        out /= total
    return out


def luders_joint(
    rho: DensityMatrix, a: Observable, b: Observable, setting: SettingPair | None = None
) -> JointDistribution:
    """Sequential joint distribution P(r, s) = Tr(Pi_s^b Pi_r^a rho Pi_r^a).

    The first measurement is projective with state update; the second acts on
    the updated state.  No update is needed after the second measurement
    because nothing follows it.
    """
    if rho.dim != 2:
        raise ValueError("sequential measurement acts on a single qubit.")
    p = np.empty((2, 2))
    for r in (0, 1):
        pa = projector(a, r)
        updated = pa @ rho.matrix @ pa
        for s in (0, 1):
            p[r, s] = float(np.real(np.trace(projector(b, s) @ updated)))
    return JointDistribution(clamp_probabilities(p), setting)


def spatial_joint(
    rho2: DensityMatrix, a: Observable, b: Observable, setting: SettingPair | None = None
) -> JointDistribution:
    """Joint distribution P(r, s) = Tr(rho2 (Pi_r^a x Pi_s^b)) on two qubits."""
    if rho2.dim != 4:
        raise ValueError("spatially separated measurement acts on a two-qubit state.")
    p = np.empty((2, 2))
    for r in (0, 1):
        for s in (0, 1):
            p[r, s] = float(np.real(np.trace(rho2.matrix @ tensor(projector(a, r), projector(b, s)))))
    return JointDistribution(clamp_probabilities(p), setting)


def correlator_from_distribution(j: JointDistribution) -> float:
    """Parity-signed sum over outcomes: p00 + p11 - p01 - p10."""
    p = j.p
    return float(p[0, 0] + p[1, 1] - p[0, 1] - p[1, 0])


def correlator_anticommutator(rho: DensityMatrix, a: Observable, b: Observable) -> float:
    """Correlator as Tr(rho (AB + BA) / 2); equals the sequential-distribution form."""
    am = observable_matrix(a)
    bm = observable_matrix(b)
    return float(np.real(np.trace(rho.matrix @ (am @ bm + bm @ am)))) / 2.0


def bloch_correlator(a: Observable, b: Observable) -> float:
    """Correlator as the dot product of the two Bloch directions."""
    return float(np.dot(a.bloch, b.bloch))
