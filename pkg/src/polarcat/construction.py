"""Frozen-set selection from Bhattacharyya reliability of the bit-channels."""

from dataclasses import dataclass

import numpy as np

from .core import PolarCodeSpec

__all__ = [
    "DEFAULT_Z0",
    "ReliabilityProfile",
    "bhattacharyya_profile",
    "design_snr_to_z0",
    "select_frozen_set",
    "construct",
]

DEFAULT_Z0 = 0.5


@dataclass(frozen=True)
class ReliabilityProfile:
    z: np.ndarray
    design_param: float

    @property
    def n(self):
        return int(self.z.size).bit_length() - 1


def design_snr_to_z0(design_snr_db):
    """BEC surrogate parameter ``exp(-10**(dB/10))`` for a design SNR."""
    return float(np.exp(-(10.0 ** (design_snr_db / 10.0))))


def bhattacharyya_profile(n, z0=DEFAULT_Z0):
    """Polarize ``z0`` through ``n`` stages.

    Each stage maps ``z`` to ``(2z - z^2, z^2)``. Child values are written
    at ``2j`` and ``2j + 1``, so the most significant bit of the final
    index records the first split.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < z0 < 1.0:
        raise ValueError(f"z0 must lie strictly inside (0, 1), got {z0}")
    z = np.array([z0], dtype=np.float64)
    for _ in range(n):
        nxt = np.empty(2 * z.size)
        nxt[0::2] = 2.0 * z - z * z
        nxt[1::2] = z * z
        z = nxt
    z.flags.writeable = False
    return ReliabilityProfile(z, float(z0))


def select_frozen_set(profile, k):
    """Freeze the ``N - k`` least reliable channels (largest z).

    Ties go to the lower index, which is frozen first.
    """
    z = np.asarray(profile.z)
    N = z.size
    if not 1 <= k <= N:
        raise ValueError(f"k must lie in [1, {N}], got {k}")
    order = np.lexsort((np.arange(N), -z))
    return PolarCodeSpec(int(N).bit_length() - 1, tuple(order[: N - k].tolist()))


def construct(n, k, z0=None, design_snr_db=None):
    """Convenience wrapper: profile plus selection in one call."""
    if z0 is not None and design_snr_db is not None:
        raise ValueError("give either z0 or design_snr_db, not both")
    if design_snr_db is not None:
        z0 = design_snr_to_z0(design_snr_db)
    elif z0 is None:
        z0 = DEFAULT_Z0
    return select_frozen_set(bhattacharyya_profile(n, z0), k)
