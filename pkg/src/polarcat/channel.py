"""BPSK over AWGN with Eb/N0 parameterization and channel LLRs."""

from dataclasses import dataclass

import numpy as np

from .decoder import LLR_MAX

__all__ = [
    "NOISE_ALGORITHM",
    "ChannelParams",
    "ebno_to_sigma",
    "bpsk_modulate",
    "awgn_transmit",
    "channel_llr",
    "frame_rng",
]

#: Recorded alongside results so a run can be reproduced bit for bit.
NOISE_ALGORITHM = "numpy Philox4x64 (key=base_seed, counter word 3=frame_index) + ziggurat normal"


def ebno_to_sigma(ebno_db, code_rate):
    """Noise std per real dimension for unit-energy BPSK symbols."""
    if not code_rate > 0:
        raise ValueError(f"code rate must be positive, got {code_rate}")
    if code_rate > 1:
        raise ValueError(f"code rate must be <= 1, got {code_rate}")
    return float(np.sqrt(1.0 / (2.0 * code_rate * 10.0 ** (ebno_db / 10.0))))


@dataclass(frozen=True)
class ChannelParams:
    ebno_db: float
    code_rate: float

    @property
    def sigma(self):
        return ebno_to_sigma(self.ebno_db, self.code_rate)


def bpsk_modulate(x):
    """Bit 0 maps to +1, bit 1 to -1."""
    return 1.0 - 2.0 * np.asarray(x, dtype=np.float64)


def awgn_transmit(symbols, sigma, rng):
    """Add white Gaussian noise of std ``sigma`` drawn from ``rng``.

    ``sigma`` may also be a :class:`ChannelParams`.
    """
    if isinstance(sigma, ChannelParams):
        sigma = sigma.sigma
    symbols = np.asarray(symbols, dtype=np.float64)
    return symbols + sigma * rng.standard_normal(symbols.shape)


def channel_llr(y, sigma, limit=LLR_MAX):
    """``2 y / sigma^2``, clipped to ``+/- limit``."""
    if isinstance(sigma, ChannelParams):
        sigma = sigma.sigma
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    llr = 2.0 * np.asarray(y, dtype=np.float64) / (sigma * sigma)
    return np.clip(llr, -limit, limit)


def frame_rng(base_seed, frame_index):
    """Independent counter-based stream for one frame."""
    bg = np.random.Philox(key=int(base_seed) & (2**64 - 1), counter=[0, 0, 0, int(frame_index)])
    return np.random.Generator(bg)
