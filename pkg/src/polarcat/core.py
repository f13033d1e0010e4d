"""
Polar code parameters and non-systematic encoding.

Two encoders are provided: an explicit generator-matrix product (kept as a
reference for small codes) and the O(N log N) butterfly. Both use natural
bit order, no bit-reversal, with info bits filling the non-frozen indices
in ascending order and frozen bits fixed to 0.
"""

import json
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "MATRIX_MAX_EXPONENT",
    "KERNEL",
    "PolarCodeSpec",
    "kronecker_generator",
    "encode_matrix",
    "encode_recursive",
    "polar_transform",
    "rate",
    "bits_to_str",
    "str_to_bits",
    "load_spec",
    "save_spec",
]

#: Largest exponent for which the dense generator matrix is built (N = 4096).
MATRIX_MAX_EXPONENT = 12

KERNEL = np.array([[1, 0], [1, 1]], dtype=np.uint8)


@dataclass(frozen=True)
class PolarCodeSpec:
    """Static description of an (N, K) polar code.

    Parameters
    ----------
    n : int
        Exponent, block length is ``2**n``.
    frozen : tuple of int
        Frozen bit-channel indices, stored sorted. Duplicates are rejected.
    """

    n: int
    frozen: tuple = ()
    _frozen_mask: np.ndarray = field(init=False, repr=False, compare=False)
    _info_idx: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        frozen = tuple(sorted(int(i) for i in self.frozen))
        N = 1 << int(self.n)
        if len(set(frozen)) != len(frozen):
            raise ValueError("frozen indices must be distinct")
        if frozen and (frozen[0] < 0 or frozen[-1] >= N):
            raise ValueError(f"frozen indices must lie in [0, {N - 1}]")
        if len(frozen) == N:
            raise ValueError("at least one information bit is required")
        mask = np.zeros(N, dtype=bool)
        mask[list(frozen)] = True
        mask.flags.writeable = False
        info = np.flatnonzero(~mask)
        info.flags.writeable = False
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "frozen", frozen)
        object.__setattr__(self, "_frozen_mask", mask)
        object.__setattr__(self, "_info_idx", info)

    @property
    def block_length(self):
        return 1 << self.n

    N = block_length

    @property
    def info_count(self):
        return self.block_length - len(self.frozen)

    K = info_count

    @property
    def frozen_mask(self):
        """Boolean array of length N, True at frozen positions."""
        return self._frozen_mask

    @property
    def info_indices(self):
        """Sorted non-frozen indices (where message bits are placed)."""
        return self._info_idx

    def to_dict(self):
        return {"n": self.n, "frozen": list(self.frozen)}

    @classmethod
    def from_dict(cls, d):
        try:
            return cls(int(d["n"]), tuple(d["frozen"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polar code spec: {exc}") from exc


def rate(spec):
    """Code rate K/N."""
    return spec.info_count / spec.block_length


def kronecker_generator(n, max_exponent=MATRIX_MAX_EXPONENT):
    """Return ``F^{(x)n}`` as an ``(2**n, 2**n)`` uint8 matrix.

    Built by the block recursion ``G_n = [[G_{n-1}, 0], [G_{n-1}, G_{n-1}]]``.
    Raises ``ValueError`` for ``n < 1`` or ``n > max_exponent``.
    """
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    if n > max_exponent:
        raise ValueError(
            f"generator matrix for n={n} exceeds the cap 2^{max_exponent}; "
            "use encode_recursive"
        )
    G = KERNEL.copy()
    for _ in range(n - 1):
        Z = np.zeros_like(G)
        G = np.block([[G, Z], [G, G]])
    return G


def _as_bits(bits, length, what="info_bits"):
    arr = np.asarray(bits)
    if arr.shape[-1:] != (length,):
        raise ValueError(f"{what} must have length {length}, got shape {arr.shape}")
    if arr.size and not np.all((arr == 0) | (arr == 1)):
        raise ValueError(f"{what} must contain only 0 and 1")
    return arr.astype(np.uint8)


def _place_info(spec, info_bits):
    info = _as_bits(info_bits, spec.info_count)
    u = np.zeros(info.shape[:-1] + (spec.block_length,), dtype=np.uint8)
    u[..., spec.info_indices] = info
    return u


def encode_matrix(spec, info_bits):
    """Encode via ``X = U G`` over GF(2). Accepts ``(K,)`` or ``(B, K)``."""
    u = _place_info(spec, info_bits)
    G = kronecker_generator(spec.n)
    return ((u.astype(np.int64) @ G) & 1).astype(np.uint8)


def polar_transform(u):
    """Apply ``F^{(x)n}`` to the last axis of ``u`` with butterfly stages.

    The transform is its own inverse over GF(2).
    """
    x = np.array(u, dtype=np.uint8, copy=True)
    N = x.shape[-1]
    lead = x.shape[:-1]
    half = 1
    while half < N:
        v = x.reshape(lead + (N // (2 * half), 2, half))
        v[..., 0, :] ^= v[..., 1, :]
        half *= 2
    return x


def encode_recursive(spec, info_bits):
    """Butterfly encoder, identical output to :func:`encode_matrix`."""
    return polar_transform(_place_info(spec, info_bits))


def bits_to_str(bits):
    return "".join("1" if b else "0" for b in np.asarray(bits).ravel())


def str_to_bits(text):
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"expected a non-empty 0/1 string, got {text!r}")
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")


def save_spec(spec, path):
    with open(path, "w") as fh:
        json.dump(spec.to_dict(), fh)
        fh.write("\n")


def load_spec(path):
    with open(path) as fh:
        return PolarCodeSpec.from_dict(json.load(fh))
