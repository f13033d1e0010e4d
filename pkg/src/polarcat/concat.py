"""
Serial concatenation of two polar codes separated by an interleaver.

The outer codeword, after interleaving, is exactly the inner code's message,
so the inner code must satisfy ``K_inner == N_outer``.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .core import PolarCodeSpec, encode_recursive, rate
from .decoder import LLR_MAX, sc_decode

__all__ = [
    "HARD_LLR",
    "Permutation",
    "ConcatSpec",
    "make_permutation",
    "interleave",
    "deinterleave",
    "overall_rate",
    "concat_encode",
    "concat_decode",
    "load_concat_spec",
    "save_concat_spec",
]

#: Magnitude given to the inner decoder's hard decisions before outer decoding.
HARD_LLR = 20.0


@dataclass(frozen=True)
class Permutation:
    """Interleaving vector ``pi`` with ``x[k] = c[pi[k]]``.

    ``kind`` and ``params`` only describe how the vector was made, for
    serialization; equality is on the vector itself.
    """

    pi: np.ndarray
    kind: str = "custom"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        pi = np.array(self.pi, dtype=np.int64).ravel()
        if pi.size == 0:
            raise ValueError("permutation must be non-empty")
        inv = np.full(pi.size, -1, dtype=np.int64)
        if pi.min() < 0 or pi.max() >= pi.size:
            raise ValueError("permutation entries out of range")
        inv[pi] = np.arange(pi.size)
        if (inv < 0).any():
            raise ValueError("permutation entries must be distinct")
        pi.flags.writeable = False
        inv.flags.writeable = False
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "_inv", inv)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self.pi, other.pi)

    def __hash__(self):
        return hash(self.pi.tobytes())

    def __len__(self):
        return self.pi.size

    @property
    def pi_inv(self):
        return self._inv

    def to_dict(self):
        d = {"kind": self.kind}
        d.update(self.params)
        if self.kind == "custom":
            d["pi"] = self.pi.tolist()
        return d

    @classmethod
    def from_dict(cls, d, n):
        kind = d.get("kind")
        if kind == "custom":
            return cls(d["pi"])
        if kind == "rowcol":
            return make_permutation("rowcol", n, rows=d.get("rows"), cols=d.get("cols"))
        if kind == "random":
            return make_permutation("random", n, seed=d.get("seed", 0))
        if kind == "identity":
            return make_permutation("identity", n)
        raise ValueError(f"unknown interleaver kind {kind!r}")


def make_permutation(kind, n, rows=None, cols=None, seed=None):
    """Build an interleaver of length ``n``.

    ``identity`` keeps the order, ``rowcol`` writes a ``rows x cols`` array
    row by row and reads it column by column, and ``random`` draws a uniform
    permutation (Fisher-Yates) from a generator seeded with ``seed``.
    """
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")
    if kind == "identity":
        return Permutation(np.arange(n), "identity")
    if kind == "rowcol":
        if rows is None and cols is None:
            raise ValueError("rowcol interleaver needs rows and/or cols")
        if rows is None:
            rows = n // cols
        if cols is None:
            cols = n // rows
        if rows < 1 or cols < 1 or rows * cols != n:
            raise ValueError(f"rows*cols must equal {n}, got {rows}*{cols}")
        pi = np.arange(n).reshape(rows, cols).T.ravel()
        return Permutation(pi, "rowcol", {"rows": int(rows), "cols": int(cols)})
    if kind == "random":
        seed = 0 if seed is None else int(seed)
        pi = np.random.default_rng(seed).permutation(n)
        return Permutation(pi, "random", {"seed": seed})
    raise ValueError(f"unknown interleaver kind {kind!r}")


def _check_len(perm, v):
    v = np.asarray(v)
    if v.shape[-1:] != (len(perm),):
        raise ValueError(f"expected last axis of length {len(perm)}, got shape {v.shape}")
    return v


def interleave(perm, c):
    """``x[..., k] = c[..., pi[k]]``; works on bits or LLRs."""
    return _check_len(perm, c)[..., perm.pi]


def deinterleave(perm, x):
    """Inverse of :func:`interleave`: ``c[..., pi[k]] = x[..., k]``."""
    return _check_len(perm, x)[..., perm.pi_inv]


@dataclass(frozen=True)
class ConcatSpec:
    outer: PolarCodeSpec
    inner: PolarCodeSpec
    perm: Permutation

    def __post_init__(self):
        if self.inner.info_count != self.outer.block_length:
            raise ValueError(
                f"inner K ({self.inner.info_count}) must equal outer N "
                f"({self.outer.block_length})"
            )
        if len(self.perm) != self.outer.block_length:
            raise ValueError(
                f"interleaver length {len(self.perm)} != outer N {self.outer.block_length}"
            )

    @property
    def info_count(self):
        return self.outer.info_count

    @property
    def block_length(self):
        return self.inner.block_length

    def to_dict(self):
        return {
            "outer": self.outer.to_dict(),
            "inner": self.inner.to_dict(),
            "interleaver": self.perm.to_dict(),
        }

    @classmethod
    def from_dict(cls, d):
        try:
            outer = PolarCodeSpec.from_dict(d["outer"])
            inner = PolarCodeSpec.from_dict(d["inner"])
            perm = Permutation.from_dict(d["interleaver"], outer.block_length)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed concatenated spec: {exc}") from exc
        return cls(outer, inner, perm)


def overall_rate(spec):
    return rate(spec.outer) * rate(spec.inner)


def concat_encode(spec, info_bits):
    outer_cw = encode_recursive(spec.outer, info_bits)
    return encode_recursive(spec.inner, interleave(spec.perm, outer_cw))


def concat_decode(spec, channel_llrs, saturation=HARD_LLR, llr_max=LLR_MAX):
    """Inner SC, deinterleave the hard decisions, then outer SC.

    The inner decisions ``b`` are handed to the outer decoder as LLRs
    ``(1 - 2b) * saturation``. Batched input ``(B, N_inner)`` is accepted.
    """
    if saturation <= 0:
        raise ValueError("saturation must be positive")
    inner_info, _ = sc_decode(spec.inner, channel_llrs, llr_max)
    outer_cw = deinterleave(spec.perm, inner_info)
    outer_llr = (1.0 - 2.0 * outer_cw) * saturation
    info, _ = sc_decode(spec.outer, outer_llr, llr_max)
    return info


def save_concat_spec(spec, path):
    with open(path, "w") as fh:
        json.dump(spec.to_dict(), fh)
        fh.write("\n")


def load_concat_spec(path):
    with open(path) as fh:
        return ConcatSpec.from_dict(json.load(fh))
