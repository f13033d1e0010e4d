"""
Successive-cancellation decoding with min-sum check updates.

:func:`sc_decode` works on a single frame ``(N,)`` or a batch ``(B, N)``;
batching only vectorizes, every frame is decoded independently.
"""

import numpy as np

__all__ = [
    "LLR_MAX",
    "saturate",
    "f_min_sum",
    "g_update",
    "h_combine",
    "decide_leaf",
    "sc_decode",
]

#: Channel LLRs are clipped to +/- this value on entry to the decoder.
LLR_MAX = 30.0


def saturate(llr, limit=LLR_MAX):
    return np.clip(np.asarray(llr, dtype=np.float64), -limit, limit)


def f_min_sum(la, lb):
    """``sign(la) sign(lb) min(|la|, |lb|)`` with ``sign(0) = +1``."""
    la = np.asarray(la, dtype=np.float64)
    lb = np.asarray(lb, dtype=np.float64)
    mag = np.minimum(np.abs(la), np.abs(lb))
    out = np.where((la < 0) ^ (lb < 0), -mag, mag)
    return out if out.ndim else float(out)


def g_update(la, lb, sa):
    """``(1 - 2 sa) la + lb``."""
    la = np.asarray(la, dtype=np.float64)
    lb = np.asarray(lb, dtype=np.float64)
    out = np.where(np.asarray(sa) != 0, lb - la, lb + la)
    return out if out.ndim else float(out)


def h_combine(sa, sb):
    """Partial sums pushed right through one kernel: ``(sa ^ sb, sb)``."""
    return sa ^ sb, sb


def decide_leaf(llr, is_frozen):
    """Frozen leaf is always 0; info leaf is 1 only for a strictly negative LLR."""
    if is_frozen:
        return 0
    return int(llr < 0)


class _Tree:
    """Per-spec lookup: which sub-blocks are entirely frozen."""

    def __init__(self, frozen_mask):
        self.frozen = np.asarray(frozen_mask, dtype=bool)
        self.csum = np.concatenate(([0], np.cumsum(self.frozen)))

    def all_frozen(self, start, size):
        return self.csum[start + size] - self.csum[start] == size


_TREES = {}


def _tree_for(spec):
    tree = _TREES.get(spec.frozen)
    if tree is None or tree.frozen.size != spec.block_length:
        tree = _Tree(spec.frozen_mask)
        _TREES[spec.frozen] = tree
    return tree


def _sc_node(llr, tree, start, u):
    # llr: (B, M) beliefs for the node covering u[start:start+M]
    batch, size = llr.shape
    if tree.all_frozen(start, size):
        return np.zeros((batch, size), dtype=np.uint8)
    if size == 1:
        bit = (llr[:, 0] < 0).astype(np.uint8)
        u[:, start] = bit
        return bit[:, None]
    half = size // 2
    la, lb = llr[:, :half], llr[:, half:]
    mag = np.minimum(np.abs(la), np.abs(lb))
    upper = np.where((la < 0) ^ (lb < 0), -mag, mag)
    s_up = _sc_node(upper, tree, start, u)
    lower = np.where(s_up != 0, lb - la, lb + la)
    s_low = _sc_node(lower, tree, start + half, u)
    out = np.empty((batch, size), dtype=np.uint8)
    np.bitwise_xor(s_up, s_low, out=out[:, :half])
    out[:, half:] = s_low
    return out


def sc_decode(spec, channel_llrs, saturation=LLR_MAX):
    """Successive-cancellation decode.

    Parameters
    ----------
    spec : PolarCodeSpec
    channel_llrs : array_like
        ``(N,)`` or ``(B, N)`` LLRs, positive meaning bit 0 is more likely.
    saturation : float
        Inputs are clipped to ``+/- saturation`` before decoding.

    Returns
    -------
    info_bits : ndarray of uint8
        Decisions at the non-frozen positions, shape ``(K,)`` or ``(B, K)``.
    codeword : ndarray of uint8
        Re-encoded estimate ``U_hat G``, shape ``(N,)`` or ``(B, N)``.
    """
    llr = saturate(channel_llrs, saturation)
    N = spec.block_length
    if llr.shape[-1:] != (N,) or llr.ndim > 2:
        raise ValueError(f"expected LLRs of shape (N,) or (B, N) with N={N}, got {llr.shape}")
    single = llr.ndim == 1
    llr2 = llr[None, :] if single else llr
    u = np.zeros(llr2.shape, dtype=np.uint8)
    x = _sc_node(llr2, _tree_for(spec), 0, u)
    info = u[:, spec.info_indices]
    if single:
        return info[0], x[0]
    return info, x

