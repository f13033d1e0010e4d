"""
Code construction and successive-cancellation decoding
======================================================

Rank bit-channels with the Bhattacharyya recursion, pick a frozen set,
then push one noisy frame through the SC decoder.
"""

import numpy as np

from polarcat import (
    awgn_transmit,
    bhattacharyya_profile,
    bpsk_modulate,
    channel_llr,
    construct,
    ebno_to_sigma,
    encode_recursive,
    rate,
    sc_decode,
    select_frozen_set,
)

# %%
# Polarization at n = 3 starting from z0 = 0.5. The four largest values are
# frozen, which reproduces the (8,4) example.
profile = bhattacharyya_profile(3, 0.5)
print(np.round(profile.z, 4))
print("frozen:", select_frozen_set(profile, 4).frozen)

# %%
# At n = 10 most channels end up near 0 or near 1.
z = bhattacharyya_profile(10, 0.5).z
print("fraction with z < 0.01:", np.mean(z < 0.01), " z > 0.99:", np.mean(z > 0.99))

# %%
# One frame of a (256, 128) code at 2.5 dB.
spec = construct(8, 128)
rng = np.random.default_rng(0)
msg = rng.integers(0, 2, spec.info_count)
sigma = ebno_to_sigma(2.5, rate(spec))
y = awgn_transmit(bpsk_modulate(encode_recursive(spec, msg)), sigma, rng)
llr = channel_llr(y, sigma)
decided, codeword = sc_decode(spec, llr)
print("sigma = %.3f" % sigma)
print("raw hard-decision errors:", int(np.sum((llr < 0) != encode_recursive(spec, msg))))
print("bit errors after SC:", int(np.sum(decided != msg)))

# %%
# A batch decodes each row independently; the decoder is deterministic and
# only the signs and relative sizes of the LLRs matter.
batch = np.stack([llr, 3.0 * llr])
out, _ = sc_decode(spec, batch)
print("scaled copy decodes identically:", np.array_equal(out[0], out[1]))
