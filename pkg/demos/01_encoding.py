"""
Encoding a polar code
=====================

Build the generator matrix, encode the (8,4) code with frozen set
{0,1,2,4}, and check the butterfly encoder against the matrix product.
"""

import itertools

import numpy as np

from polarcat import PolarCodeSpec, encode_matrix, encode_recursive, kronecker_generator, rate

# %%
# The 2x2 kernel and its third Kronecker power. The upper-right quadrant of
# every power is zero, and the last row is all ones.
print(kronecker_generator(1))
G = kronecker_generator(3)
print(G)

# %%
# The (8,4) code: info bits sit at indices 3, 5, 6, 7.
spec = PolarCodeSpec(3, (0, 1, 2, 4))
print("N =", spec.block_length, "K =", spec.info_count, "rate =", rate(spec))
print("info positions:", spec.info_indices)

msg = [1, 0, 1, 1]  # (u3, u5, u6, u7)
print("codeword:", encode_recursive(spec, msg))

# %%
# Both encoders agree on all 16 messages.
msgs = np.array(list(itertools.product((0, 1), repeat=4)))
assert np.array_equal(encode_matrix(spec, msgs), encode_recursive(spec, msgs))
for m, x in zip(msgs, encode_recursive(spec, msgs)):
    print("".join(map(str, m)), "->", "".join(map(str, x)))

# %%
# G is its own inverse over GF(2), so encoding a full-rate code twice is a no-op.
full = PolarCodeSpec(3, ())
u = np.array([1, 1, 0, 1, 0, 0, 1, 0])
print(np.array_equal(encode_recursive(full, encode_recursive(full, u)), u))
