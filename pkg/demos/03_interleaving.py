"""
Interleavers
============

x[k] = c[pi[k]]. A contiguous burst of errors after the interleaver lands on
scattered positions once deinterleaved.
"""

import numpy as np

from polarcat import deinterleave, interleave, make_permutation

# %%
for kind, kw in [("identity", {}), ("rowcol", {"rows": 2, "cols": 4}), ("random", {"seed": 1})]:
    perm = make_permutation(kind, 8, **kw)
    print(f"{kind:8s} pi = {perm.pi}  pi_inv = {perm.pi_inv}")

# %%
perm = make_permutation("random", 8, seed=1)
c = np.array(list("abcdefgh"))
x = interleave(perm, c)
print("".join(c), "->", "".join(x), "->", "".join(deinterleave(perm, x)))

# %%
# A burst of 8 flips at positions 100..107 of a length-256 interleaved block.
N = 256
burst = np.zeros(N, dtype=np.uint8)
burst[100:108] = 1
for kind, kw in [("identity", {}), ("rowcol", {"rows": 16, "cols": 16}), ("random", {"seed": 3})]:
    where = np.flatnonzero(deinterleave(make_permutation(kind, N, **kw), burst))
    print(f"{kind:8s} positions {where.tolist()}  min gap {np.diff(where).min()}")
