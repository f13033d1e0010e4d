"""
Serially concatenated polar codes against a single polar code
=============================================================

Outer code -> random interleaver -> inner code, where the inner code's
message is exactly the interleaved outer codeword. The receiver runs SC on
the inner code, deinterleaves its hard decisions, and runs SC on the outer
code.

Two comparisons:

* matched overall rate 1/4 at N = 512,
* the (2048, 1723) operating point, wrapping the outer code in a
  (4096, 2048) inner code, which halves the rate.

Eb/N0 is always per information bit of the whole scheme.
"""

from polarcat import ConcatSpec, SimConfig, construct, make_permutation, overall_rate, run_point


def ber(code, ebno, max_frames=20_000):
    cfg = SimConfig(code, (ebno,), max_frames=max_frames, min_bit_errors=200, base_seed=3)
    row = run_point(cfg, ebno)
    return f"{row.ber:.2e} ({row.bit_errors} err / {row.info_bits} bits)"


# %%
concat = ConcatSpec(construct(8, 128), construct(9, 256), make_permutation("random", 256, seed=1))
plain = construct(9, 128)
print("overall rate", overall_rate(concat))
for ebno in (3.0, 4.0, 5.0, 6.0):
    print(f"{ebno:.1f} dB  plain {ber(plain, ebno)}   concatenated {ber(concat, ebno)}")

# %%
# At matched rate the plain code wins: the inner decoder hands over hard
# decisions, and its residual errors arrive in bursts the outer SC decoder
# cannot undo.

# %%
plain = construct(11, 1723)
concat = ConcatSpec(construct(11, 1723), construct(12, 2048), make_permutation("random", 2048, seed=1))
print("rates: plain %.3f  concatenated %.3f" % (1723 / 2048, overall_rate(concat)))
for ebno in (3.0, 3.5, 4.0):
    print(f"{ebno:.1f} dB  plain {ber(plain, ebno, 2000)}   concatenated {ber(concat, ebno, 2000)}")
