"""
BER against Eb/N0 for plain polar codes
=======================================

Short Monte Carlo sweeps: the effect of block length at rate 1/2, and of
rate at N = 1024. Budgets are small so the script finishes in a few
seconds; raise ``MAX_FRAMES`` for smoother curves.
"""

from polarcat import SimConfig, construct, run_sweep

MAX_FRAMES = 20_000
GRID = (1.0, 2.0, 3.0)


def sweep(code):
    cfg = SimConfig(code, GRID, max_frames=MAX_FRAMES, min_bit_errors=200, base_seed=1)
    return run_sweep(cfg)


def show(label, result):
    cells = "  ".join(f"{r.ebno_db:4.1f} dB: {r.ber:.2e}" for r in result)
    print(f"{label:18s} {cells}")


# %%
# Longer codes at the same rate: BER drops faster with Eb/N0.
for n in (7, 8, 9, 10):
    show(f"N={2**n:<5d} R=1/2", sweep(construct(n, 2 ** (n - 1))))

# %%
# Lower rate means more redundancy and fewer errors at a given Eb/N0.
for k in (256, 512, 768):
    show(f"N=1024 R={k}/1024", sweep(construct(10, k)))

# %%
# Rows carry everything needed for a CSV.
import sys

sweep(construct(8, 128)).write_csv(sys.stdout)
