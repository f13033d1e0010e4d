"""
Monte Carlo BER/FER estimation over BPSK/AWGN.

Every frame draws its message and noise from its own counter-based stream
keyed by ``(base_seed, frame_index)``, so counts do not depend on how many
workers run or in what order. Frames are processed in fixed-size blocks and
early stopping is only checked at block boundaries, in block order.
"""

import csv
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .channel import NOISE_ALGORITHM, bpsk_modulate, channel_llr, ebno_to_sigma, frame_rng
from .concat import HARD_LLR, ConcatSpec, concat_decode, concat_encode, overall_rate
from .core import PolarCodeSpec, encode_recursive, rate
from .decoder import sc_decode

__all__ = [
    "CSV_COLUMNS",
    "EBNO_NORMALIZATION",
    "SimConfig",
    "PointResult",
    "SimResult",
    "scheme_of",
    "scheme_rate",
    "run_frame",
    "run_point",
    "run_sweep",
    "binomial_ci",
    "ebno_grid",
]

CSV_COLUMNS = (
    "scheme", "n_outer", "k_outer", "n_inner", "k_inner", "interleaver",
    "overall_rate", "ebno_db", "sigma", "frames", "info_bits", "bit_errors",
    "frame_errors", "ber", "fer", "stop_reason", "base_seed",
)

EBNO_NORMALIZATION = "Eb per information bit of the end-to-end scheme (sigma uses overall rate)"


def scheme_of(code):
    if isinstance(code, ConcatSpec):
        return "concatenated"
    if isinstance(code, PolarCodeSpec):
        return "plain"
    raise TypeError(f"unsupported code description {type(code).__name__}")


def scheme_rate(code):
    return overall_rate(code) if isinstance(code, ConcatSpec) else rate(code)


def ebno_grid(start, stop, step):
    """Inclusive grid ``start, start+step, ..., <= stop``."""
    if step <= 0:
        raise ValueError("Eb/N0 step must be positive")
    if stop < start:
        raise ValueError("Eb/N0 stop must not be below start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return tuple(round(start + i * step, 10) for i in range(count))


@dataclass(frozen=True)
class SimConfig:
    code: object
    ebno_grid: tuple
    max_frames: int = 10_000
    min_bit_errors: int = 200
    base_seed: int = 1
    message_source: str = "random"
    workers: int = 1
    block_frames: int = 256
    hard_llr: float = HARD_LLR

    def __post_init__(self):
        scheme_of(self.code)
        grid = tuple(float(e) for e in self.ebno_grid)
        if not grid:
            raise ValueError("Eb/N0 grid must be non-empty")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("Eb/N0 grid must be strictly increasing")
        object.__setattr__(self, "ebno_grid", grid)
        if self.max_frames < 1:
            raise ValueError("max_frames must be >= 1")
        if self.min_bit_errors < 0:
            raise ValueError("min_bit_errors must be >= 0")
        if self.message_source not in ("random", "zero"):
            raise ValueError(f"message_source must be 'random' or 'zero', got {self.message_source!r}")
        if self.workers < 1 or self.block_frames < 1:
            raise ValueError("workers and block_frames must be >= 1")

    @property
    def scheme(self):
        return scheme_of(self.code)

    def describe(self):
        """Fully resolved settings, suitable for printing or a JSON sidecar."""
        code = self.code
        return {
            "scheme": self.scheme,
            "code": code.to_dict(),
            "overall_rate": scheme_rate(code),
            "ebno_grid": list(self.ebno_grid),
            "max_frames": self.max_frames,
            "min_bit_errors": self.min_bit_errors,
            "base_seed": self.base_seed,
            "message_source": self.message_source,
            "workers": self.workers,
            "block_frames": self.block_frames,
            "hard_llr": self.hard_llr,
            "ebno_normalization": EBNO_NORMALIZATION,
            "noise": NOISE_ALGORITHM,
        }


@dataclass
class PointResult:
    scheme: str
    n_outer: int
    k_outer: int
    n_inner: object
    k_inner: object
    interleaver: str
    overall_rate: float
    ebno_db: float
    sigma: float
    frames: int
    info_bits: int
    bit_errors: int
    frame_errors: int
    stop_reason: str
    base_seed: int
    wall_seconds: float = 0.0
    bit_errors_sq: int = 0  # sum over frames of (bit errors in frame)^2

    @property
    def ber(self):
        return self.bit_errors / self.info_bits

    @property
    def fer(self):
        return self.frame_errors / self.frames

    def ber_ci(self, level=0.95):
        return binomial_ci(self.bit_errors, self.info_bits, level)

    def ber_stderr(self):
        """Standard error of the BER treating frames, not bits, as independent.

        SC errors arrive in bursts within a frame, so the binomial bit-level
        variance understates the spread.
        """
        k = self.info_bits // self.frames
        mean = self.bit_errors / self.frames
        var = self.bit_errors_sq / self.frames - mean * mean
        if self.frames > 1:
            var *= self.frames / (self.frames - 1)
        return float(np.sqrt(max(var, 0.0) / self.frames)) / k

    def csv_row(self):
        row = []
        for col in CSV_COLUMNS:
            v = getattr(self, col)
            if isinstance(v, float):
                v = f"{v:#.10g}"
            elif v is None:
                v = ""
            row.append(v)
        return row


@dataclass
class SimResult:
    rows: list = field(default_factory=list)
    config: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def extend(self, other):
        self.rows.extend(other.rows)
        self.config.extend(other.config)
        return self

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow(r.csv_row())

    def points(self):
        return [(r.ebno_db, r.ber) for r in self.rows]


def binomial_ci(errors, trials, level=0.95):
    """Two-sided Clopper-Pearson interval for an error probability."""
    alpha = 1.0 - level
    lo = 0.0 if errors == 0 else stats.beta.ppf(alpha / 2, errors, trials - errors + 1)
    hi = 1.0 if errors == trials else stats.beta.ppf(1 - alpha / 2, errors + 1, trials - errors)
    return float(lo), float(hi)


def _draw(code, base_seed, start, stop, zero_message):
    K, N = code.info_count, code.block_length
    msgs = np.empty((stop - start, K), dtype=np.uint8)
    noise = np.empty((stop - start, N))
    for row, idx in enumerate(range(start, stop)):
        rng = frame_rng(base_seed, idx)
        msgs[row] = rng.integers(0, 2, K, dtype=np.uint8)
        noise[row] = rng.standard_normal(N)
    if zero_message:
        msgs[:] = 0
    return msgs, noise


def _frame_errors(code, sigma, start, stop, base_seed, message_source, hard_llr):
    """Per-frame bit-error counts for frames ``start..stop-1``."""
    msgs, noise = _draw(code, base_seed, start, stop, message_source == "zero")
    if isinstance(code, ConcatSpec):
        x = concat_encode(code, msgs)
    else:
        x = encode_recursive(code, msgs)
    y = bpsk_modulate(x) + sigma * noise
    llr = channel_llr(y, sigma)
    if isinstance(code, ConcatSpec):
        decided = concat_decode(code, llr, hard_llr)
    else:
        decided, _ = sc_decode(code, llr)
    return np.count_nonzero(decided != msgs, axis=1)


def _block_task(args):
    errs = _frame_errors(*args).astype(np.int64)
    return int(errs.sum()), int(np.count_nonzero(errs)), int((errs * errs).sum())


def run_frame(code, ebno_db, frame_index, base_seed, message_source="random", hard_llr=HARD_LLR):
    """Simulate one frame; returns ``(bit_errors, frame_error)``."""
    sigma = ebno_to_sigma(ebno_db, scheme_rate(code))
    errs = _frame_errors(code, sigma, frame_index, frame_index + 1, base_seed,
                         message_source, hard_llr)
    return int(errs[0]), bool(errs[0])


def _code_columns(code):
    if isinstance(code, ConcatSpec):
        perm = code.perm
        desc = perm.kind
        if perm.params:
            desc += "(" + ",".join(f"{k}={v}" for k, v in perm.params.items()) + ")"
        return dict(n_outer=code.outer.block_length, k_outer=code.outer.info_count,
                    n_inner=code.inner.block_length, k_inner=code.inner.info_count,
                    interleaver=desc)
    return dict(n_outer=code.block_length, k_outer=code.info_count,
                n_inner=None, k_inner=None, interleaver="none")


def run_point(config, ebno_db, executor=None):
    """Run frames at one Eb/N0 until the error target or frame budget is hit."""
    code = config.code
    sigma = ebno_to_sigma(ebno_db, scheme_rate(code))
    bounds = [(s, min(s + config.block_frames, config.max_frames))
              for s in range(0, config.max_frames, config.block_frames)]
    tasks = [(code, sigma, s, e, config.base_seed, config.message_source, config.hard_llr)
             for s, e in bounds]

    t0 = time.perf_counter()
    frames = bit_errors = frame_errors = bit_errors_sq = 0
    stop_reason = "max_frames"
    wave = config.workers if executor is not None else 1
    done = False
    for w in range(0, len(tasks), wave):
        chunk = tasks[w:w + wave]
        results = executor.map(_block_task, chunk) if executor is not None else map(_block_task, chunk)
        for (s, e), (be, fe, sq) in zip(bounds[w:w + wave], results):
            frames += e - s
            bit_errors += be
            frame_errors += fe
            bit_errors_sq += sq
            if config.min_bit_errors and bit_errors >= config.min_bit_errors:
                stop_reason = "min_bit_errors"
                done = True
                break
        if done:
            break

    return PointResult(
        scheme=config.scheme,
        overall_rate=scheme_rate(code),
        ebno_db=float(ebno_db),
        sigma=sigma,
        frames=frames,
        info_bits=frames * code.info_count,
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        stop_reason=stop_reason,
        base_seed=config.base_seed,
        wall_seconds=time.perf_counter() - t0,
        bit_errors_sq=bit_errors_sq,
        **_code_columns(code),
    )


def run_sweep(config, progress=None):
    """``run_point`` over the grid, in order. ``progress`` gets each row."""
    result = SimResult(config=[config.describe()])
    executor = ProcessPoolExecutor(config.workers) if config.workers > 1 else None
    try:
        for ebno in config.ebno_grid:
            row = run_point(config, ebno, executor)
            result.rows.append(row)
            if progress is not None:
                progress(row)
    finally:
        if executor is not None:
            executor.shutdown()
    return result
