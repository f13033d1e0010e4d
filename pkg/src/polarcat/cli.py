"""Command-line front end: ``polarcat {construct,encode,decode,simulate,compare}``."""

import argparse
import io
import json
import os
import sys

import numpy as np

from . import construction
from .concat import HARD_LLR, ConcatSpec, concat_decode, concat_encode, make_permutation
from .core import PolarCodeSpec, bits_to_str, encode_recursive, str_to_bits
from .decoder import sc_decode
from .sim import SimConfig, ebno_grid, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_IO = 4


class ConfigError(Exception):
    pass


def _emit_config(args, extra=None):
    """Print the fully resolved invocation to stderr."""
    resolved = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    if extra:
        resolved.update(extra)
    for key, value in resolved.items():
        print(f"# {key} = {json.dumps(value, default=str)}", file=sys.stderr)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: not valid JSON ({exc})") from exc


def _load_code(path):
    """Polar or concatenated spec, told apart by their keys."""
    d = _read_json(path)
    try:
        if isinstance(d, dict) and "outer" in d:
            return ConcatSpec.from_dict(d)
        return PolarCodeSpec.from_dict(d)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _z0(args):
    if args.design_snr_db is not None:
        return construction.design_snr_to_z0(args.design_snr_db)
    return args.z0


def _interleaver(args, n):
    try:
        return make_permutation(args.interleaver, n, rows=args.rows, cols=args.cols,
                                seed=args.interleaver_seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _scheme_from_args(args):
    if args.spec and (args.outer_spec or args.inner_spec):
        raise ConfigError("--spec cannot be combined with --outer-spec/--inner-spec")
    if args.spec:
        return _load_code(args.spec)
    if not (args.outer_spec and args.inner_spec):
        raise ConfigError("give --spec, or both --outer-spec and --inner-spec")
    outer = _load_code(args.outer_spec)
    inner = _load_code(args.inner_spec)
    if not (isinstance(outer, PolarCodeSpec) and isinstance(inner, PolarCodeSpec)):
        raise ConfigError("--outer-spec and --inner-spec must be plain polar code specs")
    if inner.info_count != outer.block_length:
        raise ConfigError(
            f"inner K ({inner.info_count}) must equal outer N ({outer.block_length})"
        )
    return ConcatSpec(outer, inner, _interleaver(args, outer.block_length))


def _sim_config(args, code):
    try:
        grid = ebno_grid(args.ebno_start, args.ebno_stop, args.ebno_step)
        return SimConfig(
            code=code,
            ebno_grid=grid,
            max_frames=args.max_frames,
            min_bit_errors=args.min_bit_errors,
            base_seed=args.seed,
            message_source=args.message_source,
            workers=args.workers,
            hard_llr=args.hard_llr,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _progress(row):
    print(f"# {row.scheme} Eb/N0={row.ebno_db:g} dB frames={row.frames} "
          f"bit_errors={row.bit_errors} ber={row.ber:.3e} ({row.stop_reason}, "
          f"{row.wall_seconds:.1f}s)", file=sys.stderr)


def _finish_sim(args, result):
    buf = io.StringIO()
    result.write_csv(buf)
    _write_text(args.out, buf.getvalue())
    if args.out and args.out != "-":
        with open(args.out + ".meta.json", "w") as fh:
            json.dump(result.config, fh, indent=2)
            fh.write("\n")
    if args.points:
        lines = []
        for scheme in dict.fromkeys(r.scheme for r in result.rows):
            lines.append(f"# {scheme}")
            lines += [f"{r.ebno_db:.6g} {r.ber:.6e}" for r in result.rows if r.scheme == scheme]
            lines.append("")
        _write_text(args.points, "\n".join(lines) + "\n")


def cmd_construct(args):
    if not 1 <= args.k <= 2 ** args.n:
        raise ConfigError(f"--k must lie in [1, 2^{args.n}]")
    z0 = _z0(args)
    if not 0.0 < z0 < 1.0:
        raise ConfigError(f"z0 must lie in (0, 1), got {z0}")
    _emit_config(args, {"resolved_z0": z0})
    profile = construction.bhattacharyya_profile(args.n, z0)
    spec = construction.select_frozen_set(profile, args.k)
    z = profile.z
    info_z = z[spec.info_indices]
    print(f"# z min = {z.min():.6g}, z max = {z.max():.6g}, "
          f"cutoff (largest info z) = {info_z.max():.6g}", file=sys.stderr)
    _write_text(args.out, json.dumps(spec.to_dict()) + "\n")
    return EXIT_OK


def cmd_encode(args):
    code = _load_code(args.spec)
    _emit_config(args)
    try:
        bits = str_to_bits(args.bits)
        if isinstance(code, ConcatSpec):
            x = concat_encode(code, bits)
        else:
            x = encode_recursive(code, bits)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    _write_text(args.out, bits_to_str(x) + "\n")
    return EXIT_OK


def _read_llrs(path):
    fh = sys.stdin if path == "-" else open(path)
    try:
        values = [float(line) for line in fh if line.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad LLR value: {exc}") from exc
    finally:
        if fh is not sys.stdin:
            fh.close()
    return np.array(values)


def cmd_decode(args):
    code = _load_code(args.spec)
    _emit_config(args)
    llr = _read_llrs(args.llr_file)
    try:
        if isinstance(code, ConcatSpec):
            info = concat_decode(code, llr, args.hard_llr)
        else:
            info, _ = sc_decode(code, llr)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    _write_text(args.out, bits_to_str(info) + "\n")
    return EXIT_OK


def cmd_simulate(args):
    code = _scheme_from_args(args)
    config = _sim_config(args, code)
    _emit_config(args, config.describe())
    _finish_sim(args, run_sweep(config, progress=_progress))
    return EXIT_OK


def cmd_compare(args):
    if not (args.outer_spec and args.inner_spec):
        raise ConfigError("compare needs --outer-spec and --inner-spec")
    args.spec = None
    concat = _scheme_from_args(args)
    # R_s * N_inner = K_outer exactly, since K_inner = N_outer
    k_plain = concat.outer.info_count
    plain = construction.select_frozen_set(
        construction.bhattacharyya_profile(concat.inner.n, _z0(args)), k_plain
    )
    configs = [_sim_config(args, plain), _sim_config(args, concat)]
    _emit_config(args, {"plain": configs[0].describe(), "concatenated": configs[1].describe()})
    result = run_sweep(configs[0], progress=_progress)
    result.extend(run_sweep(configs[1], progress=_progress))
    _finish_sim(args, result)
    return EXIT_OK


def _add_construction_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--z0", type=float, default=construction.DEFAULT_Z0,
                   help="initial Bhattacharyya parameter (default 0.5)")
    g.add_argument("--design-snr-db", type=float, default=None,
                   help="design SNR; sets z0 = exp(-10^(dB/10))")


def _add_sim_flags(p):
    p.add_argument("--outer-spec")
    p.add_argument("--inner-spec")
    p.add_argument("--interleaver", choices=("identity", "rowcol", "random"), default="random")
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--interleaver-seed", type=int, default=0)
    p.add_argument("--ebno-start", type=float, default=0.0)
    p.add_argument("--ebno-stop", type=float, default=5.0)
    p.add_argument("--ebno-step", type=float, default=0.5)
    p.add_argument("--max-frames", type=int, default=10_000)
    p.add_argument("--min-bit-errors", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--message-source", choices=("random", "zero"), default="random")
    p.add_argument("--hard-llr", type=float, default=HARD_LLR,
                   help="LLR magnitude given to inner hard decisions (concatenated only)")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--points", help="also write '<ebno> <ber>' lines here")


def build_parser():
    parser = argparse.ArgumentParser(prog="polarcat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a frozen set and write a spec file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_construction_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode one message given as a 0/1 string")
    p.add_argument("--spec", required=True)
    p.add_argument("bits")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="SC-decode one LLR vector (one value per line)")
    p.add_argument("--spec", required=True)
    p.add_argument("llr_file", help="path, or '-' for stdin")
    p.add_argument("--hard-llr", type=float, default=HARD_LLR)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="BER/FER sweep for one scheme")
    p.add_argument("--spec")
    _add_sim_flags(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("compare", help="plain vs concatenated at matched overall rate")
    _add_sim_flags(p)
    _add_construction_flags(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"polarcat: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"polarcat: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
