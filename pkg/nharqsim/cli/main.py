#!/usr/bin/env python3
"""
Command-line entry point: parse flags, run the SNR sweep, write the rows.
"""
import argparse
import logging
import math
import os
import sys
from typing import List, Optional, Sequence, Tuple

from .. import config
from ..errors import NharqError
from ..framing import FecScheme, FrameConfig
from ..models import (
    AbandonedScoring,
    ChannelKind,
    ChannelModel,
    DecoderKind,
    DecoderModel,
    MetricsRow,
    OutputFormat,
    OutputSpec,
    Scheme,
    SimConfig,
)
from ..output import write_rows
from ..services import SimulationService

logger = logging.getLogger(__name__)

SCHEMES = {"type1": Scheme.TYPE1, "cc": Scheme.HARQ_CC, "n-cc": Scheme.N_HARQ_CC}
CHANNELS = {"awgn": ChannelKind.AWGN_FIXED, "rayleigh": ChannelKind.RAYLEIGH_BLOCK}
FECS = {"none": FecScheme.IDENTITY, "rep3": FecScheme.REPETITION3}


def parse_snr_grid(text: str) -> Tuple[float, ...]:
    """'start:stop:step' in dB (stop included when on the grid) or a single value."""
    parts = text.split(":")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid SNR grid '{text}'") from None
    if len(values) == 1:
        return (values[0],)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"SNR grid must be start:stop:step, got '{text}'")

    start, stop, step = values
    if not step > 0 or stop < start:
        raise argparse.ArgumentTypeError(f"SNR grid '{text}' must have step > 0 and stop >= start")
    count = math.floor((stop - start) / step + 1e-9) + 1
    return tuple(round(start + i * step, 10) for i in range(count))


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nharqsim",
        description="Link-level simulator for HARQ with non-orthogonal chase combining.",
    )
    parser.add_argument("--scheme", choices=list(SCHEMES), default="n-cc")
    parser.add_argument("--snr", type=parse_snr_grid, default=config.SNR_GRID,
                        metavar="A:B:S", help="SNR grid in dB (default %(default)s)")
    parser.add_argument("--alpha2", type=float, default=config.ALPHA2,
                        help="power share of the old packet, in (0, 0.5)")
    parser.add_argument("--max-rounds", type=int, default=config.MAX_ROUNDS, metavar="M")
    parser.add_argument("--frames", type=int, default=config.FRAMES, metavar="N")
    parser.add_argument("--decoder", choices=[k.value for k in DecoderKind],
                        default=DecoderKind.THRESHOLD.value)
    parser.add_argument("--channel", choices=list(CHANNELS), default="awgn")
    parser.add_argument("--mean-square-gain", type=float, default=1.0,
                        help="E|h|^2 of the Rayleigh channel")
    parser.add_argument("--fec", choices=list(FECS), default="none")
    parser.add_argument("--rate-override", type=float, default=None, metavar="R",
                        help=f"threshold-decoder rate in bits/symbol (default {config.RATE_BITS_PER_SYMBOL})")
    parser.add_argument("--seed", type=_u64, default=config.SEED)
    parser.add_argument("--out", default=config.STDOUT_SENTINEL,
                        help="output path, '-' for standard output")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat],
                        default=OutputFormat.CSV.value)
    parser.add_argument("--eq7-constant-amplitude", action="store_true",
                        help="decode the old message as if sent at alpha*sqrt(P) in every round")
    parser.add_argument("--abandoned", choices=[p.value for p in AbandonedScoring],
                        default=AbandonedScoring.LOST.value,
                        help="how abandoned frames count towards BER")
    parser.add_argument("--trials", type=int, default=1, help="independent streams per grid point")
    parser.add_argument("--workers", type=int, default=config.WORKERS)
    parser.add_argument("-v", "--verbose", action="store_true", help="log one line per grid point")
    return parser


def _parse(argv: Optional[Sequence[str]]) -> Tuple[argparse.Namespace, SimConfig, OutputSpec]:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        frame_cfg = FrameConfig(payload_bits=config.PAYLOAD_BITS, fec=FECS[args.fec])
        kind = DecoderKind(args.decoder)
        if args.rate_override is not None:
            decoder = DecoderModel(kind=kind, rate_bits_per_symbol=args.rate_override)
        elif kind is DecoderKind.BITLEVEL:
            # Real frames: the rate is whatever the frame layout and FEC give
            decoder = DecoderModel.from_frame_config(frame_cfg, kind)
        else:
            decoder = DecoderModel(kind=kind)
        cfg = SimConfig(
            scheme=SCHEMES[args.scheme],
            snr_db_grid=args.snr,
            alpha2=args.alpha2,
            max_rounds=args.max_rounds,
            frames=args.frames,
            decoder=decoder,
            channel=ChannelModel(CHANNELS[args.channel], args.mean_square_gain),
            frame_cfg=frame_cfg,
            seed=args.seed,
            eq7_constant_amplitude=args.eq7_constant_amplitude,
            abandoned=AbandonedScoring(args.abandoned),
            trials=args.trials,
            workers=args.workers,
        )
    except NharqError as e:
        parser.error(str(e))

    return args, cfg, OutputSpec(path=args.out, format=OutputFormat(args.format))


def parse_args(argv: Optional[Sequence[str]] = None) -> Tuple[SimConfig, OutputSpec]:
    """Validate flags into a simulation config and an output spec.

    Range errors exit with status 2 like any other usage error.
    """
    _, cfg, spec = _parse(argv)
    return cfg, spec


def emit(rows: List[MetricsRow], spec: OutputSpec) -> None:
    write_rows(rows, spec)


_installed_handlers: List[logging.Handler] = []


def setup_logging(verbose: bool) -> None:
    """Warnings (or INFO with -v) to stderr; everything to the debug log in debug mode."""
    root = logging.getLogger("nharqsim")
    for handler in _installed_handlers:
        root.removeHandler(handler)
        handler.close()
    _installed_handlers.clear()
    root.setLevel(logging.DEBUG if config.DEBUG_MODE else logging.INFO)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.INFO if verbose else logging.WARNING)
    console.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(console)
    _installed_handlers.append(console)

    if config.DEBUG_MODE:
        os.makedirs(os.path.dirname(config.DEBUG_LOG_PATH), exist_ok=True)
        debug = logging.FileHandler(config.DEBUG_LOG_PATH)
        debug.setLevel(logging.DEBUG)
        debug.setFormatter(logging.Formatter("[%(asctime)s] %(name)s %(levelname)s %(message)s"))
        root.addHandler(debug)
        _installed_handlers.append(debug)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args, cfg, spec = _parse(argv)
    setup_logging(args.verbose)

    if config.DEBUG_MODE:
        logger.debug("=" * 60)
        logger.debug("nharqsim started in DEBUG mode: %s", cfg)

    try:
        rows = SimulationService(cfg).sweep()
        emit(rows, spec)
    except (NharqError, OSError) as e:
        print(f"nharqsim: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
