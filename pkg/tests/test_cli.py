"""Unit tests for the command-line entry point."""
import io
import os
import tempfile
import unittest
from contextlib import redirect_stderr
from unittest.mock import patch

from nharqsim.cli import main as cli_main
from nharqsim.errors import OutputError
from nharqsim.models import (
    AbandonedScoring,
    ChannelKind,
    DecoderKind,
    OutputFormat,
    Scheme,
)


class TestParseArgs(unittest.TestCase):
    """Flag parsing and validation."""

    def test_defaults(self) -> None:
        cfg, spec = cli_main.parse_args([])
        self.assertIs(cfg.scheme, Scheme.N_HARQ_CC)
        self.assertEqual(cfg.snr_db_grid, tuple(float(x) for x in range(4, 15)))
        self.assertEqual((cfg.alpha2, cfg.max_rounds, cfg.seed), (0.2, 3, 0))
        self.assertIs(cfg.decoder.kind, DecoderKind.THRESHOLD)
        self.assertEqual(cfg.decoder.rate_bits_per_symbol, 1.2)
        self.assertIs(cfg.channel.kind, ChannelKind.AWGN_FIXED)
        self.assertFalse(cfg.eq7_constant_amplitude)
        self.assertTrue(spec.to_stdout)
        self.assertIs(spec.format, OutputFormat.CSV)

    def test_full_example(self) -> None:
        cfg, _ = cli_main.parse_args(
            ["--scheme", "n-cc", "--alpha2", "0.2", "--snr", "4:14:1", "--frames", "1757", "--seed", "7"]
        )
        self.assertEqual((cfg.frames, cfg.seed, len(cfg.snr_db_grid)), (1757, 7, 11))

    def test_scheme_names(self) -> None:
        self.assertIs(cli_main.parse_args(["--scheme", "type1"])[0].scheme, Scheme.TYPE1)
        self.assertIs(cli_main.parse_args(["--scheme", "cc"])[0].scheme, Scheme.HARQ_CC)

    def test_other_flags(self) -> None:
        cfg, spec = cli_main.parse_args([
            "--decoder", "bitlevel", "--channel", "rayleigh", "--fec", "rep3",
            "--rate-override", "0.8", "--abandoned", "measured", "--trials", "4",
            "--workers", "2", "--out", "rows.json", "--format", "json", "--mean-square-gain", "2",
        ])
        self.assertIs(cfg.decoder.kind, DecoderKind.BITLEVEL)
        self.assertEqual(cfg.decoder.rate_bits_per_symbol, 0.8)
        self.assertEqual(cfg.channel.mean_square_gain, 2.0)
        self.assertEqual(cfg.frame_cfg.symbols_per_frame, 420)
        self.assertIs(cfg.abandoned, AbandonedScoring.MEASURED)
        self.assertEqual((cfg.trials, cfg.workers), (4, 2))
        self.assertEqual((spec.path, spec.format), ("rows.json", OutputFormat.JSON))

    def test_bitlevel_rate_follows_the_frame(self) -> None:
        """Without --rate-override a bit-level run reports payload bits per frame symbol."""
        cfg, _ = cli_main.parse_args(["--decoder", "bitlevel"])
        self.assertAlmostEqual(cfg.decoder.rate_bits_per_symbol, 200 / 140)
        cfg, _ = cli_main.parse_args(["--decoder", "bitlevel", "--fec", "rep3"])
        self.assertAlmostEqual(cfg.decoder.rate_bits_per_symbol, 200 / 420)
        self.assertEqual(cfg.symbols_per_round, 420.0)

    def test_snr_grid_forms(self) -> None:
        self.assertEqual(cli_main.parse_snr_grid("7"), (7.0,))
        self.assertEqual(cli_main.parse_snr_grid("0:1:0.25"), (0.0, 0.25, 0.5, 0.75, 1.0))
        self.assertEqual(cli_main.parse_snr_grid("0:1:0.3"), (0.0, 0.3, 0.6, 0.9))

    def _usage_error(self, argv: list[str]) -> str:
        err = io.StringIO()
        with redirect_stderr(err), self.assertRaises(SystemExit) as ctx:
            cli_main.parse_args(argv)
        self.assertEqual(ctx.exception.code, 2)
        return err.getvalue()

    def test_alpha2_range_error_cites_power_order(self) -> None:
        message = self._usage_error(["--alpha2", "0.6"])
        self.assertIn("old packet", message)

    def test_usage_errors(self) -> None:
        self._usage_error(["--bogus"])
        self._usage_error(["--snr", "14:4:1"])
        self._usage_error(["--frames", "0"])
        self._usage_error(["--seed", "-1"])
        self._usage_error(["--decoder", "bitlevel", "--eq7-constant-amplitude"])


class TestMain(unittest.TestCase):
    """End-to-end runs."""

    ARGV = ["--snr", "4:8:2", "--frames", "60", "--channel", "rayleigh", "--seed", "3"]

    def _run(self, argv: list[str]) -> str:
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out.csv")
            self.assertEqual(cli_main.main(argv + ["--out", path]), 0)
            with open(path, encoding="utf-8") as fh:
                return fh.read()

    def test_writes_one_row_per_point(self) -> None:
        text = self._run(self.ARGV)
        lines = text.splitlines()
        self.assertEqual(lines[0], "scheme,snr_db,ber,se,avg_rounds,abandon_rate,frames,seed")
        self.assertEqual(len(lines), 4)
        self.assertTrue(all(line.startswith("n-harq-cc,") for line in lines[1:]))

    def test_identical_argv_identical_bytes(self) -> None:
        self.assertEqual(self._run(self.ARGV), self._run(self.ARGV))

    def test_parallel_output_matches_serial(self) -> None:
        self.assertEqual(self._run(self.ARGV + ["--trials", "2", "--workers", "1"]),
                         self._run(self.ARGV + ["--trials", "2", "--workers", "2"]))

    def test_runtime_error_exits_1(self) -> None:
        err = io.StringIO()
        with patch.object(cli_main, "emit", side_effect=OutputError("Cannot open /nowhere")), \
                redirect_stderr(err):
            code = cli_main.main(["--snr", "10", "--frames", "5"])
        self.assertEqual(code, 1)
        self.assertIn("/nowhere", err.getvalue())


if __name__ == '__main__':
    unittest.main()
