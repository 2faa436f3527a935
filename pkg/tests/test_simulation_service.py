"""Unit tests for the Monte Carlo driver."""
import unittest
from unittest.mock import patch

from nharqsim.errors import ConfigError, InvariantViolation
from nharqsim.harq import EngineRun
from nharqsim.models import (
    AbandonedScoring,
    ChannelKind,
    ChannelModel,
    DecoderKind,
    DecoderModel,
    MessageOutcome,
    MessageStatus,
    Scheme,
    SimConfig,
)
from nharqsim.services import RunLedger, SimulationService, run_point, simulation_service, sweep


def make_cfg(**kwargs: object) -> SimConfig:
    base: dict[str, object] = dict(
        scheme=Scheme.N_HARQ_CC,
        snr_db_grid=(4.0, 8.0),
        frames=200,
        channel=ChannelModel(ChannelKind.RAYLEIGH_BLOCK),
    )
    base.update(kwargs)
    return SimConfig(**base)  # type: ignore[arg-type]


class TestTrials(unittest.TestCase):
    """Splitting a grid point into independent trials."""

    def test_frames_split_evenly(self) -> None:
        service = SimulationService(make_cfg(frames=10, trials=3))
        self.assertEqual(service.trial_frames(), [4, 3, 3])

    def test_stream_ids_are_disjoint_across_points(self) -> None:
        service = SimulationService(make_cfg(trials=3))
        ids = [t.stream_id for i in range(2) for t in service.tasks(i)]
        self.assertEqual(ids, [0, 1, 2, 2**32, 2**32 + 1, 2**32 + 2])

    def test_trials_are_folded_into_one_row(self) -> None:
        """Each trial's engine run is scored once in the row."""
        run = EngineRun(outcomes=[MessageOutcome(0, MessageStatus.DELIVERED, 1, 0)], rounds=1, symbols=1.0)
        with patch.object(simulation_service, "run_trial", return_value=run) as mock_run:
            row = SimulationService(make_cfg(frames=3, trials=3)).run_point(8.0)

        self.assertEqual(mock_run.call_count, 3)
        tasks = [c.args[0] for c in mock_run.call_args_list]
        self.assertEqual([t.stream_id for t in tasks], [2**32, 2**32 + 1, 2**32 + 2])
        self.assertEqual([t.frames for t in tasks], [1, 1, 1])
        self.assertEqual((row.frames, row.rounds, row.delivered), (3, 3, 3))


class TestRunPoint(unittest.TestCase):
    """One grid point end to end."""

    def test_noiseless_point(self) -> None:
        """No failures: every message goes out once, in ITM."""
        cfg = make_cfg(snr_db_grid=(100.0,), channel=ChannelModel())
        row = run_point(cfg, 100.0)
        self.assertEqual(row.ber, 0.0)
        self.assertEqual(row.avg_rounds, 1.0)
        self.assertEqual(row.rm_rounds, 0)
        self.assertAlmostEqual(row.se, cfg.decoder.rate_bits_per_symbol)

    def test_no_power_abandons_everything(self) -> None:
        cfg = make_cfg(snr_db_grid=(-30.0,), frames=100)
        row = run_point(cfg, -30.0)
        self.assertEqual(row.abandon_rate, 1.0)
        self.assertEqual(row.ber, 1.0)
        self.assertEqual(row.se, 0.0)

    def test_no_power_bitlevel_measured_ber_is_half(self) -> None:
        cfg = make_cfg(snr_db_grid=(-30.0,), frames=100, decoder=DecoderModel(DecoderKind.BITLEVEL),
                       abandoned=AbandonedScoring.MEASURED)
        row = run_point(cfg, -30.0)
        self.assertEqual(row.abandon_rate, 1.0)
        self.assertAlmostEqual(row.ber, 0.5, delta=0.03)

    def test_same_config_same_row(self) -> None:
        cfg = make_cfg()
        self.assertEqual(run_point(cfg, 4.0), run_point(cfg, 4.0))

    def test_point_must_be_on_grid(self) -> None:
        with self.assertRaises(ConfigError):
            run_point(make_cfg(), 5.0)

    def test_rows_respect_bounds(self) -> None:
        row = run_point(make_cfg(), 4.0)
        self.assertTrue(0.0 <= row.ber <= 1.0)
        self.assertTrue(0.0 <= row.se <= 2 * cfg_rate(make_cfg()))
        self.assertLessEqual(row.se, row.delivered * 200 / (row.rounds * make_cfg().symbols_per_round) + 1e-12)


def cfg_rate(cfg: SimConfig) -> float:
    return cfg.decoder.rate_bits_per_symbol


class TestSweep(unittest.TestCase):
    """Whole grid."""

    def test_one_row_per_point_in_order(self) -> None:
        cfg = make_cfg(snr_db_grid=(4.0, 6.0, 8.0, 10.0, 12.0, 14.0), frames=50)
        rows = sweep(cfg)
        self.assertEqual([r.snr_db for r in rows], [4.0, 6.0, 8.0, 10.0, 12.0, 14.0])

    def test_sweep_rows_equal_single_points(self) -> None:
        cfg = make_cfg(trials=2)
        rows = sweep(cfg)
        self.assertEqual(rows, [run_point(cfg, s) for s in cfg.snr_db_grid])

    def test_parallel_equals_serial(self) -> None:
        serial = sweep(make_cfg(trials=2, workers=1))
        parallel = sweep(make_cfg(trials=2, workers=2))
        self.assertEqual([r.as_record() for r in serial], [r.as_record() for r in parallel])
        self.assertEqual([r.errored_bits for r in serial], [r.errored_bits for r in parallel])


class TestRunLedger(unittest.TestCase):
    """Symbol accounting cross-check."""

    def test_mismatch_raises(self) -> None:
        ledger = RunLedger()
        ledger.rounds, ledger.symbols = 3, 500.0
        with self.assertRaises(InvariantViolation):
            ledger.check(EngineRun(rounds=3), symbols_per_round=200.0)

    def test_match_passes(self) -> None:
        ledger = RunLedger()
        ledger.rounds, ledger.symbols = 3, 600.0
        ledger.check(EngineRun(rounds=3), symbols_per_round=200.0)


if __name__ == '__main__':
    unittest.main()
