"""Monte Carlo driver: grid points, trials and the fold into metrics rows."""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..channel import RngStream
from ..errors import ConfigError, InvariantViolation
from ..events import Event, EventBus, RoundContext
from ..harq import EngineRun, get_engine
from ..models import MetricsRow, SimConfig
from .metrics_service import build_row

logger = logging.getLogger(__name__)

# Trials of different grid points never share an RNG stream
STREAMS_PER_POINT: int = 2**32


@dataclass(frozen=True)
class TrialTask:
    cfg: SimConfig
    snr_db: float
    grid_index: int
    trial: int
    frames: int

    @property
    def stream_id(self) -> int:
        return self.grid_index * STREAMS_PER_POINT + self.trial


class RunLedger:
    """Counts rounds and symbols as the engine reports them."""

    def __init__(self) -> None:
        self.rounds = 0
        self.symbols = 0.0

    def on_round(self, ctx: RoundContext) -> None:
        self.rounds += 1
        self.symbols += ctx.symbols

    def check(self, run: EngineRun, symbols_per_round: float) -> None:
        """Rounds x symbols-per-round must equal the per-round symbol total."""
        expected = run.rounds * symbols_per_round
        if self.rounds != run.rounds or not math.isclose(self.symbols, expected, rel_tol=1e-12):
            raise InvariantViolation(
                f"Symbol accounting mismatch: {self.rounds} rounds / {self.symbols} symbols "
                f"recorded, engine reports {run.rounds} rounds x {symbols_per_round}"
            )


def run_trial(task: TrialTask) -> EngineRun:
    """One engine over one independent stream."""
    events = EventBus()
    ledger = RunLedger()
    events.subscribe(Event.ROUND_TRANSMITTED, ledger.on_round)

    engine_cls = get_engine(task.cfg.scheme)
    engine = engine_cls(task.cfg, task.snr_db, RngStream(task.cfg.seed, task.stream_id), events)
    run = engine.run(task.frames)
    ledger.check(run, task.cfg.symbols_per_round)
    # The transcript stays with the engine; only counts cross process boundaries
    run.transcript = []
    return run


class SimulationService:
    """Runs a configuration's SNR sweep, serially or over worker processes."""

    def __init__(self, cfg: SimConfig) -> None:
        self.cfg = cfg

    def trial_frames(self) -> List[int]:
        """Split the message count as evenly as possible over the trials."""
        base, extra = divmod(self.cfg.frames, self.cfg.trials)
        return [base + (1 if t < extra else 0) for t in range(self.cfg.trials)]

    def tasks(self, grid_index: int) -> List[TrialTask]:
        snr_db = self.cfg.snr_db_grid[grid_index]
        return [
            TrialTask(self.cfg, snr_db, grid_index, trial, frames)
            for trial, frames in enumerate(self.trial_frames())
        ]

    def _execute(self, tasks: List[TrialTask]) -> List[EngineRun]:
        if self.cfg.workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.cfg.workers) as pool:
                return list(pool.map(run_trial, tasks))
        return [run_trial(t) for t in tasks]

    def _fold(self, snr_db: float, runs: Iterable[EngineRun]) -> MetricsRow:
        outcomes = []
        rounds = rm_rounds = sic_failures = 0
        for run in runs:
            outcomes.extend(run.outcomes)
            rounds += run.rounds
            rm_rounds += run.rm_rounds
            sic_failures += run.sic_failures
        row = build_row(self.cfg, snr_db, outcomes, rounds, rm_rounds, sic_failures)
        logger.info(
            "%s %.2f dB: ber=%.4g se=%.4g avg_rounds=%.3f abandoned=%d/%d",
            row.scheme.value, snr_db, row.ber, row.se, row.avg_rounds, row.abandoned, row.frames,
        )
        return row

    def run_point(self, snr_db: float) -> MetricsRow:
        """All trials of one grid point."""
        if snr_db not in self.cfg.snr_db_grid:
            raise ConfigError(f"{snr_db} dB is not on the configured grid")
        grid_index = self.cfg.snr_db_grid.index(snr_db)
        return self._fold(snr_db, self._execute(self.tasks(grid_index)))

    def sweep(self) -> List[MetricsRow]:
        """One row per grid point, in grid order.

        Every (point, trial) pair is an independent task, so the pool sees the
        whole sweep at once; results are folded in submission order.
        """
        spans: List[Tuple[int, int]] = []
        tasks: List[TrialTask] = []
        for grid_index in range(len(self.cfg.snr_db_grid)):
            point_tasks = self.tasks(grid_index)
            spans.append((len(tasks), len(tasks) + len(point_tasks)))
            tasks.extend(point_tasks)

        runs = self._execute(tasks)
        return [
            self._fold(self.cfg.snr_db_grid[i], runs[start:end])
            for i, (start, end) in enumerate(spans)
        ]


def run_point(cfg: SimConfig, snr_db: float) -> MetricsRow:
    return SimulationService(cfg).run_point(snr_db)


def sweep(cfg: SimConfig) -> List[MetricsRow]:
    return SimulationService(cfg).sweep()
