"""BER, spectral efficiency and round statistics over message outcomes."""
import logging
from typing import Sequence, Tuple

from scipy.stats import binomtest

from .. import config
from ..errors import EmptyOutcomesError
from ..models import AbandonedScoring, MessageOutcome, MessageStatus, MetricsRow, SimConfig

logger = logging.getLogger(__name__)


def count_bit_errors(outcomes: Sequence[MessageOutcome], payload_bits: int = config.PAYLOAD_BITS,
                     policy: AbandonedScoring = AbandonedScoring.LOST) -> Tuple[int, int]:
    """(errored bits, scored bits) under an abandoned-frame policy.

    MEASURED falls back to LOST for abandoned frames whose bits were never
    hard-decided (threshold decoding).
    """
    if not outcomes:
        raise EmptyOutcomesError("No messages to score")
    errored = 0
    total = 0
    for o in outcomes:
        if o.status is MessageStatus.DELIVERED:
            errored += o.bit_errors or 0
        elif policy is AbandonedScoring.EXCLUDE:
            continue
        elif policy is AbandonedScoring.MEASURED and o.bit_errors is not None:
            errored += o.bit_errors
        else:
            errored += payload_bits
        total += payload_bits
    return errored, total


def aggregate_ber(outcomes: Sequence[MessageOutcome], payload_bits: int = config.PAYLOAD_BITS,
                  policy: AbandonedScoring = AbandonedScoring.LOST) -> float:
    errored, total = count_bit_errors(outcomes, payload_bits, policy)
    if total == 0:
        logger.warning("Every message was abandoned and excluded; reporting BER 0")
        return 0.0
    return errored / total


def aggregate_se(outcomes: Sequence[MessageOutcome], rounds: int, symbols_per_round: float,
                 payload_bits: int = config.PAYLOAD_BITS) -> float:
    """Delivered payload bits per transmitted symbol.

    A round counts once no matter how many messages it superimposes.
    """
    if not outcomes:
        raise EmptyOutcomesError("No messages to score")
    if rounds <= 0:
        raise EmptyOutcomesError("No rounds were transmitted")
    delivered = sum(1 for o in outcomes if o.status is MessageStatus.DELIVERED)
    return payload_bits * delivered / (symbols_per_round * rounds)


def ber_confidence_interval(errored: int, total: int, confidence: float = 0.95) -> Tuple[float, float]:
    """Wilson score interval for a bit error ratio."""
    if total <= 0:
        raise EmptyOutcomesError("No bits to build an interval from")
    ci = binomtest(errored, total).proportion_ci(confidence_level=confidence, method="wilson")
    return float(ci.low), float(ci.high)


def build_row(cfg: SimConfig, snr_db: float, outcomes: Sequence[MessageOutcome],
              rounds: int, rm_rounds: int = 0, sic_failures: int = 0) -> MetricsRow:
    """Fold the outcomes of every trial at one grid point into a row."""
    payload_bits = cfg.frame_cfg.payload_bits
    errored, total = count_bit_errors(outcomes, payload_bits, cfg.abandoned)
    delivered = sum(1 for o in outcomes if o.status is MessageStatus.DELIVERED)
    abandoned = len(outcomes) - delivered

    return MetricsRow(
        scheme=cfg.scheme,
        snr_db=snr_db,
        ber=aggregate_ber(outcomes, payload_bits, cfg.abandoned),
        se=aggregate_se(outcomes, rounds, cfg.symbols_per_round, payload_bits),
        avg_rounds=sum(o.rounds_used for o in outcomes) / len(outcomes),
        abandon_rate=abandoned / len(outcomes),
        frames=len(outcomes),
        seed=cfg.seed,
        errored_bits=errored,
        total_bits=total,
        delivered=delivered,
        abandoned=abandoned,
        rounds=rounds,
        rm_rounds=rm_rounds,
        sic_failures=sic_failures,
    )
