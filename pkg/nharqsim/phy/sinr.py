"""Post-MRC SINR: general form, closed forms, and a Monte Carlo estimator.

With plain MRC over rounds i, a message of per-round amplitude a_i and one
coherent interferer of per-round amplitude b_i (0 once cancelled) give

    gamma = (sum a_i |h_i|^2)^2 / ((sum b_i |h_i|^2)^2 + sum |h_i|^2)

Constant amplitudes reduce this to the new-message SINR, the old-message SNR
and the one-SIC-failure SINR below.
"""
import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import LengthMismatchError, ZeroNormError
from ..models import SinrResult, SymbolBlock

# Residual power below this fraction of the signal power counts as noiseless
_NOISELESS_RATIO: float = 1e-24


def _gains(h: Sequence[complex]) -> npt.NDArray[np.float64]:
    g = np.abs(np.asarray(h, dtype=np.complex128)) ** 2
    if g.sum() == 0.0:
        raise ZeroNormError("Channel norm of the window is zero")
    return g


def _window(n: int, window: Optional[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(window) if window is not None else tuple(range(n))


def sinr_general(h: Sequence[complex], a: Sequence[float], b: Sequence[float],
                 window: Optional[Sequence[int]] = None) -> SinrResult:
    """SINR after MRC with one interferer coherent across the window."""
    if not len(h) == len(a) == len(b):
        raise LengthMismatchError(f"h, a, b have lengths {len(h)}, {len(a)}, {len(b)}")
    g = _gains(h)
    signal = float(np.dot(a, g))
    interference = float(np.dot(b, g))
    return SinrResult(signal ** 2 / (interference ** 2 + float(g.sum())), _window(len(h), window))


def sinr_grouped(h: Sequence[complex], a: Sequence[float],
                 interference: Sequence[Sequence[Tuple[int, float]]],
                 window: Optional[Sequence[int]] = None) -> SinrResult:
    """SINR after MRC when different rounds hold different interferers.

    `interference[i]` lists (message id, amplitude) of what is still in round i.
    Rounds sharing an interferer add coherently; distinct interferers are
    independent and add in power.
    """
    if not len(h) == len(a) == len(interference):
        raise LengthMismatchError(
            f"h, a, interference have lengths {len(h)}, {len(a)}, {len(interference)}"
        )
    g = _gains(h)
    per_interferer: Dict[int, float] = {}
    for gi, entries in zip(g, interference):
        for message_id, amplitude in entries:
            per_interferer[message_id] = per_interferer.get(message_id, 0.0) + amplitude * gi
    signal = float(np.dot(a, g))
    denominator = sum(v ** 2 for v in per_interferer.values()) + float(g.sum())
    return SinrResult(signal ** 2 / denominator, _window(len(h), window))


def gamma_new(alpha2: float, power: float, norm2: float) -> float:
    """New message over m2 rounds, old message treated as noise."""
    return (1 - alpha2) * power * norm2 / (alpha2 * power * norm2 + 1)


def gamma_old(alpha2: float, power: float, norm2: float) -> float:
    """Old message after every interferer was cancelled."""
    return alpha2 * power * norm2


def gamma_old_sic_failure(alpha2: float, power: float, norm2_full: float, norm2_sub: float) -> float:
    """Old message when an abandoned packet stays in the first rounds of its window."""
    return alpha2 * power * norm2_full ** 2 / ((1 - alpha2) * power * norm2_sub ** 2 + norm2_full)


def estimate_post_mrc_sinr(combined: SymbolBlock, reference: SymbolBlock) -> SinrResult:
    """Least-squares fit of `combined` onto the transmitted `reference`.

    Whatever the fit leaves behind (noise and residual interference alike) is
    counted as impairment. A noiseless input reports +inf.
    """
    y = np.asarray(combined, dtype=np.complex128)
    x = np.asarray(reference, dtype=np.complex128)
    if y.size != x.size:
        raise LengthMismatchError(f"Combined block has {y.size} symbols, reference {x.size}")

    ref_power = float(np.mean(np.abs(x) ** 2))
    coefficient = np.vdot(x, y) / np.vdot(x, x)
    signal_power = abs(coefficient) ** 2 * ref_power
    residual_power = float(np.mean(np.abs(y - coefficient * x) ** 2))
    if residual_power <= _NOISELESS_RATIO * signal_power:
        return SinrResult(math.inf)
    return SinrResult(signal_power / residual_power)
